#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gf2m/code_metrics.hpp"
#include "gf2m/errata.hpp"
#include "gf2m/error.hpp"
#include "gf2m/field_algebra.hpp"
#include "gf2m/gf2_poly.hpp"
#include "gf2m/lfsr.hpp"
#include "gf2m/mastrovito.hpp"
#include "gf2m/netlist.hpp"

namespace gf2m::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr unsigned kListingMaxDegree = Field::kTableMaxDegree;
constexpr unsigned kReportMaxDegree = 12;

std::string alpha_symbol(const Context& ctx) { return ctx.notation == Notation::Ascii ? "a" : "α"; }

std::string power_label(const Context& ctx, std::uint64_t e) { return alpha_symbol(ctx) + "^" + std::to_string(e); }

// Table 3 style: "0", "1", then alpha powers.
std::string element_label(const Context& ctx, const Field& field, const Element& e) {
  if (e.is_zero()) return "0";
  const std::uint64_t k = field.log(e.bits());
  return k == 0 ? "1" : power_label(ctx, k);
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(Errc::ParseError, std::string(what) + " '" + std::string(text) + "' is not a non-negative integer");
  return v;
}

void require_listing(unsigned m) {
  if (m > kListingMaxDegree)
    throw Error(Errc::InvalidArgument, "listings are limited to m <= " + std::to_string(kListingMaxDegree));
}

std::ostream& out(const Context& ctx) { return *ctx.out; }

void print_key_values(const Context& ctx, const std::vector<std::pair<std::string, std::string>>& kv) {
  if (ctx.format == Format::Csv) {
    TextTable t{{"key", "value"}, {}};
    for (const auto& [k, v] : kv) t.add({k, v});
    t.print_csv(out(ctx));
    return;
  }
  std::size_t w = 0;
  for (const auto& kvp : kv) w = std::max(w, display_width(kvp.first));
  for (const auto& [k, v] : kv) out(ctx) << k << ':' << std::string(w - display_width(k) + 1, ' ') << v << '\n';
}

json field_json(const Field& field) {
  return json{{"m", field.m()}, {"prime_poly", to_binary_string(field.prime_poly())}};
}

std::string bits_string(std::uint32_t bits, unsigned m) {
  std::string s;
  for (unsigned i = m; i-- > 0;) s += ((bits >> i) & 1U) ? '1' : '0';
  return s;
}

std::string describe(const Context& ctx, const Field& field, const Element& e) {
  const auto row = field.format_row(e, ctx.notation);
  return (e.is_zero() ? std::string("0") : row.power) + " = " + row.polynomial + " (" + row.vector + ")";
}

}  // namespace

Field make_field(unsigned m, const std::string& poly) {
  if (poly.empty()) return Field::build(m);
  return Field::build(m, parse_poly(poly));
}

Element parse_element(const Field& field, const std::string& text) {
  for (std::string_view prefix : {"alpha^", "α^", "a^"}) {
    if (text.rfind(prefix, 0) == 0)
      return field.alpha_pow(parse_u64(std::string_view(text).substr(prefix.size()), "exponent") % field.group_order());
  }
  return field.element(parse_poly(text));
}

void cmd_field_table(const Context& ctx, unsigned m, const std::string& poly) {
  const Field field = make_field(m, poly);
  require_listing(field.m());
  TextTable t{{"Exponential", "Polynomial", "Vector"}, {}};
  const auto zero = field.format_row(field.zero(), ctx.notation);
  t.add({zero.power, zero.polynomial, zero.vector});
  for (std::uint64_t e = 0; e < field.group_order(); ++e) {
    const auto row = field.format_row(field.alpha_pow(e), ctx.notation);
    t.add({row.power, row.polynomial, row.vector});
  }
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["rows"] = t.to_json();
    print_json(out(ctx), j);
  } else {
    t.print(out(ctx), ctx.format);
  }
}

void cmd_field_ops(const Context& ctx, unsigned m, const std::string& poly, const std::string& as,
                   const std::string& bs) {
  const Field field = make_field(m, poly);
  const Element a = parse_element(field, as);
  const Element b = parse_element(field, bs);
  std::vector<std::pair<std::string, std::string>> kv{
      {"a", describe(ctx, field, a)},
      {"b", describe(ctx, field, b)},
      {"a + b", describe(ctx, field, field.add(a, b))},
      {"a * b (power)", describe(ctx, field, field.mul_power(a, b))},
      {"a * b (polynomial)", describe(ctx, field, field.mul_poly(a, b))},
      {"a^2", describe(ctx, field, field.square(a))},
  };
  kv.emplace_back("a / b", b.is_zero() ? "undefined (b = 0)" : describe(ctx, field, field.divide(a, b)));
  kv.emplace_back("Tr(a)", std::to_string(trace(field, a)));
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    for (const auto& [k, v] : kv) j[k] = v;
    print_json(out(ctx), j);
  } else {
    print_key_values(ctx, kv);
  }
}

void cmd_field_inverse(const Context& ctx, unsigned m, const std::string& poly, const std::string& as) {
  const Field field = make_field(m, poly);
  const Element a = parse_element(field, as);
  const auto chain = field.inverse_trace(a);
  TextTable t{{"step", "register", "vector"}, {}};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto row = field.format_row(chain[i], ctx.notation);
    t.add({std::to_string(i), chain[i].is_zero() ? "0" : row.power, row.vector});
  }
  const Element inv = field.inverse(a);
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["a"] = field.vector_string(a);
    j["chain"] = t.to_json();
    j["inverse"] = field.vector_string(inv);
    print_json(out(ctx), j);
    return;
  }
  t.print(out(ctx), ctx.format);
  if (ctx.format == Format::Table) {
    out(ctx) << "\ninverse: " << describe(ctx, field, inv) << '\n';
    out(ctx) << "check:   a * inverse = " << field.vector_string(field.mul(a, inv)) << '\n';
  }
}

void cmd_minpolys(const Context& ctx, unsigned m, const std::string& poly) {
  const Field field = make_field(m, poly);
  require_listing(field.m());
  TextTable t{{"Elements of Field", "Minimal Polynomial"}, {}};
  for (const auto& cls : conjugacy_classes(field)) {
    auto members = cls.members;
    std::sort(members.begin(), members.end(), [&](const Element& x, const Element& y) {
      if (x.is_zero() || y.is_zero()) return x.is_zero() && !y.is_zero();
      return field.log(x.bits()) < field.log(y.bits());
    });
    std::string names;
    for (const auto& e : members) names += (names.empty() ? "" : ", ") + element_label(ctx, field, e);
    t.add({names, to_ascending_string(minimal_polynomial(field, cls.representative))});
  }
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["classes"] = t.to_json();
    print_json(out(ctx), j);
  } else {
    t.print(out(ctx), ctx.format);
  }
}

void cmd_bases(const Context& ctx, unsigned m, const std::string& poly) {
  const Field field = make_field(m, poly);
  if (field.m() > kReportMaxDegree)
    throw Error(Errc::InvalidArgument, "basis listing is limited to m <= " + std::to_string(kReportMaxDegree));
  const auto std_basis = standard_basis(field);
  const auto dual = dual_basis(field, std_basis);
  const auto normal = normal_basis(field);
  TextTable t{{"Power", "Standard", "Dual", "Normal"}, {}};
  t.add({"-", std::string(field.m(), '0'), std::string(field.m(), '0'), std::string(field.m(), '0')});
  for (std::uint64_t e = 0; e < field.group_order(); ++e) {
    const Element z = field.alpha_pow(e);
    t.add({std::to_string(e), coords_string(z.bits(), field.m()),
           coords_string(dual_basis_coords(field, z, dual), field.m()),
           coords_string(normal_basis_coords(field, z), field.m())});
  }
  auto list = [&](const std::vector<Element>& basis) {
    std::string s;
    for (const auto& e : basis) s += (s.empty() ? "" : ", ") + element_label(ctx, field, e);
    return s;
  };
  const std::string std_desc = list(std_basis);
  const std::string dual_desc = list(dual);
  const std::string normal_desc = list(normal.elements);
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["standard_basis"] = std_desc;
    j["dual_basis"] = dual_desc;
    j["normal_basis"] = normal_desc;
    j["rows"] = t.to_json();
    print_json(out(ctx), j);
    return;
  }
  t.print(out(ctx), ctx.format);
  if (ctx.format == Format::Table) {
    out(ctx) << "\nCoordinates are listed first basis element leftmost.\n";
    out(ctx) << "standard: " << std_desc << '\n';
    out(ctx) << "dual:     " << dual_desc << "  (dual of the standard basis; coordinate k = Tr(z " << alpha_symbol(ctx)
             << "^k))\n";
    out(ctx) << "normal:   " << normal_desc << '\n';
  }
}

void cmd_constmul(const Context& ctx, unsigned m, const std::string& poly, std::uint64_t power,
                  const std::string& emit) {
  const Field field = make_field(m, poly);
  const auto z = constant_mul_matrix(field, power);
  const std::string title = "Z = " + power_label(ctx, power) + " A";
  if (emit == "equations") {
    const auto eqs = matrix_equations(z);
    if (ctx.format == Format::Json) {
      json j = field_json(field);
      j["power"] = power;
      j["equations"] = eqs;
      print_json(out(ctx), j);
    } else if (ctx.format == Format::Csv) {
      TextTable t{{"output", "inputs"}, {}};
      for (unsigned i = 0; i < field.m(); ++i) t.add({"z" + std::to_string(i), format_linear_form(z.entries.row(i))});
      t.print_csv(out(ctx));
    } else {
      out(ctx) << title << '\n';
      for (const auto& eq : eqs) out(ctx) << "  " << eq << '\n';
    }
  } else if (emit == "netlist") {
    const Netlist net = emit_netlist(z);
    const std::string nt = "constant multiplier alpha^" + std::to_string(power) + " over GF(2^" +
                           std::to_string(field.m()) + "), prime polynomial " + to_term_string(field.prime_poly());
    out(ctx) << (ctx.format == Format::Json ? to_json(net, nt) : to_text(net, nt));
  } else if (emit == "count") {
    const unsigned exact = xor_count(z);
    const Rational est = xor_count_estimate(field.m());
    const unsigned depth = emit_netlist(z).depth();
    if (ctx.format == Format::Json) {
      json j = field_json(field);
      j["power"] = power;
      j["xor_gates"] = exact;
      j["depth"] = depth;
      j["estimate"] = est.to_string();
      print_json(out(ctx), j);
    } else {
      print_key_values(ctx, {{"power", std::to_string(power)},
                             {"xor_gates", std::to_string(exact)},
                             {"depth", std::to_string(depth)},
                             {"estimate m^2/2 - m", est.to_string()}});
    }
  } else {
    throw Error(Errc::InvalidArgument, "unknown --emit value '" + emit + "'");
  }
}

void cmd_mastrovito(const Context& ctx, unsigned m, const std::string& poly, const std::string& as,
                    const std::string& bs, const std::string& emit) {
  const Field field = make_field(m, poly);
  if (emit == "symbolic") {
    const auto sym = symbolic_z_matrix(field.prime_poly());
    TextTable t;
    t.headers.push_back("row");
    for (unsigned j = 0; j < sym.m; ++j) t.headers.push_back("col" + std::to_string(j));
    for (unsigned i = 0; i < sym.m; ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (unsigned j = 0; j < sym.m; ++j) row.push_back(format_linear_form(sym.entries[i][j]));
      t.add(std::move(row));
    }
    t.print(out(ctx), ctx.format);
    return;
  }
  if (emit == "multiplier") {
    const Netlist net = emit_general_multiplier(field.prime_poly());
    const std::string nt = "Mastrovito multiplier over GF(2^" + std::to_string(field.m()) + "), prime polynomial " +
                           to_term_string(field.prime_poly());
    out(ctx) << (ctx.format == Format::Json ? to_json(net, nt) : to_text(net, nt));
    return;
  }
  if (as.empty()) throw Error(Errc::InvalidArgument, "--a is required for --emit " + emit);
  const Element a = parse_element(field, as);
  const auto z = build_z_matrix(field, a);
  if (emit == "netlist") {
    const std::string nt = "Z b for fixed a = " + field.vector_string(a) + " over GF(2^" + std::to_string(field.m()) + ")";
    out(ctx) << (ctx.format == Format::Json ? to_json(emit_netlist(z), nt) : to_text(emit_netlist(z), nt));
    return;
  }
  if (emit != "matrix") throw Error(Errc::InvalidArgument, "unknown --emit value '" + emit + "'");
  std::optional<Element> product;
  if (!bs.empty()) product = mat_vec_mul(field, z, parse_element(field, bs));
  if (product && *product != field.mul_power(a, parse_element(field, bs)))
    throw Error(Errc::InvariantViolation, "matrix product disagrees with the log-table product");
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["a"] = field.vector_string(a);
    auto rows = json::array();
    for (unsigned i = 0; i < field.m(); ++i) rows.push_back(bits_string(z.entries.row(i), field.m()));
    j["rows_msb_left"] = rows;
    if (product) j["product"] = field.vector_string(*product);
    print_json(out(ctx), j);
    return;
  }
  TextTable t;
  t.headers.push_back("row");
  for (unsigned j = 0; j < field.m(); ++j) t.headers.push_back("b" + std::to_string(j));
  for (unsigned i = 0; i < field.m(); ++i) {
    std::vector<std::string> row{"c" + std::to_string(i)};
    for (unsigned j = 0; j < field.m(); ++j) row.push_back(z.entries.get(i, j) ? "1" : "0");
    t.add(std::move(row));
  }
  if (ctx.format == Format::Table) out(ctx) << "Z for a = " << describe(ctx, field, a) << "\n\n";
  t.print(out(ctx), ctx.format);
  if (product && ctx.format == Format::Table) out(ctx) << "\nc = Z b = " << describe(ctx, field, *product) << '\n';
}

void cmd_serial(const Context& ctx, unsigned m, const std::string& poly, const std::string& as, const std::string& bs,
                const std::string& mode) {
  const Field field = make_field(m, poly);
  XorMode xm;
  if (mode == "xor") {
    xm = XorMode::Xor;
  } else if (mode == "nand") {
    xm = XorMode::Nand;
  } else {
    throw Error(Errc::InvalidArgument, "unknown --mode '" + mode + "'");
  }
  const Element a = parse_element(field, as);
  const Element b = parse_element(field, bs);
  const auto res = serial_interleaved_multiply(field, a, b, xm);
  if (res.product != field.mul_power(a, b))
    throw Error(Errc::InvariantViolation, "serial product disagrees with the log-table product");
  TextTable t{{"step", "b bit", "P"}, {}};
  for (std::size_t k = 0; k < res.trace.size(); ++k) {
    t.add({std::to_string(k + 1), b.bit(field.m() - 1 - static_cast<unsigned>(k)) ? "1" : "0",
           field.vector_string(res.trace[k])});
  }
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["mode"] = mode;
    j["steps"] = t.to_json();
    j["product"] = field.vector_string(res.product);
    print_json(out(ctx), j);
    return;
  }
  t.print(out(ctx), ctx.format);
  if (ctx.format == Format::Table) out(ctx) << "\nproduct: " << describe(ctx, field, res.product) << '\n';
}

void cmd_lfsr_divide(const Context& ctx, const std::string& gs, const std::string& ps, const std::string& trace_fmt) {
  const Gf2Poly g = parse_poly(gs);
  const Gf2Poly p = parse_poly(ps);
  const auto res = lfsr_divide(p, g);
  const unsigned d = static_cast<unsigned>(*g.degree());
  TextTable t{{"clock", "input"}, {}};
  for (unsigned i = 0; i < d; ++i) t.headers.push_back("X" + std::to_string(i));
  {
    std::vector<std::string> row{"0", "-"};
    for (unsigned i = 0; i < d; ++i) row.emplace_back("0");
    t.add(std::move(row));
  }
  for (const auto& r : res.trace) {
    std::vector<std::string> row{std::to_string(r.clock), r.input ? "1" : "0"};
    for (auto bit : r.regs.regs) row.emplace_back(bit ? "1" : "0");
    t.add(std::move(row));
  }
  std::string regs;
  for (unsigned i = 0; i < d; ++i) regs += res.remainder.coeff(i) ? '1' : '0';
  const std::string rem = res.remainder.is_zero() ? "0" : to_term_string(res.remainder);
  const std::string quo = res.quotient.is_zero() ? "0" : to_term_string(res.quotient);
  if (res.remainder != poly_divmod(p, g).remainder)
    throw Error(Errc::InvariantViolation, "LFSR remainder disagrees with long division");

  if (ctx.format == Format::Json) {
    json j{{"g", to_binary_string(g)}, {"p", to_binary_string(p)}};
    j["trace"] = t.to_json();
    j["remainder"] = rem;
    j["remainder_regs"] = regs;
    j["quotient"] = quo;
    print_json(out(ctx), j);
    return;
  }
  if (trace_fmt == "csv" || (trace_fmt.empty() && ctx.format == Format::Csv)) {
    t.print_csv(out(ctx));
    return;
  }
  if (trace_fmt == "table") {
    t.print_text(out(ctx));
    out(ctx) << '\n';
  } else if (!trace_fmt.empty()) {
    throw Error(Errc::InvalidArgument, "unknown --trace value '" + trace_fmt + "'");
  }
  out(ctx) << "remainder: " << rem << "  (X0..X" << d - 1 << " = " << regs << ")\n";
  out(ctx) << "quotient:  " << quo << '\n';
}

void cmd_lfsr_period(const Context& ctx, const std::string& gs, bool external, const std::string& seed) {
  const auto config = LfsrConfig::from_polynomial(parse_poly(gs), external ? Feedback::External : Feedback::Internal);
  LfsrState s = LfsrState::zeros(config.degree);
  if (seed.empty()) {
    s.regs[0] = 1;
  } else {
    if (seed.size() != config.degree) throw Error(Errc::WidthMismatch, "seed needs one bit per stage");
    for (std::size_t i = 0; i < seed.size(); ++i) {
      if (seed[i] != '0' && seed[i] != '1') throw Error(Errc::ParseError, "seed must be binary");
      s.regs[i] = seed[i] == '1';
    }
  }
  const std::uint64_t period = lfsr_period(config, s);
  std::string seed_text;
  for (auto r : s.regs) seed_text += r ? '1' : '0';
  const std::uint64_t maximal = (std::uint64_t{1} << config.degree) - 1;
  if (ctx.format == Format::Json) {
    print_json(out(ctx), json{{"g", to_binary_string(config.g)},
                              {"feedback", external ? "external" : "internal"},
                              {"seed", seed_text},
                              {"period", period},
                              {"maximal", period == maximal}});
    return;
  }
  print_key_values(ctx, {{"g", to_term_string(config.g)},
                         {"feedback", external ? "external" : "internal"},
                         {"seed (X0 first)", seed_text},
                         {"period", std::to_string(period)},
                         {"maximal (2^d - 1)", period == maximal ? "yes" : "no"}});
}

void cmd_code_analyze(const Context& ctx, const std::string& path, std::optional<std::size_t> k) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const CodeBook code(parse_word_list(buf.str()), k);
  const CodeAnalysis a = analyze(code);
  std::vector<std::pair<std::string, std::string>> kv{
      {"n", std::to_string(a.n)},
      {"words", std::to_string(a.words)},
      {"d_min", std::to_string(a.d_min)},
      {"detect", std::to_string(a.detect)},
      {"correct", std::to_string(a.correct)},
  };
  if (a.k) kv.emplace_back("k", std::to_string(*a.k));
  if (a.caps) {
    kv.emplace_back("rate", a.caps->rate.to_string());
    kv.emplace_back("singleton_max", std::to_string(a.caps->singleton_max));
  }
  if (ctx.format == Format::Json) {
    json j = json::object();
    for (const auto& [key, v] : kv) j[key] = v;
    print_json(out(ctx), j);
  } else {
    print_key_values(ctx, kv);
  }
}

void cmd_report_gates(const Context& ctx, unsigned m, const std::string& poly) {
  const Field field = make_field(m, poly);
  if (field.m() > kReportMaxDegree)
    throw Error(Errc::InvalidArgument, "gate report is limited to m <= " + std::to_string(kReportMaxDegree));
  const auto rep = constant_multiplier_report(field);
  TextTable t{{"constant", "xor_gates", "depth", "gap_vs_estimate"}, {}};
  for (const auto& r : rep.rows) {
    t.add({power_label(ctx, r.power), std::to_string(r.xor_gates), std::to_string(r.depth),
           (Rational(r.xor_gates) - rep.estimate).to_string()});
  }
  if (ctx.format == Format::Json) {
    json j = field_json(field);
    j["estimate"] = rep.estimate.to_string();
    j["min_xor"] = rep.min_xor;
    j["max_xor"] = rep.max_xor;
    j["mean_xor"] = rep.mean_xor.to_string();
    j["rows"] = t.to_json();
    print_json(out(ctx), j);
    return;
  }
  t.print(out(ctx), ctx.format);
  if (ctx.format == Format::Table) {
    out(ctx) << "\nestimate m^2/2 - m: " << rep.estimate.to_string() << '\n';
    out(ctx) << "exact counts:       min " << rep.min_xor << ", max " << rep.max_xor << ", mean "
             << rep.mean_xor.to_string() << '\n';
  }
}

void cmd_report_complexity(const Context& ctx, unsigned m, unsigned k) {
  const auto rep = complexity_report(m, k);
  TextTable t{{"source", "design", "#AND", "#NAND", "#XOR", "critical path"}, {}};
  for (const auto& r : rep.literature) t.add({"literature", r.design, r.and_gates, r.nand_gates, r.xor_gates, r.critical_path});
  for (const auto& r : rep.measured) t.add({"measured", r.design, r.and_gates, r.nand_gates, r.xor_gates, r.critical_path});
  if (ctx.format == Format::Json) {
    json j{{"m", m}, {"k", k}, {"trinomial", to_term_string(Gf2Poly::from_exponents({m, k, 0}))},
           {"within_caption_constraint", rep.within_caption_constraint}};
    j["rows"] = t.to_json();
    j["notes"] = rep.notes;
    print_json(out(ctx), j);
    return;
  }
  if (ctx.format == Format::Table)
    out(ctx) << "Multipliers for " << to_term_string(Gf2Poly::from_exponents({m, k, 0})) << " (n = m = " << m
             << ", k = " << k << ")\n\n";
  t.print(out(ctx), ctx.format);
  if (ctx.format == Format::Table) {
    out(ctx) << '\n';
    for (const auto& n : rep.notes) out(ctx) << "note: " << n << '\n';
  }
}

void cmd_errata(const Context& ctx) {
  const auto entries = errata_entries();
  TextTable t{{"location", "quantity", "printed", "computed", "note"}, {}};
  for (const auto& e : entries) t.add({e.location, e.quantity, e.printed, e.computed, e.note});
  if (ctx.format != Format::Table) {
    if (ctx.format == Format::Json) {
      print_json(out(ctx), t.to_json());
    } else {
      t.print_csv(out(ctx));
    }
    return;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    out(ctx) << '[' << i + 1 << "] " << e.location << ": " << e.quantity << '\n';
    out(ctx) << "    printed:  " << e.printed << '\n';
    out(ctx) << "    computed: " << e.computed << '\n';
    out(ctx) << "    note:     " << e.note << '\n';
  }
}

void cmd_poly_check(const Context& ctx, const std::string& text) {
  const Gf2Poly f = parse_poly(text);
  std::vector<std::pair<std::string, std::string>> kv{
      {"binary", to_binary_string(f)},
      {"hex", to_hex_string(f)},
      {"terms", f.is_zero() ? "0" : to_term_string(f)},
      {"degree", f.degree() ? std::to_string(*f.degree()) : "none"},
  };
  if (f.degree() && *f.degree() >= 1) {
    const bool irr = is_irreducible(f);
    kv.emplace_back("irreducible", irr ? "yes" : "no");
    if (irr && *f.degree() <= 32 && f.coeff(0)) {
      kv.emplace_back("order of X", std::to_string(order_of_x(f)));
      kv.emplace_back("primitive", is_primitive(f) ? "yes" : "no");
    }
  }
  if (ctx.format == Format::Json) {
    json j = json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    print_json(out(ctx), j);
  } else {
    print_key_values(ctx, kv);
  }
}

}  // namespace gf2m::cli
