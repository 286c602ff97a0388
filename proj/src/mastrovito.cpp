#include "gf2m/mastrovito.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gf2m/error.hpp"

namespace gf2m {

namespace {

unsigned modulus_degree(const Gf2Poly& modulus) {
  const auto d = modulus.degree();
  if (!d || *d < 2 || *d > 32) throw Error(Errc::UnsupportedDegree, "modulus degree must be in 2..32");
  return static_cast<unsigned>(*d);
}

std::uint32_t times_x(std::uint32_t v, std::uint64_t modulus, unsigned m) {
  std::uint64_t next = std::uint64_t{v} << 1;
  if ((next >> m) & 1U) next ^= modulus;
  return static_cast<std::uint32_t>(next);
}

std::vector<std::uint32_t> z_columns(std::uint64_t modulus, unsigned m, std::uint32_t a) {
  std::vector<std::uint32_t> cols(m);
  cols[0] = a;
  for (unsigned j = 1; j < m; ++j) cols[j] = times_x(cols[j - 1], modulus, m);
  return cols;
}

std::vector<std::string> indexed_names(std::string_view stem, unsigned m) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < m; ++i) names.push_back(std::string(stem) + "_" + std::to_string(i));
  return names;
}

}  // namespace

MastrovitoMatrix build_z_matrix(const Gf2Poly& modulus, std::uint32_t a) {
  const unsigned m = modulus_degree(modulus);
  if (m < 32 && (a >> m)) throw Error(Errc::InvalidArgument, "operand wider than m bits");
  const auto cols = z_columns(*modulus.to_u64(), m, a);
  return MastrovitoMatrix{m, BitMatrix::from_columns(m, cols), GeneralSource{a}};
}

MastrovitoMatrix build_z_matrix(const Field& field, const Element& a) {
  if (!field.owns(a)) throw Error(Errc::FieldMismatch, "element belongs to a different field");
  return build_z_matrix(field.prime_poly(), a.bits());
}

Element mat_vec_mul(const Field& field, const MastrovitoMatrix& z, const Element& b) {
  if (z.m != field.m()) throw Error(Errc::DimensionMismatch, "matrix dimension differs from m");
  if (!field.owns(b)) throw Error(Errc::FieldMismatch, "element belongs to a different field");
  return field.element(z.apply(b.bits()));
}

MastrovitoMatrix constant_mul_matrix(const Field& field, std::uint64_t power) {
  if (power >= field.group_order())
    throw Error(Errc::InvalidArgument, "constant exponent must be in 0..2^m - 2");
  std::vector<std::uint32_t> cols(field.m());
  for (unsigned j = 0; j < field.m(); ++j) cols[j] = field.antilog(power + j);
  return MastrovitoMatrix{field.m(), BitMatrix::from_columns(field.m(), cols), ConstantSource{power}};
}

SymbolicMatrix symbolic_z_matrix(const Gf2Poly& modulus) {
  const unsigned m = modulus_degree(modulus);
  SymbolicMatrix out{m, std::vector<std::vector<std::uint32_t>>(m, std::vector<std::uint32_t>(m, 0))};
  // Z is linear in a: the contribution of a_k is the matrix for a = x^k.
  for (unsigned k = 0; k < m; ++k) {
    const auto cols = z_columns(*modulus.to_u64(), m, std::uint32_t{1} << k);
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned i = 0; i < m; ++i) {
        if ((cols[j] >> i) & 1U) out.entries[i][j] |= std::uint32_t{1} << k;
      }
    }
  }
  return out;
}

std::string format_linear_form(std::uint32_t mask, char var) {
  if (mask == 0) return "0";
  std::string out;
  for (unsigned k = 0; k < 32; ++k) {
    if (!((mask >> k) & 1U)) continue;
    if (!out.empty()) out += " + ";
    out += var;
    out += std::to_string(k);
  }
  return out;
}

std::vector<std::string> matrix_equations(const MastrovitoMatrix& z) {
  const bool general = std::holds_alternative<GeneralSource>(z.source);
  const char out_var = general ? 'c' : 'z';
  const char in_var = general ? 'b' : 'a';
  std::vector<std::string> lines;
  for (unsigned i = 0; i < z.m; ++i) {
    lines.push_back(std::string(1, out_var) + std::to_string(i) + " = " + format_linear_form(z.entries.row(i), in_var));
  }
  return lines;
}

unsigned xor_count(const MastrovitoMatrix& z) {
  unsigned n = 0;
  for (unsigned i = 0; i < z.m; ++i) {
    const auto w = static_cast<unsigned>(std::popcount(z.entries.row(i)));
    if (w > 1) n += w - 1;
  }
  return n;
}

Rational xor_count_estimate(unsigned m) {
  const auto mm = static_cast<std::int64_t>(m);
  return Rational(mm * mm - 2 * mm, 2);
}

std::uint32_t xor_via_nand(std::uint32_t p, std::uint32_t q, std::uint32_t mask) noexcept {
  const std::uint32_t t = ~(p & q) & mask;
  const std::uint32_t u = ~(p & t) & mask;
  const std::uint32_t v = ~(t & q) & mask;
  return ~(u & v) & mask;
}

SerialResult serial_interleaved_multiply(const Field& field, const Element& a, const Element& b, XorMode mode) {
  if (!field.owns(a) || !field.owns(b)) throw Error(Errc::FieldMismatch, "element belongs to a different field");
  const unsigned m = field.m();
  const std::uint32_t mask = field.mask();
  const auto low_modulus = static_cast<std::uint32_t>(field.modulus() & mask);
  auto combine = [&](std::uint32_t x, std::uint32_t y) {
    return mode == XorMode::Xor ? (x ^ y) : xor_via_nand(x, y, mask);
  };
  std::uint32_t acc = 0;
  SerialResult out{field.zero(), {}};
  for (unsigned k = 1; k <= m; ++k) {
    const bool carry = (acc >> (m - 1)) & 1U;
    const std::uint32_t shifted = combine((acc << 1) & mask, carry ? low_modulus : 0);
    const std::uint32_t addend = b.bit(m - k) ? a.bits() : 0;
    acc = combine(shifted, addend);
    out.trace.push_back(field.element(acc));
  }
  out.product = field.element(acc);
  return out;
}

Netlist emit_netlist(const MastrovitoMatrix& z) {
  const bool general = std::holds_alternative<GeneralSource>(z.source);
  NetlistBuilder nb;
  std::vector<NodeId> in;
  for (const auto& name : indexed_names(general ? "b" : "a", z.m)) in.push_back(nb.input(name));
  std::vector<NodeId> roots;
  for (unsigned i = 0; i < z.m; ++i) {
    std::vector<NodeId> leaves;
    for (unsigned j = 0; j < z.m; ++j) {
      if (z.entries.get(i, j)) leaves.push_back(in[j]);
    }
    roots.push_back(nb.xor_tree(leaves));
  }
  const auto out_names = indexed_names(general ? "c" : "z", z.m);
  for (unsigned i = 0; i < z.m; ++i) nb.output(out_names[i], roots[i]);
  return std::move(nb).build();
}

Netlist emit_general_multiplier(const Gf2Poly& modulus) {
  const SymbolicMatrix sym = symbolic_z_matrix(modulus);
  const unsigned m = sym.m;
  NetlistBuilder nb;
  std::vector<NodeId> a, b;
  for (const auto& name : indexed_names("a", m)) a.push_back(nb.input(name));
  for (const auto& name : indexed_names("b", m)) b.push_back(nb.input(name));

  // f-network: one node per distinct linear form, row-major first use.
  std::map<std::uint32_t, NodeId> forms;
  auto form_node = [&](std::uint32_t mask) {
    if (auto it = forms.find(mask); it != forms.end()) return it->second;
    std::vector<NodeId> leaves;
    for (unsigned k = 0; k < m; ++k) {
      if ((mask >> k) & 1U) leaves.push_back(a[k]);
    }
    const NodeId id = nb.xor_tree(leaves);
    forms.emplace(mask, id);
    return id;
  };
  std::vector<std::vector<NodeId>> z(m, std::vector<NodeId>(m, kConst0));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) z[i][j] = form_node(sym.entries[i][j]);
  }
  // IP-network.
  std::vector<NodeId> roots;
  for (unsigned i = 0; i < m; ++i) {
    std::vector<NodeId> products;
    for (unsigned j = 0; j < m; ++j) products.push_back(nb.and_gate(z[i][j], b[j]));
    roots.push_back(nb.xor_tree(products));
  }
  const auto names = indexed_names("c", m);
  for (unsigned i = 0; i < m; ++i) nb.output(names[i], roots[i]);
  return std::move(nb).build();
}

namespace {

// One serial step on node vectors; returns the next accumulator.
std::vector<NodeId> serial_step_nodes(NetlistBuilder& nb, const std::vector<NodeId>& p, const std::vector<NodeId>& a,
                                      NodeId q, std::uint64_t modulus, XorMode mode) {
  const auto m = static_cast<unsigned>(p.size());
  auto x = [&](NodeId u, NodeId v) { return mode == XorMode::Xor ? nb.xor_gate(u, v) : nb.xor_from_nands(u, v); };
  const NodeId carry = p[m - 1];
  std::vector<NodeId> next(m);
  for (unsigned i = 0; i < m; ++i) {
    const NodeId shifted_in = i == 0 ? kConst0 : p[i - 1];
    const NodeId shifted = ((modulus >> i) & 1U) ? x(shifted_in, carry) : shifted_in;
    next[i] = x(shifted, nb.and_gate(q, a[i]));
  }
  return next;
}

}  // namespace

Netlist emit_serial_multiplier(const Gf2Poly& modulus, XorMode mode) {
  const unsigned m = modulus_degree(modulus);
  NetlistBuilder nb;
  std::vector<NodeId> a, b;
  for (const auto& name : indexed_names("a", m)) a.push_back(nb.input(name));
  for (const auto& name : indexed_names("b", m)) b.push_back(nb.input(name));
  std::vector<NodeId> p(m, kConst0);
  for (unsigned k = 1; k <= m; ++k) p = serial_step_nodes(nb, p, a, b[m - k], *modulus.to_u64(), mode);
  const auto names = indexed_names("c", m);
  for (unsigned i = 0; i < m; ++i) nb.output(names[i], p[i]);
  return std::move(nb).build();
}

Netlist emit_serial_step(const Gf2Poly& modulus, XorMode mode) {
  const unsigned m = modulus_degree(modulus);
  NetlistBuilder nb;
  std::vector<NodeId> p, a;
  for (const auto& name : indexed_names("p", m)) p.push_back(nb.input(name));
  for (const auto& name : indexed_names("a", m)) a.push_back(nb.input(name));
  const NodeId q = nb.input("q");
  const auto next = serial_step_nodes(nb, p, a, q, *modulus.to_u64(), mode);
  const auto names = indexed_names("p_next", m);
  for (unsigned i = 0; i < m; ++i) nb.output(names[i], next[i]);
  return std::move(nb).build();
}

ConstantMultiplierReport constant_multiplier_report(const Field& field) {
  ConstantMultiplierReport rep{field.m(), xor_count_estimate(field.m()), {}, ~0U, 0, Rational(0)};
  std::int64_t total = 0;
  for (std::uint64_t i = 1; i < field.group_order(); ++i) {
    const auto z = constant_mul_matrix(field, i);
    const unsigned n = xor_count(z);
    rep.rows.push_back(ConstantMultiplierRow{i, n, emit_netlist(z).depth(), matrix_equations(z)});
    rep.min_xor = std::min(rep.min_xor, n);
    rep.max_xor = std::max(rep.max_xor, n);
    total += n;
  }
  if (rep.rows.empty()) rep.min_xor = 0;
  rep.mean_xor = Rational(total, std::max<std::int64_t>(1, static_cast<std::int64_t>(rep.rows.size())));
  return rep;
}

ComplexityReport complexity_report(unsigned m, unsigned k) {
  if (m < 2 || m > 32 || k < 1 || k >= m)
    throw Error(Errc::UnsupportedTrinomial, "need 1 <= k < m <= 32");
  const Gf2Poly tri = Gf2Poly::from_exponents({m, k, 0});
  if (!is_irreducible(tri))
    throw Error(Errc::UnsupportedTrinomial, to_term_string(tri) + " is reducible");

  ComplexityReport rep;
  rep.m = m;
  rep.k = k;
  rep.within_caption_constraint = 2 < 2 * k && 2 * k < m;
  rep.literature = {
      {"PB Mastrovito [17, 18, 19, 20]", "2m^2 + 2m", "0", "(n^2 - 1)", "T_A + ceil(log2 4n) T_X"},
      {"WDB [21]", "n^2", "0", "(n^2 - 1)", "T_A + ceil(log2 4n) T_X"},
      {"PB mod reduction [22, 23]", "n^2", "0", "(n^2 - 1)", "T_A + ceil(log2 (4n-4)) T_X"},
      {"PB Montgomery [24]", "n^2", "0", "(n^2 - 1)", "<= T_A + ceil(log2 (4n-8)) T_X"},
      {"WDB [25]", "n^2", "0", "(n^2 - 1)", "T_A + ceil(log2 (2n+2k-2)) T_X"},
      {"PB Mastrovito [26]", "n^2", "0", "(n^2 - 1)", "T_A + ceil(log2 (2n+2k-3)) T_X"},
      {"PB Mastrovito [27]", "n^2", "0", "n^2 + (k^2 - 3k)/2", "T_A + ceil(log2 (2n+k-2)) T_X"},
      {"SPB Mastrovito [28]", "n^2", "0", "n^2", "T_A + ceil(log2 2n) T_X"},
      {"SPB matrix-vector product [29]", "n^2", "0", "3(n^2 - n)/2 - k(n - k)", "T_A + ceil(log2 (2n-k)) T_X"},
      {"PB Montgomery [30]", "n^2", "0", "(n^2 - 1)", "T_A + ceil(log2 (2n-k)) T_X"},
      {"SPB binary XOR tree [31]", "n^2", "0", "(n^2 - 1)", "T_A + ceil(log2 (2n-k)) T_X"},
      {"SPB Multiplier based on NAND [16]", "2m", "8m", "0", "2T_A + 4T_N"},
  };

  auto measured_row = [](std::string design, const Netlist& net) {
    const auto c = net.counts();
    return ComplexityRow{std::move(design), std::to_string(c.and_gates), std::to_string(c.nand_gates),
                         std::to_string(c.xor_gates), format_delay(net.critical_path())};
  };
  rep.measured.push_back(measured_row("Mastrovito parallel", emit_general_multiplier(tri)));
  rep.measured.push_back(measured_row("Serial interleaved, XOR, one clock", emit_serial_step(tri, XorMode::Xor)));
  rep.measured.push_back(measured_row("Serial interleaved, NAND, one clock", emit_serial_step(tri, XorMode::Nand)));
  rep.measured.push_back(measured_row("Serial interleaved, NAND, m clocks unrolled",
                                      emit_serial_multiplier(tri, XorMode::Nand)));

  const auto mm = static_cast<std::int64_t>(m);
  rep.notes.push_back("PB Mastrovito [17-20] #AND is printed as 2m^2 + 2m (= " + std::to_string(2 * mm * mm + 2 * mm) +
                      ") while every other parallel row uses n^2 (= " + std::to_string(mm * mm) +
                      "); values are reproduced as printed.");
  rep.notes.push_back("Rows mix the symbols n and m for the field degree; both mean m = " + std::to_string(m) + ".");
  if (!rep.within_caption_constraint)
    rep.notes.push_back("k = " + std::to_string(k) + " lies outside the 2 < 2k < n range assumed by the literature rows.");
  return rep;
}

}  // namespace gf2m
