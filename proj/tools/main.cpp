// gf2m: tables, circuits and reports for binary extension fields.
//
// Exit status: 0 success, 2 invalid input, 3 internal invariant failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "gf2m/error.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInvariant = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace gf2m::cli;

  CLI::App app{"Binary extension field arithmetic: tables, multiplier circuits, LFSR division and code metrics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  bool ascii = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--ascii", ascii, "Write a instead of α");

  unsigned m = 0;
  std::string poly;
  auto add_field_opts = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Extension degree")->required()->check(CLI::Range(2u, 32u));
    sub->add_option("--poly", poly, "Primitive polynomial (binary, 0x hex or x^4+x+1); default from registry");
  };

  std::string a, b, const_emit, matrix_emit, mode, trace, g, p, seed, words;
  std::uint64_t power = 0;
  unsigned k = 0;
  bool external = false;
  std::optional<std::size_t> code_k;

  auto* field = app.add_subcommand("field", "Field element tables and operations");
  field->require_subcommand(1);
  auto* field_table = field->add_subcommand("table", "Exponential, polynomial and vector forms of every element");
  add_field_opts(field_table);
  auto* field_ops = field->add_subcommand("ops", "Sum, products, square, quotient and trace of two elements");
  add_field_opts(field_ops);
  field_ops->add_option("--a", a, "Element (a^N, binary, hex or terms)")->required();
  field_ops->add_option("--b", b, "Element (a^N, binary, hex or terms)")->required();
  auto* field_inv = field->add_subcommand("inverse", "Inverse by the square-and-multiply register chain");
  add_field_opts(field_inv);
  field_inv->add_option("--a", a, "Nonzero element")->required();

  auto* minpolys = app.add_subcommand("minpolys", "Minimal polynomial of every conjugacy class");
  add_field_opts(minpolys);

  auto* bases = app.add_subcommand("bases", "Standard, dual and normal basis coordinates of every element");
  add_field_opts(bases);

  auto* constmul = app.add_subcommand("constmul", "Constant multiplier by alpha^power");
  add_field_opts(constmul);
  constmul->add_option("--power", power, "Exponent i of the constant alpha^i")->required();
  constmul->add_option("--emit", const_emit, "equations | netlist | count")
      ->default_val("equations")
      ->check(CLI::IsMember({"equations", "netlist", "count"}));

  auto* mastrovito = app.add_subcommand("mastrovito", "Mastrovito multiplication matrix and circuits");
  add_field_opts(mastrovito);
  mastrovito->add_option("--a", a, "Fixed operand");
  mastrovito->add_option("--b", b, "Second operand; prints Z b");
  mastrovito->add_option("--emit", matrix_emit, "matrix | netlist | symbolic | multiplier")
      ->default_val("matrix")
      ->check(CLI::IsMember({"matrix", "netlist", "symbolic", "multiplier"}));

  auto* serial = app.add_subcommand("serial", "MSB-first serial interleaved multiplication trace");
  add_field_opts(serial);
  serial->add_option("--a", a, "Multiplicand")->required();
  serial->add_option("--b", b, "Multiplier, consumed MSB first")->required();
  serial->add_option("--mode", mode, "xor | nand")->default_val("xor")->check(CLI::IsMember({"xor", "nand"}));

  auto* lfsr = app.add_subcommand("lfsr", "Linear feedback shift registers");
  lfsr->require_subcommand(1);
  auto* lfsr_divide = lfsr->add_subcommand("divide", "Remainder of p / g with an internal-feedback register");
  lfsr_divide->add_option("--g", g, "Connection polynomial")->required();
  lfsr_divide->add_option("--p", p, "Dividend")->required();
  lfsr_divide->add_option("--trace", trace, "csv | table")->check(CLI::IsMember({"csv", "table"}));
  auto* lfsr_period = lfsr->add_subcommand("period", "Cycle length of the register from a seed");
  lfsr_period->add_option("--g", g, "Connection polynomial")->required();
  lfsr_period->add_flag("--external", external, "External (Fibonacci) feedback");
  lfsr_period->add_option("--seed", seed, "Initial stages X0 first; default 10...0");

  auto* code = app.add_subcommand("code", "Block code metrics");
  code->require_subcommand(1);
  auto* code_analyze = code->add_subcommand("analyze", "Minimum distance, detection and correction capability");
  code_analyze->add_option("--words", words, "File with one binary codeword per line")->required();
  code_analyze->add_option("--k", code_k, "Message length; default log2 of the word count");

  auto* report = app.add_subcommand("report", "Gate-count reports");
  report->require_subcommand(1);
  auto* report_gates = report->add_subcommand("gates", "Exact XOR counts of every constant multiplier");
  add_field_opts(report_gates);
  auto* report_complexity = report->add_subcommand("complexity", "Trinomial multiplier complexity table");
  report_complexity->add_option("--m", m, "Trinomial degree")->required();
  report_complexity->add_option("--k", k, "Middle exponent")->required();

  auto* errata = app.add_subcommand("errata", "Printed reference values that disagree with computation");

  auto* poly_cmd = app.add_subcommand("poly", "Polynomials over GF(2)");
  poly_cmd->require_subcommand(1);
  auto* poly_check = poly_cmd->add_subcommand("check", "Degree, irreducibility and primitivity");
  poly_check->add_option("--poly", poly, "Polynomial")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  Context ctx;
  ctx.out = &std::cout;
  ctx.notation = ascii ? gf2m::Notation::Ascii : gf2m::Notation::Unicode;

  try {
    ctx.format = parse_format(format);
    if (*field_table) {
      cmd_field_table(ctx, m, poly);
    } else if (*field_ops) {
      cmd_field_ops(ctx, m, poly, a, b);
    } else if (*field_inv) {
      cmd_field_inverse(ctx, m, poly, a);
    } else if (*minpolys) {
      cmd_minpolys(ctx, m, poly);
    } else if (*bases) {
      cmd_bases(ctx, m, poly);
    } else if (*constmul) {
      cmd_constmul(ctx, m, poly, power, const_emit);
    } else if (*mastrovito) {
      cmd_mastrovito(ctx, m, poly, a, b, matrix_emit);
    } else if (*serial) {
      cmd_serial(ctx, m, poly, a, b, mode);
    } else if (*lfsr_divide) {
      cmd_lfsr_divide(ctx, g, p, trace);
    } else if (*lfsr_period) {
      cmd_lfsr_period(ctx, g, external, seed);
    } else if (*code_analyze) {
      cmd_code_analyze(ctx, words, code_k);
    } else if (*report_gates) {
      cmd_report_gates(ctx, m, poly);
    } else if (*report_complexity) {
      cmd_report_complexity(ctx, m, k);
    } else if (*errata) {
      cmd_errata(ctx);
    } else if (*poly_check) {
      cmd_poly_check(ctx, poly);
    }
  } catch (const gf2m::Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == gf2m::Errc::InvariantViolation ? kExitInvariant : kExitInvalid;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
