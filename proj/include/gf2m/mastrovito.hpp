#pragma once

// Bit-parallel Mastrovito multiplication as explicit artifacts.
//
// For a fixed operand a, the product c = a*b mod phi is linear in b:
// c = Z b, with column j of Z the coefficient vector of x^j a(x) mod phi(x).
// Each entry of Z is itself a GF(2) linear form in the bits of a, which is
// what the f-network of a general multiplier computes before the inner
// products with b.

#include <cstdint>
#include <string>
#include <vector>

#include "gf2m/bit_matrix.hpp"
#include "gf2m/field.hpp"
#include "gf2m/netlist.hpp"
#include "gf2m/rational.hpp"

namespace gf2m {

MastrovitoMatrix build_z_matrix(const Field& field, const Element& a);
// Same construction from a bare modulus (any degree-m polynomial, m <= 32).
MastrovitoMatrix build_z_matrix(const Gf2Poly& modulus, std::uint32_t a);

// c_i = XOR_j (z_ij AND b_j).  Throws DimensionMismatch or FieldMismatch.
Element mat_vec_mul(const Field& field, const MastrovitoMatrix& z, const Element& b);

// Column j = vector form of alpha^(power + j).  0 <= power <= 2^m - 2.
MastrovitoMatrix constant_mul_matrix(const Field& field, std::uint64_t power);

// entries[i][j] is a mask over a_0..a_{m-1}: z_ij = XOR of the selected a_k.
struct SymbolicMatrix {
  unsigned m = 0;
  std::vector<std::vector<std::uint32_t>> entries;
};

SymbolicMatrix symbolic_z_matrix(const Gf2Poly& modulus);

// "a0 + a3", or "0" for an empty form.
std::string format_linear_form(std::uint32_t mask, char var = 'a');

// One line per output, "z0 = a0 + a1 + a2".
std::vector<std::string> matrix_equations(const MastrovitoMatrix& z);

// Sum over rows of max(0, popcount(row) - 1).
unsigned xor_count(const MastrovitoMatrix& z);
// m^2/2 - m.
Rational xor_count_estimate(unsigned m);

enum class XorMode { Xor, Nand };

// XOR built from four NAND operations, lane-wise on `mask` bits.
std::uint32_t xor_via_nand(std::uint32_t p, std::uint32_t q, std::uint32_t mask) noexcept;

struct SerialResult {
  Element product;
  std::vector<Element> trace;  // accumulator after each of the m steps
};

// MSB-first interleaved multiplication: for k = 1..m,
//   P <- (P * x mod phi) XOR (b_{m-k} AND A).
// In NAND mode every XOR goes through xor_via_nand.
SerialResult serial_interleaved_multiply(const Field& field, const Element& a, const Element& b, XorMode mode);

// Constant and squaring matrices: inputs a_*, outputs z_*.  General
// matrices (a fixed): inputs b_*, outputs c_*.  One balanced XOR tree per
// row, no sharing between rows; empty rows drive CONST0.
Netlist emit_netlist(const MastrovitoMatrix& z);

// Full a*b multiplier: f-network (shared XORs per distinct entry form),
// m^2 AND gates pairing z_ij with b_j, and a balanced XOR tree per output.
Netlist emit_general_multiplier(const Gf2Poly& modulus);

// The serial recurrence unrolled over all m steps.
Netlist emit_serial_multiplier(const Gf2Poly& modulus, XorMode mode);

// One clock of the serial datapath: inputs p_*, a_*, q; outputs p_next_*.
Netlist emit_serial_step(const Gf2Poly& modulus, XorMode mode);

struct ConstantMultiplierRow {
  std::uint64_t power;
  unsigned xor_gates;
  unsigned depth;
  std::vector<std::string> equations;
};

struct ConstantMultiplierReport {
  unsigned m;
  Rational estimate;
  std::vector<ConstantMultiplierRow> rows;  // powers 1 .. 2^m - 2
  unsigned min_xor;
  unsigned max_xor;
  Rational mean_xor;
};

ConstantMultiplierReport constant_multiplier_report(const Field& field);

struct ComplexityRow {
  std::string design;
  std::string and_gates;
  std::string nand_gates;
  std::string xor_gates;
  std::string critical_path;
};

struct ComplexityReport {
  unsigned m;
  unsigned k;
  bool within_caption_constraint;  // 2 < 2k < m
  std::vector<ComplexityRow> literature;
  std::vector<ComplexityRow> measured;
  std::vector<std::string> notes;
};

// Literature gate counts for x^m + x^k + 1 multipliers, echoed verbatim,
// beside measured counts for the designs implemented here.  Throws
// UnsupportedTrinomial unless 1 <= k < m <= 32 and the trinomial is
// irreducible.
ComplexityReport complexity_report(unsigned m, unsigned k);

}  // namespace gf2m
