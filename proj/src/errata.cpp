#include "gf2m/errata.hpp"

#include <array>

#include "gf2m/field.hpp"
#include "gf2m/field_algebra.hpp"
#include "gf2m/mastrovito.hpp"

namespace gf2m {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::vector<std::string> printed_column(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<ErrataEntry> errata_entries() {
  const Field gf8 = Field::build(3);
  const Field gf16 = Field::build(4);
  std::vector<ErrataEntry> out;

  out.push_back({"GF(2^3) power list", "alpha^4 polynomial", "2α + α^2", gf8.polynomial_string(gf8.alpha_pow(4)),
                 "the coefficient 2 reduces to 0 mod 2"});
  out.push_back({"GF(2^3) power list", "alpha^6 polynomial", "1 + α", gf8.polynomial_string(gf8.alpha_pow(6)),
                 "alpha^3 + alpha^4 = (alpha + 1) + (alpha^2 + alpha)"});

  const Element sum = gf16.add(gf16.alpha_pow(7), gf16.alpha_pow(10));
  out.push_back({"GF(2^4) addition example", "alpha^7 polynomial", "1 + α",
                 gf16.polynomial_string(gf16.alpha_pow(7)), "Table 2 gives alpha^7 = alpha^3 + alpha + 1"});
  out.push_back({"GF(2^4) addition example", "alpha^7 + alpha^10", "α^2",
                 gf16.format_row(sum).power + " (" + gf16.vector_string(sum) + ")",
                 "1011 XOR 0111 with the Table 2 vectors"});

  out.push_back({"vector representation example", "alpha^5 vector", "(1111)",
                 "GF(2^3): " + gf8.vector_string(gf8.alpha_pow(5)) + ", GF(2^4): " +
                     gf16.vector_string(gf16.alpha_pow(5)),
                 "no field of the text gives four ones"});

  out.push_back({"GF(2^3) power multiplication example", "operands", "α^3 and α^7",
                 "α^3 · α^5 = " + gf8.format_row(gf8.mul(gf8.alpha_pow(3), gf8.alpha_pow(5))).power,
                 "the displayed computation multiplies alpha^3 by alpha^5"});

  const Gf2Poly min3 = minimal_polynomial(gf16, gf16.alpha_pow(3));
  const Gf2Poly printed3 = Gf2Poly::from_exponents({0, 2, 3, 4});
  out.push_back({"Table 3", "minimal polynomial of {α^3, α^6, α^9, α^12}", to_ascending_string(printed3),
                 to_ascending_string(min3),
                 std::string("printed polynomial is ") + (is_irreducible(printed3) ? "irreducible" : "reducible") +
                     "; the worked conjugate expansion also yields the computed value"});

  // Printed z3 equation for the three mismatching constant blocks.
  const std::array<std::pair<unsigned, const char*>, 3> z3_printed{{{3, "a1 + a3"}, {8, "a1 + a2"}, {9, "a0 + a3"}}};
  for (const auto& [power, printed] : z3_printed) {
    const auto z = constant_mul_matrix(gf16, power);
    out.push_back({"GF(2^4) constant multiplier equations", "alpha^" + std::to_string(power) + " block, z3", printed,
                   format_linear_form(z.entries.row(3)), "column j of the matrix is alpha^(i+j)"});
  }

  const auto std_basis = standard_basis(gf16);
  const auto dual_of_std = dual_basis(gf16, std_basis);
  std::vector<std::string> std_col{"-"}, dual_col{"0000"}, normal_col{"0000"};
  for (std::uint64_t i = 0; i < gf16.group_order(); ++i) {
    const Element e = gf16.alpha_pow(i);
    std_col.push_back(coords_string(e.bits(), 4));
    dual_col.push_back(coords_string(dual_basis_coords(gf16, e, dual_of_std), 4));
    normal_col.push_back(coords_string(normal_basis_coords(gf16, e), 4));
  }
  out.push_back({"Table 4", "standard basis column, rows -, 0..14",
                 "- 0000 1000 0100 0010 0001 1100 0110 0011 1101 1010 0101 1110 0111 1111 1011", join(std_col),
                 "printed row k holds the value of alpha^(k-1); row 0 holds the zero vector"});
  out.push_back({"Table 4", "dual basis column, rows -, 0..14",
                 "0000 1000 0001 0010 0100 1001 0011 0110 1101 1010 0101 1011 0111 0000 1000 0001", join(dual_col),
                 "computed as Tr(z alpha^k), k = 0..3; printed row k holds alpha^(k-1) for k = 0..11 (row 0 holds "
                 "alpha^14), row 12 repeats the zero row, rows 13 and 14 repeat rows 0 and 1"});
  const auto printed_normal = printed_column("0000 1111 1001 1100 1000 0110 0101 0100 1110 0011 0001 1010 1101 0000 1111 1001");
  for (std::size_t row = 12; row <= 14; ++row) {
    out.push_back({"Table 4", "normal basis, row " + std::to_string(row), printed_normal[row + 1],
                   normal_col[row + 1],
                   row == 12 ? "printed value duplicates the zero row" : "printed value duplicates row " + std::to_string(row - 13)});
  }
  return out;
}

}  // namespace gf2m
