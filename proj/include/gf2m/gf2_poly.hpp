#pragma once

// Polynomials over GF(2) of arbitrary degree.
//
// Coefficients are packed little-endian into 64-bit words: bit i of the
// sequence is the coefficient of X^i.  The representation is canonical
// (no zero words above the leading term), so equality is structural.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2m {

class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly from_bits(std::uint64_t bits);
  static Gf2Poly monomial(std::size_t degree);
  // X^e0 + X^e1 + ...; repeated exponents cancel.
  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents);

  bool is_zero() const noexcept { return words_.empty(); }
  // Empty for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  bool coeff(std::size_t i) const noexcept;
  void set_coeff(std::size_t i, bool value);
  std::size_t weight() const noexcept;

  // The packed coefficients when the degree is below 64.
  std::optional<std::uint64_t> to_u64() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // Ascending exponents with nonzero coefficient.
  std::vector<std::size_t> exponents() const;

  Gf2Poly& operator+=(const Gf2Poly& rhs);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  Gf2Poly shifted(std::size_t n) const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim() noexcept;
  std::vector<std::uint64_t> words_;
};

struct DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

// Long division with mod-2 coefficients.  Throws DivisionByZeroPoly.
DivMod poly_divmod(const Gf2Poly& num, const Gf2Poly& den);
Gf2Poly poly_mod(const Gf2Poly& num, const Gf2Poly& den);

// f(X)^2 = f(X^2): coefficient i moves to position 2i.
Gf2Poly square_poly(const Gf2Poly& f);
// f(X^(2^l)) by direct substitution.
Gf2Poly substitute_x_pow2(const Gf2Poly& f, unsigned l);

// Trial division by every polynomial of degree 1..deg(f)/2.  Cost grows as
// 2^(deg/2), fine up to degree 40 or so.  Throws DegreeZero for constants.
bool is_irreducible(const Gf2Poly& f);

// Multiplicative order of X modulo f, by square-and-multiply over the
// divisors of 2^m - 1.  Requires f irreducible with 1 <= deg f <= 32 and
// f(0) = 1; throws NotIrreducibleInput or UnsupportedDegree otherwise.
std::uint64_t order_of_x(const Gf2Poly& f);

// Order of X equals 2^m - 1.  Throws NotIrreducibleInput if f is reducible.
bool is_primitive(const Gf2Poly& f);

// Definitional form: f divides X^(2^m-1)+1 and no X^n+1 for 1 <= n < 2^m-1.
// Linear in 2^m; meant as a cross-check for small m.
bool is_primitive_by_definition(const Gf2Poly& f);

// Input formats: binary "10011" (leftmost = highest degree), hex "0x13",
// term list "x^4+x+1".  Throws ParseError.
Gf2Poly parse_poly(std::string_view text);

std::string to_binary_string(const Gf2Poly& p);
std::string to_hex_string(const Gf2Poly& p);
// Compact descending term list, "x^4+x+1".
std::string to_term_string(const Gf2Poly& p);
// Ascending display form, "1 + X + X^4".
std::string to_ascending_string(const Gf2Poly& p, std::string_view var = "X");

struct RegistryEntry {
  unsigned m;
  std::string_view binary;
};

// Default primitive polynomials, m = 2..24.  The m = 7 entry is
// 1 + X^3 + X^7.
std::span<const RegistryEntry> prime_poly_registry() noexcept;
std::optional<Gf2Poly> registry_poly(unsigned m);

}  // namespace gf2m
