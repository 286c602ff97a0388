#pragma once

// GF(2^m) built from a primitive polynomial.
//
// Elements use the polynomial (standard) basis: bit i of Element::bits() is
// the coefficient of alpha^i.  Printed vectors put the alpha^(m-1)
// coefficient leftmost.
//
// A Field is immutable once built and cheap to copy (tables are shared), so
// one instance can serve any number of threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gf2m/bit_matrix.hpp"
#include "gf2m/gf2_poly.hpp"

namespace gf2m {

class Field;

class Element {
 public:
  std::uint32_t bits() const noexcept { return bits_; }
  bool bit(unsigned i) const noexcept { return (bits_ >> i) & 1U; }
  bool is_zero() const noexcept { return bits_ == 0; }
  // Full prime polynomial (with the X^m term) of the owning field.
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  friend class Field;
  Element(std::uint64_t modulus, std::uint32_t bits) : modulus_(modulus), bits_(bits) {}

  std::uint64_t modulus_;
  std::uint32_t bits_;
};

// Exponent of alpha, or the zero element, which has none.
class PowerForm {
 public:
  static PowerForm zero() noexcept { return PowerForm{}; }
  static PowerForm of(std::uint64_t exponent) noexcept { return PowerForm{exponent}; }

  bool is_zero() const noexcept { return !exponent_.has_value(); }
  // Throws InvalidArgument for the zero element.
  std::uint64_t exponent() const;

  friend bool operator==(const PowerForm&, const PowerForm&) = default;

 private:
  PowerForm() = default;
  explicit PowerForm(std::uint64_t e) : exponent_(e) {}
  std::optional<std::uint64_t> exponent_;
};

enum class Notation { Unicode, Ascii };

// One row of the exponential / polynomial / vector representation table.
struct RepresentationRow {
  std::string power;       // "α^7", or "-" for zero
  std::string polynomial;  // "α^3 + α + 1"
  std::string vector;      // "1011", alpha^(m-1) coefficient first
};

namespace detail {
struct FieldTables;
class DiscreteLog;
}  // namespace detail

class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 32;
  // Log/antilog tables are materialised up to this degree.
  static constexpr unsigned kTableMaxDegree = 20;

  // Uses the built-in registry when prime_poly is omitted.  Throws
  // UnsupportedDegree, NotIrreducible or NotPrimitive.
  static Field build(unsigned m, std::optional<Gf2Poly> prime_poly = std::nullopt);

  unsigned m() const noexcept { return m_; }
  const Gf2Poly& prime_poly() const noexcept { return prime_poly_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
  // 2^m - 1, the order of the multiplicative group.
  std::uint64_t group_order() const noexcept { return size() - 1; }
  std::uint32_t mask() const noexcept { return static_cast<std::uint32_t>(size() - 1); }
  bool has_tables() const noexcept { return m_ <= kTableMaxDegree; }

  Element zero() const noexcept { return Element(modulus_, 0); }
  Element one() const noexcept { return Element(modulus_, 1); }
  Element alpha() const noexcept { return Element(modulus_, 2); }
  // Throws InvalidArgument if bits has set positions >= m.
  Element element(std::uint32_t bits) const;
  Element element(const Gf2Poly& p) const;
  Element alpha_pow(std::uint64_t e) const;
  bool owns(const Element& e) const noexcept { return e.modulus() == modulus_; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const { return add(a, b); }
  // Via log/antilog: antilog[(log a + log b) mod (2^m - 1)].
  Element mul_power(const Element& a, const Element& b) const;
  // Carry-less product reduced modulo the prime polynomial.
  Element mul_poly(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const { return mul_poly(a, b); }
  // Squaring matrix applied to a.
  Element square(const Element& a) const;
  // Throws ZeroToZero for pow(0, 0).
  Element pow(const Element& a, std::uint64_t n) const;
  // Register chain r <- (r * a)^2, m - 1 times, from r = 1.  Throws ZeroInverse.
  Element inverse(const Element& a) const;
  // Register contents 1, a^2, a^6, a^14, ..., a^(2^m - 2); size m.
  std::vector<Element> inverse_trace(const Element& a) const;
  Element divide(const Element& a, const Element& b) const;

  PowerForm to_power_form(const Element& a) const;
  Element from_power_form(const PowerForm& p) const;
  RepresentationRow format_row(const Element& a, Notation notation = Notation::Unicode) const;
  // Leftmost character = coefficient of alpha^(m-1).
  std::string vector_string(const Element& a) const;
  std::string polynomial_string(const Element& a, Notation notation = Notation::Unicode) const;

  const MastrovitoMatrix& squaring_matrix() const noexcept;

  // Unchecked kernels on raw bit patterns.
  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t antilog(std::uint64_t e) const noexcept;
  // a must be nonzero.
  std::uint64_t log(std::uint32_t a) const;

  // Same m and prime polynomial.
  friend bool operator==(const Field& a, const Field& b) noexcept { return a.modulus_ == b.modulus_; }

 private:
  Field() = default;
  void require_owned(const Element& a) const;

  unsigned m_ = 0;
  Gf2Poly prime_poly_;
  std::uint64_t modulus_ = 0;
  std::shared_ptr<const detail::FieldTables> tables_;
};

// Column j is the vector form of alpha^(2j).
MastrovitoMatrix square_matrix(const Field& field);

}  // namespace gf2m
