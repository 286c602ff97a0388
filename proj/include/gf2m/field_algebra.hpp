#pragma once

#include <cstdint>
#include <vector>

#include "gf2m/field.hpp"
#include "gf2m/gf2_poly.hpp"

namespace gf2m {

// The characteristic of every GF(2^m): 1 + 1 = 0.
inline constexpr unsigned kCharacteristic = 2;

struct ConjugacyClass {
  Element representative;
  std::vector<Element> members;  // b, b^2, b^4, ..., b^(2^(L-1))
  std::size_t size() const noexcept { return members.size(); }
};

// Repeated squaring until the orbit closes.  The class of zero is {0}.
ConjugacyClass conjugacy_class(const Field& field, const Element& b);

// Every class, ordered by smallest exponent; zero first.
std::vector<ConjugacyClass> conjugacy_classes(const Field& field);

// Product of (X + c) over the conjugates of b, expanded with field
// arithmetic.  The coefficients must collapse into GF(2); a stray field
// coefficient raises InvariantViolation.  Zero maps to X.
Gf2Poly minimal_polynomial(const Field& field, const Element& b);

// f evaluated at b by Horner's rule in the field.
Element evaluate(const Field& field, const Gf2Poly& f, const Element& b);

// Zero set of f over all 2^m elements, ascending by bit pattern.  Uses the
// OpenMP kernel.
std::vector<Element> roots_in_field(const Field& field, const Gf2Poly& f);

// Expand prod (X + r) for field elements r; coefficients as field elements,
// index = power of X.
std::vector<Element> expand_linear_factors(const Field& field, const std::vector<Element>& roots);

// Tr(b) = sum of b^(2^k), k < m.  Always 0 or 1.
unsigned trace(const Field& field, const Element& b);

// Coordinates of b against an arbitrary basis (bit k = coefficient of
// basis[k]).  Throws DependentBasis or DimensionMismatch.
std::uint32_t basis_coords(const Field& field, const Element& b, const std::vector<Element>& basis);

// The basis mu with Tr(basis[i] * mu[j]) = [i == j].
std::vector<Element> dual_basis(const Field& field, const std::vector<Element>& basis);

// z_k = Tr(b * mu_k), where mu is the dual of `basis`; these are the
// coordinates of b in `basis` itself.
std::uint32_t dual_basis_coords(const Field& field, const Element& b, const std::vector<Element>& basis);

std::vector<Element> standard_basis(const Field& field);

struct NormalBasis {
  std::uint64_t generator_exponent;  // basis = alpha^(g * 2^i)
  std::vector<Element> elements;
};

// Conjugates of alpha^g for the smallest g that yields an independent set.
NormalBasis normal_basis(const Field& field);
// Conjugates of an explicit generator.  Throws DependentBasis.
NormalBasis normal_basis(const Field& field, std::uint64_t generator_exponent);

std::uint32_t normal_basis_coords(const Field& field, const Element& b);

// Bit string of an m-bit coordinate vector, first basis element leftmost.
std::string coords_string(std::uint32_t coords, unsigned m);

}  // namespace gf2m
