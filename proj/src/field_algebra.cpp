#include "gf2m/field_algebra.hpp"

#include <algorithm>

#include "gf2m/error.hpp"
#include "gf2m/kernels.hpp"

namespace gf2m {

ConjugacyClass conjugacy_class(const Field& field, const Element& b) {
  ConjugacyClass out{b, {b}};
  if (b.is_zero()) return out;
  for (Element c = field.square(b); c != b; c = field.square(c)) {
    out.members.push_back(c);
    if (out.members.size() > field.m())
      throw Error(Errc::InvariantViolation, "conjugacy orbit longer than m");
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const Field& field) {
  std::vector<ConjugacyClass> out;
  out.push_back(conjugacy_class(field, field.zero()));
  std::vector<bool> seen(field.group_order(), false);
  for (std::uint64_t e = 0; e < field.group_order(); ++e) {
    if (seen[e]) continue;
    auto cls = conjugacy_class(field, field.alpha_pow(e));
    for (const auto& member : cls.members) seen[field.log(member.bits())] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Element> expand_linear_factors(const Field& field, const std::vector<Element>& roots) {
  std::vector<Element> coeffs{field.one()};
  for (const Element& r : roots) {
    std::vector<Element> next(coeffs.size() + 1, field.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], coeffs[i]);
      next[i] = field.add(next[i], field.mul(r, coeffs[i]));
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

Gf2Poly minimal_polynomial(const Field& field, const Element& b) {
  if (b.is_zero()) return Gf2Poly::monomial(1);
  const auto coeffs = expand_linear_factors(field, conjugacy_class(field, b).members);
  Gf2Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].bits() > 1)
      throw Error(Errc::InvariantViolation, "minimal polynomial coefficient outside GF(2)");
    if (coeffs[i].bits() == 1) out.set_coeff(i, true);
  }
  return out;
}

Element evaluate(const Field& field, const Gf2Poly& f, const Element& b) {
  return field.element(kernels::horner_bits(field, f, b.bits()));
}

std::vector<Element> roots_in_field(const Field& field, const Gf2Poly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "every element is a root of the zero polynomial");
  std::vector<Element> out;
  for (std::uint32_t bits : kernels::roots_omp(field, f)) out.push_back(field.element(bits));
  return out;
}

unsigned trace(const Field& field, const Element& b) {
  Element acc = field.zero();
  Element power = b;
  for (unsigned k = 0; k < field.m(); ++k) {
    acc = field.add(acc, power);
    power = field.square(power);
  }
  if (acc.bits() > 1) throw Error(Errc::InvariantViolation, "trace outside GF(2)");
  return acc.bits();
}

namespace {

void check_basis_size(const Field& field, const std::vector<Element>& basis) {
  if (basis.size() != field.m())
    throw Error(Errc::DimensionMismatch, "basis needs exactly m = " + std::to_string(field.m()) + " elements");
  for (const auto& e : basis) {
    if (!field.owns(e)) throw Error(Errc::FieldMismatch, "basis element from a different field");
  }
}

BitMatrix basis_matrix(const Field& field, const std::vector<Element>& basis) {
  std::vector<std::uint32_t> cols;
  for (const auto& e : basis) cols.push_back(e.bits());
  return BitMatrix::from_columns(field.m(), cols);
}

}  // namespace

std::uint32_t basis_coords(const Field& field, const Element& b, const std::vector<Element>& basis) {
  check_basis_size(field, basis);
  const auto x = basis_matrix(field, basis).solve(b.bits());
  if (!x) throw Error(Errc::DependentBasis, "basis elements are linearly dependent");
  return *x;
}

std::vector<Element> dual_basis(const Field& field, const std::vector<Element>& basis) {
  check_basis_size(field, basis);
  const unsigned m = field.m();
  // T[i][k] = Tr(basis_i * alpha^k); mu_j is column j of T^-1.
  BitMatrix t(m, m);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned k = 0; k < m; ++k) t.set(i, k, trace(field, field.mul(basis[i], field.alpha_pow(k))) != 0);
  }
  const auto inv = t.inverse();
  if (!inv) throw Error(Errc::DependentBasis, "basis elements are linearly dependent");
  std::vector<Element> mu;
  for (unsigned j = 0; j < m; ++j) mu.push_back(field.element(inv->column(j)));
  return mu;
}

std::uint32_t dual_basis_coords(const Field& field, const Element& b, const std::vector<Element>& basis) {
  const auto mu = dual_basis(field, basis);
  std::uint32_t z = 0;
  for (unsigned k = 0; k < mu.size(); ++k) z |= static_cast<std::uint32_t>(trace(field, field.mul(b, mu[k]))) << k;
  return z;
}

std::vector<Element> standard_basis(const Field& field) {
  std::vector<Element> out;
  for (unsigned k = 0; k < field.m(); ++k) out.push_back(field.alpha_pow(k));
  return out;
}

NormalBasis normal_basis(const Field& field, std::uint64_t generator_exponent) {
  NormalBasis nb{generator_exponent, {}};
  Element c = field.alpha_pow(generator_exponent);
  for (unsigned i = 0; i < field.m(); ++i) {
    nb.elements.push_back(c);
    c = field.square(c);
  }
  if (basis_matrix(field, nb.elements).rank() != field.m())
    throw Error(Errc::DependentBasis, "conjugates of alpha^" + std::to_string(generator_exponent) + " are dependent");
  return nb;
}

NormalBasis normal_basis(const Field& field) {
  for (std::uint64_t g = 1; g < field.group_order(); ++g) {
    if (conjugacy_class(field, field.alpha_pow(g)).size() != field.m()) continue;
    try {
      return normal_basis(field, g);
    } catch (const Error& e) {
      if (e.code() != Errc::DependentBasis) throw;
    }
  }
  throw Error(Errc::InvariantViolation, "no normal basis found");
}

std::uint32_t normal_basis_coords(const Field& field, const Element& b) {
  return basis_coords(field, b, normal_basis(field).elements);
}

std::string coords_string(std::uint32_t coords, unsigned m) {
  std::string out(m, '0');
  for (unsigned k = 0; k < m; ++k) {
    if ((coords >> k) & 1U) out[k] = '1';
  }
  return out;
}

}  // namespace gf2m
