#include "gf2m/field.hpp"

#include "field_internal.hpp"
#include "gf2m/error.hpp"

namespace gf2m {

std::uint64_t PowerForm::exponent() const {
  if (!exponent_) throw Error(Errc::InvalidArgument, "the zero element has no exponent");
  return *exponent_;
}

Field Field::build(unsigned m, std::optional<Gf2Poly> prime_poly) {
  if (m < kMinDegree || m > kMaxDegree)
    throw Error(Errc::UnsupportedDegree, "m = " + std::to_string(m) + " outside 2..32");
  if (!prime_poly) {
    prime_poly = registry_poly(m);
    if (!prime_poly)
      throw Error(Errc::UnsupportedDegree, "no built-in prime polynomial for m = " + std::to_string(m));
  }
  if (prime_poly->degree() != std::optional<std::size_t>(m))
    throw Error(Errc::InvalidArgument, to_binary_string(*prime_poly) + " does not have degree " + std::to_string(m));
  if (!is_irreducible(*prime_poly)) throw Error(Errc::NotIrreducible, to_binary_string(*prime_poly));
  if (!is_primitive(*prime_poly)) throw Error(Errc::NotPrimitive, to_binary_string(*prime_poly));

  Field f;
  f.m_ = m;
  f.prime_poly_ = *prime_poly;
  f.modulus_ = *prime_poly->to_u64();

  auto tables = std::make_shared<detail::FieldTables>();
  if (m <= kTableMaxDegree) {
    const std::uint64_t n = f.group_order();
    tables->antilog.resize(n);
    tables->log.assign(f.size(), 0);
    std::vector<bool> seen(f.size(), false);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (x == 0 || seen[x]) throw Error(Errc::InvariantViolation, "alpha powers repeat before 2^m - 1");
      seen[x] = true;
      tables->antilog[i] = x;
      tables->log[x] = static_cast<std::uint32_t>(i);
      // multiply by alpha, reduce by the prime polynomial
      std::uint64_t next = std::uint64_t{x} << 1;
      if ((next >> m) & 1U) next ^= f.modulus_;
      x = static_cast<std::uint32_t>(next);
    }
    if (x != 1) throw Error(Errc::InvariantViolation, "alpha^(2^m - 1) != 1");
  } else {
    tables->dlog = std::make_unique<detail::DiscreteLog>(f.modulus_, m);
  }
  f.tables_ = tables;

  std::vector<std::uint32_t> columns(m);
  for (unsigned j = 0; j < m; ++j) columns[j] = f.antilog(2 * j);
  tables->squaring = MastrovitoMatrix{m, BitMatrix::from_columns(m, columns), SquaringSource{}};
  return f;
}

Element Field::element(std::uint32_t bits) const {
  if (bits & ~mask())
    throw Error(Errc::InvalidArgument, "element wider than m = " + std::to_string(m_) + " bits");
  return Element(modulus_, bits);
}

Element Field::element(const Gf2Poly& p) const {
  const auto d = p.degree();
  if (d && *d >= m_) throw Error(Errc::InvalidArgument, "polynomial degree >= m");
  return Element(modulus_, static_cast<std::uint32_t>(p.to_u64().value_or(0)));
}

Element Field::alpha_pow(std::uint64_t e) const { return Element(modulus_, antilog(e)); }

void Field::require_owned(const Element& a) const {
  if (!owns(a)) throw Error(Errc::FieldMismatch, "element belongs to a different field");
}

Element Field::add(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
  return Element(modulus_, a.bits() ^ b.bits());
}

Element Field::mul_power(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
  return Element(modulus_, mul_bits(a.bits(), b.bits()));
}

Element Field::mul_poly(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
  return Element(modulus_, clmul_reduce(a.bits(), b.bits()));
}

Element Field::square(const Element& a) const {
  require_owned(a);
  return Element(modulus_, tables_->squaring.apply(a.bits()));
}

Element Field::pow(const Element& a, std::uint64_t n) const {
  require_owned(a);
  if (a.is_zero()) {
    if (n == 0) throw Error(Errc::ZeroToZero, "0^0 is undefined");
    return zero();
  }
  if (n == 0) return one();
  const std::uint64_t order = group_order();
  const auto e = static_cast<std::uint64_t>(static_cast<detail::u128>(log(a.bits())) * (n % order) % order);
  return alpha_pow(e);
}

std::vector<Element> Field::inverse_trace(const Element& a) const {
  require_owned(a);
  if (a.is_zero()) throw Error(Errc::ZeroInverse, "zero has no inverse");
  std::vector<Element> regs;
  regs.reserve(m_);
  Element r = one();
  regs.push_back(r);
  for (unsigned step = 1; step < m_; ++step) {
    r = square(mul_poly(r, a));
    regs.push_back(r);
  }
  return regs;
}

Element Field::inverse(const Element& a) const {
  const Element r = inverse_trace(a).back();
  if (mul_poly(r, a) != one()) throw Error(Errc::InvariantViolation, "inverse chain did not reach a^-1");
  return r;
}

Element Field::divide(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return mul_poly(a, inverse(b));
}

PowerForm Field::to_power_form(const Element& a) const {
  require_owned(a);
  if (a.is_zero()) return PowerForm::zero();
  return PowerForm::of(log(a.bits()));
}

Element Field::from_power_form(const PowerForm& p) const {
  if (p.is_zero()) return zero();
  return alpha_pow(p.exponent());
}

std::string Field::vector_string(const Element& a) const {
  std::string out(m_, '0');
  for (unsigned i = 0; i < m_; ++i) {
    if (a.bit(i)) out[m_ - 1 - i] = '1';
  }
  return out;
}

std::string Field::polynomial_string(const Element& a, Notation notation) const {
  if (a.is_zero()) return "0";
  const std::string sym = notation == Notation::Unicode ? "α" : "a";
  std::string out;
  for (unsigned i = m_; i-- > 0;) {
    if (!a.bit(i)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += sym;
    } else {
      out += sym + "^" + std::to_string(i);
    }
  }
  return out;
}

RepresentationRow Field::format_row(const Element& a, Notation notation) const {
  const PowerForm p = to_power_form(a);
  const std::string sym = notation == Notation::Unicode ? "α" : "a";
  return RepresentationRow{
      p.is_zero() ? "-" : sym + "^" + std::to_string(p.exponent()),
      polynomial_string(a, notation),
      vector_string(a),
  };
}

const MastrovitoMatrix& Field::squaring_matrix() const noexcept { return tables_->squaring; }

std::uint32_t Field::mul_bits(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (!tables_->antilog.empty()) {
    const std::uint64_t n = group_order();
    std::uint64_t e = std::uint64_t{tables_->log[a]} + tables_->log[b];
    if (e >= n) e -= n;
    return tables_->antilog[e];
  }
  return antilog((tables_->dlog->log(a) + tables_->dlog->log(b)) % group_order());
}

std::uint32_t Field::clmul_reduce(std::uint32_t a, std::uint32_t b) const noexcept {
  return detail::clmul_mod(a, b, modulus_, m_);
}

std::uint32_t Field::antilog(std::uint64_t e) const noexcept {
  e %= group_order();
  if (!tables_->antilog.empty()) return tables_->antilog[e];
  return detail::pow_mod(2, e, modulus_, m_);
}

std::uint64_t Field::log(std::uint32_t a) const {
  if (a == 0 || (a & ~mask())) throw Error(Errc::InvalidArgument, "log needs a nonzero element");
  if (!tables_->log.empty()) return tables_->log[a];
  return tables_->dlog->log(a);
}

MastrovitoMatrix square_matrix(const Field& field) { return field.squaring_matrix(); }

}  // namespace gf2m
