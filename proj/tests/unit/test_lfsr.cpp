#include <doctest.h>

#include <set>

#include "gf2m/error.hpp"
#include "gf2m/lfsr.hpp"
#include "support.hpp"

using namespace gf2m;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gf2m::Error");
  return Errc::InvariantViolation;
}

std::string regs_string(const LfsrState& s) {
  std::string out;
  for (auto r : s.regs) out += r ? '1' : '0';
  return out;
}

}  // namespace

TEST_SUITE("lfsr") {
  TEST_CASE("Table 6 division trace") {
    const auto r = lfsr_divide(parse_poly("x^7+x^6+x^3+x^2+x"), parse_poly("x^5+x^3+x^2+1"));
    // X0..X4 after clocks 1..8.
    const char* rows[] = {"10000", "11000", "01100", "00110", "10011", "01111", "00001", "10110"};
    const bool inputs[] = {true, true, false, false, true, true, true, false};
    REQUIRE(r.trace.size() == 8);
    for (unsigned t = 0; t < 8; ++t) {
      CAPTURE(t);
      CHECK(r.trace[t].clock == t + 1);
      CHECK(r.trace[t].input == inputs[t]);
      CHECK(regs_string(r.trace[t].regs) == rows[t]);
    }
    CHECK(r.remainder == parse_poly("x^3+x^2+1"));
    CHECK(r.quotient == parse_poly("x^2+x+1"));
  }

  TEST_CASE("remainder agrees with long division on random instances") {
    for (int t = 0; t < 1000; ++t) {
      Gf2Poly g = support::random_poly(12);
      g.set_coeff(0, true);
      if (!g.degree() || *g.degree() == 0) g = parse_poly("x+1");
      const Gf2Poly p = support::random_poly(60);
      const auto r = lfsr_divide(p, g);
      const auto ref = poly_divmod(p, g);
      CHECK(r.remainder == ref.remainder);
      CHECK(r.quotient == ref.quotient);
    }
  }

  TEST_CASE("clocks are consecutive and one per input bit") {
    const auto r = lfsr_divide(parse_poly("x^9+x"), parse_poly("x^3+x+1"));
    CHECK(r.trace.size() == 10);
    for (std::size_t i = 0; i < r.trace.size(); ++i) CHECK(r.trace[i].clock == i + 1);
    CHECK(lfsr_divide(Gf2Poly{}, parse_poly("x^3+x+1")).remainder.is_zero());
  }

  TEST_CASE("division is linear in the dividend") {
    for (int t = 0; t < 300; ++t) {
      Gf2Poly g = support::random_poly(10);
      g.set_coeff(0, true);
      if (*g.degree() == 0) g.set_coeff(1, true);
      const Gf2Poly p1 = support::random_poly(40), p2 = support::random_poly(40);
      CHECK(lfsr_divide(p1 + p2, g).remainder == lfsr_divide(p1, g).remainder + lfsr_divide(p2, g).remainder);
    }
  }

  TEST_CASE("connection polynomial validation") {
    CHECK(code_of([] { LfsrConfig::from_polynomial(parse_poly("1")); }) == Errc::BadConnectionPolynomial);
    CHECK(code_of([] { LfsrConfig::from_polynomial(parse_poly("x^3+x")); }) == Errc::BadConnectionPolynomial);
    CHECK(code_of([] { lfsr_divide(parse_poly("x"), parse_poly("x^2")); }) == Errc::BadConnectionPolynomial);
    const auto cfg = LfsrConfig::from_polynomial(parse_poly("x^5+x^3+x^2+1"));
    CHECK(cfg.degree == 5);
    CHECK(cfg.taps == std::vector<unsigned>{0, 2, 3});
    CHECK(code_of([&] { step(cfg, LfsrState::zeros(4), true); }) == Errc::WidthMismatch);
    CHECK(code_of([&] { step_external(cfg, LfsrState::zeros(6), true); }) == Errc::WidthMismatch);
  }

  TEST_CASE("X^3 + X + 1 external register has period 7") {
    const auto cfg = LfsrConfig::from_polynomial(parse_poly("x^3+x+1"), Feedback::External);
    CHECK(lfsr_period(cfg, LfsrState::from_bits(3, 0b100)) == 7);
    CHECK(lfsr_period(cfg, LfsrState::from_bits(3, 0b001)) == 7);
    CHECK(lfsr_period(cfg, LfsrState::zeros(3)) == 1);
    LfsrState s = LfsrState::zeros(3);
    for (int i = 0; i < 5; ++i) s = step_external(cfg, s, false);
    CHECK(s.is_zero());
  }

  TEST_CASE("primitive connection polynomials visit every nonzero state") {
    for (unsigned m = 2; m <= 10; ++m) {
      const Gf2Poly g = *registry_poly(m);
      for (Feedback fb : {Feedback::External, Feedback::Internal}) {
        const auto cfg = LfsrConfig::from_polynomial(g, fb);
        const LfsrState seed = LfsrState::from_bits(m, 1);
        CHECK(lfsr_period(cfg, seed) == (std::uint64_t{1} << m) - 1);
        std::set<std::vector<std::uint8_t>> seen;
        LfsrState s = seed;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << m) - 1; ++i) {
          seen.insert(s.regs);
          s = fb == Feedback::External ? step_external(cfg, s, false) : step(cfg, s, false);
        }
        CHECK(seen.size() == (std::size_t{1} << m) - 1);
      }
    }
  }

  TEST_CASE("a non-primitive irreducible gives a shorter period") {
    const auto cfg = LfsrConfig::from_polynomial(parse_poly("x^4+x^3+x^2+x+1"), Feedback::External);
    CHECK(lfsr_period(cfg, LfsrState::from_bits(4, 1)) == 5);
  }

  TEST_CASE("internal step multiplies by x modulo g") {
    const Gf2Poly g = parse_poly("x^5+x^2+1");
    const auto cfg = LfsrConfig::from_polynomial(g);
    for (std::uint64_t v = 0; v < 32; ++v) {
      const LfsrState next = step(cfg, LfsrState::from_bits(5, v), false);
      const Gf2Poly expect = poly_mod(Gf2Poly::from_bits(v).shifted(1), g);
      std::uint64_t bits = 0;
      for (unsigned i = 0; i < 5; ++i) bits |= std::uint64_t{next.regs[i]} << i;
      CHECK(Gf2Poly::from_bits(bits) == expect);
    }
  }
}
