#include "gf2m/lfsr.hpp"

#include <algorithm>

#include "gf2m/error.hpp"

namespace gf2m {

LfsrConfig LfsrConfig::from_polynomial(const Gf2Poly& g, Feedback feedback) {
  const auto d = g.degree();
  if (!d || *d < 1) throw Error(Errc::BadConnectionPolynomial, "connection polynomial needs degree >= 1");
  if (!g.coeff(0)) throw Error(Errc::BadConnectionPolynomial, "connection polynomial needs a constant term");
  if (*d > 64) throw Error(Errc::BadConnectionPolynomial, "register longer than 64 stages");
  LfsrConfig c{g, feedback, static_cast<unsigned>(*d), {}};
  for (unsigned i = 0; i < c.degree; ++i) {
    if (g.coeff(i)) c.taps.push_back(i);
  }
  return c;
}

LfsrState LfsrState::from_bits(unsigned width, std::uint64_t bits) {
  LfsrState s = zeros(width);
  for (unsigned i = 0; i < width && i < 64; ++i) s.regs[i] = (bits >> i) & 1U;
  return s;
}

bool LfsrState::is_zero() const noexcept {
  return std::all_of(regs.begin(), regs.end(), [](std::uint8_t r) { return r == 0; });
}

namespace {

void check_width(const LfsrConfig& config, const LfsrState& state) {
  if (state.regs.size() != config.degree)
    throw Error(Errc::WidthMismatch, "state has " + std::to_string(state.regs.size()) + " stages, config needs " +
                                         std::to_string(config.degree));
}

}  // namespace

LfsrState step(const LfsrConfig& config, const LfsrState& state, bool input) {
  check_width(config, state);
  const unsigned d = config.degree;
  const std::uint8_t f = state.regs[d - 1];
  LfsrState next = LfsrState::zeros(d);
  next.regs[0] = static_cast<std::uint8_t>(input) ^ (config.g.coeff(0) ? f : 0);
  for (unsigned i = 1; i < d; ++i) next.regs[i] = state.regs[i - 1] ^ (config.g.coeff(i) ? f : 0);
  return next;
}

LfsrState step_external(const LfsrConfig& config, const LfsrState& state, bool input) {
  check_width(config, state);
  const unsigned d = config.degree;
  std::uint8_t f = 0;
  for (unsigned i : config.taps) f ^= state.regs[d - 1 - i];
  LfsrState next = LfsrState::zeros(d);
  for (unsigned i = d - 1; i > 0; --i) next.regs[i] = state.regs[i - 1];
  next.regs[0] = f ^ static_cast<std::uint8_t>(input);
  return next;
}

DivisionResult lfsr_divide(const Gf2Poly& p, const Gf2Poly& g) {
  const auto config = LfsrConfig::from_polynomial(g, Feedback::Internal);
  const std::size_t n = p.degree() ? *p.degree() + 1 : 1;
  DivisionResult out;
  LfsrState s = LfsrState::zeros(config.degree);
  for (std::size_t t = 1; t <= n; ++t) {
    const bool in = p.coeff(n - t);
    const bool f = s.regs[config.degree - 1] != 0;
    s = step(config, s, in);
    if (f) out.quotient.set_coeff(n - t, true);
    out.trace.push_back(TraceRow{static_cast<unsigned>(t), in, f, s});
  }
  for (unsigned i = 0; i < config.degree; ++i) {
    if (s.regs[i]) out.remainder.set_coeff(i, true);
  }
  return out;
}

std::uint64_t lfsr_period(const LfsrConfig& config, const LfsrState& seed) {
  check_width(config, seed);
  const std::uint64_t limit = config.degree >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << config.degree);
  LfsrState s = seed;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    s = config.feedback == Feedback::Internal ? step(config, s, false) : step_external(config, s, false);
    if (s == seed) return n;
  }
  throw Error(Errc::InvariantViolation, "seed does not lie on a cycle");
}

}  // namespace gf2m
