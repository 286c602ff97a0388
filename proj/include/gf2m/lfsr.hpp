#pragma once

// Linear feedback shift registers over GF(2).
//
// Stage i holds the X^i coefficient.  The internal (Galois) form divides
// by the connection polynomial; the external (Fibonacci) form generates
// sequences.

#include <cstdint>
#include <vector>

#include "gf2m/gf2_poly.hpp"

namespace gf2m {

enum class Feedback { Internal, External };

struct LfsrConfig {
  Gf2Poly g;
  Feedback feedback = Feedback::Internal;
  unsigned degree = 0;
  std::vector<unsigned> taps;  // i < degree with g_i = 1, ascending

  // Throws BadConnectionPolynomial unless deg g >= 1 and g_0 = 1.
  static LfsrConfig from_polynomial(const Gf2Poly& g, Feedback feedback = Feedback::Internal);
};

struct LfsrState {
  std::vector<std::uint8_t> regs;  // regs[i] = stage X^i

  static LfsrState zeros(unsigned width) { return LfsrState{std::vector<std::uint8_t>(width, 0)}; }
  // Bit i of `bits` loads stage i.
  static LfsrState from_bits(unsigned width, std::uint64_t bits);
  bool is_zero() const noexcept;
  friend bool operator==(const LfsrState&, const LfsrState&) = default;
};

// Divider step: f = regs[d-1]; regs'[0] = in ^ g_0 f; regs'[i] = regs[i-1] ^ g_i f.
// Throws WidthMismatch.
LfsrState step(const LfsrConfig& config, const LfsrState& state, bool input);

// Generator step: f = XOR of regs[d-1-i] over the taps i; the register
// shifts up one stage and regs'[0] = f ^ in.  Throws WidthMismatch.
LfsrState step_external(const LfsrConfig& config, const LfsrState& state, bool input);

struct TraceRow {
  unsigned clock;
  bool input;
  bool feedback;  // quotient bit leaving the top stage
  LfsrState regs;
};

struct DivisionResult {
  Gf2Poly remainder;
  Gf2Poly quotient;
  std::vector<TraceRow> trace;  // clocks 1 .. deg(p) + 1
};

// Streams the coefficients of p MSB-first into a zeroed internal register.
// p = 0 is fed as the single bit 0.  Throws BadConnectionPolynomial.
DivisionResult lfsr_divide(const Gf2Poly& p, const Gf2Poly& g);

// Clocks from `seed` with zero input until the state repeats; returns the
// cycle length of the orbit through the seed.  The seed must lie on a cycle,
// which always holds when g_0 = 1.
std::uint64_t lfsr_period(const LfsrConfig& config, const LfsrState& seed);

}  // namespace gf2m
