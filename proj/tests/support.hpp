#pragma once

#include <cstdint>

#include "gf2m/gf2_poly.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Poly to_oracle(const gf2m::Gf2Poly& p) {
  oracle::Poly out;
  if (const auto d = p.degree()) {
    for (std::size_t i = 0; i <= *d; ++i) out.push_back(p.coeff(i) ? 1 : 0);
  }
  return out;
}

inline gf2m::Gf2Poly random_poly(std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  const std::size_t d = deg(oracle::rng());
  gf2m::Gf2Poly p;
  for (std::size_t i = 0; i < d; ++i) p.set_coeff(i, oracle::rng()() & 1U);
  p.set_coeff(d, true);
  return p;
}

}  // namespace support
