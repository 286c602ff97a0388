#include <cmath>
#include <memory>

#include "field_internal.hpp"
#include "gf2m/error.hpp"

namespace gf2m::detail {

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint64_t modulus, unsigned m) noexcept {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  while (b) {
    if (b & 1U) acc ^= shifted;
    b >>= 1;
    shifted <<= 1;
  }
  for (unsigned bit = 2 * m; bit-- > m;) {
    if ((acc >> bit) & 1U) acc ^= modulus << (bit - m);
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint64_t modulus, unsigned m) noexcept {
  std::uint32_t result = 1;
  while (e) {
    if (e & 1U) result = clmul_mod(result, base, modulus, m);
    base = clmul_mod(base, base, modulus, m);
    e >>= 1;
  }
  return result;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  // Extended Euclid on signed 128-bit values.
  i128 t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    const i128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += n;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

DiscreteLog::DiscreteLog(std::uint64_t modulus, unsigned m)
    : modulus_(modulus), m_(m), order_((std::uint64_t{1} << m) - 1) {
  std::uint64_t rest = order_;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    primes_.push_back(PrimeTable{p, e, 0, 0, 0, {}});
  }
  if (rest > 1) primes_.push_back(PrimeTable{rest, 1, 0, 0, 0, {}});

  for (auto& t : primes_) {
    t.gamma = pow_mod(2, order_ / t.p, modulus_, m_);
    t.stride = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(t.p))));
    t.baby.reserve(t.stride);
    std::uint32_t g = 1;
    for (std::uint64_t j = 0; j < t.stride; ++j) {
      t.baby.emplace(g, static_cast<std::uint32_t>(j));
      g = clmul_mod(g, t.gamma, modulus_, m_);
    }
    // gamma^(-stride) = gamma^(p - stride mod p)
    t.giant = pow_mod(t.gamma, (t.p - t.stride % t.p) % t.p, modulus_, m_);
  }
}

std::uint64_t DiscreteLog::log_in_subgroup(const PrimeTable& t, std::uint32_t h) const {
  std::uint32_t y = h;
  for (std::uint64_t i = 0; i <= t.stride; ++i) {
    if (auto it = t.baby.find(y); it != t.baby.end()) return (i * t.stride + it->second) % t.p;
    y = clmul_mod(y, t.giant, modulus_, m_);
  }
  throw Error(Errc::InvariantViolation, "element outside the prime-order subgroup");
}

std::uint64_t DiscreteLog::log(std::uint32_t h) const {
  if (h == 0) throw Error(Errc::InvalidArgument, "log of zero");
  // Chinese remaindering over each prime power p^e dividing 2^m - 1.
  std::uint64_t x = 0;
  std::uint64_t combined_modulus = 1;
  for (const auto& t : primes_) {
    std::uint64_t pe = 1;
    for (unsigned k = 0; k < t.e; ++k) pe *= t.p;
    // x mod p^e, one base-p digit at a time.
    std::uint64_t digits = 0;
    std::uint64_t pk = 1;
    const std::uint32_t alpha_inv = pow_mod(2, order_ - 1, modulus_, m_);
    for (unsigned k = 0; k < t.e; ++k) {
      const std::uint32_t stripped = clmul_mod(h, pow_mod(alpha_inv, digits, modulus_, m_), modulus_, m_);
      const std::uint32_t projected = pow_mod(stripped, order_ / (pk * t.p), modulus_, m_);
      digits += log_in_subgroup(t, projected) * pk;
      pk *= t.p;
    }
    // Merge x (mod combined_modulus) with digits (mod pe).
    const std::uint64_t new_modulus = combined_modulus * pe;
    const std::uint64_t diff = (digits + pe - x % pe) % pe;
    const std::uint64_t k = mulmod(diff, inverse_mod(combined_modulus % pe, pe), pe);
    x = (x + mulmod(k, combined_modulus, new_modulus)) % new_modulus;
    combined_modulus = new_modulus;
  }
  return x;
}

}  // namespace gf2m::detail
