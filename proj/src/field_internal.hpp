#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gf2m/bit_matrix.hpp"

namespace gf2m::detail {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

// Carry-less a*b reduced modulo `modulus` (degree m <= 32).
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint64_t modulus, unsigned m) noexcept;
std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint64_t modulus, unsigned m) noexcept;

// Discrete logarithm base alpha for fields too large to tabulate:
// Pohlig-Hellman over the factorisation of 2^m - 1 with baby-step
// giant-step inside each prime-order subgroup.
class DiscreteLog {
 public:
  DiscreteLog(std::uint64_t modulus, unsigned m);
  std::uint64_t log(std::uint32_t h) const;

 private:
  struct PrimeTable {
    std::uint64_t p;
    unsigned e;
    std::uint32_t gamma;       // alpha^(n/p), order p
    std::uint32_t giant;       // gamma^(-stride)
    std::uint64_t stride;
    std::unordered_map<std::uint32_t, std::uint32_t> baby;  // gamma^j -> j
  };

  std::uint64_t log_in_subgroup(const PrimeTable& t, std::uint32_t h) const;

  std::uint64_t modulus_;
  unsigned m_;
  std::uint64_t order_;
  std::vector<PrimeTable> primes_;
};

struct FieldTables {
  std::vector<std::uint32_t> antilog;  // 2^m - 1 entries, empty above the table limit
  std::vector<std::uint32_t> log;      // 2^m entries; log[0] unused
  std::unique_ptr<DiscreteLog> dlog;   // only above the table limit
  MastrovitoMatrix squaring;
};

}  // namespace gf2m::detail
