#include "gf2m/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "gf2m/error.hpp"
#include "gf2m/mastrovito.hpp"

namespace gf2m::kernels {

std::uint32_t horner_bits(const Field& field, const Gf2Poly& f, std::uint32_t b) {
  const auto deg = f.degree();
  if (!deg) return 0;
  std::uint32_t acc = 0;
  for (std::size_t i = *deg + 1; i-- > 0;) {
    acc = field.clmul_reduce(acc, b) ^ (f.coeff(i) ? 1U : 0U);
  }
  return acc;
}

std::vector<std::uint32_t> roots_serial(const Field& field, const Gf2Poly& f) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t b = 0; b < field.size(); ++b) {
    if (horner_bits(field, f, static_cast<std::uint32_t>(b)) == 0) out.push_back(static_cast<std::uint32_t>(b));
  }
  return out;
}

std::vector<std::uint32_t> roots_omp(const Field& field, const Gf2Poly& f) {
  const auto n = static_cast<std::int64_t>(field.size());
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < n; ++b) {
    hit[static_cast<std::size_t>(b)] = horner_bits(field, f, static_cast<std::uint32_t>(b)) == 0;
  }
  std::vector<std::uint32_t> out;
  for (std::int64_t b = 0; b < n; ++b) {
    if (hit[static_cast<std::size_t>(b)]) out.push_back(static_cast<std::uint32_t>(b));
  }
  return out;
}

namespace {

void check_lengths(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::span<std::uint32_t> out) {
  if (a.size() != b.size() || a.size() != out.size())
    throw Error(Errc::LengthMismatch, "operand and output spans differ in length");
}

std::uint32_t multiply_one(const Field& field, MulPath path, std::uint32_t a, std::uint32_t b) {
  switch (path) {
    case MulPath::Table: return field.mul_bits(a, b);
    case MulPath::Clmul: return field.clmul_reduce(a, b);
    case MulPath::Matrix: return build_z_matrix(field.prime_poly(), a).apply(b);
  }
  return 0;
}

// Mismatch count for one fixed a against every b.
std::uint64_t sweep_row(const Field& field, std::uint32_t a) {
  const auto z = build_z_matrix(field.prime_poly(), a);
  const Element ea = field.element(a);
  std::uint64_t bad = 0;
  for (std::uint64_t bb = 0; bb < field.size(); ++bb) {
    const auto b = static_cast<std::uint32_t>(bb);
    const std::uint32_t ref = field.mul_bits(a, b);
    const Element eb = field.element(b);
    const bool ok = field.clmul_reduce(a, b) == ref && z.apply(b) == ref &&
                    serial_interleaved_multiply(field, ea, eb, XorMode::Xor).product.bits() == ref &&
                    serial_interleaved_multiply(field, ea, eb, XorMode::Nand).product.bits() == ref;
    if (!ok) ++bad;
  }
  return bad;
}

std::uint64_t distance(const std::uint64_t* x, const std::uint64_t* y, std::size_t stride) {
  std::uint64_t d = 0;
  for (std::size_t k = 0; k < stride; ++k) d += static_cast<std::uint64_t>(std::popcount(x[k] ^ y[k]));
  return d;
}

std::size_t word_count(std::span<const std::uint64_t> limbs, std::size_t stride) {
  if (stride == 0 || limbs.size() % stride != 0) throw Error(Errc::LengthMismatch, "limb count is not a multiple of stride");
  const std::size_t n = limbs.size() / stride;
  if (n < 2) throw Error(Errc::TooFewWords, "minimum distance needs at least two words");
  return n;
}

}  // namespace

void multiply_serial(const Field& field, MulPath path, std::span<const std::uint32_t> a,
                     std::span<const std::uint32_t> b, std::span<std::uint32_t> out) {
  check_lengths(a, b, out);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = multiply_one(field, path, a[i], b[i]);
}

void multiply_omp(const Field& field, MulPath path, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out) {
  check_lengths(a, b, out);
  const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = multiply_one(field, path, a[k], b[k]);
  }
}

SweepResult path_sweep_serial(const Field& field) {
  SweepResult r;
  for (std::uint64_t a = 0; a < field.size(); ++a) r.mismatches += sweep_row(field, static_cast<std::uint32_t>(a));
  r.pairs = field.size() * field.size();
  return r;
}

SweepResult path_sweep_omp(const Field& field) {
  const auto n = static_cast<std::int64_t>(field.size());
  std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
  for (std::int64_t a = 0; a < n; ++a) bad += sweep_row(field, static_cast<std::uint32_t>(a));
  return SweepResult{field.size() * field.size(), bad};
}

std::uint64_t min_distance_serial(std::span<const std::uint64_t> limbs, std::size_t stride) {
  const std::size_t n = word_count(limbs, stride);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, distance(&limbs[i * stride], &limbs[j * stride], stride));
    }
  }
  return best;
}

std::uint64_t min_distance_omp(std::span<const std::uint64_t> limbs, std::size_t stride) {
  const std::size_t n = word_count(limbs, stride);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    for (std::size_t j = ii + 1; j < n; ++j) {
      best = std::min(best, distance(&limbs[ii * stride], &limbs[j * stride], stride));
    }
  }
  return best;
}

}  // namespace gf2m::kernels
