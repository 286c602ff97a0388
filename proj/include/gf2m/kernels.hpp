#pragma once

// Bulk kernels.  Each *_omp function has a *_serial twin with identical
// results; the serial versions are the reference used by tests and the
// benchmark.

#include <cstdint>
#include <span>
#include <vector>

#include "gf2m/field.hpp"
#include "gf2m/gf2_poly.hpp"

namespace gf2m::kernels {

// f(b) by Horner's rule on raw bits.
std::uint32_t horner_bits(const Field& field, const Gf2Poly& f, std::uint32_t b);

// All b with f(b) = 0, ascending.
std::vector<std::uint32_t> roots_serial(const Field& field, const Gf2Poly& f);
std::vector<std::uint32_t> roots_omp(const Field& field, const Gf2Poly& f);

enum class MulPath { Table, Clmul, Matrix };

// out[i] = a[i] * b[i].  Spans must have equal length.
void multiply_serial(const Field& field, MulPath path, std::span<const std::uint32_t> a,
                     std::span<const std::uint32_t> b, std::span<std::uint32_t> out);
void multiply_omp(const Field& field, MulPath path, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out);

struct SweepResult {
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// Every (a, b) pair: table, carry-less, Z-matrix and both serial modes must
// agree.  Intended for small m (cost 4^m).
SweepResult path_sweep_serial(const Field& field);
SweepResult path_sweep_omp(const Field& field);

// Pairwise minimum Hamming distance.  Words are packed back to back,
// `stride` 64-bit limbs each; requires at least two words.
std::uint64_t min_distance_serial(std::span<const std::uint64_t> limbs, std::size_t stride);
std::uint64_t min_distance_omp(std::span<const std::uint64_t> limbs, std::size_t stride);

}  // namespace gf2m::kernels
