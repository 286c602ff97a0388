#include "gf2m/bit_matrix.hpp"

#include <bit>
#include <utility>

#include "gf2m/error.hpp"

namespace gf2m {

BitMatrix::BitMatrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), row_bits_(rows, 0) {
  if (cols > 32) throw Error(Errc::DimensionMismatch, "BitMatrix supports at most 32 columns");
}

BitMatrix BitMatrix::identity(unsigned n) {
  BitMatrix out(n, n);
  for (unsigned i = 0; i < n; ++i) out.row_bits_[i] = std::uint32_t{1} << i;
  return out;
}

BitMatrix BitMatrix::from_columns(unsigned rows, const std::vector<std::uint32_t>& columns) {
  BitMatrix out(rows, static_cast<unsigned>(columns.size()));
  for (unsigned j = 0; j < columns.size(); ++j) {
    for (unsigned i = 0; i < rows; ++i) out.set(i, j, (columns[j] >> i) & 1U);
  }
  return out;
}

void BitMatrix::set(unsigned r, unsigned c, bool v) noexcept {
  const std::uint32_t mask = std::uint32_t{1} << c;
  row_bits_[r] = v ? (row_bits_[r] | mask) : (row_bits_[r] & ~mask);
}

std::uint32_t BitMatrix::column(unsigned c) const noexcept {
  std::uint32_t out = 0;
  for (unsigned r = 0; r < rows_; ++r) out |= static_cast<std::uint32_t>(get(r, c)) << r;
  return out;
}

std::uint32_t BitMatrix::apply(std::uint32_t x) const {
  if (cols_ < 32 && (x >> cols_) != 0)
    throw Error(Errc::DimensionMismatch, "vector wider than matrix column count");
  std::uint32_t y = 0;
  for (unsigned r = 0; r < rows_; ++r) y |= static_cast<std::uint32_t>(std::popcount(row_bits_[r] & x) & 1) << r;
  return y;
}

unsigned BitMatrix::rank() const {
  std::vector<std::uint32_t> rows = row_bits_;
  unsigned rank = 0;
  for (unsigned c = 0; c < cols_ && rank < rows_; ++c) {
    const std::uint32_t mask = std::uint32_t{1} << c;
    unsigned pivot = rank;
    while (pivot < rows_ && !(rows[pivot] & mask)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (unsigned r = 0; r < rows_; ++r) {
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const unsigned n = rows_;
  std::vector<std::uint32_t> a = row_bits_;
  BitMatrix inv = identity(n);
  for (unsigned c = 0; c < n; ++c) {
    const std::uint32_t mask = std::uint32_t{1} << c;
    unsigned pivot = c;
    while (pivot < n && !(a[pivot] & mask)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(inv.row_bits_[c], inv.row_bits_[pivot]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != c && (a[r] & mask)) {
        a[r] ^= a[c];
        inv.row_bits_[r] ^= inv.row_bits_[c];
      }
    }
  }
  return inv;
}

std::optional<std::uint32_t> BitMatrix::solve(std::uint32_t rhs) const {
  const auto inv = inverse();
  if (!inv) return std::nullopt;
  return inv->apply(rhs);
}

std::string matrix_kind_name(const MatrixSource& source) {
  struct Visitor {
    std::string operator()(const GeneralSource&) const { return "general"; }
    std::string operator()(const ConstantSource&) const { return "constant"; }
    std::string operator()(const SquaringSource&) const { return "squaring"; }
  };
  return std::visit(Visitor{}, source);
}

}  // namespace gf2m
