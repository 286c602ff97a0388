#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gf2m {

// Dense matrix over GF(2), at most 32 columns.  Row r is a mask whose bit j
// is entry (r, j).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(unsigned rows, unsigned cols);

  static BitMatrix identity(unsigned n);
  // Column j taken from bit pattern columns[j] (bit i = entry (i, j)).
  static BitMatrix from_columns(unsigned rows, const std::vector<std::uint32_t>& columns);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }

  bool get(unsigned r, unsigned c) const noexcept { return (row_bits_[r] >> c) & 1U; }
  void set(unsigned r, unsigned c, bool v) noexcept;
  std::uint32_t row(unsigned r) const noexcept { return row_bits_[r]; }
  std::uint32_t column(unsigned c) const noexcept;

  // y_i = parity(row_i & x).  Throws DimensionMismatch if x has bits at or
  // above cols().
  std::uint32_t apply(std::uint32_t x) const;

  unsigned rank() const;
  std::optional<BitMatrix> inverse() const;
  // Unique solution of A x = rhs for square nonsingular A.
  std::optional<std::uint32_t> solve(std::uint32_t rhs) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  unsigned rows_ = 0;
  unsigned cols_ = 0;
  std::vector<std::uint32_t> row_bits_;
};

// Where a multiplication matrix came from.
struct GeneralSource {
  std::uint32_t a;  // Z multiplies b by this operand
};
struct ConstantSource {
  std::uint64_t power;  // Z multiplies by alpha^power
};
struct SquaringSource {};

using MatrixSource = std::variant<GeneralSource, ConstantSource, SquaringSource>;

struct MastrovitoMatrix {
  unsigned m = 0;
  BitMatrix entries;
  MatrixSource source;

  std::uint32_t apply(std::uint32_t b) const { return entries.apply(b); }
};

std::string matrix_kind_name(const MatrixSource& source);

}  // namespace gf2m
