#pragma once

// Block-code measurements on binary words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gf2m/rational.hpp"

namespace gf2m {

// A fixed-length bit string; character 0 of the text form is bit 0.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t length) : length_(length), limbs_((length + 63) / 64, 0) {}

  // Accepts '0' / '1' only; throws ParseError.
  static BitWord parse(std::string_view text);

  std::size_t size() const noexcept { return length_; }
  bool get(std::size_t i) const noexcept { return (limbs_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v) noexcept;
  std::size_t weight() const noexcept;
  BitWord complement() const;
  const std::vector<std::uint64_t>& limbs() const noexcept { return limbs_; }
  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord& a, const BitWord& b) { return a.to_string() <=> b.to_string(); }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> limbs_;
};

// Throws LengthMismatch.
std::size_t hamming_distance(const BitWord& x, const BitWord& y);

class CodeBook {
 public:
  // Throws LengthMismatch (unequal lengths), InvalidArgument (duplicates,
  // empty words, or k outside 1..n).
  CodeBook(std::vector<BitWord> words, std::optional<std::size_t> k = std::nullopt);

  std::size_t n() const noexcept { return n_; }
  std::optional<std::size_t> k() const noexcept { return k_; }
  const std::vector<BitWord>& words() const noexcept { return words_; }

 private:
  std::size_t n_ = 0;
  std::optional<std::size_t> k_;
  std::vector<BitWord> words_;
};

// Throws TooFewWords.
std::size_t min_distance(const CodeBook& code);

struct Capabilities {
  std::size_t detect;
  std::size_t correct;
  Rational rate;
  std::size_t singleton_max;
};

// Throws InvalidArgument (d_min < 1 or k outside 1..n) or BoundViolation
// (d_min > n - k + 1).
Capabilities capabilities(std::size_t d_min, std::size_t n, std::size_t k);

// k = log2 |words| when the size is a power of two.
std::optional<std::size_t> implied_message_length(std::size_t word_count);

struct CodeAnalysis {
  std::size_t n;
  std::size_t words;
  std::size_t d_min;
  std::optional<std::size_t> k;
  std::optional<Capabilities> caps;  // present when k is known
  std::size_t detect;
  std::size_t correct;
};

// min distance plus the capability figures, k taken from the codebook or
// implied by its size.
CodeAnalysis analyze(const CodeBook& code);

// One word per line; blank lines and '#' comments are skipped.
std::vector<BitWord> parse_word_list(std::string_view text);

}  // namespace gf2m
