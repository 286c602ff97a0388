#include "gf2m/code_metrics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "gf2m/error.hpp"
#include "gf2m/kernels.hpp"

namespace gf2m {

BitWord BitWord::parse(std::string_view text) {
  BitWord w(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw Error(Errc::ParseError, "word '" + std::string(text) + "' is not binary");
    w.set(i, text[i] == '1');
  }
  return w;
}

void BitWord::set(std::size_t i, bool v) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (v) {
    limbs_[i / 64] |= bit;
  } else {
    limbs_[i / 64] &= ~bit;
  }
}

std::size_t BitWord::weight() const noexcept {
  std::size_t n = 0;
  for (auto limb : limbs_) n += static_cast<std::size_t>(std::popcount(limb));
  return n;
}

BitWord BitWord::complement() const {
  BitWord out(length_);
  for (std::size_t i = 0; i < length_; ++i) out.set(i, !get(i));
  return out;
}

std::string BitWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t hamming_distance(const BitWord& x, const BitWord& y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "words have different lengths");
  std::size_t d = 0;
  for (std::size_t k = 0; k < x.limbs().size(); ++k)
    d += static_cast<std::size_t>(std::popcount(x.limbs()[k] ^ y.limbs()[k]));
  return d;
}

CodeBook::CodeBook(std::vector<BitWord> words, std::optional<std::size_t> k) : k_(k), words_(std::move(words)) {
  if (!words_.empty()) n_ = words_.front().size();
  std::set<BitWord> seen;
  for (const auto& w : words_) {
    if (w.size() != n_) throw Error(Errc::LengthMismatch, "codewords have different lengths");
    if (!seen.insert(w).second) throw Error(Errc::InvalidArgument, "duplicate codeword " + w.to_string());
  }
  if (!words_.empty() && n_ == 0) throw Error(Errc::InvalidArgument, "codewords must be nonempty");
  if (k_ && (*k_ < 1 || *k_ > n_)) throw Error(Errc::InvalidArgument, "k must lie in 1..n");
}

std::size_t min_distance(const CodeBook& code) {
  if (code.words().size() < 2) throw Error(Errc::TooFewWords, "minimum distance needs at least two words");
  const std::size_t stride = (code.n() + 63) / 64;
  std::vector<std::uint64_t> limbs;
  limbs.reserve(stride * code.words().size());
  for (const auto& w : code.words()) limbs.insert(limbs.end(), w.limbs().begin(), w.limbs().end());
  return static_cast<std::size_t>(kernels::min_distance_omp(limbs, stride));
}

Capabilities capabilities(std::size_t d_min, std::size_t n, std::size_t k) {
  if (d_min < 1) throw Error(Errc::InvalidArgument, "d_min must be at least 1");
  if (k < 1 || k > n) throw Error(Errc::InvalidArgument, "k must lie in 1..n");
  const std::size_t bound = n - k + 1;
  if (d_min > bound)
    throw Error(Errc::BoundViolation,
                "d_min = " + std::to_string(d_min) + " exceeds n - k + 1 = " + std::to_string(bound));
  return Capabilities{d_min - 1, (d_min - 1) / 2,
                      Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)), bound};
}

std::optional<std::size_t> implied_message_length(std::size_t word_count) {
  if (word_count < 2 || !std::has_single_bit(word_count)) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(word_count));
}

CodeAnalysis analyze(const CodeBook& code) {
  CodeAnalysis a{code.n(), code.words().size(), min_distance(code), code.k(), std::nullopt, 0, 0};
  if (!a.k) a.k = implied_message_length(a.words);
  if (a.k && *a.k > a.n) a.k.reset();
  a.detect = a.d_min - 1;
  a.correct = (a.d_min - 1) / 2;
  if (a.k) a.caps = capabilities(a.d_min, a.n, *a.k);
  return a;
}

std::vector<BitWord> parse_word_list(std::string_view text) {
  std::vector<BitWord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    std::string extra;
    if (ls >> extra) throw Error(Errc::ParseError, "one word per line expected, got '" + line + "'");
    out.push_back(BitWord::parse(tok));
  }
  return out;
}

}  // namespace gf2m
