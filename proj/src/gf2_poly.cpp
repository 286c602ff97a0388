#include "gf2m/gf2_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>

#include "gf2m/error.hpp"

namespace gf2m {

namespace {

constexpr std::size_t kWordBits = 64;

void xor_shifted_into(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                      std::size_t shift) {
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit_shift = shift % kWordBits;
  const std::size_t needed = word_shift + src.size() + (bit_shift ? 1 : 0);
  if (dst.size() < needed) dst.resize(needed, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[word_shift + i] ^= src[i] << bit_shift;
    if (bit_shift) dst[word_shift + i + 1] ^= src[i] >> (kWordBits - bit_shift);
  }
}

std::optional<std::size_t> top_bit(std::span<const std::uint64_t> words) {
  for (std::size_t i = words.size(); i-- > 0;) {
    if (words[i]) return i * kWordBits + std::bit_width(words[i]) - 1;
  }
  return std::nullopt;
}

unsigned degree_u64(std::uint64_t v) { return static_cast<unsigned>(std::bit_width(v)) - 1; }

std::uint64_t mod_u64(std::uint64_t num, std::uint64_t den) {
  const unsigned dd = degree_u64(den);
  while (num && degree_u64(num) >= dd) num ^= den << (degree_u64(num) - dd);
  return num;
}

// a, b already reduced modulo f with deg f <= 32, so a*b < 2^63.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
  }
  return mod_u64(acc, f);
}

std::uint64_t powmod_x(std::uint64_t e, std::uint64_t f) {
  std::uint64_t result = mod_u64(1, f);
  std::uint64_t base = mod_u64(2, f);
  while (e) {
    if (e & 1) result = mulmod_u64(result, base, f);
    base = mulmod_u64(base, base, f);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Gf2Poly parse_terms(std::string_view text) {
  Gf2Poly out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t plus = text.find('+', pos);
    const std::string_view term =
        trim(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + std::string(text) + "'");
    std::size_t exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "0") {
      exponent = SIZE_MAX;
    } else if (term.front() == 'x' || term.front() == 'X') {
      std::string_view rest = trim(term.substr(1));
      if (rest.empty()) {
        exponent = 1;
      } else {
        if (rest.front() != '^') throw Error(Errc::ParseError, "bad term '" + std::string(term) + "'");
        rest = trim(rest.substr(1));
        if (!rest.empty() && rest.front() == '{' && rest.back() == '}') rest = rest.substr(1, rest.size() - 2);
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
        if (ec != std::errc{} || ptr != rest.data() + rest.size() || rest.empty())
          throw Error(Errc::ParseError, "bad exponent in '" + std::string(term) + "'");
      }
    } else {
      throw Error(Errc::ParseError, "bad term '" + std::string(term) + "'");
    }
    if (exponent != SIZE_MAX) out.set_coeff(exponent, !out.coeff(exponent));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return out;
}

}  // namespace

Gf2Poly Gf2Poly::from_bits(std::uint64_t bits) {
  Gf2Poly p;
  if (bits) p.words_.push_back(bits);
  return p;
}

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
  Gf2Poly p;
  p.set_coeff(degree, true);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
  Gf2Poly p;
  for (std::size_t e : exponents) p.set_coeff(e, !p.coeff(e));
  return p;
}

std::optional<std::size_t> Gf2Poly::degree() const noexcept { return top_bit(words_); }

bool Gf2Poly::coeff(std::size_t i) const noexcept {
  const std::size_t w = i / kWordBits;
  return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
}

void Gf2Poly::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / kWordBits;
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= mask;
  } else if (w < words_.size()) {
    words_[w] &= ~mask;
    trim();
  }
}

std::size_t Gf2Poly::weight() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::uint64_t> Gf2Poly::to_u64() const noexcept {
  if (words_.empty()) return 0;
  if (words_.size() > 1) return std::nullopt;
  return words_[0];
}

std::vector<std::size_t> Gf2Poly::exponents() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
  if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (std::size_t e : a.exponents()) xor_shifted_into(out.words_, b.words_, e);
  out.trim();
  return out;
}

Gf2Poly Gf2Poly::shifted(std::size_t n) const {
  Gf2Poly out;
  xor_shifted_into(out.words_, words_, n);
  out.trim();
  return out;
}

void Gf2Poly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

DivMod poly_divmod(const Gf2Poly& num, const Gf2Poly& den) {
  const auto dd = den.degree();
  if (!dd) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  DivMod out{Gf2Poly{}, num};
  while (true) {
    const auto dr = out.remainder.degree();
    if (!dr || *dr < *dd) break;
    const std::size_t shift = *dr - *dd;
    out.quotient.set_coeff(shift, true);
    out.remainder += den.shifted(shift);
  }
  return out;
}

Gf2Poly poly_mod(const Gf2Poly& num, const Gf2Poly& den) { return poly_divmod(num, den).remainder; }

Gf2Poly square_poly(const Gf2Poly& f) {
  Gf2Poly out;
  for (std::size_t e : f.exponents()) out.set_coeff(2 * e, true);
  return out;
}

Gf2Poly substitute_x_pow2(const Gf2Poly& f, unsigned l) {
  Gf2Poly out;
  for (std::size_t e : f.exponents()) out.set_coeff(e << l, true);
  return out;
}

bool is_irreducible(const Gf2Poly& f) {
  const auto d = f.degree();
  if (!d || *d == 0) throw Error(Errc::DegreeZero, "irreducibility needs degree >= 1");
  if (*d == 1) return true;
  const std::size_t max_divisor_degree = *d / 2;
  if (const auto fv = f.to_u64()) {
    for (std::uint64_t g = 2; g < (std::uint64_t{1} << (max_divisor_degree + 1)); ++g) {
      if (mod_u64(*fv, g) == 0) return false;
    }
    return true;
  }
  if (max_divisor_degree >= 63) throw Error(Errc::UnsupportedDegree, "trial division beyond degree 126");
  for (std::uint64_t g = 2; g < (std::uint64_t{1} << (max_divisor_degree + 1)); ++g) {
    if (poly_mod(f, Gf2Poly::from_bits(g)).is_zero()) return false;
  }
  return true;
}

std::uint64_t order_of_x(const Gf2Poly& f) {
  const auto d = f.degree();
  if (!d || *d == 0) throw Error(Errc::DegreeZero, "order of X needs degree >= 1");
  if (*d > 32) throw Error(Errc::UnsupportedDegree, "order computation supports degree <= 32");
  if (!is_irreducible(f)) throw Error(Errc::NotIrreducibleInput, to_binary_string(f) + " is reducible");
  if (!f.coeff(0)) throw Error(Errc::InvalidArgument, "X is not invertible modulo X");
  const std::uint64_t fv = *f.to_u64();
  const std::uint64_t group = (std::uint64_t{1} << *d) - 1;
  std::uint64_t order = group;
  for (std::uint64_t p : distinct_prime_factors(group)) {
    while (order % p == 0 && powmod_x(order / p, fv) == 1) order /= p;
  }
  return order;
}

bool is_primitive(const Gf2Poly& f) {
  const auto d = f.degree();
  if (!d || *d == 0) throw Error(Errc::DegreeZero, "primitivity needs degree >= 1");
  if (!is_irreducible(f)) throw Error(Errc::NotIrreducibleInput, to_binary_string(f) + " is reducible");
  if (!f.coeff(0)) return false;
  return order_of_x(f) == (std::uint64_t{1} << *d) - 1;
}

bool is_primitive_by_definition(const Gf2Poly& f) {
  const auto d = f.degree();
  if (!d || *d == 0) throw Error(Errc::DegreeZero, "primitivity needs degree >= 1");
  if (*d > 32) throw Error(Errc::UnsupportedDegree, "definitional check supports degree <= 32");
  if (!is_irreducible(f)) throw Error(Errc::NotIrreducibleInput, to_binary_string(f) + " is reducible");
  if (!f.coeff(0)) return false;
  const std::uint64_t fv = *f.to_u64();
  const std::uint64_t target = (std::uint64_t{1} << *d) - 1;
  // r = X^n mod f; f | X^n + 1 exactly when r == 1.
  std::uint64_t r = 1;
  for (std::uint64_t n = 1; n <= target; ++n) {
    r = mod_u64(r << 1, fv);
    if (r == 1) return n == target;
  }
  return false;
}

Gf2Poly parse_poly(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    Gf2Poly out;
    const std::string_view digits = s.substr(2);
    std::size_t bit = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[i])));
      unsigned v = 0;
      if (c >= '0' && c <= '9') {
        v = static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        v = static_cast<unsigned>(c - 'a' + 10);
      } else {
        throw Error(Errc::ParseError, "bad hex digit in '" + std::string(s) + "'");
      }
      for (unsigned k = 0; k < 4; ++k, ++bit) {
        if ((v >> k) & 1U) out.set_coeff(bit, true);
      }
    }
    return out;
  }
  if (s.find_first_of("xX") != std::string_view::npos) return parse_terms(s);
  if (s.find_first_not_of("01") != std::string_view::npos)
    throw Error(Errc::ParseError, "cannot parse polynomial '" + std::string(s) + "'");
  Gf2Poly out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[s.size() - 1 - i] == '1') out.set_coeff(i, true);
  }
  return out;
}

std::string to_binary_string(const Gf2Poly& p) {
  const auto d = p.degree();
  if (!d) return "0";
  std::string out(*d + 1, '0');
  for (std::size_t e : p.exponents()) out[*d - e] = '1';
  return out;
}

std::string to_hex_string(const Gf2Poly& p) {
  const auto d = p.degree();
  if (!d) return "0x0";
  std::string out;
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::size_t nibble = *d / 4 + 1; nibble-- > 0;) {
    unsigned v = 0;
    for (unsigned k = 0; k < 4; ++k) v |= static_cast<unsigned>(p.coeff(nibble * 4 + k)) << k;
    out.push_back(kDigits[v]);
  }
  return "0x" + out;
}

std::string to_term_string(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  auto exps = p.exponents();
  std::string out;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += "+";
    if (*it == 0) {
      out += "1";
    } else if (*it == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(*it);
    }
  }
  return out;
}

std::string to_ascending_string(const Gf2Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e : p.exponents()) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += "1";
    } else {
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {
constexpr std::array<RegistryEntry, 23> kRegistry{{
    {2, "111"},
    {3, "1011"},
    {4, "10011"},
    {5, "100101"},
    {6, "1000011"},
    {7, "10001001"},
    {8, "100011101"},
    {9, "1000010001"},
    {10, "10000001001"},
    {11, "100000000101"},
    {12, "1000001010011"},
    {13, "10000000011011"},
    {14, "100010001000011"},
    {15, "1000000000000011"},
    {16, "10001000000001011"},
    {17, "100000000000001001"},
    {18, "1000000000010000001"},
    {19, "10000000000000100111"},
    {20, "100000000000000001001"},
    {21, "1000000000000000000101"},
    {22, "10000000000000000000011"},
    {23, "100000000000000000100001"},
    {24, "1000000000000000010000111"},
}};
}  // namespace

std::span<const RegistryEntry> prime_poly_registry() noexcept { return kRegistry; }

std::optional<Gf2Poly> registry_poly(unsigned m) {
  for (const auto& e : kRegistry) {
    if (e.m == m) return parse_poly(e.binary);
  }
  return std::nullopt;
}

}  // namespace gf2m
