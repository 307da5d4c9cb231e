#include "sfga/bitstring.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace sfga {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_length(int n) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("bit string length must be in [1..64], got " +
                                std::to_string(n));
}

void check_same_length(const BitString& x, const BitString& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("length mismatch: " +
                                std::to_string(x.length()) + " vs " +
                                std::to_string(y.length()));
}

}  // namespace

BitString::BitString(int length, std::uint64_t bits) : n_(length), bits_(bits) {
  check_length(length);
  if (bits & ~low_mask(length))
    throw std::invalid_argument("bit value does not fit in length " +
                                std::to_string(length));
}

BitString BitString::zeros(int n) { return BitString(n, 0); }

BitString BitString::ones(int n) { return BitString(n, low_mask(n)); }

BitString BitString::parse(std::string_view text) {
  check_length(static_cast<int>(text.size()));
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), bits);
}

int BitString::bit(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("position " + std::to_string(i) +
                                " outside [1.." + std::to_string(n_) + "]");
  return static_cast<int>((bits_ >> (n_ - i)) & 1);
}

BitString BitString::complemented() const {
  return BitString(n_, bits_ ^ low_mask(n_));
}

std::string BitString::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i)
    if ((bits_ >> (n_ - i)) & 1) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

BitString operator^(const BitString& x, const BitString& m) {
  check_same_length(x, m);
  return BitString(x.n_, x.bits_ ^ m.bits_);
}

std::ostream& operator<<(std::ostream& os, const BitString& x) {
  return os << x.str();
}

int hamming(const BitString& x, const BitString& y) {
  check_same_length(x, y);
  return std::popcount(x.word() ^ y.word());
}

BitString alternating(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("alternating string requires even n >= 2");
  std::uint64_t bits = 0;
  for (int i = 1; i <= n; i += 2) bits |= std::uint64_t{1} << (n - i);
  return BitString(n, bits);
}

CanonicalStrings canonical_strings(int n) {
  BitString alt = alternating(n);
  return CanonicalStrings{alt, alt.complemented(), BitString::ones(n)};
}

}  // namespace sfga
