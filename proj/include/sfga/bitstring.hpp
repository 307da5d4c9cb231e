#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sfga {

/// Fixed-length binary word over {0,1}^n, the search-space element.
///
/// Positions are 1-based (index 1 is the leftmost character of the textual
/// form, e.g. "1010"). Internally position i is stored at machine bit (n-i)
/// of a single 64-bit word, so the word's low n bits read the same as the
/// textual form and unsigned comparison of words is lexicographic order by
/// position 1..n. Length is fixed at construction; n <= 64.
class BitString {
 public:
  BitString() = default;  // empty placeholder, length 0

  /// Builds a string of the given length from the low `length` bits of
  /// `bits` (position i at machine bit length-i). Higher bits are rejected.
  BitString(int length, std::uint64_t bits);

  static BitString zeros(int n);
  static BitString ones(int n);

  /// Parses the separator-free textual form, e.g. "1010".
  static BitString parse(std::string_view text);

  int length() const noexcept { return n_; }
  std::uint64_t word() const noexcept { return bits_; }

  /// Value of position i, 1-based.
  int bit(int i) const;

  BitString complemented() const;
  std::string str() const;

  friend BitString operator^(const BitString& x, const BitString& m);
  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString&,
                                          const BitString&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitString& x);

/// Number of positions where x and y differ. Lengths must match.
int hamming(const BitString& x, const BitString& y);

/// The alternating string 1010...10 (ones at odd positions). n must be even.
BitString alternating(int n);

/// The canonical constant strings: the two alternating seed strings used by
/// the canonical initialization and the all-ones target.
struct CanonicalStrings {
  BitString alt;       // 1010...10
  BitString alt_comp;  // 0101...01
  BitString target;    // 11...11
};

CanonicalStrings canonical_strings(int n);

}  // namespace sfga
