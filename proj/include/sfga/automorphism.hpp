#pragma once

#include <set>
#include <string>
#include <vector>

#include "sfga/bitstring.hpp"
#include "sfga/rng.hpp"

namespace sfga {

/// Hypercube automorphism in canonical (permutation, mask) form.
///
/// The action is apply(x)_i = x_{perm(i)} XOR mask_i, which covers exactly
/// the products of coordinate permutations ("rotations") and XOR masks
/// ("reflections"). Two automorphisms are equal iff their canonical forms
/// match componentwise. Immutable after construction.
class Automorphism {
 public:
  static Automorphism identity(int n);

  /// Pure coordinate permutation; `perm` is 1-based, perm[i-1] = pi(i), and
  /// must be a bijection of [1..n].
  static Automorphism rotation(const std::vector<int>& perm);

  /// Pure XOR with the given mask.
  static Automorphism reflection(const BitString& mask);

  /// Stabilizer generator swapping positions i and j and flipping both;
  /// i must be even, j odd, both in [1..n]. Fixes the alternating string.
  static Automorphism swap_and_flip(int i, int j, int n);

  int length() const noexcept { return mask_.length(); }
  const std::vector<int>& perm() const noexcept { return perm_; }
  const BitString& mask() const noexcept { return mask_; }

  BitString apply(const BitString& x) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  Automorphism(std::vector<int> perm, BitString mask);

  std::vector<int> perm_;
  BitString mask_;
};

/// Canonical form of the product: apply(compose(a,b), x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

/// Group inverse: compose(a, invert(a)) is the identity.
Automorphism invert(const Automorphism& a);

bool stabilizes(const Automorphism& a, const BitString& x);

/// All swap_and_flip(i, j, n) with i even and j odd; (n/2)^2 generators.
std::vector<Automorphism> stabilizer_swap_generators(int n);

/// Uniform random permutation of [1..n], 1-based.
std::vector<int> random_permutation(int n, BitSource& rng);

/// Random product of 1..max_factors rotations and reflections.
Automorphism random_product(int n, int max_factors, BitSource& rng);

/// An orbit computed by generator closure: the base point, the member set,
/// and a short description of the generators used.
struct OrbitSet {
  BitString base;
  std::set<BitString> members;
  std::string generators;
};

/// Smallest set containing `base` and closed under every generator,
/// computed by breadth-first closure (generator order does not matter).
OrbitSet orbit_closure(const BitString& base,
                       const std::vector<Automorphism>& generators);

/// All strings at Hamming distance exactly k from `center`; size C(n,k).
/// Enumeration guard: n <= 24.
std::set<BitString> hamming_shell(const BitString& center, int k);

}  // namespace sfga
