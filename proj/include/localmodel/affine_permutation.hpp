#pragma once

#include <compare>
#include <string>
#include <vector>

namespace localmodel {

/// Element of the affine Weyl group W_a of SL_n, stored in window notation
/// w(1), ..., w(n) and extended by w(i + n) = w(i) + n.
class AffinePermutation {
public:
  AffinePermutation() = default;

  /// Throws DomainError unless the residues form a permutation and the
  /// window sum equals 1 + ... + n.
  explicit AffinePermutation(std::vector<int> window);

  static AffinePermutation identity(int n);

  /// s_i for 0 <= i < n; s_0 swaps positions 0 and 1 (i.e. n and n + 1).
  static AffinePermutation simple_reflection(int n, int i);

  /// Reflection exchanging positions a and b (a != b mod n) periodically.
  static AffinePermutation reflection(int n, int a, int b);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// Value at an arbitrary integer position.
  int operator()(int i) const;

  /// (*this ∘ other)(i) = (*this)(other(i)).
  AffinePermutation compose(const AffinePermutation& other) const;
  AffinePermutation inverse() const;

  /// Right multiplication by the reflection exchanging positions i and j.
  AffinePermutation times_reflection(int i, int j) const;

  std::string to_string() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

private:
  std::vector<int> window_;
};

/// Number of affine inversions, via Shi's formula
/// sum_{1<=i<j<=n} |floor((w(j) - w(i)) / n)|.
int length(const AffinePermutation& w);

/// Position pairs (i, j), 1 <= i <= n, i < j, with w(i) > w(j). Right
/// multiplication by the matching reflection lowers the length.
std::vector<std::pair<int, int>> inversions(const AffinePermutation& w);

/// Bruhat covers below w: the w·t with length(w·t) = length(w) - 1.
std::vector<AffinePermutation> lower_covers(const AffinePermutation& w);

/// Bruhat order by breadth-first descent through lower covers.
bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w);

} // namespace localmodel
