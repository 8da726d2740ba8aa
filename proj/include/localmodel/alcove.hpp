#pragma once

#include "localmodel/affine_permutation.hpp"
#include "localmodel/profile.hpp"

#include <compare>
#include <string>
#include <vector>

namespace localmodel {

using Vertex = std::vector<int>;

/// An alcove x = (x_1, ..., x_n) in the standard apartment of type Ã_{n-1}.
/// Rows are 1-based; x_0 := x_n - (1, ..., 1).
class Alcove {
public:
  Alcove() = default;

  /// Throws MalformedAlcove if adjacency or wraparound fails.
  explicit Alcove(std::vector<Vertex> rows);

  int n() const { return static_cast<int>(rows_.size()); }

  /// x_i for 1 <= i <= n; x_0 is derived.
  Vertex row(int i) const;
  const std::vector<Vertex>& rows() const { return rows_; }

  /// Coordinate k (1-based) with x_i - x_{i-1} = e_k.
  int step(int i) const;

  std::string to_string() const;

  friend bool operator==(const Alcove&, const Alcove&) = default;
  friend auto operator<=>(const Alcove&, const Alcove&) = default;

private:
  std::vector<Vertex> rows_;
};

/// ω_i = (1^i, 0^{n-i}).
Alcove base_alcove(int n);

/// τ with profile rows t_i = (1^r, 0^{n-r}) rotated right by i.
Alcove tau_alcove(int n, int r);

/// x_i = ω_i + t_i for a profile with rows t_1, ..., t_n.
Alcove alcove_from_profile(const TypeProfile& t);

int size(const Alcove& a);
bool is_minuscule(const Alcove& a, int r);

/// Rows t_1, ..., t_n with t_i = x_i - ω_i. Throws DomainError unless minuscule.
TypeProfile profile_of(const Alcove& a);

/// Minuscule alcoves of size r, ordered lexicographically by flattened profile.
/// Seeds are expanded in parallel.
std::vector<Alcove> enumerate_admissible(int n, int r);

/// Single-threaded reference for enumerate_admissible.
std::vector<Alcove> enumerate_admissible_serial(int n, int r);

/// The C(n, r) alcoves with constant profile rows.
std::vector<Alcove> extreme_alcoves(int n, int r);

/// Left action of W_a on alcoves of the apartment.
Alcove act(const AffinePermutation& w, const Alcove& a);

/// The w with w·τ = a. Throws DomainError on size mismatch with τ.
AffinePermutation relative_position(const Alcove& a, int r);
inline AffinePermutation relative_position(const Alcove& a) { return relative_position(a, size(a)); }

/// Admissible alcove of size n - r paired with a under lattice duality:
/// u_i(j) = 1 - t_{n-i}(n + 1 - j).
Alcove dual_alcove(const Alcove& a);

} // namespace localmodel
