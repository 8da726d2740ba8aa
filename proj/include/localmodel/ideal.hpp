#pragma once

#include "localmodel/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace localmodel {

/// Name of the distinguished uniformizer variable.
inline constexpr std::string_view kPi = "π";

/// An ideal given by named variables and integer-coefficient generators.
/// `raw_count` records how many entry polynomials were produced before
/// identically-zero generators and exact duplicates were dropped.
struct PolyIdealSpec {
  std::vector<std::string> variables;
  std::vector<algebra::Polynomial> generators;
  std::size_t raw_count = 0;

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> pi_index() const { return index_of(kPi); }

  /// Throws DomainError if a generator uses an undeclared variable or the
  /// variable list has duplicates or exceeds the supported arity.
  void validate() const;

  friend bool operator==(const PolyIdealSpec&, const PolyIdealSpec&) = default;
};

/// Drops zero generators and exact duplicates, keeping first occurrences.
PolyIdealSpec make_ideal(std::vector<std::string> variables, const std::vector<algebra::Polynomial>& raw);

/// Line 1 `vars: π, a0_1, ...`; then one generator per line.
std::string to_text(const PolyIdealSpec& ideal);
PolyIdealSpec ideal_from_text(std::string_view text);

/// {"vars": [...], "gens": ["..."]}
std::string to_json(const PolyIdealSpec& ideal);
PolyIdealSpec ideal_from_json(std::string_view text);

} // namespace localmodel
