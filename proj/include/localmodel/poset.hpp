#pragma once

#include "localmodel/alcove.hpp"

#include <string>
#include <utility>
#include <vector>

namespace localmodel {

struct StrataNode {
  Alcove alcove;
  AffinePermutation position;
  int length = 0;
};

/// Admissible alcoves with their Bruhat covering relations. Node ids are
/// indices into `nodes`; a cover (lo, hi) means lo ⋖ hi.
struct StrataPoset {
  int n = 0;
  int r = 0;
  std::vector<StrataNode> nodes;
  std::vector<std::pair<int, int>> covers;
  int bottom = -1;
  std::vector<int> tops;
};

StrataPoset strata_poset(int n, int r);

/// Single-threaded reference for strata_poset.
StrataPoset strata_poset_serial(int n, int r);

std::string poset_to_json(const StrataPoset& p);
std::string poset_to_dot(const StrataPoset& p);

/// JSON list of admissible alcoves: {"n", "r", "alcoves": [{"id", "profile", "rows"}]}.
std::string alcoves_to_json(int n, int r, const std::vector<Alcove>& alcoves);

} // namespace localmodel
