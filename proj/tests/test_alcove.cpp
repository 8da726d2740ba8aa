#include "localmodel/alcove.hpp"
#include "localmodel/errors.hpp"
#include "localmodel/poset.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <map>
#include <set>

using namespace localmodel;

namespace {

std::vector<oracle::Matrix> profiles(const std::vector<Alcove>& alcoves) {
  std::vector<oracle::Matrix> out;
  for (const auto& a : alcoves) out.push_back(profile_of(a).rows());
  return out;
}

} // namespace

TEST_CASE("alcove invariants are enforced") {
  CHECK_NOTHROW(Alcove({{1, 1}, {2, 1}}));
  CHECK_THROWS_AS(Alcove({{1, 1}, {1, 1}}), MalformedAlcove);
  CHECK_THROWS_AS(Alcove({{1, 0}, {3, 0}}), MalformedAlcove);
  // adjacency holds but x_2 - 1 = (1,0) is not below x_1 = (0,1)
  CHECK_THROWS_AS(Alcove({{0, 1}, {2, 1}}), MalformedAlcove);
}

TEST_CASE("size") {
  CHECK(size(base_alcove(5)) == 0);
  CHECK(tau_alcove(2, 1) == Alcove({{1, 1}, {2, 1}}));
  CHECK(size(tau_alcove(2, 1)) == 1);
  for (const auto& x : extreme_alcoves(5, 2)) CHECK(size(x) == 2);
}

TEST_CASE("is_minuscule") {
  CHECK(is_minuscule(base_alcove(3), 0));
  CHECK_FALSE(is_minuscule(base_alcove(3), 1));
  // x_i(1) - ω_i(1) = 2 in every row
  CHECK_FALSE(is_minuscule(Alcove({{2, 0}, {3, 0}}), 2));
}

TEST_CASE("profile_of") {
  CHECK(profile_of(base_alcove(3)).rows() == oracle::Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      const auto t = profile_of(tau_alcove(n, r));
      for (int i = 1; i <= n; ++i)
        for (int j = 0; j < n; ++j) {
          // ones sit at 0-based positions i, ..., i + r - 1 mod n
          const bool one = ((j - i) % n + n) % n < r;
          CHECK(t.at(i - 1, j) == (one ? 1 : 0));
        }
    }
  for (const auto& x : extreme_alcoves(4, 2)) {
    const auto t = profile_of(x);
    for (int i = 1; i < 4; ++i) CHECK(t.row(i) == t.row(0));
  }
  CHECK_THROWS_AS(profile_of(Alcove({{2, 0}, {3, 0}})), DomainError);
}

TEST_CASE("enumerate_admissible (2,1)") {
  const auto adm = enumerate_admissible(2, 1);
  REQUIRE(adm.size() == 3);
  CHECK(profiles(adm) == std::vector<oracle::Matrix>{{{0, 1}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 0}, {1, 0}}});
  CHECK_THROWS_AS(enumerate_admissible(3, 0), DomainError);
  CHECK_THROWS_AS(enumerate_admissible(3, 3), DomainError);
}

TEST_CASE("enumerate_admissible matches the exhaustive oracle") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const auto adm = enumerate_admissible(n, r);
      CHECK(profiles(adm) == oracle::brute_force_admissible(n, r));
      CHECK(adm == enumerate_admissible_serial(n, r));
      for (const auto& a : adm) CHECK(is_minuscule(a, r));
    }
  CHECK(enumerate_admissible(3, 1).size() == oracle::brute_force_admissible(3, 1).size());
  CHECK(enumerate_admissible(3, 1).size() == 7);
}

TEST_CASE("extreme alcoves") {
  CHECK(extreme_alcoves(2, 1).size() == 2);
  CHECK(extreme_alcoves(4, 2).size() == 6);
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) CHECK(extreme_alcoves(n, r).size() == static_cast<std::size_t>(oracle::binomial(n, r)));
}

TEST_CASE("affine permutations") {
  const auto id = AffinePermutation::identity(4);
  CHECK(length(id) == 0);
  for (int i = 0; i < 4; ++i) {
    const auto s = AffinePermutation::simple_reflection(4, i);
    CHECK(length(s) == 1);
    CHECK(s.compose(s) == id);
  }
  CHECK(AffinePermutation::simple_reflection(3, 0).window() == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(AffinePermutation({1, 1, 4}), DomainError);
  CHECK_THROWS_AS(AffinePermutation({4, 2, 3}), DomainError);  // extended, not in W_a
  const AffinePermutation w({-3, 5, 4});
  CHECK(w.compose(w.inverse()) == AffinePermutation::identity(3));
  CHECK(length(w) == oracle::inversion_count(w));
  CHECK(inversions(w).size() == static_cast<std::size_t>(length(w)));
}

TEST_CASE("relative position round-trips") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const Alcove tau = tau_alcove(n, r);
      CHECK(relative_position(tau, r) == AffinePermutation::identity(n));
      for (int i = 0; i < n; ++i) {
        const auto s = AffinePermutation::simple_reflection(n, i);
        CHECK(relative_position(act(s, tau), r) == s);
      }
    }
  CHECK_THROWS_AS(relative_position(tau_alcove(4, 1), 2), DomainError);
}

TEST_CASE("relative position is injective and lengths match the inversion oracle") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r < n; ++r) {
      std::set<AffinePermutation> seen;
      for (const auto& a : enumerate_admissible(n, r)) {
        const auto w = relative_position(a, r);
        CHECK(act(w, tau_alcove(n, r)) == a);
        CHECK(seen.insert(w).second);
        CHECK(length(w) == oracle::inversion_count(w));
      }
      for (const auto& x : extreme_alcoves(n, r)) CHECK(length(relative_position(x, r)) == r * (n - r));
    }
}

TEST_CASE("bruhat order agrees with the subword oracle") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r < n; ++r) {
      std::vector<AffinePermutation> ws;
      for (const auto& a : enumerate_admissible(n, r)) ws.push_back(relative_position(a, r));
      for (const auto& u : ws)
        for (const auto& w : ws) CHECK(bruhat_leq(u, w) == oracle::bruhat_leq_subword(u, w));
    }
  const auto id = AffinePermutation::identity(3);
  const AffinePermutation w({-3, 5, 4});
  CHECK(bruhat_leq(id, w));
  CHECK_FALSE(bruhat_leq(w, id));
  CHECK_THROWS_AS(bruhat_leq(id, AffinePermutation::identity(4)), DomainError);
}

TEST_CASE("strata poset (2,1)") {
  const auto p = strata_poset(2, 1);
  REQUIRE(p.nodes.size() == 3);
  CHECK(p.nodes[static_cast<std::size_t>(p.bottom)].alcove == tau_alcove(2, 1));
  CHECK(p.nodes[static_cast<std::size_t>(p.bottom)].length == 0);
  CHECK(p.tops.size() == 2);
  for (int t : p.tops) CHECK(p.nodes[static_cast<std::size_t>(t)].length == 1);
  CHECK(p.covers.size() == 2);
  const auto& x = p.nodes[static_cast<std::size_t>(p.tops[0])].position;
  const auto& y = p.nodes[static_cast<std::size_t>(p.tops[1])].position;
  CHECK_FALSE(bruhat_leq(x, y));
  CHECK_FALSE(bruhat_leq(y, x));
}

TEST_CASE("strata posets are graded with the extreme alcoves on top") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto p = strata_poset(n, r);
      const auto q = strata_poset_serial(n, r);
      CHECK(p.covers == q.covers);
      for (auto [lo, hi] : p.covers)
        CHECK(p.nodes[static_cast<std::size_t>(hi)].length == p.nodes[static_cast<std::size_t>(lo)].length + 1);
      std::set<Alcove> tops, extremes;
      for (int t : p.tops) {
        tops.insert(p.nodes[static_cast<std::size_t>(t)].alcove);
        CHECK(p.nodes[static_cast<std::size_t>(t)].length == r * (n - r));
      }
      for (auto& x : extreme_alcoves(n, r)) extremes.insert(x);
      CHECK(tops == extremes);
    }
}

TEST_CASE("duality complements profiles and preserves the poset") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto p = strata_poset(n, r);
      const auto q = strata_poset(n, n - r);
      std::map<Alcove, int> q_index;
      for (std::size_t i = 0; i < q.nodes.size(); ++i) q_index[q.nodes[i].alcove] = static_cast<int>(i);
      REQUIRE(p.nodes.size() == q.nodes.size());
      std::vector<int> image;
      for (const auto& node : p.nodes) {
        const auto d = dual_alcove(node.alcove);
        CHECK(dual_alcove(d) == node.alcove);
        REQUIRE(q_index.contains(d));
        image.push_back(q_index[d]);
      }
      std::set<std::pair<int, int>> mapped;
      for (auto [lo, hi] : p.covers) mapped.emplace(image[static_cast<std::size_t>(lo)], image[static_cast<std::size_t>(hi)]);
      CHECK(mapped == std::set<std::pair<int, int>>(q.covers.begin(), q.covers.end()));
    }
}

TEST_CASE("poset exports") {
  const auto p = strata_poset(2, 1);
  const auto doc = nlohmann::json::parse(poset_to_json(p));
  CHECK(doc["n"] == 2);
  CHECK(doc["nodes"].size() == 3);
  CHECK(doc["covers"].size() == 2);
  CHECK(doc["tops"].size() == 2);
  const auto dot = poset_to_dot(strata_poset(4, 2));
  CHECK(dot.find("l=4") != std::string::npos);
  CHECK(dot.find("digraph") == 0);
}
