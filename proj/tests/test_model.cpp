#include "localmodel/errors.hpp"
#include "localmodel/groebner.hpp"
#include "localmodel/model.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace localmodel;
using algebra::parse_polynomial;

namespace {

std::vector<std::string> texts(const PolyIdealSpec& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) out.push_back(algebra::to_string(g, I.variables));
  return out;
}

// Re-expresses the generators of I in the ring of J after renaming variables.
std::set<std::string> generators_in(const PolyIdealSpec& I, const std::map<std::string, std::string>& rename,
                                    const PolyIdealSpec& J) {
  auto vars = I.variables;
  for (auto& v : vars)
    if (auto it = rename.find(v); it != rename.end()) v = it->second;
  std::set<std::string> out;
  for (const auto& g : I.generators)
    out.insert(algebra::to_string(parse_polynomial(algebra::to_string(g, vars), J.variables), J.variables));
  return out;
}

std::set<std::string> generator_set(const PolyIdealSpec& I) {
  const auto t = texts(I);
  return {t.begin(), t.end()};
}

// The chart condition read off the lattice chain directly: column j may only
// leave the subspace on the step that multiplies e_j by π.
bool standard_chain_condition(const TypeProfile& t) {
  const int n = t.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.at(i, j) == 1 && t.at((i + 1) % n, j) == 0 && j != i) return false;
  return true;
}

} // namespace

TEST_CASE("data") {
  const auto d = standard_iwahori_datum(3, 1);
  CHECK(d.m == 3);
  CHECK(d.eps == std::vector<std::vector<std::uint8_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto p = partial_chain_datum(4, 2, {0, 2});
  CHECK(p.eps == std::vector<std::vector<std::uint8_t>>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(partial_chain_datum(4, 1, {1, 3}).eps == std::vector<std::vector<std::uint8_t>>{{0, 1, 1, 0}, {1, 0, 0, 1}});
  CHECK_THROWS_AS(partial_chain_datum(4, 2, {2, 1}), DomainError);
  CHECK_THROWS_AS(standard_iwahori_datum(3, 3), DomainError);
  GeneralizedModelDatum bad{2, 2, 1, {{1, 1}, {0, 1}}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("chain profiles") {
  CHECK(chain_profile(tau_alcove(3, 1)).rows() == std::vector<TypeProfile::Row>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(partial_chain_profile(4, 2, {0, 1}).rows() == std::vector<TypeProfile::Row>{{1, 1, 0, 0}, {0, 1, 1, 0}});
}

TEST_CASE("chart condition") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto d = standard_iwahori_datum(n, r);
      for (const auto& a : enumerate_admissible(n, r)) {
        const auto t = chain_profile(a);
        CHECK(check_condition(t, d) == standard_chain_condition(t));
        CHECK(check_condition(t, d));
      }
    }
  const TypeProfile swapped({{1, 0}, {0, 1}});
  CHECK(check_condition(swapped, standard_iwahori_datum(2, 1)));
  CHECK_FALSE(check_condition(swapped, GeneralizedModelDatum{2, 2, 1, {{0, 1}, {1, 0}}}));
  CHECK_THROWS_AS(TypeProfile({{1, 0}, {0, 1}, {1, 0}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(check_condition(swapped, standard_iwahori_datum(3, 1)), DomainError);
}

TEST_CASE("first and second reductions") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto d = standard_iwahori_datum(n, r);
      for (const auto& x : extreme_alcoves(n, r)) {
        const auto first = reduce_lemma1(chain_profile(x), d);
        CHECK(first.affine_factor == r * (n - r));
        CHECK(first.datum.n == r);
        CHECK(first.deleted.size() == static_cast<std::size_t>(n - r));
        const auto second = reduce_lemma2(first.profile, first.datum);
        CHECK(second.deleted.size() == static_cast<std::size_t>(r));
        CHECK(second.datum.n == 0);
        CHECK(second.datum.r == 0);
        CHECK(second.affine_factor == 0);
      }
      const auto tau = chain_profile(tau_alcove(n, r));
      const auto first = reduce_lemma1(tau, d);
      CHECK(first.affine_factor == 0);
      CHECK(first.profile == tau);
      CHECK(first.datum == d);
      CHECK(reduce_lemma2(tau, d).deleted.empty());
    }
  // One column always in the subspace.
  const TypeProfile t({{1, 1, 0}, {1, 0, 1}});
  const GeneralizedModelDatum d{2, 3, 2, {{0, 1, 0}, {1, 0, 1}}};
  const auto second = reduce_lemma2(t, d);
  CHECK(second.deleted == std::vector<int>{0});
  CHECK(second.datum.r == 1);
  CHECK(second.affine_factor == 1);
  CHECK(check_condition(second.profile, second.datum));
  CHECK_THROWS_AS(reduce_lemma3(t, d), DomainError);
}

TEST_CASE("templates around τ") {
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      const auto p = reduce_lemma3(chain_profile(tau_alcove(n, r)), standard_iwahori_datum(n, r));
      CHECK(p.k == n - r);
      CHECK(p.templates.size() == static_cast<std::size_t>(n));
      for (const auto& x : p.templates)
        for (int mu = 0; mu < x.size; ++mu)
          for (int nu = 0; nu < x.size; ++nu) {
            const auto kind = x.at(mu, nu).kind;
            if (nu == 0) CHECK(kind == TemplateEntry::Kind::Free);
            else if (mu == nu - 1) CHECK(kind == TemplateEntry::Kind::One);
            else CHECK(kind == TemplateEntry::Kind::Zero);
          }
      CHECK(p.free_variables == n * (n - r));
    }
  const auto drinfeld = reduce_lemma3(chain_profile(tau_alcove(4, 3)), standard_iwahori_datum(4, 3));
  CHECK(drinfeld.templates[0].to_string() == "[*]");
}

TEST_CASE("chart presentations") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto d = standard_iwahori_datum(n, r);
      for (const auto& x : extreme_alcoves(n, r)) {
        const auto p = chart_presentation(chain_profile(x), d);
        CHECK(p.k == 0);
        CHECK(p.affine_dim == r * (n - r));
        CHECK(equations_from_presentation(p).generators.empty());
      }
      const auto p = chart_presentation(chain_profile(tau_alcove(n, r)), d);
      CHECK(p.k == n - r);
      CHECK(p.affine_dim == 0);
      CHECK(p.m == n);
      for (const auto& a : enumerate_admissible(n, r)) {
        const auto q = chart_presentation(chain_profile(a), d);
        CHECK(q.affine_dim == r * q.s + q.t * (n - r - q.s));
        CHECK(q.k == n - r - q.s);
        int forced_columns = 0;
        for (int i = 0; i < q.m; ++i)
          for (int j : q.quotient_basis[static_cast<std::size_t>(i)])
            forced_columns += chain_profile(a).at((i + 1) % n, j) == 0 ? 1 : 0;
        CHECK(q.free_variables == (n * q.k - forced_columns) * q.k);
        const auto I = equations_from_presentation(q);
        I.validate();
        CHECK(I.variables.size() == static_cast<std::size_t>(q.free_variables + 1));
        CHECK(I.raw_count == static_cast<std::size_t>(n * q.k * q.k));
      }
    }
}

TEST_CASE("equations around τ") {
  CHECK(texts(equations_U_tau(2, 1)) == std::vector<std::string>{"a0_1*a1_1 - π"});
  CHECK(equations_U_tau(4, 2).raw_count == 16);
  for (int n = 2; n <= 6; ++n) {
    const auto I = equations_U_tau(n, n - 1);
    REQUIRE(I.generators.size() == 1);
    const auto& terms = I.generators[0].terms();
    REQUIRE(terms.size() == 2);
    const auto& product = terms[0].first.degree == 1 ? terms[1].first : terms[0].first;
    CHECK(product.degree == static_cast<unsigned>(n));
    CHECK(product.is_squarefree());
    CHECK(algebra::to_string(I.generators[0], I.variables).ends_with(" - π"));
  }
  const auto I = equations_U_tau(3, 1);
  CHECK(I.raw_count == 12);
  CHECK(I.variables == std::vector<std::string>{"π", "a0_1", "a0_2", "a1_1", "a1_2", "a2_1", "a2_2"});
  // A2 A1 A0 - π expanded by hand.
  const std::vector<std::string> first{"a2_1*a1_1*a0_1 + a2_1*a0_2 + a1_2*a0_1 - π", "a2_1*a1_1 + a1_2",
                                       "a2_2*a1_1*a0_1 + a2_2*a0_2", "a2_2*a1_1 - π"};
  for (std::size_t e = 0; e < first.size(); ++e)
    CHECK(I.generators[e] == parse_polynomial(first[e], I.variables));
  CHECK(texts(equations_U_tau(4, 3)) == std::vector<std::string>{"a0_1*a1_1*a2_1*a3_1 - π"});
}

TEST_CASE("parahoric pair") {
  const auto one = equations_parahoric_pair(3, 1, 1);
  CHECK(texts(one.ideal) == std::vector<std::string>{"a_1_1*b_1_1 - π"});
  CHECK(one.ideal.raw_count == 2);
  CHECK(one.affine_dim == 1);

  const auto two = equations_parahoric_pair(4, 2, 2);
  CHECK(two.ideal.generators.size() == 8);
  CHECK(two.ideal.variables.size() == 9);
  CHECK(two.affine_dim == 0);

  CHECK(equations_parahoric_pair(6, 1, 2).affine_dim == 5 * 1 - 1);
  CHECK(equations_parahoric_pair(6, 3, 2).affine_dim == 3 * 3 - 4);
  CHECK(equations_parahoric_pair(5, 4, 1).q == 1);
  CHECK(equations_parahoric_pair(7, 5, 4).q == 2);
  CHECK_THROWS_AS(equations_parahoric_pair(4, 2, 4), DomainError);
  CHECK_THROWS_AS(equations_parahoric_pair(4, 0, 1), DomainError);
}

TEST_CASE("parahoric pair agrees with the two-step chart") {
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; 2 * r <= n; ++r)
      for (int kappa = 1; 2 * kappa <= n; ++kappa) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(kappa);
        const std::vector<int> chain{0, kappa};
        const auto p = chart_presentation(partial_chain_profile(n, r, chain), partial_chain_datum(n, r, chain));
        const auto pair = equations_parahoric_pair(n, r, kappa);
        CHECK(p.affine_dim == pair.affine_dim);
        CHECK(p.k == pair.q);
        const auto I = equations_from_presentation(p);
        std::map<std::string, std::string> rename;
        for (const auto& v : I.variables)
          if (v != kPi) rename[v] = std::string(v[1] == '1' ? "a" : "b") + v.substr(2);
        CHECK(generators_in(I, rename, pair.ideal) == generator_set(pair.ideal));
      }
}

TEST_CASE("generic tuples") {
  const auto two = equations_generic_tuple(2, 1, Target::Pi);
  CHECK(two.raw_count == 2);
  CHECK(texts(two) == std::vector<std::string>{"b0_1_1*b1_1_1 - π"});
  const auto circ = equations_generic_tuple(2, 2, Target::Zero);
  CHECK(circ.generators.size() == 8);
  CHECK(circ.variables.size() == 8);
  CHECK_FALSE(circ.pi_index().has_value());
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 3; ++k) {
      CHECK(equations_generic_tuple(m, k, Target::Pi).variables.size() == static_cast<std::size_t>(m * k * k + 1));
      CHECK(equations_generic_tuple(m, k, Target::Zero).raw_count == static_cast<std::size_t>(m * k * k));
    }
  CHECK_THROWS_AS(equations_generic_tuple(0, 1, Target::Pi), DomainError);
}

TEST_CASE("dualize") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto t = chain_profile(tau_alcove(n, r));
      const auto u = dualize(t);
      CHECK(u.r() == n - r);
      CHECK(dualize(u) == t);
      for (const auto& x : extreme_alcoves(n, r)) {
        const auto e = dualize(profile_of(x));
        for (const auto& row : e.rows()) CHECK(row == e.row(0));
      }
    }
}

TEST_CASE("duality of τ charts") {
  using namespace algebra;
  for (auto [n, r] : {std::pair{3, 1}, {4, 1}}) {
    const auto a = equations_U_tau(n, r);
    const auto b = equations_U_tau(n, n - r);
    CHECK(generic_fibre_dimension(a, Field::prime(32003)) == r * (n - r));
    CHECK(generic_fibre_dimension(b, Field::prime(32003)) == r * (n - r));
  }
}

TEST_CASE("unramified decomposition") {
  CHECK(decompose_unramified(1, {2}, 4) == std::vector<UnramifiedFactor>{{4, 2, false}});
  CHECK(decompose_unramified(2, {1, 2}, 3) == std::vector<UnramifiedFactor>{{3, 1, false}, {3, 2, false}});
  for (const auto& f : decompose_unramified(3, {0, 0, 0}, 2)) CHECK(f.trivial);
  CHECK_THROWS_AS(decompose_unramified(2, {1}, 3), DomainError);
  CHECK_THROWS_AS(decompose_unramified(1, {4}, 3), DomainError);
}
