// Field-generic Buchberger machinery. Polynomials here are term vectors kept
// sorted in descending order for the ring's monomial order, with monic
// normalization applied by the callers that need it.
#pragma once

#include "localmodel/errors.hpp"
#include "localmodel/polynomial.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <vector>

namespace localmodel::algebra::detail {

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem from_public(const mpq_class& c) const { return c; }
  mpq_class to_public(const Elem& a) const { return a; }
  Field tag() const { return Field::rationals(); }
};

struct PrimeField {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p ? s - p : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    // a^(p-2)
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1u) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<Elem>(result);
  }
  Elem from_public(const mpq_class& c) const {
    mpz_class num = c.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = c.get_den() % p;
    if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
    return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
  }
  mpq_class to_public(Elem a) const { return mpq_class(static_cast<unsigned long>(a)); }
  Field tag() const { return Field::prime(p); }
};

/// Optional wall-clock budget, polled from inner loops.
class Deadline {
public:
  Deadline() = default;
  explicit Deadline(std::chrono::steady_clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::milliseconds budget) { return Deadline(std::chrono::steady_clock::now() + budget); }

  void check() const {
    if (at_ && std::chrono::steady_clock::now() > *at_) throw Timeout();
  }

private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c;
};

template <class F>
using Poly = std::vector<Term<F>>;

template <class F>
class Ring {
public:
  using Elem = typename F::Elem;

  Ring(F field, MonomialOrder order) : field_(std::move(field)), order_(order) {}

  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  Poly<F> from_public(const Polynomial& f) const {
    Poly<F> out;
    out.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
      auto e = field_.from_public(c);
      if (!field_.is_zero(e)) out.push_back({m, std::move(e)});
    }
    sort(out);
    return out;
  }

  Polynomial to_public(const Poly<F>& f) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f) terms.emplace_back(t.m, field_.to_public(t.c));
    return Polynomial::from_terms(std::move(terms), field_.tag());
  }

  /// Sorts descending and merges equal monomials.
  void sort(Poly<F>& f) const {
    std::sort(f.begin(), f.end(), [&](const Term<F>& a, const Term<F>& b) { return order_.compare(a.m, b.m) > 0; });
    Poly<F> out;
    out.reserve(f.size());
    for (auto& t : f) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = field_.add(out.back().c, t.c);
        if (field_.is_zero(out.back().c)) out.pop_back();
      } else if (!field_.is_zero(t.c)) {
        out.push_back(std::move(t));
      }
    }
    f = std::move(out);
  }

  void make_monic(Poly<F>& f) const {
    if (f.empty() || field_.is_one(f.front().c)) return;
    const Elem inv = field_.inv(f.front().c);
    for (auto& t : f) t.c = field_.mul(t.c, inv);
  }

  /// h[from..] - c * m * g, merged in descending order.
  Poly<F> sub_mul(const Poly<F>& h, std::size_t from, const Elem& c, const Monomial& m, const Poly<F>& g) const {
    Poly<F> out;
    out.reserve(h.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      Monomial gm = g[j].m * m;
      if (i == h.size()) {
        out.push_back({gm, field_.neg(field_.mul(c, g[j].c))});
        ++j;
        continue;
      }
      const int cmp = order_.compare(h[i].m, gm);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, field_.neg(field_.mul(c, g[j].c))});
        ++j;
      } else {
        Elem v = field_.sub(h[i].c, field_.mul(c, g[j].c));
        if (!field_.is_zero(v)) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Poly<F> spoly(const Poly<F>& f, const Poly<F>& g) const {
    const Monomial l = lcm(f.front().m, g.front().m);
    // f, g monic: (l/lm f) f - (l/lm g) g
    Poly<F> a;
    a.reserve(f.size());
    const Monomial mf = l / f.front().m;
    for (std::size_t i = 1; i < f.size(); ++i) a.push_back({f[i].m * mf, f[i].c});
    Poly<F> tail_g(g.begin() + 1, g.end());
    return sub_mul(a, 0, field_.one(), l / g.front().m, tail_g);
  }

  /// Full normal form of f modulo `basis` (monic elements). Only entries
  /// with active[i] set are used when `active` is nonempty.
  Poly<F> normal_form(Poly<F> h, const std::vector<Poly<F>>& basis, const std::vector<bool>& active,
                      const Deadline& deadline) const {
    Poly<F> rem;
    std::size_t pos = 0;
    std::size_t steps = 0;
    while (pos < h.size()) {
      if ((++steps & 0x3ff) == 0) deadline.check();
      const Monomial& lead = h[pos].m;
      const Poly<F>* reducer = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!active.empty() && !active[k]) continue;
        if (!basis[k].empty() && basis[k].front().m.divides(lead)) {
          reducer = &basis[k];
          break;
        }
      }
      if (reducer == nullptr) {
        rem.push_back(std::move(h[pos++]));
        continue;
      }
      const Elem c = h[pos].c;
      const Monomial q = lead / reducer->front().m;
      // leading terms cancel: skip them explicitly
      Poly<F> tail(reducer->begin() + 1, reducer->end());
      h = sub_mul(h, pos + 1, c, q, tail);
      pos = 0;
    }
    return rem;
  }

  /// Exact division h / f; throws ComputationError on a nonzero remainder.
  Poly<F> divide_exact(Poly<F> h, const Poly<F>& f) const {
    Poly<F> quotient;
    if (f.empty()) throw DomainError("division by zero polynomial");
    const Elem lc_inv = field_.inv(f.front().c);
    while (!h.empty()) {
      if (!f.front().m.divides(h.front().m)) throw ComputationError("inexact polynomial division");
      const Monomial q = h.front().m / f.front().m;
      const Elem c = field_.mul(h.front().c, lc_inv);
      quotient.push_back({q, c});
      Poly<F> tail(f.begin() + 1, f.end());
      h = sub_mul(h, 1, c, q, tail);
    }
    return quotient;
  }

private:
  F field_;
  MonomialOrder order_;
};

/// Reduced Gröbner basis by Buchberger's algorithm with the Gebauer–Möller
/// criteria and the normal selection strategy. Output is monic and sorted by
/// ascending leading monomial.
template <class F>
std::vector<Poly<F>> groebner(const Ring<F>& ring, std::vector<Poly<F>> input, const Deadline& deadline = {}) {
  const auto& order = ring.order();
  std::vector<Poly<F>> basis;
  std::vector<bool> active;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;

  auto lm = [&](std::size_t k) -> const Monomial& { return basis[k].front().m; };

  auto insert = [&](Poly<F> h) {
    ring.make_monic(h);
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    active.push_back(true);
    const Monomial& hm = lm(k);

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < k; ++g)
      if (active[g]) fresh.push_back({g, k, lcm(lm(g), hm)});

    std::vector<bool> keep(fresh.size(), false);
    std::vector<bool> pending(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      pending[a] = false;
      bool drop = false;
      if (!coprime(lm(fresh[a].i), hm)) {
        for (std::size_t b = 0; b < fresh.size() && !drop; ++b)
          if (b != a && (pending[b] || keep[b]) && fresh[b].lcm.divides(fresh[a].lcm)) drop = true;
      }
      keep[a] = !drop;
    }

    std::vector<Pair> kept_old;
    kept_old.reserve(pairs.size());
    for (auto& p : pairs) {
      const bool chain = hm.divides(p.lcm) && !(lcm(lm(p.i), hm) == p.lcm) && !(lcm(lm(p.j), hm) == p.lcm);
      if (!chain) kept_old.push_back(std::move(p));
    }
    pairs = std::move(kept_old);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a] && !coprime(lm(fresh[a].i), hm)) pairs.push_back(fresh[a]);

    for (std::size_t g = 0; g < k; ++g)
      if (active[g] && hm.divides(lm(g))) active[g] = false;
  };

  for (auto& f : input) ring.sort(f);
  std::sort(input.begin(), input.end(), [&](const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return order.compare(a.front().m, b.front().m) < 0;
  });
  for (auto& f : input) {
    deadline.check();
    auto h = ring.normal_form(std::move(f), basis, active, deadline);
    if (!h.empty()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    deadline.check();
    std::size_t best = 0;
    for (std::size_t q = 1; q < pairs.size(); ++q) {
      const int c = order.compare(pairs[q].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs[q].j, pairs[q].i) < std::tie(pairs[best].j, pairs[best].i))) best = q;
    }
    const Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    auto h = ring.normal_form(ring.spoly(basis[p.i], basis[p.j]), basis, active, deadline);
    if (!h.empty()) insert(std::move(h));
  }

  std::vector<Poly<F>> reduced;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (active[k]) reduced.push_back(basis[k]);
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly<F>& a, const Poly<F>& b) { return order.compare(a.front().m, b.front().m) < 0; });
  if (!reduced.empty() && reduced.front().front().m.is_one()) return {Poly<F>{{Monomial{}, ring.field().one()}}};
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    Poly<F> tail(reduced[k].begin() + 1, reduced[k].end());
    std::vector<bool> others(reduced.size(), true);
    others[k] = false;
    auto nf = ring.normal_form(std::move(tail), reduced, others, deadline);
    Poly<F> head{reduced[k].front()};
    head.insert(head.end(), std::make_move_iterator(nf.begin()), std::make_move_iterator(nf.end()));
    reduced[k] = std::move(head);
  }
  return reduced;
}

} // namespace localmodel::algebra::detail
