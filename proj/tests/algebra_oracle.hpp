// Textbook multivariate division over Q, written against the public
// Polynomial arithmetic only. Used to check engine output independently.
#pragma once

#include "localmodel/polynomial.hpp"

#include <optional>
#include <vector>

namespace oracle {

using localmodel::algebra::Monomial;
using localmodel::algebra::MonomialOrder;
using localmodel::algebra::Polynomial;

inline Polynomial::Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  auto best = f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.first, best.first) > 0) best = t;
  return best;
}

inline Polynomial divide_remainder(Polynomial p, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  Polynomial rem;
  while (!p.is_zero()) {
    const auto [m, c] = leading_term(p, order);
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      const auto [gm, gc] = leading_term(g, order);
      if (!gm.divides(m)) continue;
      p -= g.shifted(m / gm).scaled(c / gc);
      reduced = true;
      break;
    }
    if (!reduced) {
      const auto lead = Polynomial::monomial(m, c);
      rem += lead;
      p -= lead;
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto [fm, fc] = leading_term(f, order);
  const auto [gm, gc] = leading_term(g, order);
  const auto l = lcm(fm, gm);
  return f.shifted(l / fm).scaled(1 / fc) - g.shifted(l / gm).scaled(1 / gc);
}

// Buchberger's criterion: every S-polynomial reduces to zero.
inline bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!divide_remainder(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

} // namespace oracle
