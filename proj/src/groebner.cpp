#include "localmodel/groebner.hpp"

#include "localmodel/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace localmodel::algebra {

namespace {

template <class Fn>
auto with_field(Field field, Fn&& fn) {
  if (field.is_prime_field()) return fn(detail::PrimeField{field.p});
  return fn(detail::RationalField{});
}

void check_coefficients(const Polynomial& f, Field field) {
  if (f.field() == field) return;
  if (f.field().kind == Field::Kind::Rationals && f.has_integer_coefficients()) return;
  throw DomainError("polynomial over " + f.field().name() + " used with field " + field.name());
}

std::vector<std::size_t> shift_map(std::size_t nvars, int by) {
  std::vector<std::size_t> map(nvars + 1);
  for (std::size_t v = 0; v <= nvars; ++v) {
    const auto target = static_cast<long long>(v) + by;
    map[v] = target < 0 || target >= static_cast<long long>(kMaxVars) ? kMaxVars : static_cast<std::size_t>(target);
  }
  return map;
}

// Integer representatives of field elements for PolyIdealSpec results.
Polynomial as_integer_generator(const Polynomial& f) {
  if (f.field().is_prime_field()) return Polynomial::from_terms(f.terms());
  return f.primitive_integer();
}

std::size_t require_pi(const PolyIdealSpec& ideal) {
  auto idx = ideal.pi_index();
  if (!idx) throw DomainError("ideal has no π variable");
  return *idx;
}

// Ideal with a fresh first variable; existing generators shift up by one.
PolyIdealSpec with_leading_variable(const PolyIdealSpec& ideal, const std::string& name) {
  if (ideal.variables.size() + 1 > kMaxVars) throw DomainError("too many variables for auxiliary elimination");
  PolyIdealSpec out;
  out.variables.push_back(name);
  out.variables.insert(out.variables.end(), ideal.variables.begin(), ideal.variables.end());
  const auto up = shift_map(ideal.variables.size(), 1);
  for (const auto& g : ideal.generators) out.generators.push_back(g.rename(up));
  return out;
}

MonomialOrder elimination_for(const MonomialOrder& base) {
  return base.kind == MonomialOrder::Kind::Lex ? MonomialOrder::lex() : MonomialOrder::elimination(1);
}

// Eliminates the auxiliary variable 0 and shifts the result back down.
std::vector<Polynomial> eliminate_auxiliary(const PolyIdealSpec& extended, Field field, const ComputeOptions& opts) {
  const auto gb = buchberger(extended, elimination_for(opts.order), field, opts.deadline);
  const auto down = shift_map(extended.variables.size(), -1);
  std::vector<Polynomial> out;
  for (const auto& g : eliminate(gb, 1)) out.push_back(g.rename(down));
  return out;
}

// Minimum number of variables meeting every support mask.
int min_hitting_set(std::vector<std::uint64_t> masks, int budget_hint) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  int best = budget_hint;
  auto search = [&](auto&& self, std::uint64_t chosen, int used) -> void {
    if (used >= best) return;
    const std::uint64_t* pick = nullptr;
    for (const auto& m : masks)
      if ((m & chosen) == 0 && (pick == nullptr || std::popcount(m) < std::popcount(*pick))) pick = &m;
    if (pick == nullptr) {
      best = used;
      return;
    }
    for (std::uint64_t s = *pick; s; s &= s - 1) self(self, chosen | (s & -s), used + 1);
  };
  search(search, 0, 0);
  return best;
}

} // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements) {
    const auto& terms = g.terms();
    auto best = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it)
      if (order.compare(it->first, best->first) > 0) best = it;
    out.push_back(best->first);
  }
  return out;
}

std::string to_text(const GroebnerBasis& gb) {
  std::ostringstream os;
  for (const auto& g : gb.elements) os << to_string(g, gb.variables) << '\n';
  return os.str();
}

GroebnerBasis buchberger(const PolyIdealSpec& ideal, MonomialOrder order, Field field, const Deadline& deadline) {
  ideal.validate();
  if (ideal.variables.empty() && !ideal.generators.empty() &&
      std::any_of(ideal.generators.begin(), ideal.generators.end(), [](const auto& g) { return !g.is_constant(); }))
    throw DomainError("ideal needs a nonempty variable list");
  if (order.kind == MonomialOrder::Kind::Elimination && order.block > ideal.variables.size())
    throw DomainError("elimination block exceeds the variable count");
  GroebnerBasis gb{order, field, ideal.variables, {}};
  with_field(field, [&](auto f) {
    using F = decltype(f);
    detail::Ring<F> ring(f, order);
    std::vector<detail::Poly<F>> gens;
    for (const auto& g : ideal.generators) {
      check_coefficients(g, field);
      gens.push_back(ring.from_public(g));
    }
    for (const auto& g : detail::groebner(ring, std::move(gens), deadline)) gb.elements.push_back(ring.to_public(g));
    return 0;
  });
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  check_coefficients(f, gb.field);
  if (f.arity() > gb.variables.size()) throw DomainError("polynomial uses variables outside the basis ring");
  return with_field(gb.field, [&](auto fld) {
    using F = decltype(fld);
    detail::Ring<F> ring(fld, gb.order);
    std::vector<detail::Poly<F>> basis;
    for (const auto& g : gb.elements) basis.push_back(ring.from_public(g));
    return ring.to_public(ring.normal_form(ring.from_public(f), basis, {}, {}));
  });
}

std::vector<Polynomial> eliminate(const GroebnerBasis& gb, std::size_t k) {
  if (k > 0) {
    const bool ok = gb.order.kind == MonomialOrder::Kind::Lex ||
                    (gb.order.kind == MonomialOrder::Kind::Elimination && gb.order.block >= k);
    if (!ok) throw DomainError("eliminate needs an elimination order for the first " + std::to_string(k) + " variables");
  }
  const std::uint64_t mask = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements)
    if ((g.support() & mask) == 0) out.push_back(g);
  return out;
}

PolyIdealSpec ideal_quotient(const PolyIdealSpec& ideal, const Polynomial& f, Field field, const ComputeOptions& opts) {
  if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
  check_coefficients(f, field);
  // I ∩ (f) = (t I + (1 - t) f) ∩ k[vars]
  PolyIdealSpec ext = with_leading_variable(ideal, "_t");
  const auto t = Polynomial::variable(0);
  for (auto& g : ext.generators) g = t * g;
  const auto f_up = Polynomial::from_terms(f.terms()).rename(shift_map(ideal.variables.size(), 1));
  ext.generators.push_back((Polynomial::constant(1) - t) * f_up);
  const auto meet = eliminate_auxiliary(ext, field, opts);

  PolyIdealSpec out;
  out.variables = ideal.variables;
  with_field(field, [&](auto fld) {
    using F = decltype(fld);
    detail::Ring<F> ring(fld, opts.order);
    const auto divisor = ring.from_public(Polynomial::from_terms(f.terms()));
    for (const auto& h : meet)
      out.generators.push_back(as_integer_generator(ring.to_public(ring.divide_exact(ring.from_public(h), divisor))));
    return 0;
  });
  out.raw_count = out.generators.size();
  return out;
}

PolyIdealSpec saturate(const PolyIdealSpec& ideal, const Polynomial& f, Field field, const ComputeOptions& opts) {
  check_coefficients(f, field);
  PolyIdealSpec ext = with_leading_variable(ideal, "_y");
  const auto f_up = Polynomial::from_terms(f.terms()).rename(shift_map(ideal.variables.size(), 1));
  ext.generators.push_back(Polynomial::constant(1) - Polynomial::variable(0) * f_up);
  PolyIdealSpec out;
  out.variables = ideal.variables;
  for (const auto& g : eliminate_auxiliary(ext, field, opts)) out.generators.push_back(as_integer_generator(g));
  out.raw_count = out.generators.size();
  return out;
}

bool ideals_equal(const PolyIdealSpec& a, const PolyIdealSpec& b, Field field, const ComputeOptions& opts) {
  if (a.variables != b.variables) throw DomainError("ideals live in different rings");
  const auto ga = buchberger(a, opts.order, field, opts.deadline);
  const auto gb = buchberger(b, opts.order, field, opts.deadline);
  auto contained = [](const PolyIdealSpec& gens, const GroebnerBasis& basis) {
    return std::all_of(gens.generators.begin(), gens.generators.end(),
                       [&](const Polynomial& g) { return normal_form(g, basis).is_zero(); });
  };
  return contained(a, gb) && contained(b, ga);
}

bool flatness_check(const PolyIdealSpec& ideal, Field field, const ComputeOptions& opts) {
  const auto pi = Polynomial::variable(require_pi(ideal));
  return ideals_equal(ideal_quotient(ideal, pi, field, opts), ideal, field, opts);
}

PolyIdealSpec specialize_pi(const PolyIdealSpec& ideal) {
  const std::size_t pi = require_pi(ideal);
  std::vector<std::string> vars;
  std::vector<std::size_t> map(ideal.variables.size());
  for (std::size_t v = 0; v < ideal.variables.size(); ++v) {
    if (v == pi) {
      map[v] = kMaxVars;
      continue;
    }
    map[v] = vars.size();
    vars.push_back(ideal.variables[v]);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.set_zero(pi).rename(map));
  return make_ideal(std::move(vars), gens);
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const int nvars = static_cast<int>(gb.variables.size());
  std::vector<std::uint64_t> masks;
  for (const auto& m : gb.leading_monomials()) masks.push_back(m.support);
  return nvars - min_hitting_set(std::move(masks), nvars + 1);
}

int krull_dimension(const PolyIdealSpec& ideal, Field field, const ComputeOptions& opts) {
  return krull_dimension(buchberger(ideal, opts.order, field, opts.deadline));
}

int generic_fibre_dimension(const PolyIdealSpec& ideal, Field field, const ComputeOptions& opts) {
  const auto pi = Polynomial::variable(require_pi(ideal));
  const int d = krull_dimension(saturate(ideal, pi, field, opts), field, opts);
  return d < 0 ? -1 : d - 1;
}

std::string to_string(RadicalCertificate c) {
  return c == RadicalCertificate::CertifiedRadical ? "certified" : "inconclusive";
}

RadicalCertificate radical_certificate(const PolyIdealSpec& ideal, Field field, const std::vector<MonomialOrder>& orders,
                                       const Deadline& deadline) {
  for (const auto& order : orders) {
    const auto gb = buchberger(ideal, order, field, deadline);
    if (gb.is_unit()) throw DomainError("radical certificate requested for the unit ideal");
    const auto lms = gb.leading_monomials();
    if (std::all_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_squarefree(); }))
      return RadicalCertificate::CertifiedRadical;
  }
  return RadicalCertificate::Inconclusive;
}

} // namespace localmodel::algebra
