#pragma once

#include "localmodel/detail/engine.hpp"
#include "localmodel/ideal.hpp"

#include <string>
#include <vector>

namespace localmodel::algebra {

using detail::Deadline;

/// Reduced Gröbner basis together with the data needed to interpret it.
struct GroebnerBasis {
  MonomialOrder order;
  Field field;
  std::vector<std::string> variables;
  std::vector<Polynomial> elements;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero(); }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// One basis element per line, same syntax as the ideal text format.
std::string to_text(const GroebnerBasis& gb);

GroebnerBasis buchberger(const PolyIdealSpec& ideal, MonomialOrder order, Field field, const Deadline& deadline = {});

/// Remainder of f modulo the basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Elements free of the first k variables. Requires an elimination order for
/// those variables (Elimination with block >= k, or Lex).
std::vector<Polynomial> eliminate(const GroebnerBasis& gb, std::size_t k);

struct ComputeOptions {
  MonomialOrder order = MonomialOrder::degrevlex();
  Deadline deadline;
};

/// (I : f) via I ∩ (f) computed with an auxiliary variable, then exact division by f.
PolyIdealSpec ideal_quotient(const PolyIdealSpec& ideal, const Polynomial& f, Field field, const ComputeOptions& opts = {});

/// (I : f^∞) via elimination of y from I + (1 - y f).
PolyIdealSpec saturate(const PolyIdealSpec& ideal, const Polynomial& f, Field field, const ComputeOptions& opts = {});

/// Mutual containment. Variable lists must agree.
bool ideals_equal(const PolyIdealSpec& a, const PolyIdealSpec& b, Field field, const ComputeOptions& opts = {});

/// π is a nonzerodivisor modulo I, i.e. (I : π) = I.
bool flatness_check(const PolyIdealSpec& ideal, Field field, const ComputeOptions& opts = {});

/// π ↦ 0, π removed from the variables, zero generators dropped.
PolyIdealSpec specialize_pi(const PolyIdealSpec& ideal);

/// Dimension of the quotient ring from the initial ideal: the largest set of
/// variables containing the support of no leading monomial. Returns -1 for
/// the unit ideal (empty scheme).
int krull_dimension(const PolyIdealSpec& ideal, Field field, const ComputeOptions& opts = {});
int krull_dimension(const GroebnerBasis& gb);

/// Dimension of the generic fibre: krull_dimension of (I : π^∞) minus one,
/// or -1 if the generic fibre is empty.
int generic_fibre_dimension(const PolyIdealSpec& ideal, Field field, const ComputeOptions& opts = {});

enum class RadicalCertificate { CertifiedRadical, Inconclusive };

std::string to_string(RadicalCertificate c);

/// Certified when some order yields only squarefree leading monomials.
/// Throws DomainError for the unit ideal.
RadicalCertificate radical_certificate(const PolyIdealSpec& ideal, Field field, const std::vector<MonomialOrder>& orders,
                                       const Deadline& deadline = {});

} // namespace localmodel::algebra
