#pragma once

#include "localmodel/monomial.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace localmodel::algebra {

/// Coefficient field: the rationals or a prime field F_p.
struct Field {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view text);

  static constexpr std::uint32_t kDefaultPrime = 32003;

  bool is_prime_field() const { return kind == Kind::Prime; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint32_t p);

/// Sparse multivariate polynomial with rational coefficients. When the field
/// tag is F_p, coefficients are kept as canonical residues 0 <= c < p.
/// Terms are stored in descending lexicographic order of exponent vectors;
/// this is a storage order only, not the order used by any computation.
class Polynomial {
public:
  using Term = std::pair<Monomial, mpq_class>;

  Polynomial() = default;
  explicit Polynomial(Field field) : field_(field) {}

  static Polynomial constant(const mpq_class& c, Field field = Field::rationals());
  static Polynomial variable(std::size_t v, Field field = Field::rationals());
  static Polynomial monomial(const Monomial& m, const mpq_class& c = 1, Field field = Field::rationals());

  /// Builds from arbitrary (possibly repeated, zero) terms.
  static Polynomial from_terms(std::vector<Term> terms, Field field = Field::rationals());

  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  std::size_t size() const { return terms_.size(); }

  /// Highest variable index used plus one.
  std::size_t arity() const;
  std::uint64_t support() const;
  bool uses_variable(std::size_t v) const { return (support() >> v) & 1u; }

  /// Coefficients are integers (always true over F_p).
  bool has_integer_coefficients() const;

  /// Scales a rational polynomial by a positive rational so that its
  /// coefficients are coprime integers.
  Polynomial primitive_integer() const;

  /// Substitutes 0 for variable v.
  Polynomial set_zero(std::size_t v) const;

  /// Renumbers variables: variable v becomes map[v]. Variables mapped to
  /// kMaxVars must not occur.
  Polynomial rename(const std::vector<std::size_t>& map) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpq_class& c) const;
  Polynomial shifted(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

private:
  void canonicalize();

  Field field_;
  std::vector<Term> terms_;
};

/// Expanded text form with `*`, `^` and degrevlex-descending term order,
/// e.g. "a0_1*a1_1 - π".
std::string to_string(const Polynomial& f, const std::vector<std::string>& vars);

/// Parses the text form. Throws DomainError on syntax errors or unknown names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            Field field = Field::rationals());

} // namespace localmodel::algebra
