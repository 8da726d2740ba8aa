#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace localmodel::algebra {

inline constexpr std::size_t kMaxVars = 64;

/// Exponent vector over at most kMaxVars variables, with cached total degree
/// and a support bitmask for quick divisibility rejection.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint32_t degree = 0;
  std::uint64_t support = 0;

  static Monomial variable(std::size_t v, unsigned power = 1) {
    Monomial m;
    m.set(v, power);
    return m;
  }

  unsigned operator[](std::size_t v) const { return exp[v]; }

  void set(std::size_t v, unsigned power) {
    if (v >= kMaxVars) throw std::out_of_range("variable index exceeds kMaxVars");
    if (power > 255) throw std::overflow_error("exponent exceeds 255");
    degree = degree - exp[v] + power;
    exp[v] = static_cast<std::uint8_t>(power);
    if (power) support |= (std::uint64_t{1} << v);
    else support &= ~(std::uint64_t{1} << v);
  }

  bool is_one() const { return degree == 0; }
  bool is_squarefree() const { return static_cast<unsigned>(std::popcount(support)) == degree; }

  bool divides(const Monomial& o) const {
    if ((support & ~o.support) != 0 || degree > o.degree) return false;
    for (std::uint64_t s = support; s; s &= s - 1)
      if (exp[static_cast<std::size_t>(std::countr_zero(s))] > o.exp[static_cast<std::size_t>(std::countr_zero(s))])
        return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::uint64_t s = a.support | b.support; s; s &= s - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(s));
      const unsigned e = unsigned(a.exp[v]) + b.exp[v];
      if (e > 255) throw std::overflow_error("exponent exceeds 255");
      m.exp[v] = static_cast<std::uint8_t>(e);
    }
    m.degree = a.degree + b.degree;
    m.support = a.support | b.support;
    return m;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::uint64_t s = b.support; s; s &= s - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(s));
      m.exp[v] = static_cast<std::uint8_t>(m.exp[v] - b.exp[v]);
      if (m.exp[v] == 0) m.support &= ~(std::uint64_t{1} << v);
    }
    m.degree = a.degree - b.degree;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::uint64_t s = a.support | b.support; s; s &= s - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(s));
      m.exp[v] = std::max(a.exp[v], b.exp[v]);
      m.degree += m.exp[v];
    }
    m.support = a.support | b.support;
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.support & b.support) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support == b.support && a.degree == b.degree && a.exp == b.exp;
  }

  /// Lexicographic comparison with variable 0 most significant.
  friend int lex_compare(const Monomial& a, const Monomial& b) {
    const int c = std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
    return (c > 0) - (c < 0);
  }
};

/// Total monomial orders. Variable 0 is the largest variable throughout.
struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, Elimination };

  Kind kind = Kind::DegRevLex;
  /// For Elimination: the first `block` variables are compared first
  /// (degrevlex inside the block), then the rest by degrevlex.
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Elimination, k}; }

  /// Returns >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::DegRevLex:
      return degrevlex_range(a, b, 0, kMaxVars);
    case Kind::Elimination: {
      const int c = degrevlex_range(a, b, 0, block);
      return c != 0 ? c : degrevlex_range(a, b, block, kMaxVars);
    }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Elimination: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  static int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    if (lo == 0 && hi == kMaxVars) {
      da = a.degree;
      db = b.degree;
    } else {
      for (std::size_t v = lo; v < hi; ++v) {
        da += a.exp[v];
        db += b.exp[v];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t v = hi; v-- > lo;)
      if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
    return 0;
  }
};

} // namespace localmodel::algebra
