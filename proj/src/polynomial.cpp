#include "localmodel/polynomial.hpp"

#include "localmodel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace localmodel::algebra {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; }

mpq_class reduce_mod(const mpq_class& c, std::uint32_t p) {
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  return mpq_class(mpz_class((num * inv) % p));
}

} // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime below 2^31");
  return {Kind::Prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint32_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw DomainError("bad prime in field spec");
    return prime(p);
  }
  throw DomainError("field must be Q or Fp:<prime>, got '" + std::string(text) + "'");
}

std::string Field::name() const { return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p); }

Polynomial Polynomial::constant(const mpq_class& c, Field field) {
  return monomial(Monomial{}, c, field);
}

Polynomial Polynomial::variable(std::size_t v, Field field) {
  return monomial(Monomial::variable(v), 1, field);
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& c, Field field) {
  return from_terms({{m, c}}, field);
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, Field field) {
  Polynomial f(field);
  f.terms_ = std::move(terms);
  f.canonicalize();
  return f;
}

void Polynomial::canonicalize() {
  if (field_.is_prime_field())
    for (auto& t : terms_) t.second = reduce_mod(t.second, field_.p);
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return lex_greater(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (field_.is_prime_field()) out.back().second = reduce_mod(out.back().second, field_.p);
    } else {
      out.push_back(std::move(t));
    }
    if (out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

std::size_t Polynomial::arity() const {
  const auto s = support();
  return s == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(s));
}

std::uint64_t Polynomial::support() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s |= t.first.support;
  return s;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.get_den() == 1; });
}

Polynomial Polynomial::primitive_integer() const {
  if (field_.is_prime_field() || terms_.empty()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    den = lcm(den, t.second.get_den());
    num = gcd(num, t.second.get_num());
  }
  return scaled(mpq_class(den, num));
}

Polynomial Polynomial::set_zero(std::size_t v) const {
  Polynomial f(field_);
  for (const auto& t : terms_)
    if (t.first[v] == 0) f.terms_.push_back(t);
  return f;
}

Polynomial Polynomial::rename(const std::vector<std::size_t>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::uint64_t s = m.support; s; s &= s - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(s));
      if (v >= map.size() || map[v] >= kMaxVars) throw DomainError("rename drops a variable in use");
      r.set(map[v], r[map[v]] + m[v]);
    }
    out.emplace_back(r, c);
  }
  return from_terms(std::move(out), field_);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw DomainError("field mismatch in polynomial arithmetic");
  std::vector<Polynomial::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(std::move(t), a.field_);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw DomainError("field mismatch in polynomial arithmetic");
  std::vector<Polynomial::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) t.emplace_back(ma * mb, ca * cb);
  return Polynomial::from_terms(std::move(t), a.field_);
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.second *= c;
  return from_terms(std::move(t), field_);
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.first = term.first * m;
  return from_terms(std::move(t), field_);
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  if (f.arity() > vars.size()) throw DomainError("polynomial uses undeclared variables");
  auto terms = f.terms();
  const auto order = MonomialOrder::degrevlex();
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (m.is_one()) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << '*';
    bool first_var = true;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (m[v] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << vars[v];
      if (m[v] > 1) os << '^' << m[v];
    }
  }
  return os.str();
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text) {
    for (std::size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
  }

  Polynomial parse() {
    auto out = parse_sum();
    if (peek() != '\0') fail("expected '+' or '-'");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || u >= 0x80;
  }

  Polynomial parse_sum() {
    Polynomial out;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto term = parse_product();
      out += negate ? -term : term;
      const char op = peek();
      if (op != '+' && op != '-') return out;
      negate = op == '-';
      ++pos_;
    }
  }

  Polynomial parse_product() {
    auto out = parse_power();
    while (peek() == '*') {
      ++pos_;
      out = out * parse_power();
    }
    return out;
  }

  Polynomial parse_power() {
    auto base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const auto e = parse_integer();
    if (e > 255) fail("exponent too large");
    Polynomial out = Polynomial::constant(1);
    for (unsigned long k = e.get_ui(); k > 0; --k) out = out * base;
    return out;
  }

  Polynomial parse_atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end");
    if (c == '(') {
      ++pos_;
      auto inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(parse_number());
    if (ident_char(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpq_class parse_number() {
    mpz_class num = parse_integer();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      mpz_class den = parse_integer();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t, std::less<>> index_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars, Field field) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return Polynomial(field);
  return Polynomial::from_terms(Parser(trimmed, vars).parse().terms(), field);
}

} // namespace localmodel::algebra
