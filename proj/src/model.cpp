#include "localmodel/model.hpp"

#include "localmodel/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace localmodel {

using algebra::Polynomial;

namespace {

using Row = TypeProfile::Row;
using Matrix = std::vector<std::vector<Polynomial>>;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_rank(int n, int r) {
  if (n < 1 || r <= 0 || r >= n)
    throw DomainError("need 0 < r < n, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
}

void require_condition(const TypeProfile& t, const GeneralizedModelDatum& d) {
  if (!check_condition(t, d)) throw DomainError("profile " + t.to_string() + " violates the chart condition");
}

// Keeps the listed columns of profile and datum; rank drops by `rank_drop`.
Reduction restrict_columns(const TypeProfile& t, const GeneralizedModelDatum& d, const std::vector<int>& deleted,
                           int rank_drop, int affine_factor) {
  Reduction out;
  out.deleted = deleted;
  for (int j = 0; j < d.n; ++j)
    if (!std::binary_search(deleted.begin(), deleted.end(), j)) out.kept.push_back(j);
  std::vector<Row> rows;
  out.datum = {d.m, static_cast<int>(out.kept.size()), d.r - rank_drop, {}};
  for (int i = 0; i < d.m; ++i) {
    Row row, eps;
    for (int j : out.kept) {
      row.push_back(t.at(i, j));
      eps.push_back(d.eps[at(i)][at(j)]);
    }
    rows.push_back(std::move(row));
    out.datum.eps.push_back(std::move(eps));
  }
  out.profile = TypeProfile(std::move(rows));
  out.affine_factor = affine_factor;
  return out;
}

std::vector<int> constant_columns(const TypeProfile& t, std::uint8_t value) {
  std::vector<int> out;
  for (int j = 0; j < t.n(); ++j) {
    const auto col = t.column(j);
    if (std::all_of(col.begin(), col.end(), [&](auto v) { return v == value; })) out.push_back(j);
  }
  return out;
}

Polynomial entry_polynomial(const TemplateEntry& e) {
  switch (e.kind) {
  case TemplateEntry::Kind::Free: return Polynomial::variable(at(e.var + 1));
  case TemplateEntry::Kind::Zero: return {};
  case TemplateEntry::Kind::One: return Polynomial::constant(1);
  case TemplateEntry::Kind::Pi: return Polynomial::variable(0);
  }
  return {};
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t k = a.size();
  Matrix c(k, std::vector<Polynomial>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

// Entries of X_{i-1}⋯X_0 X_{m-1}⋯X_i - target·Id for every i, row-major.
std::vector<Polynomial> cyclic_relations(const std::vector<Matrix>& x, const Polynomial& target) {
  const int m = static_cast<int>(x.size());
  std::vector<Polynomial> out;
  for (int i = 0; i < m; ++i) {
    Matrix prod = x[at(i)];
    for (int step = 1; step < m; ++step) prod = multiply(x[at((i + step) % m)], prod);
    for (std::size_t row = 0; row < prod.size(); ++row)
      for (std::size_t col = 0; col < prod.size(); ++col)
        out.push_back(row == col ? prod[row][col] - target : prod[row][col]);
  }
  return out;
}

Row rotated_ones(int n, int r, int shift) {
  Row row(at(n), 0);
  for (int k = 0; k < r; ++k) row[at((shift + k) % n)] = 1;
  return row;
}

} // namespace

void GeneralizedModelDatum::validate() const {
  if (m < 1) throw DomainError("datum needs at least one step");
  if (n < 0 || r < 0 || r > n) throw DomainError("datum needs 0 <= r <= n");
  if (eps.size() != at(m)) throw DomainError("eps must have m rows");
  for (const auto& row : eps)
    if (row.size() != at(n)) throw DomainError("eps rows must have n entries");
  for (int j = 0; j < n; ++j) {
    int sum = 0;
    for (const auto& row : eps) {
      if (row[at(j)] > 1) throw DomainError("eps entries must be 0 or 1");
      sum += row[at(j)];
    }
    if (sum != 1) throw DomainError("column " + std::to_string(j + 1) + " of eps must contain exactly one π");
  }
}

GeneralizedModelDatum standard_iwahori_datum(int n, int r) {
  require_rank(n, r);
  std::vector<int> chain(at(n));
  std::iota(chain.begin(), chain.end(), 0);
  return partial_chain_datum(n, r, chain);
}

GeneralizedModelDatum partial_chain_datum(int n, int r, const std::vector<int>& chain) {
  require_rank(n, r);
  if (chain.empty()) throw DomainError("partial chain must be nonempty");
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (chain[k] < 0 || chain[k] >= n || (k > 0 && chain[k] <= chain[k - 1]))
      throw DomainError("partial chain indices must increase within [0, n)");
  const int m = static_cast<int>(chain.size());
  GeneralizedModelDatum d{m, n, r, std::vector<Row>(at(m), Row(at(n), 0))};
  for (int k = 0; k < m; ++k) {
    const int lo = chain[at(k)];
    const int hi = k + 1 < m ? chain[at(k + 1)] : chain[0] + n;
    for (int j = lo; j < hi; ++j) d.eps[at(k)][at(j % n)] = 1;
  }
  return d;
}

TypeProfile chain_profile(const Alcove& a) {
  const TypeProfile t = profile_of(a);
  std::vector<Row> rows{t.rows().back()};
  rows.insert(rows.end(), t.rows().begin(), t.rows().end() - 1);
  return TypeProfile(std::move(rows));
}

TypeProfile partial_chain_profile(int n, int r, const std::vector<int>& chain) {
  partial_chain_datum(n, r, chain);
  std::vector<Row> rows;
  for (int i : chain) rows.push_back(rotated_ones(n, r, i));
  return TypeProfile(std::move(rows));
}

bool check_condition(const TypeProfile& t, const GeneralizedModelDatum& d) {
  d.validate();
  if (t.m() != d.m || t.n() != d.n || t.r() != d.r)
    throw DomainError("profile " + t.to_string() + " does not match the datum dimensions");
  for (int j = 0; j < d.n; ++j)
    if (!is_cyclic_interval(t.column(j))) return false;
  for (int i = 0; i < d.m; ++i) {
    const int next = (i + 1) % d.m;
    for (int j = 0; j < d.n; ++j)
      if (t.at(i, j) == 1 && t.at(next, j) == 0 && d.eps[at(i)][at(j)] != 1) return false;
  }
  return true;
}

Reduction reduce_lemma1(const TypeProfile& t, const GeneralizedModelDatum& d) {
  require_condition(t, d);
  const auto zero = constant_columns(t, 0);
  return restrict_columns(t, d, zero, 0, d.r * static_cast<int>(zero.size()));
}

Reduction reduce_lemma2(const TypeProfile& t, const GeneralizedModelDatum& d) {
  require_condition(t, d);
  const auto one = constant_columns(t, 1);
  const int count = static_cast<int>(one.size());
  return restrict_columns(t, d, one, count, count * (d.n - d.r));
}

std::string MatrixTemplate::to_string() const {
  std::ostringstream os;
  for (int row = 0; row < size; ++row) {
    os << (row ? "\n[" : "[");
    for (int col = 0; col < size; ++col) {
      if (col) os << ' ';
      const auto& e = at(row, col);
      switch (e.kind) {
      case TemplateEntry::Kind::Free: os << '*'; break;
      case TemplateEntry::Kind::Zero: os << '0'; break;
      case TemplateEntry::Kind::One: os << '1'; break;
      case TemplateEntry::Kind::Pi: os << "π"; break;
      }
    }
    os << ']';
  }
  return os.str();
}

ChartPresentation reduce_lemma3(const TypeProfile& t, const GeneralizedModelDatum& d) {
  require_condition(t, d);
  if (!constant_columns(t, 1).empty()) throw DomainError("third reduction needs no column that is one at every step");
  const int m = d.m;
  const int n = d.n;
  ChartPresentation p;
  p.m = m;
  p.k = n - d.r;

  // Quotient basis at step i: columns with t_i(j) = 0, ordered by how soon
  // they enter the subspace, then by index.
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, int>> keyed;
    for (int j = 0; j < n; ++j) {
      if (t.at(i, j) != 0) continue;
      int wait = 1;
      while (wait <= m && t.at((i + wait) % m, j) == 0) ++wait;
      keyed.emplace_back(wait, j);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> basis;
    for (const auto& [wait, j] : keyed) basis.push_back(j);
    p.quotient_basis.push_back(std::move(basis));
  }

  int next_var = 0;
  for (int i = 0; i < m; ++i) {
    const auto& cols = p.quotient_basis[at(i)];
    const auto& rows = p.quotient_basis[at((i + 1) % m)];
    MatrixTemplate x{p.k, std::vector<TemplateEntry>(at(p.k * p.k))};
    std::vector<bool> forced(at(p.k), false);
    for (int iota = 0; iota < p.k; ++iota) {
      const int j = cols[at(iota)];
      const auto hit = std::find(rows.begin(), rows.end(), j);
      if (hit == rows.end()) continue;
      forced[at(iota)] = true;
      const int target = static_cast<int>(hit - rows.begin());
      x.entries[at(target * p.k + iota)].kind =
          d.eps[at(i)][at(j)] ? TemplateEntry::Kind::Pi : TemplateEntry::Kind::One;
    }
    for (int mu = 0; mu < p.k; ++mu)
      for (int iota = 0; iota < p.k; ++iota)
        if (!forced[at(iota)]) x.entries[at(mu * p.k + iota)] = {TemplateEntry::Kind::Free, next_var++};
    p.templates.push_back(std::move(x));
  }
  p.free_variables = next_var;
  return p;
}

ChartPresentation chart_presentation(const TypeProfile& t, const GeneralizedModelDatum& d) {
  const auto first = reduce_lemma1(t, d);
  const auto second = reduce_lemma2(first.profile, first.datum);
  ChartPresentation p = reduce_lemma3(second.profile, second.datum);
  p.s = static_cast<int>(first.deleted.size());
  p.t = static_cast<int>(second.deleted.size());
  p.affine_dim = first.affine_factor + second.affine_factor;
  p.zero_columns = first.deleted;
  for (int j : second.deleted) p.one_columns.push_back(first.kept[at(j)]);
  std::sort(p.one_columns.begin(), p.one_columns.end());
  for (auto& basis : p.quotient_basis)
    for (auto& j : basis) j = first.kept[at(second.kept[at(j)])];
  return p;
}

PolyIdealSpec equations_from_presentation(const ChartPresentation& p, VariableNaming naming) {
  std::vector<std::string> vars{std::string(kPi)};
  vars.resize(at(p.free_variables + 1));
  std::vector<int> free_in_column(at(p.m), -1);
  for (int i = 0; i < p.m; ++i) {
    const auto& x = p.templates[at(i)];
    for (int mu = 0; mu < x.size; ++mu)
      for (int nu = 0; nu < x.size; ++nu) {
        const auto& e = x.at(mu, nu);
        if (e.kind != TemplateEntry::Kind::Free) continue;
        std::string name;
        if (naming == VariableNaming::Column) {
          if (free_in_column[at(i)] >= 0 && free_in_column[at(i)] != nu)
            throw DomainError("column naming needs at most one free column per template");
          free_in_column[at(i)] = nu;
          name = "a" + std::to_string(i) + "_" + std::to_string(mu + 1);
        } else {
          name = "x" + std::to_string(i) + "_" + std::to_string(mu + 1) + "_" + std::to_string(nu + 1);
        }
        vars[at(e.var + 1)] = std::move(name);
      }
  }
  std::vector<Matrix> mats;
  for (const auto& x : p.templates) {
    Matrix mat(at(x.size), std::vector<Polynomial>(at(x.size)));
    for (int mu = 0; mu < x.size; ++mu)
      for (int nu = 0; nu < x.size; ++nu) mat[at(mu)][at(nu)] = entry_polynomial(x.at(mu, nu));
    mats.push_back(std::move(mat));
  }
  return make_ideal(std::move(vars), p.k == 0 ? std::vector<Polynomial>{} : cyclic_relations(mats, Polynomial::variable(0)));
}

PolyIdealSpec equations_U_tau(int n, int r) {
  const auto p = chart_presentation(chain_profile(tau_alcove(n, r)), standard_iwahori_datum(n, r));
  return equations_from_presentation(p, VariableNaming::Column);
}

ParahoricEquations equations_parahoric_pair(int n, int r, int kappa) {
  require_rank(n, r);
  if (kappa <= 0 || kappa >= n) throw DomainError("need 0 < κ < n");
  r = std::min(r, n - r);
  kappa = std::min(kappa, n - kappa);
  const int q = std::min(kappa, r);

  std::vector<std::string> vars{std::string(kPi)};
  Matrix a(at(q), std::vector<Polynomial>(at(q))), b = a;
  for (auto [name, mat] : {std::tuple{'a', &a}, std::tuple{'b', &b}})
    for (int row = 0; row < q; ++row)
      for (int col = 0; col < q; ++col) {
        (*mat)[at(row)][at(col)] = Polynomial::variable(vars.size());
        vars.push_back(std::string(1, name) + "_" + std::to_string(row + 1) + "_" + std::to_string(col + 1));
      }
  // cyclic_relations on (B, A) yields AB - π then BA - π.
  const auto gens = cyclic_relations({b, a}, Polynomial::variable(0));
  return {make_ideal(std::move(vars), gens), (n - r) * r - q * q, q};
}

PolyIdealSpec equations_generic_tuple(int m, int k, Target target) {
  if (m < 1 || k < 1) throw DomainError("generic tuple needs m >= 1 and k >= 1");
  std::vector<std::string> vars;
  if (target == Target::Pi) vars.emplace_back(kPi);
  std::vector<Matrix> mats;
  for (int i = 0; i < m; ++i) {
    Matrix mat(at(k), std::vector<Polynomial>(at(k)));
    for (int row = 0; row < k; ++row)
      for (int col = 0; col < k; ++col) {
        mat[at(row)][at(col)] = Polynomial::variable(vars.size());
        vars.push_back("b" + std::to_string(i) + "_" + std::to_string(row + 1) + "_" + std::to_string(col + 1));
      }
    mats.push_back(std::move(mat));
  }
  const Polynomial goal = target == Target::Pi ? Polynomial::variable(0) : Polynomial{};
  return make_ideal(std::move(vars), cyclic_relations(mats, goal));
}

TypeProfile dualize(const TypeProfile& t) {
  std::vector<Row> rows;
  for (const auto& row : t.rows()) {
    Row out;
    for (auto v : row) out.push_back(static_cast<std::uint8_t>(1 - v));
    rows.push_back(std::move(out));
  }
  return TypeProfile(std::move(rows));
}

std::vector<UnramifiedFactor> decompose_unramified(int d, const std::vector<int>& ranks, int n) {
  if (d < 1) throw DomainError("unramified degree must be at least 1");
  if (n < 1) throw DomainError("module rank must be positive");
  if (ranks.size() != at(d)) throw DomainError("need one rank per embedding");
  std::vector<UnramifiedFactor> out;
  for (int r : ranks) {
    if (r < 0 || r > n) throw DomainError("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
    out.push_back({n, r, r == 0 || r == n});
  }
  return out;
}

} // namespace localmodel
