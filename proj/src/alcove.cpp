#include "localmodel/alcove.hpp"

#include "localmodel/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace localmodel {

namespace {

int sum_of(const Vertex& v) { return std::accumulate(v.begin(), v.end(), 0); }

Vertex omega(int n, int i) {
  Vertex w(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < i; ++j) w[static_cast<std::size_t>(j)] = 1;
  return w;
}

void check_range(int n, int r) {
  if (n < 2 || r <= 0 || r >= n)
    throw DomainError("need 0 < r < n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
}

// All r-subsets of {0..n-1} as indicator rows, in lexicographic order.
std::vector<TypeProfile::Row> subset_rows(int n, int r) {
  std::vector<TypeProfile::Row> out;
  TypeProfile::Row row(static_cast<std::size_t>(n), 0);
  std::fill(row.end() - r, row.end(), 1);
  do {
    out.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  return out;
}

// Depth-first completion of t_0 = seed through n unit steps. Step i replaces
// coordinate i by an unused coordinate k while staying in {0,1}^n.
void expand_seed(int n, const TypeProfile::Row& seed, std::vector<TypeProfile::Row>& rows,
                 std::vector<bool>& used, int i, std::vector<Alcove>& out) {
  if (i > n) {
    // rows holds t_1..t_n; t_n == seed holds automatically.
    out.push_back(alcove_from_profile(TypeProfile(rows)));
    return;
  }
  const TypeProfile::Row prev = i == 1 ? seed : rows[static_cast<std::size_t>(i - 2)];
  for (int k = 1; k <= n; ++k) {
    if (used[static_cast<std::size_t>(k)]) continue;
    TypeProfile::Row next = prev;
    if (k != i) {
      if (prev[static_cast<std::size_t>(i - 1)] != 1 || prev[static_cast<std::size_t>(k - 1)] != 0) continue;
      next[static_cast<std::size_t>(i - 1)] = 0;
      next[static_cast<std::size_t>(k - 1)] = 1;
    }
    used[static_cast<std::size_t>(k)] = true;
    rows.push_back(std::move(next));
    expand_seed(n, seed, rows, used, i + 1, out);
    rows.pop_back();
    used[static_cast<std::size_t>(k)] = false;
  }
}

std::vector<Alcove> expand_one(int n, const TypeProfile::Row& seed) {
  std::vector<Alcove> out;
  std::vector<TypeProfile::Row> rows;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  expand_seed(n, seed, rows, used, 1, out);
  return out;
}

void sort_by_profile(std::vector<Alcove>& alcoves) {
  std::vector<std::pair<std::vector<std::uint8_t>, std::size_t>> keys;
  keys.reserve(alcoves.size());
  for (std::size_t i = 0; i < alcoves.size(); ++i)
    keys.emplace_back(profile_of(alcoves[i]).flattened(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Alcove> sorted;
  sorted.reserve(alcoves.size());
  for (const auto& [key, idx] : keys) sorted.push_back(std::move(alcoves[idx]));
  alcoves = std::move(sorted);
}

} // namespace

Alcove::Alcove(std::vector<Vertex> rows) : rows_(std::move(rows)) {
  const auto n = rows_.size();
  if (n == 0) throw MalformedAlcove("alcove needs at least one vertex");
  for (const auto& v : rows_)
    if (v.size() != n) throw MalformedAlcove("alcove vertices must have length n");
  auto unit_step = [](const Vertex& lo, const Vertex& hi) {
    int total = 0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (hi[j] < lo[j]) return false;
      total += hi[j] - lo[j];
    }
    return total == 1;
  };
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!unit_step(rows_[i], rows_[i + 1]))
      throw MalformedAlcove("adjacency fails between x_" + std::to_string(i + 1) + " and x_" +
                            std::to_string(i + 2));
  if (!unit_step(row(0), rows_.front())) throw MalformedAlcove("wraparound fails between x_n - 1 and x_1");
}

Vertex Alcove::row(int i) const {
  if (i == 0) {
    Vertex v = rows_.back();
    for (auto& c : v) --c;
    return v;
  }
  return rows_.at(static_cast<std::size_t>(i - 1));
}

int Alcove::step(int i) const {
  const Vertex lo = row(i - 1);
  const Vertex& hi = rows_.at(static_cast<std::size_t>(i - 1));
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (hi[j] != lo[j]) return static_cast<int>(j) + 1;
  return 0;
}

std::string Alcove::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? ",(" : "(");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
    os << ')';
  }
  os << ')';
  return os.str();
}

Alcove base_alcove(int n) {
  if (n < 1) throw DomainError("rank must be positive");
  std::vector<Vertex> rows;
  for (int i = 1; i <= n; ++i) rows.push_back(omega(n, i));
  return Alcove(std::move(rows));
}

Alcove tau_alcove(int n, int r) {
  check_range(n, r);
  std::vector<TypeProfile::Row> rows;
  for (int i = 1; i <= n; ++i) {
    TypeProfile::Row t(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < r; ++k) t[static_cast<std::size_t>((i + k) % n)] = 1;
    rows.push_back(std::move(t));
  }
  return alcove_from_profile(TypeProfile(std::move(rows)));
}

Alcove alcove_from_profile(const TypeProfile& t) {
  const int n = t.n();
  if (t.m() != n) throw DomainError("alcove profile needs n rows");
  std::vector<Vertex> rows;
  for (int i = 1; i <= n; ++i) {
    Vertex x = omega(n, i);
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] += t.at(i - 1, j);
    rows.push_back(std::move(x));
  }
  return Alcove(std::move(rows));
}

int size(const Alcove& a) {
  // Adjacency makes this independent of i; read it off x_n.
  return sum_of(a.rows().back()) - a.n();
}

bool is_minuscule(const Alcove& a, int r) {
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    const auto& x = a.rows()[static_cast<std::size_t>(i - 1)];
    for (int j = 0; j < n; ++j) {
      const int d = x[static_cast<std::size_t>(j)] - (j < i ? 1 : 0);
      if (d < 0 || d > 1) return false;
    }
  }
  return size(a) == r;
}

TypeProfile profile_of(const Alcove& a) {
  if (!is_minuscule(a, size(a))) throw DomainError("profile_of needs a minuscule alcove");
  const int n = a.n();
  std::vector<TypeProfile::Row> rows;
  for (int i = 1; i <= n; ++i) {
    const auto& x = a.rows()[static_cast<std::size_t>(i - 1)];
    TypeProfile::Row t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(x[static_cast<std::size_t>(j)] - (j < i ? 1 : 0));
    rows.push_back(std::move(t));
  }
  return TypeProfile(std::move(rows));
}

std::vector<Alcove> enumerate_admissible_serial(int n, int r) {
  check_range(n, r);
  std::vector<Alcove> out;
  for (const auto& seed : subset_rows(n, r)) {
    auto part = expand_one(n, seed);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  sort_by_profile(out);
  return out;
}

std::vector<Alcove> enumerate_admissible(int n, int r) {
  check_range(n, r);
  const auto seeds = subset_rows(n, r);
  std::vector<std::vector<Alcove>> parts(seeds.size());
  const auto count = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < count; ++s)
    parts[static_cast<std::size_t>(s)] = expand_one(n, seeds[static_cast<std::size_t>(s)]);
  std::vector<Alcove> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  sort_by_profile(out);
  return out;
}

std::vector<Alcove> extreme_alcoves(int n, int r) {
  check_range(n, r);
  std::vector<Alcove> out;
  for (const auto& row : subset_rows(n, r))
    out.push_back(alcove_from_profile(TypeProfile(std::vector<TypeProfile::Row>(static_cast<std::size_t>(n), row))));
  sort_by_profile(out);
  return out;
}

Alcove act(const AffinePermutation& w, const Alcove& a) {
  const int n = a.n();
  if (w.n() != n) throw DomainError("rank mismatch between permutation and alcove");
  // w(j) = σ(j) + n c_j moves coordinate j to σ(j) and shifts it by c_j.
  std::vector<int> sigma(static_cast<std::size_t>(n)), shift(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int v = w(j);
    const int res = ((v - 1) % n + n) % n;
    sigma[static_cast<std::size_t>(j - 1)] = res;
    shift[static_cast<std::size_t>(j - 1)] = (v - 1 - res) / n;
  }
  std::vector<Vertex> rows;
  for (const auto& x : a.rows()) {
    Vertex y(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      y[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] =
          x[static_cast<std::size_t>(j)] + shift[static_cast<std::size_t>(j)];
    rows.push_back(std::move(y));
  }
  return Alcove(std::move(rows));
}

AffinePermutation relative_position(const Alcove& a, int r) {
  const int n = a.n();
  check_range(n, r);
  if (size(a) != r) throw DomainError("alcove size differs from the size of τ");
  const Alcove tau = tau_alcove(n, r);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) sigma[static_cast<std::size_t>(tau.step(i) - 1)] = a.step(i);
  const auto& top_tau = tau.rows().back();
  const auto& top_a = a.rows().back();
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int s = sigma[static_cast<std::size_t>(j - 1)];
    const int c = top_a[static_cast<std::size_t>(s - 1)] - top_tau[static_cast<std::size_t>(j - 1)];
    window[static_cast<std::size_t>(j - 1)] = s + n * c;
  }
  return AffinePermutation(std::move(window));
}

Alcove dual_alcove(const Alcove& a) {
  const TypeProfile t = profile_of(a);
  const int n = t.n();
  std::vector<TypeProfile::Row> rows;
  for (int i = 1; i <= n; ++i) {
    const int src = (n - i == 0) ? n : n - i;  // t_0 = t_n
    TypeProfile::Row u(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      u[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(1 - t.at(src - 1, n - j));
    rows.push_back(std::move(u));
  }
  return alcove_from_profile(TypeProfile(std::move(rows)));
}

} // namespace localmodel
