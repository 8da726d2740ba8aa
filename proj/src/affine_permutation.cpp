#include "localmodel/affine_permutation.hpp"

#include "localmodel/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace localmodel {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod_pos(int a, int n) {
  int m = a % n;
  return m < 0 ? m + n : m;
}

} // namespace

AffinePermutation::AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  if (n == 0) throw DomainError("affine permutation needs a nonempty window");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  long long sum = 0;
  for (int v : window_) {
    auto res = static_cast<std::size_t>(mod_pos(v, n));
    if (seen[res]) throw DomainError("window residues are not a permutation");
    seen[res] = true;
    sum += v;
  }
  if (sum != static_cast<long long>(n) * (n + 1) / 2)
    throw DomainError("window sum differs from 1 + ... + n (not in W_a)");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw DomainError("simple reflection index out of range");
  return identity(n).times_reflection(i == 0 ? n : i, i == 0 ? n + 1 : i + 1);
}

AffinePermutation AffinePermutation::reflection(int n, int a, int b) {
  return identity(n).times_reflection(a, b);
}

int AffinePermutation::operator()(int i) const {
  const int n = this->n();
  const int r = mod_pos(i - 1, n);
  return window_[static_cast<std::size_t>(r)] + (i - 1 - r);
}

AffinePermutation AffinePermutation::compose(const AffinePermutation& other) const {
  if (other.n() != n()) throw DomainError("rank mismatch in composition");
  std::vector<int> w(window_.size());
  for (int i = 1; i <= n(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const int n = this->n();
  std::vector<int> w(window_.size());
  for (int i = 1; i <= n; ++i) {
    const int v = window_[static_cast<std::size_t>(i - 1)];
    const int r = mod_pos(v - 1, n);
    // w(i) = v  =>  w^{-1}(r + 1) = i - (v - r - 1)
    w[static_cast<std::size_t>(r)] = i - (v - r - 1);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::times_reflection(int i, int j) const {
  const int n = this->n();
  if (mod_pos(i - j, n) == 0) throw DomainError("reflection needs positions in distinct classes");
  const int wi = (*this)(i);
  const int wj = (*this)(j);
  std::vector<int> w = window_;
  // positions i and j exchange values; shift both into the window
  const int ri = mod_pos(i - 1, n);
  const int rj = mod_pos(j - 1, n);
  w[static_cast<std::size_t>(ri)] = wj - (i - 1 - ri);
  w[static_cast<std::size_t>(rj)] = wi - (j - 1 - rj);
  return AffinePermutation(std::move(w));
}

std::string AffinePermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << ']';
  return os.str();
}

int length(const AffinePermutation& w) {
  const int n = w.n();
  int len = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) len += std::abs(floor_div(w(j) - w(i), n));
  return len;
}

std::vector<std::pair<int, int>> inversions(const AffinePermutation& w) {
  const int n = w.n();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    const int wi = w(i);
    for (int j0 = 1; j0 <= n; ++j0) {
      if (j0 == i) continue;
      // j = j0 + k n with j > i and w(j0) + k n < w(i)
      const int kmin = floor_div(i - j0, n) + 1;
      const int kmax = floor_div(wi - w(j0) - 1, n);
      for (int k = kmin; k <= kmax; ++k) out.emplace_back(i, j0 + k * n);
    }
  }
  return out;
}

std::vector<AffinePermutation> lower_covers(const AffinePermutation& w) {
  const int target = length(w) - 1;
  std::vector<AffinePermutation> out;
  for (auto [i, j] : inversions(w)) {
    auto u = w.times_reflection(i, j);
    if (length(u) == target) out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w) {
  if (u.n() != w.n()) throw DomainError("rank mismatch in Bruhat comparison");
  const int lu = length(u);
  int level = length(w);
  if (lu > level) return false;
  // Bruhat intervals are graded, so descending through covers reaches u.
  std::set<AffinePermutation> frontier{w};
  while (level > lu) {
    std::set<AffinePermutation> next;
    for (const auto& v : frontier)
      for (auto& c : lower_covers(v)) next.insert(std::move(c));
    frontier = std::move(next);
    --level;
  }
  return frontier.contains(u);
}

} // namespace localmodel
