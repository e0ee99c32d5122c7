#pragma once

// Independent reference implementations used only by tests. They work on
// plain std::set / std::vector values and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::set<std::int64_t>;

inline std::int64_t mod(std::int64_t x, std::int64_t n) {
  const auto r = x % n;
  return r < 0 ? r + n : r;
}

// All sums of `fold` elements (with repetition), optionally mod n.
inline Set sumset(const Set& s, int fold, std::optional<std::int64_t> n) {
  if (s.empty()) return {};
  Set acc{0};
  for (int i = 0; i < fold; ++i) {
    Set next;
    for (auto a : acc)
      for (auto b : s) next.insert(n ? mod(a + b, *n) : a + b);
    acc = std::move(next);
  }
  return acc;
}

// R_fold(S) by enumerating every fold-tuple and testing every consecutive
// subsum of length >= 2 against 0 mod n.
inline Set restricted(const Set& s, int fold, std::int64_t n) {
  const std::vector<std::int64_t> v(s.begin(), s.end());
  Set out;
  if (v.empty()) return out;
  std::vector<std::size_t> idx(fold, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < fold && ok; ++i) {
      std::int64_t sub = v[idx[i]];
      for (int j = i + 1; j < fold; ++j) {
        sub += v[idx[j]];
        if (mod(sub, n) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::int64_t total = 0;
      for (auto k : idx) total += v[k];
      out.insert(mod(total, n));
    }
    int p = fold - 1;
    while (p >= 0 && ++idx[p] == v.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

inline bool symmetric(const Set& s, std::int64_t n) {
  return std::all_of(s.begin(), s.end(), [&](auto x) { return s.count(mod(-x, n)) == 1; });
}

inline bool complete_sum_free(const Set& s, int ell, std::int64_t n) {
  const Set l = sumset(s, ell, n);
  for (auto x : s)
    if (l.count(x)) return false;
  Set u = l;
  u.insert(s.begin(), s.end());
  return static_cast<std::int64_t>(u.size()) == n;
}

// Minimum size of a symmetric complete sum-free set, by exhaustive subset
// enumeration over positive halves (plus n/2 when allowed).
inline std::optional<std::pair<int, Set>> psi(std::int64_t n, int ell, bool allow_half) {
  std::vector<std::int64_t> pool;
  for (std::int64_t x = 1; 2 * x < n; ++x) pool.push_back(x);
  for (int m = 1; m <= n; ++m) {
    const bool middle = m % 2 == 1;
    if (middle && !(allow_half && n % 2 == 0)) continue;
    const int h = m / 2;
    if (h > static_cast<int>(pool.size())) break;
    std::vector<int> pick(pool.size(), 0);
    std::fill(pick.begin(), pick.begin() + h, 1);
    do {
      Set s;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) {
          s.insert(pool[i]);
          s.insert(n - pool[i]);
        }
      if (middle) s.insert(n / 2);
      if (!s.empty() && complete_sum_free(s, ell, n)) return std::make_pair(m, s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

using Adjacency = std::vector<std::vector<int>>;

inline Adjacency cayley(const Set& s, std::int64_t n) {
  Adjacency g(n);
  for (std::int64_t x = 0; x < n; ++x)
    for (auto d : s) g[x].push_back(static_cast<int>(mod(x + d, n)));
  return g;
}

inline bool adjacent(const Adjacency& g, int u, int v) {
  return std::find(g[u].begin(), g[u].end(), v) != g[u].end();
}

// Simple path u -> v with exactly `edges` edges, by unpruned DFS.
inline bool simple_path(const Adjacency& g, int u, int v, int edges) {
  std::vector<char> used(g.size(), 0);
  std::function<bool(int, int)> go = [&](int at, int left) {
    if (left == 0) return at == v;
    for (int w : g[at]) {
      if (used[w]) continue;
      if (w == v && left != 1) continue;
      used[w] = 1;
      const bool hit = go(w, left - 1);
      used[w] = 0;
      if (hit) return true;
    }
    return false;
  };
  used[u] = 1;
  return go(u, edges);
}

inline bool has_cycle(const Adjacency& g, int length) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (int v : g[u])
      if (simple_path(g, static_cast<int>(u), v, length - 1)) return true;
  return false;
}

inline bool saturated(const Adjacency& g, int length) {
  if (has_cycle(g, length)) return false;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (!adjacent(g, static_cast<int>(u), static_cast<int>(v)) &&
          !simple_path(g, static_cast<int>(u), static_cast<int>(v), length - 1))
        return false;
  return true;
}

struct Params {
  std::int64_t r, t, gamma, j, k, alpha, M;
};

// Construction parameters by brute-force search over (t, gamma): the
// defining relations n = (2l+2)k + r, r = l+3-4(t+2) + gamma(2l+2) with r odd
// in [1, 2l+1].
inline std::optional<Params> params(std::int64_t ell, std::int64_t n) {
  std::optional<Params> hit;
  int found = 0;
  const std::int64_t m = 2 * ell + 2;
  for (std::int64_t t = 1; t <= ell + 1; ++t)
    for (std::int64_t gamma = -10; gamma <= 10; ++gamma) {
      const std::int64_t r = ell + 3 - 4 * (t + 2) + gamma * m;
      if (r < 1 || r > 2 * ell + 1 || (n - r) % m != 0) continue;
      const std::int64_t k = (n - r) / m;
      const std::int64_t j = 2 * gamma + 1;
      hit = Params{r, t, gamma, j, k, k + gamma - 2 * t - 4, ell * (2 * k + j)};
      ++found;
    }
  if (found != 1) return std::nullopt;
  return hit;
}

}  // namespace oracle
