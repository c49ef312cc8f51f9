#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library beyond plain data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Grid = std::vector<std::vector<long long>>;

// Fraction-free Gaussian elimination.
inline Big bareiss_det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Big>> a(n, std::vector<Big>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Big prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// det(xI - m) by evaluating at x = 0..n and Lagrange interpolation.
// Coefficients constant term first.
inline std::vector<Big> interpolated_charpoly(const Grid& m) {
  const std::size_t n = m.size();
  std::vector<Rat> xs, ys;
  for (std::size_t x = 0; x <= n; ++x) {
    Grid shifted = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted[i][j] = (i == j ? static_cast<long long>(x) : 0) - m[i][j];
    xs.emplace_back(static_cast<long long>(x));
    ys.emplace_back(bareiss_det(shifted));
  }
  std::vector<Rat> coeffs(n + 1, Rat(0));
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[k] - xs[j];
    }
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += ys[k] * basis[t] / denom;
  }
  std::vector<Big> out;
  for (const auto& c : coeffs) out.push_back(boost::multiprecision::numerator(c));
  return out;
}

inline Grid matmul(const Grid& a, const Grid& b) {
  Grid c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// GF(2): is there a v with v, vB, ..., vB^{n-1} independent? (Equivalent to
// B being similar to the companion matrix of its characteristic polynomial.)
inline bool cyclic_mod2(const Grid& b) {
  const std::size_t n = b.size();
  auto step = [&](std::uint32_t v) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((v >> i) & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (((b[i][j] % 2) + 2) % 2) out ^= 1u << j;
    }
    return out;
  };
  for (std::uint32_t v = 1; v < (1u << n); ++v) {
    std::vector<std::uint32_t> pivot(n, 0);  // pivot[bit]: basis vector with top bit `bit`
    std::uint32_t w = v;
    bool independent = true;
    for (std::size_t k = 0; k < n && independent; ++k) {
      std::uint32_t r = w;
      for (std::size_t bit = n; bit-- > 0 && r != 0;) {
        if (!((r >> bit) & 1u)) continue;
        if (pivot[bit] == 0) {
          pivot[bit] = r;
          r = 0;
          break;
        }
        r ^= pivot[bit];
      }
      if (w != 0 && r == 0 && std::count_if(pivot.begin(), pivot.end(), [](auto p) { return p != 0; }) ==
                                  static_cast<long>(k + 1)) {
        w = step(w);
        continue;
      }
      independent = false;
    }
    if (independent) return true;
  }
  return false;
}

// Labeled trees as sorted edge sets.
using EdgeSet = std::vector<std::pair<int, int>>;

inline EdgeSet prufer_decode(const std::vector<int>& code) {
  const int v = static_cast<int>(code.size()) + 2;
  std::vector<int> deg(v + 1, 1);
  for (int x : code) ++deg[x];
  EdgeSet edges;
  for (int x : code) {
    int leaf = 1;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --deg[leaf];
    --deg[x];
  }
  int a = 0, b = 0;
  for (int x = 1; x <= v; ++x)
    if (deg[x] == 1) (a == 0 ? a : b) = x;
  edges.emplace_back(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Isomorphism by backtracking over relabelings: vertex k of x goes to an
// unused vertex of y with the same degree whose adjacency to the already
// placed vertices matches.
inline bool isomorphic(const EdgeSet& x, const EdgeSet& y, int v) {
  if (x.size() != y.size()) return false;
  std::vector<std::vector<bool>> ax(v + 1, std::vector<bool>(v + 1)), ay = ax;
  std::vector<int> dx(v + 1, 0), dy(v + 1, 0);
  for (auto [a, b] : x) ax[a][b] = ax[b][a] = true, ++dx[a], ++dx[b];
  for (auto [a, b] : y) ay[a][b] = ay[b][a] = true, ++dy[a], ++dy[b];
  std::vector<int> image(v + 1, 0);
  std::vector<bool> used(v + 1, false);
  auto place = [&](auto&& self, int k) -> bool {
    if (k > v) return true;
    for (int c = 1; c <= v; ++c) {
      if (used[c] || dy[c] != dx[k]) continue;
      bool ok = true;
      for (int j = 1; j < k && ok; ++j) ok = ax[k][j] == ay[c][image[j]];
      if (!ok) continue;
      image[k] = c;
      used[c] = true;
      if (self(self, k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return place(place, 1);
}

// Number of isomorphism classes among all v^(v-2) labeled trees, by pairwise
// brute-force isomorphism against the class representatives found so far.
// Degree sequences prune the comparisons.
inline std::size_t brute_force_class_count(int v) {
  std::vector<std::pair<std::vector<int>, EdgeSet>> reps;
  std::vector<int> code(v - 2, 1);
  while (true) {
    const EdgeSet e = prufer_decode(code);
    std::vector<int> deg(v + 1, 0);
    for (auto [a, b] : e) ++deg[a], ++deg[b];
    std::sort(deg.begin(), deg.end());
    bool seen = false;
    for (const auto& [d, r] : reps)
      if (d == deg && isomorphic(e, r, v)) {
        seen = true;
        break;
      }
    if (!seen) reps.emplace_back(deg, e);
    std::size_t k = code.size();
    while (k > 0 && code[k - 1] == v) code[--k] = 1;
    if (k == 0) break;
    ++code[k - 1];
  }
  return reps.size();
}

// Path by depth-first search, vertices u..v.
inline std::vector<int> dfs_path(const EdgeSet& edges, int v_count, int u, int v) {
  std::vector<std::vector<int>> adj(v_count + 1);
  for (auto [a, b] : edges) adj[a].push_back(b), adj[b].push_back(a);
  std::vector<int> path{u};
  std::vector<bool> seen(v_count + 1, false);
  seen[u] = true;
  auto go = [&](auto&& self, int x) -> bool {
    if (x == v) return true;
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      path.push_back(y);
      if (self(self, y)) return true;
      path.pop_back();
    }
    return false;
  };
  go(go, u);
  return path;
}

// Residue-set oracle: walk x -> x + j (mod n+1) from 0 until it returns, and the
// multiples of gcd(j, n+1) below n+1, counted without division.
inline std::pair<std::set<int>, std::set<int>> lemma3_sets(int j, int n) {
  const int m = n + 1;
  std::set<int> orbit;
  for (int x = j % m; x != 0; x = (x + j) % m) orbit.insert(x);
  int b = 1;
  for (int d = 1; d <= m; ++d)
    if (j % d == 0 && m % d == 0) b = d;
  std::set<int> multiples;
  for (int x = b; x < m; x += b) multiples.insert(x);
  return {orbit, multiples};
}

}  // namespace oracle
