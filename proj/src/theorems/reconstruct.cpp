#include "arbor/theorems/reconstruct.hpp"

#include <functional>

#include "arbor/dynamics/transition.hpp"
#include "arbor/tree/prufer.hpp"

namespace arbor::theorems {

namespace {

using Grid = std::vector<std::vector<int>>;

Grid to_grid(const algebra::IntMatrix& m) {
  Grid g(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = static_cast<int>(m(i, j).to_int64().value_or(99));
  return g;
}

// Signs d with target[r][c] == d[r] * d[c] * base[pi r][pi c], if any.
std::optional<std::vector<int>> solve_signs(const Grid& target, const Grid& base,
                                            const std::vector<int>& pi) {
  const std::size_t n = target.size();
  std::vector<int> d(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t r = stack.back();
      stack.pop_back();
      for (std::size_t c = 0; c < n; ++c) {
        const int b = base[static_cast<std::size_t>(pi[r])][static_cast<std::size_t>(pi[c])];
        if (b == 0 || c == r) continue;
        const int want = target[r][c] * d[r] * b;  // d[c] must equal this
        if (d[c] == 0) {
          d[c] = want;
          stack.push_back(c);
        }
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (target[r][c] != d[r] * d[c] * base[static_cast<std::size_t>(pi[r])][static_cast<std::size_t>(pi[c])])
        return std::nullopt;
  return d;
}

}  // namespace

std::optional<Realization> realize_oriented_matrix(const algebra::IntMatrix& a) {
  if (!a.is_square() || a.rows() < 2 || a.rows() > static_cast<std::size_t>(kMaxRealizeN)) return std::nullopt;
  const int n = static_cast<int>(a.rows());
  const int v = n + 1;
  const Grid target = to_grid(a);
  Grid target_abs = target;
  for (auto& row : target_abs)
    for (auto& x : row) x = x < 0 ? -x : x;

  std::vector<tree::Vertex> shift(static_cast<std::size_t>(v));
  for (int x = 1; x <= v; ++x) shift[static_cast<std::size_t>(x - 1)] = x % v + 1;

  std::vector<tree::Vertex> code(static_cast<std::size_t>(v - 2), 1);
  while (true) {
    const auto t = std::make_shared<const tree::Tree>(tree::decode_prufer(code));
    const auto f = dynamics::make_vertex_map(t, shift);
    const auto canon = tree::Orientation::canonical(n);
    const Grid base = to_grid(dynamics::oriented_matrix(f, canon).oriented);
    Grid base_abs = base;
    for (auto& row : base_abs)
      for (auto& x : row) x = x < 0 ? -x : x;

    std::vector<int> pi(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::optional<Realization> found;
    std::function<void(std::size_t)> place = [&](std::size_t r) {
      if (found) return;
      if (r == static_cast<std::size_t>(n)) {
        if (auto d = solve_signs(target, base, pi)) {
          std::vector<tree::Edge> edges;
          std::vector<bool> flip;
          for (std::size_t k = 0; k < pi.size(); ++k) {
            edges.push_back(t->edge(pi[k]));
            flip.push_back((*d)[k] < 0);
          }
          auto relabeled = std::make_shared<const tree::Tree>(tree::Tree::from_edges(std::move(edges)));
          tree::Orientation o(std::move(flip));
          const auto g = dynamics::make_vertex_map(relabeled, shift);
          if (dynamics::oriented_matrix(g, o).oriented == a) found = Realization{relabeled, shift, o};
        }
        return;
      }
      for (int e = 0; e < n && !found; ++e) {
        if (used[static_cast<std::size_t>(e)]) continue;
        pi[r] = e;
        bool ok = true;
        for (std::size_t q = 0; q <= r && ok; ++q) {
          const auto pq = static_cast<std::size_t>(pi[q]);
          ok = base_abs[static_cast<std::size_t>(e)][pq] == target_abs[r][q] &&
               base_abs[pq][static_cast<std::size_t>(e)] == target_abs[q][r];
        }
        if (!ok) continue;
        used[static_cast<std::size_t>(e)] = true;
        place(r + 1);
        used[static_cast<std::size_t>(e)] = false;
      }
      pi[r] = -1;
    };
    place(0);
    if (found) return found;

    // Next Prufer code in lexicographic order.
    std::size_t k = code.size();
    while (k > 0 && code[k - 1] == v) code[--k] = 1;
    if (k == 0) break;
    ++code[k - 1];
  }
  return std::nullopt;
}

}  // namespace arbor::theorems
