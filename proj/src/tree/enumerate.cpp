#include "arbor/tree/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "arbor/error.hpp"
#include "arbor/tree/canonical.hpp"

namespace arbor::tree {

int cap_n() {
  const char* env = std::getenv("ARBOR_CAP_N");
  if (env == nullptr || *env == '\0') return kDefaultCapN;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 2) throw std::invalid_argument("cap");
    return cap;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, std::string("ARBOR_CAP_N is not an integer >= 2: ") + env);
  }
}

void require_within_cap(int n) {
  const int cap = cap_n();
  if (n > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "n = " + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap) +
                    " (set ARBOR_CAP_N to raise it)");
  }
}

std::vector<Tree> enumerate_trees(int v) {
  if (v < 3) throw Error(ErrorKind::kBadDimension, "trees need at least 3 vertices");
  require_within_cap(v - 1);

  // Grow by one leaf at a time; every tree on v vertices arises from some
  // tree on v - 1 vertices by attaching a leaf.
  std::map<std::string, Tree> layer;
  const Tree p3 = Tree::from_edges({{1, 2}, {2, 3}});
  layer.emplace(canonical_form(p3), canonical_relabel(p3));
  for (int size = 4; size <= v; ++size) {
    std::map<std::string, Tree> next;
    for (const auto& [code, t] : layer) {
      for (Vertex x = 1; x < size; ++x) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({x, size});
        Tree grown = Tree::from_edges(std::move(edges));
        std::string c = canonical_form(grown);
        if (!next.contains(c)) next.emplace(std::move(c), canonical_relabel(grown));
      }
    }
    layer = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(layer.size());
  for (auto& [code, t] : layer) out.push_back(std::move(t));
  return out;
}

}  // namespace arbor::tree
