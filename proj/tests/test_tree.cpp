#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <numeric>
#include <set>

#include "arbor/error.hpp"
#include "arbor/tree/canonical.hpp"
#include "arbor/tree/enumerate.hpp"
#include "arbor/tree/parse.hpp"
#include "arbor/tree/prufer.hpp"
#include "arbor/tree/tree.hpp"
#include "oracles/oracles.hpp"

using namespace arbor;
using namespace arbor::tree;

namespace {

Tree path3() { return Tree::from_edges({{1, 2}, {2, 3}}); }
Tree star4() { return Tree::from_edges({{1, 2}, {1, 3}, {1, 4}}); }

oracle::EdgeSet edge_set(const Tree& t) {
  oracle::EdgeSet s;
  for (const Edge& e : t.edges()) s.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(s.begin(), s.end());
  return s;
}

SignedEdgeVector vec(std::initializer_list<long long> xs) {
  std::vector<algebra::Integer> c;
  for (long long x : xs) c.emplace_back(x);
  return SignedEdgeVector(std::move(c));
}

Tree random_labeled_tree(std::mt19937_64& rng, int v) {
  std::uniform_int_distribution<int> d(1, v);
  std::vector<Vertex> code(static_cast<std::size_t>(v - 2));
  for (auto& x : code) x = d(rng);
  return decode_prufer(code);
}

Tree relabeled(const Tree& t, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : t.edges()) e.push_back({perm[static_cast<std::size_t>(x.a - 1)], perm[static_cast<std::size_t>(x.b - 1)]});
  return Tree::from_edges(std::move(e));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::kParse;
}

}  // namespace

TEST(Tree, ConstructionErrors) {
  EXPECT_EQ(kind_of([] { Tree::from_edges({{1, 2}}); }), ErrorKind::kBadDimension);
  EXPECT_EQ(kind_of([] { Tree::from_edges({{1, 2}, {2, 4}}); }), ErrorKind::kOutOfRangeLabel);
  EXPECT_EQ(kind_of([] { Tree::from_edges({{1, 2}, {2, 1}}); }), ErrorKind::kInvalidTree);
  EXPECT_EQ(kind_of([] { Tree::from_edges({{1, 1}, {2, 3}}); }), ErrorKind::kInvalidTree);
  EXPECT_EQ(kind_of([] { Tree::from_edges({{1, 2}, {3, 4}, {4, 3}}); }), ErrorKind::kInvalidTree);
}

TEST(Prufer, Examples) {
  EXPECT_EQ(kind_of([] { decode_prufer(std::vector<Vertex>{}); }), ErrorKind::kBadDimension);
  const std::vector<Vertex> star{1, 1}, path{2, 3};
  EXPECT_TRUE(same_edge_set(decode_prufer(star), star4()));
  EXPECT_TRUE(same_edge_set(decode_prufer(path), Tree::from_edges({{1, 2}, {2, 3}, {3, 4}})));
  const std::vector<Vertex> bad{1, 5};
  EXPECT_EQ(kind_of([&] { decode_prufer(bad); }), ErrorKind::kOutOfRangeLabel);
}

TEST(Prufer, RoundTripsAllCodesUpToSevenVertices) {
  for (int v = 3; v <= 7; ++v) {
    std::vector<Vertex> code(static_cast<std::size_t>(v - 2), 1);
    std::set<oracle::EdgeSet> seen;
    while (true) {
      const Tree t = decode_prufer(code);
      EXPECT_EQ(encode_prufer(t), code);
      EXPECT_EQ(edge_set(t), oracle::prufer_decode(code));
      seen.insert(edge_set(t));
      std::size_t k = code.size();
      while (k > 0 && code[k - 1] == v) code[--k] = 1;
      if (k == 0) break;
      ++code[k - 1];
    }
    std::size_t labeled = 1;
    for (int k = 0; k < v - 2; ++k) labeled *= static_cast<std::size_t>(v);
    EXPECT_EQ(seen.size(), labeled);
  }
}

TEST(Prufer, EncodeThenDecodeIsIdentityOnTrees) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int v = 3 + trial % 12;
    const Tree t = random_labeled_tree(rng, v);
    auto edges = t.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    const Tree shuffled = Tree::from_edges(edges);
    EXPECT_TRUE(same_edge_set(decode_prufer(encode_prufer(shuffled)), t));
  }
}

TEST(Enumerate, Counts) {
  const std::size_t expected[] = {1, 2, 3, 6, 11, 23, 47, 106};
  for (int v = 3; v <= 10; ++v) {
    const auto trees = enumerate_trees(v);
    EXPECT_EQ(trees.size(), expected[v - 3]) << "v=" << v;
    std::set<std::string> codes;
    for (const Tree& t : trees) {
      EXPECT_EQ(t.vertex_count(), v);
      codes.insert(canonical_form(t));
    }
    EXPECT_EQ(codes.size(), trees.size());
  }
  EXPECT_EQ(kind_of([] { enumerate_trees(2); }), ErrorKind::kBadDimension);
  EXPECT_EQ(kind_of([] { enumerate_trees(11); }), ErrorKind::kCapExceeded);
}

TEST(Enumerate, MatchesBruteForceDedup) {
  for (int v = 3; v <= 8; ++v) {
    EXPECT_EQ(enumerate_trees(v).size(), oracle::brute_force_class_count(v)) << "v=" << v;
  }
}

TEST(Enumerate, EveryLabeledTreeHasItsClassListed) {
  for (int v = 3; v <= 7; ++v) {
    std::set<std::string> codes;
    for (const Tree& t : enumerate_trees(v)) codes.insert(canonical_form(t));
    std::mt19937_64 rng(static_cast<std::uint64_t>(v));
    for (int trial = 0; trial < 100; ++trial) {
      EXPECT_TRUE(codes.count(canonical_form(random_labeled_tree(rng, v))));
    }
  }
}

TEST(Enumerate, CapOverride) {
  ::setenv("ARBOR_CAP_N", "4", 1);
  EXPECT_EQ(cap_n(), 4);
  EXPECT_EQ(kind_of([] { enumerate_trees(6); }), ErrorKind::kCapExceeded);
  EXPECT_EQ(enumerate_trees(5).size(), 3u);
  ::setenv("ARBOR_CAP_N", "four", 1);
  EXPECT_EQ(kind_of([] { cap_n(); }), ErrorKind::kParse);
  ::unsetenv("ARBOR_CAP_N");
  EXPECT_EQ(cap_n(), kDefaultCapN);
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(path3()), canonical_form(Tree::from_edges({{2, 1}, {1, 3}})));
  EXPECT_NE(canonical_form(Tree::from_edges({{1, 2}, {2, 3}, {3, 4}})), canonical_form(star4()));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const int v = 3 + trial % 6;
    const Tree x = random_labeled_tree(rng, v), y = random_labeled_tree(rng, v);
    EXPECT_EQ(canonical_form(x) == canonical_form(y), oracle::isomorphic(edge_set(x), edge_set(y), v));
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 3 + trial % 10;
    const Tree t = random_labeled_tree(rng, v);
    std::vector<Vertex> perm(static_cast<std::size_t>(v));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Tree u = relabeled(t, perm);
    EXPECT_EQ(canonical_form(t), canonical_form(u));
    EXPECT_TRUE(same_edge_set(canonical_relabel(t), canonical_relabel(u)));
  }
}

TEST(Canonical, RelabelParentsPrecedeChildren) {
  for (const Tree& t : enumerate_trees(8)) {
    for (int k = 0; k < t.edge_count(); ++k) {
      const Edge& e = t.edge(k);
      EXPECT_EQ(std::max(e.a, e.b), k + 2);
      EXPECT_LT(std::min(e.a, e.b), k + 2);
    }
  }
}

TEST(Path, Examples) {
  EXPECT_EQ(path3().path_vertices(1, 3), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(path3().path_vertices(2, 2), (std::vector<Vertex>{2}));
  EXPECT_EQ(star4().path_vertices(2, 3), (std::vector<Vertex>{2, 1, 3}));
  EXPECT_EQ(kind_of([] { path3().path_vertices(1, 4); }), ErrorKind::kUnknownVertex);
  EXPECT_EQ(kind_of([] { path3().path_vertices(0, 1); }), ErrorKind::kUnknownVertex);
}

TEST(Path, MatchesDfsAndReverses) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const int v = 3 + trial % 12;
    const Tree t = random_labeled_tree(rng, v);
    for (Vertex a = 1; a <= v; ++a) {
      for (Vertex b = 1; b <= v; ++b) {
        const auto p = t.path_vertices(a, b);
        EXPECT_EQ(p, oracle::dfs_path(edge_set(t), v, a, b));
        auto r = t.path_vertices(b, a);
        std::reverse(r.begin(), r.end());
        EXPECT_EQ(p, r);
      }
    }
  }
}

TEST(SignedPath, Examples) {
  const auto o = Orientation::canonical(2);
  EXPECT_EQ(signed_path_vector(path3(), o, 1, 3), vec({1, 1}));
  EXPECT_EQ(signed_path_vector(path3(), o, 3, 1), vec({-1, -1}));
  EXPECT_TRUE(signed_path_vector(path3(), o, 2, 2).is_zero());
  EXPECT_EQ(signed_path_vector(star4(), Orientation::canonical(3), 2, 3), vec({-1, 1, 0}));
  EXPECT_EQ(kind_of([] { signed_path_vector(path3(), Orientation::canonical(3), 1, 2); }),
            ErrorKind::kDimensionMismatch);
  EXPECT_EQ(kind_of([] { signed_path_vector(path3(), Orientation::canonical(2), 1, 9); }),
            ErrorKind::kUnknownVertex);
  // Reversed E_1 runs 2 -> 1.
  EXPECT_EQ(signed_path_vector(path3(), Orientation::from_bits("10"), 1, 3), vec({-1, 1}));
}

TEST(SignedPath, TelescopesAntisymmetricAndFlips) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const int v = 3 + trial % 8;
    const Tree t = random_labeled_tree(rng, v);
    const int n = t.edge_count();
    const Orientation o = Orientation::from_mask(rng(), n);
    const int flip = static_cast<int>(rng() % static_cast<unsigned>(n));
    const Orientation of = o.flipped(flip);
    for (Vertex a = 1; a <= v; ++a) {
      for (Vertex b = 1; b <= v; ++b) {
        const auto ab = signed_path_vector(t, o, a, b);
        EXPECT_EQ(ab, -signed_path_vector(t, o, b, a));
        auto expect = ab;
        expect[static_cast<std::size_t>(flip)] = -expect[static_cast<std::size_t>(flip)];
        EXPECT_EQ(signed_path_vector(t, of, a, b), expect);
        for (Vertex c = 1; c <= v; ++c) {
          EXPECT_EQ(ab + signed_path_vector(t, o, b, c), signed_path_vector(t, o, a, c));
        }
      }
    }
  }
}

TEST(Orientation, BitsRoundTripAndErrors) {
  EXPECT_EQ(Orientation::from_bits("0110").bits(), "0110");
  EXPECT_EQ(Orientation::from_mask(0b0110, 4).bits(), "0110");
  try {
    Orientation::from_bits("01x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos);
  }
}

TEST(Parse, TreeSpecs) {
  EXPECT_TRUE(same_edge_set(parse_tree_spec("1,1"), star4()));
  EXPECT_TRUE(same_edge_set(parse_tree_spec(" 1-2, 2-3 "), path3()));
  const Tree t = parse_tree_spec("3-4,5-4,4-1,2-1,1-6");
  EXPECT_EQ(t.edge(0), (Edge{3, 4}));
  EXPECT_EQ(t.edge(4), (Edge{1, 6}));
  EXPECT_EQ(parse_tree_spec("2").vertex_count(), 3);
  try {
    parse_tree_spec("1-2,2-x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("column 7"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { parse_tree_spec("1,,2"); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { parse_tree_spec(""); }), ErrorKind::kBadDimension);
  EXPECT_EQ(kind_of([] { parse_tree_spec("1-2,3-4"); }), ErrorKind::kOutOfRangeLabel);
  EXPECT_EQ(kind_of([] { parse_tree_spec("1-2,2-3,3-1"); }), ErrorKind::kInvalidTree);
  EXPECT_EQ(kind_of([] { parse_tree_spec("1-2,2-1,3-1"); }), ErrorKind::kInvalidTree);
}

TEST(IntervalTree, Shape) {
  const Tree t = interval_tree(4);
  EXPECT_TRUE(t.is_path_graph());
  EXPECT_EQ(t.edge(2), (Edge{3, 4}));
  EXPECT_FALSE(star4().is_path_graph());
  EXPECT_EQ(t.to_edge_list(), "1-2,2-3,3-4,4-5");
}
