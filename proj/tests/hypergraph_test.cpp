#include <chrono>
#include <set>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/search.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace cayley {
namespace {

const std::vector<Subset> kFanoEdges = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                        {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};

Dihypergraph fano() {
  const auto g = make_cyclic(7);
  return cayley_dihypergraph(g, validate_hyperset(g, {{0, 1, 3}, {0, 4, 5}, {0, 2, 6}}));
}

std::vector<Subset> sorted_edges(std::vector<Subset> edges) {
  for (auto& e : edges) e = normalized(e);
  std::sort(edges.begin(), edges.end());
  return edges;
}

TEST(CayleyDihypergraphTest, Fano) {
  const auto start = std::chrono::steady_clock::now();
  const auto h = fano();
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
  EXPECT_EQ(h.arcs().size(), 21u);
  EXPECT_EQ(h.edges(), sorted_edges(kFanoEdges));
  // Every arc's vertex lies in its edge.
  for (const auto& a : h.arcs()) EXPECT_TRUE(contains(a.edge, a.vertex));
}

TEST(CayleyDihypergraphTest, Loops) {
  const auto g = make_dihedral(3);
  const auto h = cayley_dihypergraph(g, validate_hyperset(g, {{0}}));
  ASSERT_EQ(h.arcs().size(), 6u);
  for (const auto& a : h.arcs()) EXPECT_EQ(a.edge, Subset{a.vertex});
}

TEST(CayleyDihypergraphTest, MixedCosets) {
  const auto g = make_cyclic(6);
  const auto h = cayley_dihypergraph(g, validate_hyperset(g, {{0, 3}, {0, 2, 4}}));
  // Oracle: cosets of {0,3} and {0,2,4} in Z6.
  std::set<Subset> cosets;
  for (int t = 0; t < 6; ++t) {
    cosets.insert(normalized({t, (t + 3) % 6}));
    cosets.insert(normalized({t, (t + 2) % 6, (t + 4) % 6}));
  }
  EXPECT_EQ(h.arcs().size(), 12u);
  EXPECT_EQ(h.edges().size(), 5u);
  const auto edges = h.edges();
  EXPECT_EQ(std::set<Subset>(edges.begin(), edges.end()), cosets);
}

TEST(CayleyDihypergraphTest, ArcCountIsOrderTimesSize) {
  const auto g = make_dihedral(4);
  for (const auto& x : identity_subsets(g.order(), 3)) {
    const auto hx = single_cayley_closure(g, x);
    EXPECT_EQ(cayley_dihypergraph(g, hx).arcs().size(), g.order() * hx.size());
  }
}

TEST(CayleyHypergraphTest, Examples) {
  const auto z7 = make_cyclic(7);
  EXPECT_EQ(cayley_hypergraph(z7, validate_hyperset(z7, {{0, 1, 3}})).edges(),
            sorted_edges(kFanoEdges));

  const auto d3 = make_dihedral(3);
  const auto loops = cayley_hypergraph(d3, validate_hyperset(d3, {{0}}));
  EXPECT_EQ(loops.edges().size(), 6u);
  for (const auto& e : loops.edges()) EXPECT_EQ(e.size(), 1u);

  const auto z6 = make_cyclic(6);
  EXPECT_EQ(cayley_hypergraph(z6, validate_hyperset(z6, {{0, 3}})).edges(),
            (std::vector<Subset>{{0, 3}, {1, 4}, {2, 5}}));
}

TEST(CayleyHypergraphTest, RefusesEquivalentMembers) {
  const auto z7 = make_cyclic(7);
  EXPECT_THROW(cayley_hypergraph(z7, validate_hyperset(z7, {{0, 1, 3}, {0, 2, 6}})),
               Error);
}

TEST(UnderlyingTest, Examples) {
  EXPECT_EQ(underlying(fano()).edges(), sorted_edges(kFanoEdges));
  EXPECT_TRUE(underlying(Dihypergraph(4, {})).edges().empty());
  const auto z6 = make_cyclic(6);
  EXPECT_EQ(underlying(cayley_dihypergraph(z6, validate_hyperset(z6, {{0, 3}, {0, 2, 4}})))
                .edges()
                .size(),
            5u);
}

TEST(UnderlyingTest, MatchesCayleyHypergraphOfRepresentatives) {
  const auto g = make_dihedral(4);
  for (const auto& x : identity_subsets(g.order(), 3)) {
    const auto y = validate_hyperset(g, {x});
    EXPECT_EQ(underlying(cayley_dihypergraph(g, cayley_closure(g, y))),
              cayley_hypergraph(g, y));
  }
}

TEST(IsConnectedTest, Examples) {
  EXPECT_TRUE(is_connected(fano()));
  const auto z4 = make_cyclic(4);
  EXPECT_FALSE(is_connected(cayley_dihypergraph(z4, validate_hyperset(z4, {{0, 2}}))));
  EXPECT_TRUE(is_connected(Dihypergraph(1, {{0, {0}}})));
  EXPECT_FALSE(is_connected(Dihypergraph(2, {})));
}

TEST(IsConnectedTest, ArcVertexOutsideEdgeStillLinks) {
  EXPECT_TRUE(is_connected(Dihypergraph(3, {{0, {1, 2}}})));
  EXPECT_FALSE(is_connected(Dihypergraph(3, {{0, {1}}})));
}

TEST(IsUndirectedTest, Examples) {
  EXPECT_TRUE(is_undirected(fano()));
  const auto z5 = make_cyclic(5);
  EXPECT_FALSE(is_undirected(cayley_dihypergraph(z5, validate_hyperset(z5, {{0, 1}}))));
  const auto z6 = make_cyclic(6);
  EXPECT_TRUE(is_undirected(
      cayley_dihypergraph(z6, validate_hyperset(z6, {{0, 3}, {0, 2, 4}, {0}}))));
}

TEST(UniformityTest, Examples) {
  EXPECT_EQ(uniformity(fano()), 3);
  const auto z6 = make_cyclic(6);
  EXPECT_EQ(uniformity(cayley_dihypergraph(z6, validate_hyperset(z6, {{0, 3}, {0, 2, 4}}))),
            std::nullopt);
  EXPECT_EQ(uniformity(cayley_dihypergraph(z6, validate_hyperset(z6, {{0}}))), 1);
  EXPECT_EQ(uniformity(Dihypergraph(3, {})), std::nullopt);
}

TEST(ToCayleyDigraphTest, Examples) {
  const auto z5 = make_cyclic(5);
  EXPECT_EQ(to_cayley_digraph(z5, validate_hyperset(z5, {{0, 1}, {0, 2}})).size(), 10u);

  const auto z3 = make_cyclic(3);
  EXPECT_EQ(to_cayley_digraph(z3, validate_hyperset(z3, {{0, 1}, {0, 2}})),
            (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}));

  const auto z2 = make_cyclic(2);
  EXPECT_EQ(to_cayley_digraph(z2, validate_hyperset(z2, {{0, 1}})),
            (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));

  EXPECT_THROW(to_cayley_digraph(z5, validate_hyperset(z5, {{0, 1, 2}})), Error);
}

TEST(ToCayleyDigraphTest, MatchesTwoUniformArcs) {
  // Each arc (g, {g, s g}) of a 2-uniform CD is the digraph arc g -> s g.
  const auto g = make_dihedral(4);
  const auto x = validate_hyperset(g, {{0, 1}, {0, 5}, {0, 3}});
  std::vector<std::pair<int, int>> from_arcs;
  const auto h = cayley_dihypergraph(g, x);
  for (const auto& a : h.arcs())
    for (int w : a.edge)
      if (w != a.vertex) from_arcs.emplace_back(a.vertex, w);
  std::sort(from_arcs.begin(), from_arcs.end());
  EXPECT_EQ(to_cayley_digraph(g, x), from_arcs);
}

TEST(HypergraphIsomorphicTest, FanoSelf) {
  const auto h = fano();
  const auto p = hypergraph_isomorphic(h, h);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(preserves_arcs(h, *p));
}

TEST(HypergraphIsomorphicTest, AgainstBruteForce) {
  const auto z7 = make_cyclic(7);
  const auto h = fano();
  const auto other = cayley_dihypergraph(z7, single_cayley_closure(z7, {0, 2, 6}));
  EXPECT_FALSE(oracle::all_isomorphisms(h, other).empty());
  const auto p = hypergraph_isomorphic(h, other);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(oracle::image(oracle::arc_set(h), p->images()), oracle::arc_set(other));

  // {0,1,2} generates consecutive triples: two lines share two points, so
  // the brute force finds nothing.
  const auto runs = cayley_dihypergraph(z7, single_cayley_closure(z7, {0, 1, 2}));
  EXPECT_TRUE(oracle::all_isomorphisms(h, runs).empty());
  EXPECT_FALSE(hypergraph_isomorphic(h, runs).has_value());
}

TEST(HypergraphIsomorphicTest, RandomRelabelings) {
  const auto g = make_dihedral(4);
  std::vector<int> perm = {3, 7, 0, 5, 1, 6, 2, 4};
  for (const auto& x : identity_subsets(g.order(), 3)) {
    const auto h = cayley_dihypergraph(g, validate_hyperset(g, {x}));
    std::vector<Arc> moved;
    for (const auto& a : h.arcs()) {
      Subset e;
      for (int w : a.edge) e.push_back(perm[w]);
      moved.push_back({perm[a.vertex], e});
    }
    const Dihypergraph relabeled(8, moved);
    const auto p = hypergraph_isomorphic(h, relabeled);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(oracle::image(oracle::arc_set(h), p->images()), oracle::arc_set(relabeled));
    std::next_permutation(perm.begin(), perm.end());
  }
}

TEST(HypergraphIsomorphicTest, SizeMismatch) {
  EXPECT_FALSE(hypergraph_isomorphic(Dihypergraph(3, {}), Dihypergraph(4, {})).has_value());
  EXPECT_FALSE(
      hypergraph_isomorphic(Dihypergraph(3, {{0, {0}}}), Dihypergraph(3, {})).has_value());
}

TEST(DihypergraphTest, RejectsBadArcs) {
  EXPECT_THROW(Dihypergraph(3, {{0, {}}}), Error);
  EXPECT_THROW(Dihypergraph(3, {{3, {0}}}), Error);
  EXPECT_THROW(Dihypergraph(3, {{0, {0, 5}}}), Error);
  EXPECT_EQ(Dihypergraph(3, {{0, {1, 0}}, {0, {0, 1}}}).arcs().size(), 1u);
}

}  // namespace
}  // namespace cayley
