#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "gminor/errors.hpp"
#include "gminor/io.hpp"
#include "gminor/recognition.hpp"

using namespace gminor;
using gminor::gen::Rng;

namespace {

void expect_canonical(const Cotree& t) {
  for (const auto& nd : t.nodes) {
    if (nd.kind == Cotree::Kind::Leaf) continue;
    EXPECT_GE(nd.children.size(), 2u);
    for (int c : nd.children) EXPECT_NE(t.nodes[c].kind, nd.kind);
  }
}

Graph spider() {
  // K_{1,3} with each leg subdivided once: centre 0, legs 0-1-2, 0-3-4, 0-5-6.
  return Graph(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// Definitional dominating-pair test through explicit path enumeration.
bool dominates_by_paths(const Graph& g, int u, int v) {
  bool ok = true;
  std::vector<int> path{u};
  VertexSet on(g.order());
  on.insert(u);
  auto rec = [&](auto&& self, int x) -> void {
    if (!ok) return;
    if (x == v) {
      VertexSet dom(g.order());
      for (int p : path) dom |= g.closed_neighborhood(p);
      if (dom.count() != g.order()) ok = false;
      return;
    }
    g.neighbors(x).for_each([&](int y) {
      if (on.contains(y)) return;
      on.insert(y);
      path.push_back(y);
      self(self, y);
      path.pop_back();
      on.erase(y);
    });
  };
  rec(rec, u);
  return ok;
}

}  // namespace

TEST(Cograph, Examples) {
  auto k1 = recognize_cograph(complete_graph(1));
  ASSERT_TRUE(std::holds_alternative<Cotree>(k1));
  EXPECT_EQ(to_string(std::get<Cotree>(k1)), "0");

  auto p4 = recognize_cograph(path_graph(4));
  ASSERT_TRUE(std::holds_alternative<InducedP4>(p4));
  EXPECT_EQ(std::get<InducedP4>(p4), (InducedP4{0, 1, 2, 3}));

  auto c4 = recognize_cograph(cycle_graph(4));
  ASSERT_TRUE(std::holds_alternative<Cotree>(c4));
  EXPECT_EQ(to_string(std::get<Cotree>(c4)), "join(union(0,2),union(1,3))");
  EXPECT_EQ(cotree_graph(std::get<Cotree>(c4)), cycle_graph(4));
}

TEST(Cograph, AgreesWithExhaustiveP4Search) {
  Rng rng(21);
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n)
    for (auto& g : gen::all_graphs(n)) graphs.push_back(g);
  for (int i = 0; i < 300; ++i) graphs.push_back(gen::random_graph(10, 0.5, rng));
  for (int i = 0; i < 300; ++i) graphs.push_back(gen::random_cograph(10, rng));
  for (const auto& g : graphs) {
    auto r = recognize_cograph(g);
    auto p4 = find_induced_p4(g);
    ASSERT_EQ(std::holds_alternative<Cotree>(r), !p4.has_value());
    if (auto* t = std::get_if<Cotree>(&r)) {
      EXPECT_EQ(cotree_graph(*t), g);
      EXPECT_EQ(t->leaf_count(), g.order());
      expect_canonical(*t);
    } else {
      auto q = std::get<InducedP4>(r);
      EXPECT_TRUE(g.adjacent(q[0], q[1]) && g.adjacent(q[1], q[2]) && g.adjacent(q[2], q[3]));
      EXPECT_FALSE(g.adjacent(q[0], q[2]) || g.adjacent(q[0], q[3]) || g.adjacent(q[1], q[3]));
    }
  }
}

TEST(StrongOrdering, Examples) {
  auto star = strong_ordering(complete_bipartite(1, 2));
  ASSERT_TRUE(star);
  EXPECT_TRUE(verify_ordering(complete_bipartite(1, 2), *star));

  auto p5 = strong_ordering(path_graph(5));
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->side1, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(p5->side2, (std::vector<int>{1, 3}));

  EXPECT_FALSE(strong_ordering(cycle_graph(6)));
  EXPECT_FALSE(exhaustive_strong_ordering(cycle_graph(6)));
  EXPECT_FALSE(strong_ordering(cycle_graph(5)));
}

TEST(StrongOrdering, VerifyExamples) {
  Graph k22 = complete_bipartite(2, 2);
  EXPECT_TRUE(verify_ordering(k22, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(verify_ordering(k22, {{0, 1}, {3, 2}}));
  // P_6 with V2 = {1,3,5}; the order 3,1,5 separates N(4) = {3,5}.
  Graph p6 = path_graph(6);
  EXPECT_TRUE(verify_ordering(p6, {{0, 2, 4}, {1, 3, 5}}));
  EXPECT_FALSE(verify_ordering(p6, {{0, 2, 4}, {3, 1, 5}}));
  EXPECT_TRUE(verify_ordering(empty_graph(3), {{}, {0, 1, 2}}));
  EXPECT_THROW(verify_ordering(path_graph(3), {{0, 1}, {2}}), DomainError);
  EXPECT_THROW(verify_ordering(path_graph(3), {{0}, {1}}), DomainError);
}

TEST(StrongOrdering, EnclosureMatters) {
  // N(0) = {3}, N(1) = {2,3,4}: adjacency alone allows 2,3,4 but then
  // N(1)\N(0) = {2,4} is split by 3.
  Graph g(5, std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_FALSE(verify_ordering(g, {{0, 1}, {2, 3, 4}}));
  EXPECT_TRUE(verify_ordering(g, {{0, 1}, {3, 2, 4}}));
}

TEST(StrongOrdering, ConstructionMatchesExhaustiveSearch) {
  Rng rng(8);
  std::vector<Graph> graphs;
  for (int n = 1; n <= 7; ++n)
    for (auto& g : gen::all_graphs(n))
      if (is_bipartite(g)) graphs.push_back(g);
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<int> side(1, 5);
    graphs.push_back(gen::random_bipartite_permutation(side(rng), side(rng), rng));
  }
  for (const auto& g : graphs) {
    auto fast = strong_ordering(g);
    auto slow = exhaustive_strong_ordering(g);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << emit_graph(g, GraphFormat::EdgeList);
    if (fast) EXPECT_TRUE(verify_ordering(g, *fast));
    // The constructive part alone must already succeed whenever one exists.
    EXPECT_EQ(construct_strong_ordering(g).has_value(), slow.has_value());
  }
}

TEST(StrongOrdering, LargeStaircaseGraphs) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> side(3, 14);
    Graph g = gen::random_bipartite_permutation(side(rng), side(rng), rng);
    auto ord = strong_ordering(g);
    ASSERT_TRUE(ord);
    EXPECT_TRUE(verify_ordering(g, *ord));
  }
}

TEST(StrongOrdering, Restriction) {
  Graph g = path_graph(6);
  auto ord = *strong_ordering(g);
  std::vector<int> keep{1, 2, 3, 4};
  auto sub = restrict_ordering(ord, g.order(), keep);
  EXPECT_TRUE(verify_ordering(induced_subgraph(g, keep), sub));
}

TEST(AtFree, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_at_free(path_graph(n)));
  for (int n = 3; n <= 5; ++n) EXPECT_TRUE(is_at_free(cycle_graph(n)));
  EXPECT_EQ(find_asteroidal_triple(cycle_graph(6)), (AsteroidalTriple{0, 2, 4}));
  EXPECT_EQ(find_asteroidal_triple(spider()), (AsteroidalTriple{2, 4, 6}));
}

TEST(AtFree, TripleIsAsteroidalByPaths) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    Graph g = gen::random_graph(8, 0.3, rng);
    auto at = find_asteroidal_triple(g);
    if (!at) continue;
    auto [a, b, c] = *at;
    auto avoid = [&](int x, int y, int z) {
      VertexSet rest = g.all_vertices();
      rest.subtract(g.closed_neighborhood(z));
      for (const auto& comp : components_within(g, rest))
        if (comp.contains(x) && comp.contains(y)) return true;
      return false;
    };
    EXPECT_TRUE(avoid(a, b, c) && avoid(a, c, b) && avoid(b, c, a));
  }
}

TEST(DominatingPair, Examples) {
  EXPECT_EQ(diameter_dominating_pair(path_graph(6)), (std::pair{0, 5}));
  EXPECT_EQ(diameter_dominating_pair(cycle_graph(4)), (std::pair{0, 2}));
  EXPECT_EQ(diameter_dominating_pair(complete_graph(4)), (std::pair{0, 1}));
  EXPECT_EQ(diameter_dominating_pair(complete_graph(1)), (std::pair{0, 0}));
  EXPECT_THROW(diameter_dominating_pair(cycle_graph(6)), PreconditionError);
  EXPECT_THROW(diameter_dominating_pair(empty_graph(2)), PreconditionError);
}

TEST(DominatingPair, ExistsAndVerifiesByPaths) {
  Rng rng(13);
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n)
    for (auto& g : gen::all_connected_graphs(n))
      if (is_at_free(g)) graphs.push_back(g);
  for (int i = 0; i < 200; ++i) graphs.push_back(gen::random_connected_at_free(9, rng));
  for (const auto& g : graphs) {
    auto [u, v] = diameter_dominating_pair(g);
    EXPECT_EQ(distances(g, u)[v], diameter(g));
    EXPECT_TRUE(dominates_by_paths(g, u, v));
    EXPECT_TRUE(is_dominating_pair(g, u, v));
  }
}

TEST(OtherClasses, Examples) {
  EXPECT_TRUE(is_split(complete_graph(5)));
  EXPECT_TRUE(is_cobipartite(complete_graph(5)));
  EXPECT_FALSE(is_split(cycle_graph(4)));
  EXPECT_FALSE(is_split(cycle_graph(5)));
  EXPECT_TRUE(is_split(path_graph(4)));
  EXPECT_FALSE(is_chordal_bipartite(cycle_graph(6)));
  EXPECT_TRUE(is_chordal_bipartite(cycle_graph(4)));
  EXPECT_FALSE(is_chordal_bipartite(complete_graph(3)));
  EXPECT_TRUE(is_chordal(complete_graph(4)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
}

TEST(OtherClasses, SplitAgreesWithPartitionSearch) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : gen::all_graphs(n)) {
      bool brute = false;
      for (int mask = 0; mask < (1 << n) && !brute; ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
          for (int v = u + 1; v < n && ok; ++v) {
            bool iu = mask >> u & 1, iv = mask >> v & 1;
            if (iu && iv && !g.adjacent(u, v)) ok = false;
            if (!iu && !iv && g.adjacent(u, v)) ok = false;
          }
        brute = ok;
      }
      EXPECT_EQ(is_split(g), brute);
      EXPECT_EQ(is_chordal(g), chordality(g) <= 3);
    }
}
