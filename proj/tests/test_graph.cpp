#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "gminor/errors.hpp"
#include "gminor/graph.hpp"
#include "gminor/oracle.hpp"

using namespace gminor;
using gminor::gen::Rng;

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && gen::canonical_form(a) == gen::canonical_form(b);
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
  EXPECT_THROW(g.add_edge(0, 3), DomainError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, ContractEdgeExamples) {
  EXPECT_EQ(contract_edge(complete_graph(3), {0, 1}), complete_graph(2));
  EXPECT_EQ(contract_edge(path_graph(4), {1, 2}), path_graph(3));
  EXPECT_EQ(contract_edge(cycle_graph(4), {0, 1}), complete_graph(3));
  EXPECT_THROW(contract_edge(path_graph(4), {0, 2}), DomainError);
}

TEST(Graph, ContractEdgeRelabelling) {
  // Star centre 2 with leaves 0, 1, 3, 4; merging 0 and 2 keeps label 0.
  Graph g(5, std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  Graph h = contract_edge(g, {0, 2});
  EXPECT_EQ(h, Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(Graph, ContractEdgesExamples) {
  std::vector<Edge> ends{{0, 1}, {3, 4}};
  EXPECT_EQ(contract_edges(path_graph(5), ends), path_graph(3));
  EXPECT_EQ(contract_edges(cycle_graph(5), std::vector<Edge>{}), cycle_graph(5));
  std::vector<Edge> opposite{{0, 1}, {3, 4}};
  EXPECT_EQ(contract_edges(cycle_graph(6), opposite), cycle_graph(4));
  std::vector<Edge> bad{{0, 2}};
  EXPECT_THROW(contract_edges(path_graph(4), bad), DomainError);
}

TEST(Graph, ContractEdgesIsOrderIndependent) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = gen::random_connected_graph(8, 0.4, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(edges.size(), 3));
    Graph all_at_once = contract_edges(g, edges);
    // One at a time, tracking where the remaining endpoints move.
    Graph step = g;
    std::vector<int> where(g.order());
    for (int v = 0; v < g.order(); ++v) where[v] = v;
    for (auto [u, v] : edges) {
      int a = where[u], b = where[v];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      step = contract_edge(step, {a, b});
      for (int& w : where)
        if (w == b)
          w = a;
        else if (w > b)
          --w;
    }
    EXPECT_EQ(step, all_at_once);
    auto blocks = contraction_blocks(g, edges);
    EXPECT_EQ(all_at_once.order(), static_cast<int>(blocks.size()));
  }
}

TEST(Graph, ForestContractionRemovesOneVertexPerEdge) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = gen::random_connected_graph(9, 0.3, rng);
    // A BFS tree prefix is a forest.
    std::vector<Edge> forest;
    auto dist = distances(g, 0);
    for (int v = 1; v < g.order() && forest.size() < 4; ++v)
      g.neighbors(v).for_each([&](int w) {
        if (dist[w] + 1 == dist[v] && (forest.empty() || forest.back().second != v))
          forest.push_back({std::min(v, w), std::max(v, w)});
      });
    EXPECT_EQ(contract_edges(g, forest).order(), g.order() - static_cast<int>(forest.size()));
  }
}

TEST(Graph, Distances) {
  EXPECT_EQ(distances(path_graph(4), 0), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(distances(complete_graph(4), 2), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(distances(empty_graph(2), 0), (std::vector<int>{0, kInfinity}));
  EXPECT_EQ(diameter(cycle_graph(6)), 3);
  EXPECT_EQ(diameter(complete_graph(1)), 0);
  EXPECT_EQ(diameter(path_graph(9)), 8);
  EXPECT_EQ(diameter(empty_graph(2)), kInfinity);
}

TEST(Graph, ContractionNeverIncreasesDiameter) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = gen::random_connected_graph(9, 0.3, rng);
    for (auto e : g.edges()) EXPECT_LE(diameter(contract_edge(g, e)), diameter(g));
  }
}

TEST(Graph, SetOperations) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  EXPECT_TRUE(isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph a = gen::random_graph(4, 0.5, rng), b = gen::random_graph(3, 0.5, rng);
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_EQ(join(a, b), complement(disjoint_union(complement(a), complement(b))));
  }
  std::vector<int> bad{0, 7};
  EXPECT_THROW(induced_subgraph(path_graph(3), bad), DomainError);
  std::vector<int> mid{1, 2, 3};
  EXPECT_EQ(induced_subgraph(path_graph(5), mid), path_graph(3));
}

TEST(Graph, Chordality) {
  EXPECT_EQ(chordality(cycle_graph(7)), 7);
  EXPECT_EQ(chordality(path_graph(6)), 0);
  EXPECT_EQ(chordality(complete_graph(4)), 3);
  EXPECT_EQ(chordality(complete_bipartite(2, 3)), 4);
  EXPECT_THROW(chordality(path_graph(17)), CapacityError);
}

TEST(Graph, VerifyWitness) {
  auto k3 = complete_graph(3).edges();
  WitnessStructure w{{{0, 1}, {2}, {3}}, WitnessMode::Minor};
  EXPECT_TRUE(verify_witness(cycle_graph(4), 3, k3, w));
  w.mode = WitnessMode::Contraction;
  EXPECT_TRUE(verify_witness(cycle_graph(4), 3, k3, w));

  // No bag family of P_3 realises K_3.
  Graph p3 = path_graph(3);
  bool any = false;
  enumerate_connected_partitions(p3, Coverage::Partial, [&](const Blocks& b) {
    if (b.size() == 3) any = any || verify_witness(p3, 3, k3, {b, WitnessMode::Minor});
    return true;
  });
  EXPECT_FALSE(any);

  WitnessStructure partial{{{0}, {1}}, WitnessMode::Contraction};
  EXPECT_THROW(verify_witness(path_graph(3), 2, std::vector<Edge>{{0, 1}}, partial), InvalidStructureError);
  WitnessStructure overlap{{{0, 1}, {1}}, WitnessMode::Minor};
  EXPECT_THROW(verify_witness(path_graph(3), 2, std::vector<Edge>{{0, 1}}, overlap), InvalidStructureError);
}

TEST(Graph, InducedMinorRejectsExtraAdjacency) {
  // Deleting vertex 3 of C_4 leaves the induced path 0-1-2; in K_3 the
  // bags {0} and {2} are adjacent although the target pair is not.
  WitnessStructure w{{{0}, {1}, {2}}, WitnessMode::InducedMinor};
  EXPECT_TRUE(verify_witness(cycle_graph(4), 3, path_graph(3).edges(), w));
  WitnessStructure tri{{{0}, {1}, {2}}, WitnessMode::InducedMinor};
  EXPECT_FALSE(verify_witness(complete_graph(3), 3, path_graph(3).edges(), tri));
}

TEST(Graph, WitnessImpliesOracleBound) {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen::random_graph(8, 0.5, rng);
    auto r = hadwiger_oracle(g);
    auto kp = complete_graph(r.value).edges();
    EXPECT_TRUE(verify_witness(g, r.value, kp, {r.bags, WitnessMode::Minor}));
  }
}
