#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "gminor/bipperm.hpp"
#include "gminor/errors.hpp"
#include "gminor/io.hpp"
#include "gminor/oracle.hpp"

using namespace gminor;
using gminor::gen::Rng;

namespace {

// Largest clique-matching that contains every edge of `fixed`.
int best_containing(const Graph& g, const std::vector<Edge>& fixed) {
  if (!is_clique_matching(g, fixed)) return -1;
  auto edges = g.edges();
  int best = 0;
  std::vector<Edge> cur = fixed;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(cur.size()));
    for (std::size_t i = from; i < edges.size(); ++i) {
      cur.push_back(edges[i]);
      if (is_clique_matching(g, cur)) go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return best;
}

std::vector<Graph> small_bipperm_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : gen::all_graphs(n))
      if (is_bipartite_permutation(g)) out.push_back(g);
  return out;
}

void expect_matches_oracle(const Graph& g) {
  auto m = max_clique_matching(g);
  EXPECT_TRUE(is_clique_matching(g, m.edges));
  EXPECT_EQ(m.size, static_cast<int>(m.edges.size()));
  EXPECT_EQ(m.size, clique_matching_oracle(g).value);
  auto h = hadwiger_bipperm(g);
  EXPECT_EQ(h.h, hadwiger_oracle(g).value);
  EXPECT_EQ(static_cast<int>(h.bags.size()), h.h);
  if (h.h > 0) EXPECT_TRUE(verify_witness(g, h.h, complete_graph(h.h).edges(), {h.bags, WitnessMode::Minor}));
}

}  // namespace

TEST(CliqueMatching, Examples) {
  EXPECT_EQ(max_clique_matching(path_graph(4)).size, 2);
  EXPECT_EQ(max_clique_matching(complete_bipartite(1, 3)).size, 1);
  EXPECT_EQ(max_clique_matching(complete_bipartite(3, 3)).size, 3);
  EXPECT_EQ(max_clique_matching(empty_graph(4)).size, 0);
}

TEST(CliqueMatching, RejectsNonBipartitePermutation) {
  EXPECT_THROW(max_clique_matching(cycle_graph(6)), DomainError);
  EXPECT_THROW(max_clique_matching(cycle_graph(3)), DomainError);
  StrongOrdering bad{{0, 2, 4}, {1, 5, 3}};
  EXPECT_THROW(max_clique_matching(path_graph(6), bad), DomainError);
}

TEST(HadwigerBipperm, Examples) {
  EXPECT_EQ(hadwiger_bipperm(path_graph(6)).h, 2);
  EXPECT_EQ(hadwiger_bipperm(complete_bipartite(1, 5)).h, 2);
  EXPECT_EQ(hadwiger_bipperm(complete_bipartite(3, 3)).h, 4);
  EXPECT_EQ(hadwiger_bipperm(cycle_graph(4)).h, 3);
  EXPECT_EQ(hadwiger_bipperm(empty_graph(3)).h, 1);
  EXPECT_EQ(hadwiger_bipperm(Graph(0)).h, 0);
  EXPECT_THROW(hadwiger_bipperm(cycle_graph(5)), DomainError);
}

TEST(CliqueMatching, ExhaustiveSmallGraphsAgreeWithOracle) {
  for (const auto& g : small_bipperm_graphs(7)) expect_matches_oracle(g);
}

TEST(CliqueMatching, RandomGraphsAgreeWithOracle) {
  Rng rng(20261016);
  std::uniform_int_distribution<int> side(1, 6);
  for (int round = 0; round < 200; ++round) {
    int a = side(rng), b = side(rng);
    Graph g = gen::relabel_randomly(gen::random_bipartite_permutation(a, b, rng), rng);
    SCOPED_TRACE(emit_graph(g, GraphFormat::EdgeList));
    expect_matches_oracle(g);
  }
}

TEST(AnchoredInstance, ShapeAndAnchoredOptimum) {
  Rng rng(7);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    Graph g = gen::random_bipartite_permutation(2 + round % 5, 2 + (round / 5) % 5, rng);
    auto ord = strong_ordering(g);
    ASSERT_TRUE(ord);
    for (auto [a, b] : g.edges()) {
      bool a_first = std::find(ord->side1.begin(), ord->side1.end(), a) != ord->side1.end();
      int u = a_first ? a : b, v = a_first ? b : a;
      auto inst = anchor_instance(g, *ord, u, v);
      EXPECT_EQ(inst.position_to_vertex[1], v);
      for (std::size_t i = 1; i < inst.x_right.size(); ++i) EXPECT_GE(inst.x_right[i - 1], inst.x_right[i]);
      for (std::size_t i = 1; i < inst.y_left.size(); ++i) EXPECT_LE(inst.y_left[i - 1], inst.y_left[i]);
      for (int y : inst.y) EXPECT_FALSE(g.adjacent(y, v));
      for (int x : inst.x) EXPECT_TRUE(g.adjacent(x, v));

      // Best clique-matching through u-v whose other edges avoid earlier V2 vertices.
      std::vector<int> keep;
      for (int w = 0; w < g.order(); ++w) {
        bool dropped = std::find(inst.position_to_vertex.begin() + 1, inst.position_to_vertex.end(), w) ==
                           inst.position_to_vertex.end() &&
                       std::find(ord->side2.begin(), ord->side2.end(), w) != ord->side2.end();
        if (!dropped) keep.push_back(w);
      }
      Graph h = induced_subgraph(g, keep);
      auto idx = [&](int w) { return static_cast<int>(std::lower_bound(keep.begin(), keep.end(), w) - keep.begin()); };
      std::vector<Edge> anchor{{idx(u), idx(v)}};
      int expected = best_containing(h, anchor);
      EXPECT_EQ(anchored_clique_matching(inst), expected);
      ++checked;

      // The greedy forced pairs can be added without losing optimality.
      std::vector<Edge> with_forced = anchor;
      for (auto [p, q] : inst.forced) with_forced.emplace_back(idx(p), idx(q));
      EXPECT_EQ(best_containing(h, with_forced), expected);
    }
  }
  EXPECT_GT(checked, 1000);
}
