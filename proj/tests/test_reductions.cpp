#include <gtest/gtest.h>

#include "generators.hpp"
#include "instances.hpp"
#include "gminor/errors.hpp"
#include "gminor/oracle.hpp"
#include "gminor/recognition.hpp"
#include "gminor/reductions.hpp"

using namespace gminor;
using gminor::gen::Rng;
using namespace gminor::gen;

namespace {

bool is_complete(const Graph& h) { return h.size() == h.order() * (h.order() - 1) / 2; }

}  // namespace

TEST(NaeReduction, Counts) {
  NaeFormula f{2, {{1, 2, -1}}};
  auto r = nae3sat_to_cobipartite(f);
  EXPECT_EQ(r.graph.order(), 19);
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.target, "contraction to K_17");
  EXPECT_TRUE(is_cobipartite(r.graph));

  auto one = nae3sat_to_cobipartite(NaeFormula{1, {{1, 1, 1}}});
  EXPECT_EQ(one.k, 0);
  EXPECT_EQ(one.graph.order(), 2 + 1 * 2);

  auto three = nae3sat_to_cobipartite(NaeFormula{3, {{1, 2, 3}}});
  EXPECT_EQ(three.graph.order(), 42);
  EXPECT_EQ(three.roles.at("dummies").size(), 27u);
  EXPECT_EQ(three.roles.at("clause_copies").size(), 9u);

  EXPECT_THROW(nae3sat_to_cobipartite(NaeFormula{1, {{1, 2, 1}}}), DomainError);
}

TEST(NaeReduction, Solver) {
  EXPECT_FALSE(nae3sat_solve(NaeFormula{1, {{1, 1, 1}}}));
  EXPECT_TRUE(nae3sat_solve(NaeFormula{3, {{1, 2, 3}}}));
  EXPECT_THROW(nae3sat_solve(NaeFormula{21, {}}), CapacityError);
}

TEST(NaeReduction, RoundTripSmall) {
  int yes = 0, total = 0;
  for (int n = 1; n <= 2; ++n)
    for (int m = 0; m <= 1; ++m)
      for (const auto& f : all_formulas(n, m)) {
        auto r = nae3sat_to_cobipartite(f);
        ASSERT_TRUE(is_cobipartite(r.graph));
        auto sol = nae3sat_solve(f);
        auto contracted = min_contraction_oracle(r.graph, is_complete, r.k);
        EXPECT_EQ(sol.has_value(), contracted.has_value());
        if (sol) {
          ++yes;
          auto bags = nae_bags(r, *sol);
          const int p = r.graph.order() - r.k;
          EXPECT_TRUE(verify_witness(r.graph, p, complete_graph(p).edges(), {bags, WitnessMode::Contraction}));
        }
        ++total;
      }
  EXPECT_GT(yes, 0);
  EXPECT_LT(yes, total);
}

TEST(HittingSetReduction, Counts) {
  HittingSetInstance h{2, {{0}}, 1};
  auto split = hitting_set_to_split(h);
  EXPECT_EQ(split.graph.order(), 9);
  EXPECT_TRUE(is_split(split.graph));
  EXPECT_EQ(diameter(split.graph), 3);
  auto chordal = hitting_set_to_chordal(h);
  EXPECT_EQ(chordal.graph.order(), 12);
  EXPECT_TRUE(is_chordal(chordal.graph));

  auto zero = hitting_set_to_split({3, {{0, 1}, {2}}, 0});
  EXPECT_EQ(zero.roles.at("set_copies").size(), 2u);
  EXPECT_EQ(zero.roles.at("y").size(), 1u);
  EXPECT_EQ(hitting_set_to_chordal({3, {{0, 1}, {2}}, 0}).roles.at("z").size(), 1u);

  auto empty = hitting_set_to_split({2, {}, 1});
  EXPECT_EQ(empty.graph.order(), 2 + 1 + 3);
  EXPECT_TRUE(hitting_set_solve({2, {}, 1}));
  EXPECT_LE(diameter(empty.graph), 2);
}

TEST(HittingSetReduction, Solver) {
  EXPECT_FALSE(hitting_set_solve({2, {{0}, {1}}, 1}));
  EXPECT_EQ(*hitting_set_solve({3, {{0, 2}, {1, 2}}, 2}), std::vector<int>{2});
  EXPECT_THROW(hitting_set_solve({2, {{}}, 1}), DomainError);
  EXPECT_THROW(hitting_set_solve({21, {}, 1}), CapacityError);
}

TEST(HittingSetReduction, RoundTripSmall) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 1; ++k)
        for (const auto& h : all_hitting_sets(n, m, k)) {
          auto sol = hitting_set_solve(h);
          for (const auto& r : {hitting_set_to_split(h), hitting_set_to_chordal(h)}) {
            ASSERT_TRUE(r.s == 2 ? is_split(r.graph) : is_chordal(r.graph));
            auto contracted = min_club_contraction_oracle(r.graph, r.s, r.k);
            EXPECT_EQ(sol.has_value(), contracted.has_value()) << "s=" << r.s << " n=" << n << " k=" << k;
            if (sol) {
              std::vector<Edge> s;
              for (int u : *sol) s.emplace_back(r.roles.at("universe")[u], r.roles.at("x")[0]);
              EXPECT_LE(diameter(contract_edges(r.graph, s)), r.s);
            }
          }
        }
}

TEST(Transforms, PendantLift) {
  EXPECT_EQ(pendant_lift(Graph(1), 1), complete_bipartite(1, 2));
  EXPECT_EQ(pendant_lift(path_graph(2), 0), Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  Rng rng(8);
  for (int round = 0; round < 40; ++round) {
    Graph g = gen::random_chordal(2 + round % 4, rng);
    if (!is_connected(g)) continue;
    Graph lifted = pendant_lift(g, 1);
    EXPECT_EQ(lifted.order(), g.order() * 3);
    EXPECT_EQ(diameter(lifted), diameter(g) + 2);
    EXPECT_TRUE(is_chordal(lifted));
  }
}

TEST(Transforms, PendantLiftEquivalence) {
  Rng rng(12);
  for (int round = 0; round < 60; ++round) {
    Graph g = gen::random_chordal(3 + round % 3, rng);
    if (!is_connected(g)) continue;
    for (int k = 0; k <= 2; ++k)
      for (int s : {3, 4}) {
        Graph lifted = pendant_lift(g, k);
        EXPECT_EQ(min_club_contraction_oracle(lifted, s, k).has_value(),
                  min_club_contraction_oracle(g, s - 2, k).has_value());
      }
  }
}

TEST(Transforms, Subdivide) {
  Graph c6 = subdivide_edges(complete_graph(3));
  EXPECT_EQ(c6.order(), 6);
  EXPECT_EQ(c6.size(), 6);
  EXPECT_TRUE(is_connected(c6));
  EXPECT_EQ(chordality(c6), 6);
  Graph k4 = subdivide_edges(complete_graph(4));
  EXPECT_TRUE(is_bipartite(k4));
  EXPECT_EQ(hadwiger_oracle(k4).value, 4);
  Rng rng(4);
  for (int round = 0; round < 30; ++round) EXPECT_TRUE(is_bipartite(subdivide_edges(gen::random_graph(6, 0.5, rng))));
}

TEST(Parsers, DimacsCnf) {
  auto f = parse_dimacs_cnf("c demo\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  EXPECT_EQ(f.n, 3);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[1], (std::array<int, 3>{-1, 2, -3}));
  auto wrapped = parse_dimacs_cnf("p cnf 2 1\n1\n-2 2 0\n");
  EXPECT_EQ(wrapped.clauses[0], (std::array<int, 3>{1, -2, 2}));
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 2 0\n"), FormatError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 3 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), FormatError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 x 3 0\n"), ParseError);
}

TEST(Parsers, SetSystem) {
  auto h = parse_set_system("# family\n3 2\n0 1\n2\n", 1);
  EXPECT_EQ(h.n, 3);
  EXPECT_EQ(h.k, 1);
  EXPECT_EQ(h.sets, (std::vector<std::vector<int>>{{0, 1}, {2}}));
  EXPECT_THROW(parse_set_system("3 1\n0 5\n", 1), ParseError);
  EXPECT_THROW(parse_set_system("3 2\n0\n", 1), FormatError);
  EXPECT_THROW(parse_set_system("3 1\n\n", 1), FormatError);
}
