#pragma once

#include <span>
#include <vector>

#include "gminor/graph.hpp"
#include "gminor/oracle.hpp"
#include "gminor/recognition.hpp"

namespace gminor {

/// A matching in which every two edges are joined by an edge of the graph.
struct CliqueMatching {
  int size = 0;
  std::vector<Edge> edges;  // (side1 vertex, side2 vertex)
};

bool is_clique_matching(const Graph& g, std::span<const Edge> m);

/// The instance left after guessing the anchor edge u-v: V2 positions before
/// v are dropped, v becomes position 1 and N(u) = [1, r]. Positions are
/// 1-based ranks in the remaining V2 order.
struct AnchoredInstance {
  int u = -1, v = -1;
  int r = 0;
  std::vector<Edge> forced;  // greedy pairs (v_i, j_i) with j_i > r, as graph vertices
  std::vector<int> x;        // N(x_i) = [1, x_right[i]] after trimming, x_right decreasing
  std::vector<int> x_right;
  std::vector<int> y;        // N(y_j) = [y_left[j], r] after trimming, y_left increasing
  std::vector<int> y_left;
  std::vector<int> position_to_vertex;  // index p (1-based) -> V2 vertex
};

AnchoredInstance anchor_instance(const Graph& g, const StrongOrdering& ord, int u, int v);

/// Size of a largest clique-matching containing the anchor edge, or -1 if
/// the anchored DP finds none (cannot happen for an edge u-v).
int anchored_clique_matching(const AnchoredInstance& inst);

/// Maximum clique-matching of a bipartite permutation graph. The first
/// overload builds the ordering and throws DomainError when none exists; the
/// second throws DomainError when `ord` fails verification.
CliqueMatching max_clique_matching(const Graph& g);
CliqueMatching max_clique_matching(const Graph& g, const StrongOrdering& ord);

struct BippermResult {
  int h = 0;
  int singletons = 0;  // 0, 1 or 2 singleton bags in the witness
  Blocks bags;
};

/// Hadwiger number of a bipartite permutation graph, as the best of: a
/// clique-matching; one singleton u plus a clique-matching of
/// G[(side(u) - u) + N(u)]; two adjacent singletons u, v plus a
/// clique-matching of G[(N(u) - v) + (N(v) - u)]. Per component.
BippermResult hadwiger_bipperm(const Graph& g);

}  // namespace gminor
