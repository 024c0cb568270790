#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gminor/graph.hpp"
#include "gminor/oracle.hpp"

namespace gminor {

/// Distance layers around a diameter pair (u, v) of a connected graph.
struct DistanceProfile {
  int u = -1, v = -1;
  int d = 0;
  std::vector<int> from_u, from_v;  // BFS distances
  std::vector<int> x_u, y_u;        // dist(u, .) = d and d - 1
  std::vector<int> x_v, y_v;        // dist(v, .) = d and d - 1
};

/// Throws PreconditionError when g is disconnected or dist(u, v) != diam(g).
DistanceProfile distance_profile(const Graph& g, int u, int v);

/// Q = x_0..x_k is (u,v)-satisfying when
///  i)   dist(u, x_0) + k + dist(x_k, v) = d, so Q lies on a (u,v)-geodesic
///       with x_0 nearer to u;
///  ii)  every z in X_v has dist(z, x_0) = dist(u, x_0), and every z in X_u
///       has dist(z, x_k) = dist(v, x_k);
///  iii) every z in Y_v has dist(z, x_0) <= dist(u, x_0) or
///       dist(z, x_1) <= dist(u, x_0); symmetrically for Y_u at x_k, x_{k-1}.
/// Throws DomainError unless Q is a path with at least one edge.
bool is_satisfying_path(const Graph& g, const DistanceProfile& prof, const std::vector<int>& q);

struct SatisfyingPathSearch {
  std::optional<std::vector<int>> unpinned;  // x_0 != u and x_k != v
  std::optional<std::vector<int>> from_u;    // x_0 = u
  std::optional<std::vector<int>> to_v;      // x_k = v
  bool found() const { return unpinned || from_u || to_v; }
  bool pinned_only() const { return !unpinned && (from_u || to_v); }
};

/// Satisfying paths of length k >= 1 found by trying every pair of end arcs
/// (x_0 x_1, x_{k-1} x_k) in lexicographic order; the interior is a shortest
/// x_1 - x_{k-1} path. Keeps the first path of each kind.
SatisfyingPathSearch find_satisfying_path(const Graph& g, const DistanceProfile& prof, int k);

struct ClubDecision {
  bool yes = false;
  std::vector<Edge> witness;  // |witness| <= k and diam(G / witness) <= s when yes
  std::string rule;           // which branch of the procedure decided
};

/// s-Club Contraction on AT-free graphs: can at most k contractions bring the
/// diameter down to s? Throws UnsupportedError for s <= 1 and DomainError
/// (naming an asteroidal triple) when g is not AT-free.
ClubDecision s_club_contract_decide(const Graph& g, int k, int s);

struct ClubContraction {
  int k_min = 0;
  std::vector<Edge> witness;
  Blocks bags;  // contraction blocks of the witness
};

/// Smallest k for which s_club_contract_decide says yes. DomainError for
/// disconnected input; n - k_min is the largest s-club minor.
ClubContraction min_club_contraction_atfree(const Graph& g, int s);
int max_s_club_minor_atfree(const Graph& g, int s);

}  // namespace gminor
