#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gminor/graph.hpp"

namespace gminor {

inline constexpr int kSourceSolverCap = 20;

/// 3-CNF formula; literal +i / -i stands for x_i / not x_i, 1 <= i <= n.
struct NaeFormula {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Universe {0..n-1}, a family of nonempty subsets, budget k.
struct HittingSetInstance {
  int n = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;
};

struct ReductionInstance {
  Graph graph;
  int k = 0;
  int s = 0;           // diameter bound of the target; 1 for a complete graph
  std::string target;  // e.g. "contraction to K_12", "diameter <= 2"
  std::map<std::string, std::vector<int>> roles;
};

/// Throws DomainError on out-of-range literals or n < 1.
void validate(const NaeFormula& f);
/// Throws DomainError on empty sets, out-of-range members or k < 0.
void validate(const HittingSetInstance& h);

/// Literal vertices x_i, not x_i (an edge each), 4n-3 copies per clause
/// joined to its literals, 4n-3 dummies per variable joined to both of its
/// literals; literals and the rest are each completed to cliques. k = 2n-2,
/// target K_{N+2} with N = (4n-3)(n+m).
/// Roles: "positive", "negative" (index i-1 -> vertex), "clause_copies",
/// "dummies" (grouped consecutively, 4n-3 per group).
ReductionInstance nae3sat_to_cobipartite(const NaeFormula& f);

/// Universe clique, 2k+1 copies of each set joined to its members, x joined
/// to the universe and 2k+1 pendants y at x. Split; target diameter <= 2.
/// Roles: "universe", "set_copies", "x", "y".
ReductionInstance hitting_set_to_split(const HittingSetInstance& h);

/// As the split construction, but x lies in a clique with z_1..z_{2k+1} and
/// each y_i hangs from z_i. Chordal; target diameter <= 3. Adds role "z".
ReductionInstance hitting_set_to_chordal(const HittingSetInstance& h);

/// k+1 pendant vertices at every vertex; vertex v keeps its label and its
/// pendants follow the originals in vertex order.
Graph pendant_lift(const Graph& g, int k);

/// Every edge replaced by a path of length two; the middle vertex of the
/// i-th edge of g.edges() is n + i.
Graph subdivide_edges(const Graph& g);

/// NAE assignment (value[i] for x_{i+1}) by exhaustive search, or nullopt.
/// Every clause needs a true and a false literal. CapacityError for n > 20.
std::optional<std::vector<bool>> nae3sat_solve(const NaeFormula& f);

/// A smallest hitting set of size <= k (lexicographically first among the
/// smallest), or nullopt. CapacityError for n > 20.
std::optional<std::vector<int>> hitting_set_solve(const HittingSetInstance& h);

/// DIMACS CNF ("p cnf n m", clauses terminated by 0, "c" comments). Every
/// clause must have exactly three literals.
NaeFormula parse_dimacs_cnf(std::string_view text);

/// "n m" then m lines of 0-based members; blank and '#' lines ignored.
HittingSetInstance parse_set_system(std::string_view text, int k);

}  // namespace gminor
