#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gminor/graph.hpp"

namespace gminor {

// --- cographs ---------------------------------------------------------------

/// Rooted cotree. Internal nodes are unions (0-nodes) or joins (1-nodes);
/// leaves carry the graph vertex they stand for.
struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    int vertex = -1;            // leaves only
    std::vector<int> children;  // indices into `nodes`
  };
  std::vector<Node> nodes;
  int root = -1;

  int leaf_count() const;
};

/// Four vertices a-b-c-d inducing a path in that order.
using InducedP4 = std::array<int, 4>;

/// Canonical cotree of a P4-free graph, or an induced P4.
///
/// Decomposition: a disconnected (sub)graph becomes a union over its
/// components, a graph with disconnected complement a join over its
/// co-components. When both are connected the graph contains an induced P4,
/// reported as the lexicographically first (a, b, c, d) with a < d.
std::variant<Cotree, InducedP4> recognize_cograph(const Graph& g);

/// Graph on the cotree's leaves: u ~ v iff their lowest common ancestor is a join.
Graph cotree_graph(const Cotree& t);

/// Exhaustive check (O(n^4)); used to cross-check recognition.
std::optional<InducedP4> find_induced_p4(const Graph& g);

/// e.g. "join(union(0,2),union(1,3))".
std::string to_string(const Cotree& t);

// --- bipartite permutation graphs -------------------------------------------

/// Bipartition (side1 = V1, side2 = V2) with V2 listed in an order having the
/// adjacency property (each N(u), u in V1, is consecutive) and the enclosure
/// property (N(v) \ N(u) is consecutive whenever N(u) is a subset of N(v)).
struct StrongOrdering {
  std::vector<int> side1;
  std::vector<int> side2;  // the ordered side
};

/// Direct check of both properties. Throws DomainError when (side1, side2)
/// is not a bipartition of V(g) with all edges crossing.
bool verify_ordering(const Graph& g, const StrongOrdering& ord);

/// Strong ordering of a bipartite permutation graph, or nullopt.
///
/// Components are handled separately and concatenated by smallest vertex,
/// isolated vertices last. Each component is ordered by layering from every
/// candidate end vertex; every candidate is verified, and for n <= 9 an
/// exhaustive search over orders of V2 backs up the construction.
std::optional<StrongOrdering> strong_ordering(const Graph& g);

/// The constructive part of `strong_ordering` without the exhaustive backup.
std::optional<StrongOrdering> construct_strong_ordering(const Graph& g);

/// Exhaustive search over all orders of V2 (bipartition from `bipartition`).
std::optional<StrongOrdering> exhaustive_strong_ordering(const Graph& g);

/// The ordering induced on G[vertices], relabelled like `induced_subgraph`.
StrongOrdering restrict_ordering(const StrongOrdering& ord, int n, std::span<const int> vertices);

bool is_bipartite_permutation(const Graph& g);

std::string to_string(const StrongOrdering& ord);

// --- AT-free graphs -----------------------------------------------------------

using AsteroidalTriple = std::array<int, 3>;

/// nullopt when AT-free; otherwise the lexicographically first asteroidal triple.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);
bool is_at_free(const Graph& g);

/// True iff every (u,v)-path dominates G, tested through the components of
/// G - N[z] for every z.
bool is_dominating_pair(const Graph& g, int u, int v);

/// Lexicographically smallest (u, v), u <= v, with dist(u, v) = diam(G) that
/// is a dominating pair. Throws PreconditionError for disconnected or
/// non-AT-free graphs.
std::pair<int, int> diameter_dominating_pair(const Graph& g);

// --- other classes --------------------------------------------------------------

bool is_split(const Graph& g);
bool is_cobipartite(const Graph& g);
bool is_chordal(const Graph& g);  // maximum cardinality search + elimination check
bool is_chordal_bipartite(const Graph& g, int cap = kDefaultChordalityCap);

}  // namespace gminor
