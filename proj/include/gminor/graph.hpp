#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "gminor/vertex_set.hpp"

namespace gminor {

using Edge = std::pair<int, int>;

/// Hop count used for unreachable vertices and diameters of disconnected graphs.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Simple undirected graph on vertices 0..n-1, stored as one bit row per vertex.
///
/// Loops and parallel edges cannot be represented: `add_edge(v, v)` throws and
/// adding an existing edge is a no-op.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;  // edge count

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const { return rows_[v].count(); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  std::vector<VertexSet> rows_;
};

// --- constructors of common graphs ---------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);

// --- contraction ----------------------------------------------------------

/// Quotient of `g` by the given disjoint blocks, block i becoming vertex i.
/// Vertices outside every block are dropped. Blocks are not checked for
/// connectivity; callers that need condition (i) verify it separately.
Graph quotient(const Graph& g, std::span<const std::vector<int>> blocks);

/// Partition of V(g) into the components of the spanning subgraph (V, S),
/// ordered by smallest member. Throws DomainError when S is not a subset of E(g).
std::vector<std::vector<int>> contraction_blocks(const Graph& g, std::span<const Edge> s);

/// g / e. The merged vertex keeps the smaller endpoint's label and labels above
/// the larger endpoint shift down by one.
Graph contract_edge(const Graph& g, Edge e);

/// g / S, the quotient by the components of (V, S); block labels follow
/// the smallest member of each block, so the result agrees with contracting
/// the edges of S one at a time with `contract_edge`.
Graph contract_edges(const Graph& g, std::span<const Edge> s);

// --- distances ------------------------------------------------------------

std::vector<int> distances(const Graph& g, int source);
std::vector<std::vector<int>> all_distances(const Graph& g);
int diameter(const Graph& g);
bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

/// A shortest path from `from` to `to` (inclusive) or empty when unreachable.
std::vector<int> shortest_path(const Graph& g, int from, int to);

// --- set-theoretic operations ---------------------------------------------

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// G[U]; vertex i of the result is the i-th smallest member of U.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

// --- structure ------------------------------------------------------------

inline constexpr int kDefaultChordalityCap = 16;

/// Length of a longest induced cycle, 0 for forests. Exponential; throws
/// CapacityError above `cap` vertices.
int chordality(const Graph& g, int cap = kDefaultChordalityCap);

/// Two-colouring (0/1) per vertex if bipartite; each component's smallest
/// vertex gets colour 0. Empty when g has an odd cycle.
std::vector<int> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
int clique_number(const Graph& g);

// --- witness structures ---------------------------------------------------

enum class WitnessMode { Minor, InducedMinor, Contraction };

struct WitnessStructure {
  std::vector<std::vector<int>> bags;  // bag i realises target vertex i
  WitnessMode mode = WitnessMode::Minor;
};

/// Checks conditions (i)-(ii), plus (iii) for induced minors and (iii)-(iv)
/// for contractions. Overlapping or empty bags, a bag count different from
/// `target_order`, and uncovered vertices in contraction mode raise
/// InvalidStructureError.
bool verify_witness(const Graph& g, int target_order, std::span<const Edge> target_edges,
                    const WitnessStructure& w);

}  // namespace gminor
