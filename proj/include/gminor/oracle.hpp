#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gminor/graph.hpp"

namespace gminor {

inline constexpr int kPartitionOracleCap = 12;
inline constexpr int kMatchingOracleCap = 14;
inline constexpr long long kDefaultSubsetBudget = 20'000'000;

using Blocks = std::vector<std::vector<int>>;

enum class Coverage {
  Full,     // blocks partition V(G)
  Partial,  // blocks partition a subset of V(G); the rest is deleted
};

/// Calls `visit` on every family of disjoint blocks, each inducing a connected
/// subgraph, in a fixed order: the smallest undecided vertex either heads the
/// next block (a connected set of undecided vertices, enumerated in
/// canonical order) or, under Partial coverage, is deleted. Blocks are listed
/// in increasing order of their smallest member. `visit` returns false to stop.
void enumerate_connected_partitions(const Graph& g, Coverage coverage,
                                    const std::function<bool(const Blocks&)>& visit);

/// Connected vertex sets containing `root` that avoid `forbidden`, each once.
void enumerate_connected_sets(const Graph& g, int root, const VertexSet& forbidden,
                              const std::function<void(const VertexSet&)>& visit);

struct OracleOptions {
  int cap = kPartitionOracleCap;
  int threads = 1;
};

struct MinorResult {
  int value = 0;
  Blocks bags;  // one witness; bags[i] realises target vertex i
};

/// Largest p with K_p as a minor. Each component is solved as a contraction
/// problem over full connected partitions. Throws CapacityError when a
/// component exceeds `opt.cap` vertices.
MinorResult hadwiger_oracle(const Graph& g, const OracleOptions& opt = {});

/// Same value through partial partitions (minor semantics). Slower; kept as
/// an independent cross-check.
MinorResult hadwiger_partial_oracle(const Graph& g, const OracleOptions& opt = {});

/// Largest number of blocks of a full connected partition whose quotient has
/// diameter at most s. DomainError when g is disconnected.
MinorResult max_s_club_minor_oracle(const Graph& g, int s, const OracleOptions& opt = {});

struct ContractionResult {
  int k = 0;
  std::vector<Edge> edges;  // lexicographically first set of minimum size
};

/// Smallest S, |S| <= k_max, with `accept(G/S)`, by increasing-size
/// enumeration of edge subsets. Throws CapacityError when the number of
/// subsets to inspect exceeds `budget`.
std::optional<ContractionResult> min_contraction_oracle(
    const Graph& g, const std::function<bool(const Graph&)>& accept, int k_max,
    long long budget = kDefaultSubsetBudget);

/// min_contraction_oracle with accept = diam(G/S) <= s.
std::optional<ContractionResult> min_club_contraction_oracle(const Graph& g, int s, int k_max,
                                                             long long budget = kDefaultSubsetBudget);

struct MatchingResult {
  int value = 0;
  std::vector<Edge> matching;
};

/// Maximum matching whose edges are pairwise joined by an edge of G.
MatchingResult clique_matching_oracle(const Graph& g, int cap = kMatchingOracleCap);

/// True when some edge of g joins an endpoint of e to an endpoint of f.
bool edges_compatible(const Graph& g, Edge e, Edge f);

struct NiceResult {
  int max_p = 0;
  std::vector<int> c;  // c[r]: largest p using exactly r edge-bags, 0 if none; size n+1
  Blocks bags;         // a structure attaining max_p
};

/// Every family of disjoint, pairwise adjacent bags of size 1 (singleton)
/// or 2 (an edge). `visit` returns false to stop.
void enumerate_nice_structures(const Graph& g, const std::function<bool(const Blocks&)>& visit);

/// Maxima over nice structures; `max_singletons` >= 0 discards structures
/// with more singleton bags.
NiceResult nice_structure_oracle(const Graph& g, int cap = kPartitionOracleCap, int max_singletons = -1);

}  // namespace gminor
