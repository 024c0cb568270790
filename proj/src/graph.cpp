#include "gminor/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "gminor/errors.hpp"

namespace gminor {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  rows_.assign(n, VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order())
    throw DomainError("vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(order()) + ")");
}

int Graph::size() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = rows_[v];
  s.insert(v);
  return s;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(order());
  for (int v = 0; v < order(); ++v) s.insert(v);
  return s;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph quotient(const Graph& g, std::span<const std::vector<int>> blocks) {
  const int n = g.order();
  std::vector<int> block_of(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int v : blocks[b]) {
      if (v < 0 || v >= n) throw DomainError("block member out of range");
      if (block_of[v] != -1) throw InvalidStructureError("blocks overlap at vertex " + std::to_string(v));
      block_of[v] = b;
    }
  Graph q(static_cast<int>(blocks.size()));
  for (auto [u, v] : g.edges()) {
    int bu = block_of[u], bv = block_of[v];
    if (bu >= 0 && bv >= 0 && bu != bv) q.add_edge(bu, bv);
  }
  return q;
}

std::vector<std::vector<int>> contraction_blocks(const Graph& g, std::span<const Edge> s) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : s) {
    if (u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v))
      throw DomainError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    int a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> index(n, -1);
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (index[r] == -1) {
      index[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[r]].push_back(v);
  }
  return blocks;
}

Graph contract_edge(const Graph& g, Edge e) {
  const Edge one[] = {e};
  return contract_edges(g, one);
}

Graph contract_edges(const Graph& g, std::span<const Edge> s) {
  auto blocks = contraction_blocks(g, s);
  return quotient(g, blocks);
}

std::vector<int> distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), kInfinity);
  if (source < 0 || source >= g.order()) throw DomainError("source vertex out of range");
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    g.neighbors(x).for_each([&](int y) {
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) d.push_back(distances(g, v));
  return d;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    for (int d : distances(g, v)) best = std::max(best, d);
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto d = distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kInfinity; });
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    int s = left.first();
    VertexSet comp(g.order());
    comp.insert(s);
    VertexSet frontier = comp;
    left.erase(s);
    while (!frontier.empty()) {
      VertexSet next(g.order());
      frontier.for_each([&](int x) { next |= g.neighbors(x); });
      next &= left;
      left.subtract(next);
      comp |= next;
      frontier = next;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& c : components_within(g, g.all_vertices())) out.push_back(c.to_vector());
  return out;
}

std::vector<int> shortest_path(const Graph& g, int from, int to) {
  std::vector<int> parent(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::deque<int> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    int x = queue.front();
    queue.pop_front();
    g.neighbors(x).for_each([&](int y) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  if (!seen[to]) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  auto list = vertices.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(list.size()); ++i) index[list[i]] = i;
  Graph h(static_cast<int>(list.size()));
  for (int i = 0; i < static_cast<int>(list.size()); ++i)
    (g.neighbors(list[i]) & vertices).for_each([&](int w) {
      if (index[w] > i) h.add_edge(i, index[w]);
    });
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexSet s(g.order());
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    s.insert(v);
  }
  return induced_subgraph(g, s);
}

namespace {

// Grows induced paths start = p0, p1, ..., pk using only vertices larger than
// `start`; every induced cycle is found from its smallest vertex.
void extend_induced_path(const Graph& g, int start, std::vector<int>& path, VertexSet& blocked,
                         int& best) {
  const int tip = path.back();
  const int len = static_cast<int>(path.size());
  g.neighbors(tip).for_each([&](int w) {
    if (w <= start || blocked.contains(w)) return;
    if (g.adjacent(w, start)) {
      // w closes a cycle when it sees no inner path vertex besides the tip.
      if (len >= 2) best = std::max(best, len + 1);
      return;
    }
    // Vertices adjacent to an inner path vertex are already blocked.
    VertexSet saved = blocked;
    blocked |= g.neighbors(tip);
    blocked.insert(w);
    path.push_back(w);
    extend_induced_path(g, start, path, blocked, best);
    path.pop_back();
    blocked = saved;
  });
}

}  // namespace

int chordality(const Graph& g, int cap) {
  if (g.order() > cap)
    throw CapacityError("chordality limited to " + std::to_string(cap) + " vertices, got " +
                        std::to_string(g.order()));
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    g.neighbors(s).for_each([&](int p1) {
      if (p1 <= s) return;
      std::vector<int> path{s, p1};
      VertexSet blocked(g.order());
      blocked.insert(s);
      blocked.insert(p1);
      // Vertices adjacent to s may only appear as the closing vertex, which
      // extend_induced_path handles before consulting `blocked`.
      extend_induced_path(g, s, path, blocked, best);
    });
  }
  return best;
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(x).for_each([&](int y) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          ok = false;
        }
      });
      if (!ok) return {};
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return g.order() == 0 || !bipartition(g).empty(); }

namespace {

void grow_clique(const Graph& g, VertexSet& candidates, int size, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  if (size + candidates.count() <= best) return;
  while (!candidates.empty()) {
    if (size + candidates.count() <= best) return;
    int v = candidates.first();
    candidates.erase(v);
    VertexSet next = candidates & g.neighbors(v);
    grow_clique(g, next, size + 1, best);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 0;
  VertexSet all = g.all_vertices();
  grow_clique(g, all, 0, best);
  return best;
}

bool verify_witness(const Graph& g, int target_order, std::span<const Edge> target_edges,
                    const WitnessStructure& w) {
  if (static_cast<int>(w.bags.size()) != target_order)
    throw InvalidStructureError("bag count " + std::to_string(w.bags.size()) +
                                " differs from target order " + std::to_string(target_order));
  std::vector<int> bag_of(g.order(), -1);
  std::vector<VertexSet> sets;
  for (int b = 0; b < target_order; ++b) {
    if (w.bags[b].empty()) throw InvalidStructureError("bag " + std::to_string(b) + " is empty");
    VertexSet s(g.order());
    for (int v : w.bags[b]) {
      if (v < 0 || v >= g.order()) throw InvalidStructureError("bag member out of range");
      if (bag_of[v] != -1) throw InvalidStructureError("bags overlap at vertex " + std::to_string(v));
      bag_of[v] = b;
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  if (w.mode == WitnessMode::Contraction &&
      std::any_of(bag_of.begin(), bag_of.end(), [](int b) { return b == -1; }))
    throw InvalidStructureError("contraction structure leaves a vertex uncovered");

  for (const auto& s : sets)
    if (components_within(g, s).size() != 1) return false;  // (i)

  auto bags_adjacent = [&](int a, int b) {
    bool hit = false;
    sets[a].for_each([&](int v) { hit = hit || g.neighbors(v).intersects(sets[b]); });
    return hit;
  };
  Graph target(target_order, target_edges);
  for (int a = 0; a < target_order; ++a)
    for (int b = a + 1; b < target_order; ++b) {
      bool need = target.adjacent(a, b);
      bool have = bags_adjacent(a, b);
      if (need && !have) return false;                                 // (ii)
      if (!need && have && w.mode != WitnessMode::Minor) return false;  // (iii)
    }
  return true;
}

}  // namespace gminor
