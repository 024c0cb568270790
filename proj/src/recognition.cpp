#include "gminor/recognition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "gminor/errors.hpp"

namespace gminor {

// --- cographs ---------------------------------------------------------------

int Cotree::leaf_count() const {
  int c = 0;
  for (const auto& nd : nodes) c += nd.kind == Kind::Leaf;
  return c;
}

std::optional<InducedP4> find_induced_p4(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    VertexSet na = g.closed_neighborhood(a);
    for (int b : g.neighbors(a).to_vector()) {
      VertexSet cs = g.neighbors(b);
      cs.subtract(na);
      for (int c : cs.to_vector()) {
        VertexSet ds = g.neighbors(c);
        ds.subtract(na);
        ds.subtract(g.closed_neighborhood(b));
        for (int d : ds.to_vector())
          if (d > a) return InducedP4{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<VertexSet> co_components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.order());
    std::vector<int> stack{left.first()};
    comp.insert(stack.back());
    left.erase(stack.back());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      VertexSet next = left;
      next.subtract(g.neighbors(x));
      next.for_each([&](int y) {
        comp.insert(y);
        left.erase(y);
        stack.push_back(y);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Returns the node index, or -1 when some subgraph is prime (contains a P4).
int build_cotree(const Graph& g, const VertexSet& w, Cotree& t) {
  if (w.count() == 1) {
    t.nodes.push_back({Cotree::Kind::Leaf, w.first(), {}});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  auto parts = components_within(g, w);
  auto kind = Cotree::Kind::Union;
  if (parts.size() == 1) {
    parts = co_components_within(g, w);
    kind = Cotree::Kind::Join;
    if (parts.size() == 1) return -1;
  }
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  std::vector<int> kids;
  for (const auto& p : parts) {
    int k = build_cotree(g, p, t);
    if (k < 0) return -1;
    kids.push_back(k);
  }
  t.nodes.push_back({kind, -1, std::move(kids)});
  return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace

std::variant<Cotree, InducedP4> recognize_cograph(const Graph& g) {
  Cotree t;
  if (g.order() == 0) return t;
  t.root = build_cotree(g, g.all_vertices(), t);
  if (t.root >= 0) return t;
  auto p4 = find_induced_p4(g);
  if (!p4) throw std::logic_error("prime subgraph without induced P4");
  return *p4;
}

Graph cotree_graph(const Cotree& t) {
  Graph g(t.leaf_count());
  if (t.root < 0) return g;
  std::function<std::vector<int>(int)> leaves = [&](int x) {
    const auto& nd = t.nodes[x];
    if (nd.kind == Cotree::Kind::Leaf) return std::vector<int>{nd.vertex};
    std::vector<std::vector<int>> parts;
    for (int c : nd.children) parts.push_back(leaves(c));
    if (nd.kind == Cotree::Kind::Join)
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          for (int u : parts[i])
            for (int v : parts[j]) g.add_edge(u, v);
    std::vector<int> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
  };
  leaves(t.root);
  return g;
}

std::string to_string(const Cotree& t) {
  if (t.root < 0) return "empty";
  std::function<std::string(int)> rec = [&](int x) {
    const auto& nd = t.nodes[x];
    if (nd.kind == Cotree::Kind::Leaf) return std::to_string(nd.vertex);
    std::string s = nd.kind == Cotree::Kind::Join ? "join(" : "union(";
    for (std::size_t i = 0; i < nd.children.size(); ++i) {
      if (i) s += ',';
      s += rec(nd.children[i]);
    }
    return s + ')';
  };
  return rec(t.root);
}

// --- bipartite permutation graphs -------------------------------------------

bool verify_ordering(const Graph& g, const StrongOrdering& ord) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  auto place = [&](const std::vector<int>& vs, int s) {
    for (int v : vs) {
      if (v < 0 || v >= n) throw DomainError("ordering names vertex " + std::to_string(v) + " outside the graph");
      if (side[v] != -1) throw DomainError("vertex " + std::to_string(v) + " listed twice in ordering");
      side[v] = s;
    }
  };
  place(ord.side1, 0);
  place(ord.side2, 1);
  for (int v = 0; v < n; ++v)
    if (side[v] == -1) throw DomainError("vertex " + std::to_string(v) + " missing from ordering");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) throw DomainError("edge inside one side of the bipartition");

  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < ord.side2.size(); ++i) pos[ord.side2[i]] = static_cast<int>(i);
  auto consecutive = [&](const VertexSet& s) {
    int lo = n, hi = -1, c = 0;
    s.for_each([&](int x) {
      lo = std::min(lo, pos[x]);
      hi = std::max(hi, pos[x]);
      ++c;
    });
    return c == 0 || hi - lo + 1 == c;
  };
  for (int u : ord.side1)
    if (!consecutive(g.neighbors(u))) return false;
  for (int u : ord.side1)
    for (int v : ord.side1) {
      if (u == v || !g.neighbors(u).is_subset_of(g.neighbors(v))) continue;
      VertexSet diff = g.neighbors(v);
      diff.subtract(g.neighbors(u));
      if (!consecutive(diff)) return false;
    }
  return true;
}

namespace {

// Layered order of one connected bipartite component started at z. Each layer
// is sorted by where its neighbours sit in the previous layer, then by degree.
std::vector<int> layered_order(const Graph& g, int z) {
  std::vector<int> pos(g.order(), -1);
  std::vector<int> order{z};
  std::vector<int> layer{z};
  pos[z] = 0;
  while (!layer.empty()) {
    VertexSet seen(g.order());
    std::vector<int> next;
    for (int x : layer)
      g.neighbors(x).for_each([&](int y) {
        if (pos[y] == -1 && !seen.contains(y)) {
          seen.insert(y);
          next.push_back(y);
        }
      });
    auto key = [&](int y) {
      int lo = g.order(), hi = -1;
      g.neighbors(y).for_each([&](int x) {
        if (pos[x] >= 0) {
          lo = std::min(lo, pos[x]);
          hi = std::max(hi, pos[x]);
        }
      });
      return std::tuple(lo, hi, g.degree(y), y);
    };
    std::sort(next.begin(), next.end(), [&](int a, int b) { return key(a) < key(b); });
    for (int y : next) {
      pos[y] = static_cast<int>(order.size());
      order.push_back(y);
    }
    layer = std::move(next);
  }
  return order;
}

struct Split {
  std::vector<std::vector<int>> comps;  // non-trivial components
  std::vector<int> isolated;
  std::vector<int> colour;
};

std::optional<Split> split_components(const Graph& g) {
  Split s;
  s.colour = bipartition(g);
  if (g.order() > 0 && s.colour.empty()) return std::nullopt;
  for (auto& c : components(g)) {
    if (c.size() == 1)
      s.isolated.push_back(c[0]);
    else
      s.comps.push_back(std::move(c));
  }
  return s;
}

StrongOrdering assemble(const Split& s, const std::vector<std::vector<int>>& comp_orders) {
  StrongOrdering ord;
  for (const auto& o : comp_orders)
    for (int v : o) (s.colour[v] == 0 ? ord.side1 : ord.side2).push_back(v);
  for (int v : s.isolated) ord.side1.push_back(v);
  return ord;
}

}  // namespace

std::optional<StrongOrdering> construct_strong_ordering(const Graph& g) {
  auto s = split_components(g);
  if (!s) return std::nullopt;
  std::vector<std::vector<int>> orders;
  for (const auto& comp : s->comps) {
    Graph h = induced_subgraph(g, comp);
    std::vector<int> hcolour(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) hcolour[i] = s->colour[comp[i]];
    std::optional<std::vector<int>> found;
    for (int z = 0; z < h.order() && !found; ++z) {
      auto o = layered_order(h, z);
      StrongOrdering local;
      for (int v : o) (hcolour[v] == 0 ? local.side1 : local.side2).push_back(v);
      if (verify_ordering(h, local)) {
        std::vector<int> mapped;
        for (int v : o) mapped.push_back(comp[v]);
        found = std::move(mapped);
      }
    }
    if (!found) return std::nullopt;
    orders.push_back(std::move(*found));
  }
  auto ord = assemble(*s, orders);
  if (!verify_ordering(g, ord)) throw std::logic_error("assembled ordering fails verification");
  return ord;
}

std::optional<StrongOrdering> exhaustive_strong_ordering(const Graph& g) {
  auto colour = bipartition(g);
  if (g.order() > 0 && colour.empty()) return std::nullopt;
  StrongOrdering ord;
  for (int v = 0; v < g.order(); ++v) (colour[v] == 0 ? ord.side1 : ord.side2).push_back(v);
  if (ord.side2.size() > 10)
    throw CapacityError("exhaustive ordering search limited to 10 vertices on the ordered side");
  do {
    if (verify_ordering(g, ord)) return ord;
  } while (std::next_permutation(ord.side2.begin(), ord.side2.end()));
  return std::nullopt;
}

std::optional<StrongOrdering> strong_ordering(const Graph& g) {
  if (auto o = construct_strong_ordering(g)) return o;
  if (g.order() <= 9) return exhaustive_strong_ordering(g);
  return std::nullopt;
}

StrongOrdering restrict_ordering(const StrongOrdering& ord, int n, std::span<const int> vertices) {
  std::vector<int> rank(n, -1);
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i);
  StrongOrdering out;
  for (int v : ord.side1)
    if (rank[v] >= 0) out.side1.push_back(rank[v]);
  for (int v : ord.side2)
    if (rank[v] >= 0) out.side2.push_back(rank[v]);
  return out;
}

bool is_bipartite_permutation(const Graph& g) { return strong_ordering(g).has_value(); }

std::string to_string(const StrongOrdering& ord) {
  auto seq = [](const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s;
  };
  return "V1=" + seq(ord.side1) + " V2=" + seq(ord.side2);
}

// --- AT-free graphs -----------------------------------------------------------

namespace {

// label[z][x]: component index of x in G - N[z], or -1 for x in N[z].
std::vector<std::vector<int>> avoid_components(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n, std::vector<int>(n, -1));
  for (int z = 0; z < n; ++z) {
    VertexSet rest = g.all_vertices();
    rest.subtract(g.closed_neighborhood(z));
    auto comps = components_within(g, rest);
    for (std::size_t i = 0; i < comps.size(); ++i)
      comps[i].for_each([&](int x) { label[z][x] = static_cast<int>(i); });
  }
  return label;
}

bool same_side(const std::vector<std::vector<int>>& label, int z, int a, int b) {
  return label[z][a] >= 0 && label[z][a] == label[z][b];
}

}  // namespace

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  auto label = avoid_components(g);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (same_side(label, c, a, b) && same_side(label, b, a, c) && same_side(label, a, b, c))
          return AsteroidalTriple{a, b, c};
      }
    }
  return std::nullopt;
}

bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

bool is_dominating_pair(const Graph& g, int u, int v) {
  for (int z = 0; z < g.order(); ++z) {
    if (z == u || z == v) continue;
    VertexSet rest = g.all_vertices();
    rest.subtract(g.closed_neighborhood(z));
    if (!rest.contains(u) || !rest.contains(v)) continue;
    for (const auto& c : components_within(g, rest))
      if (c.contains(u) && c.contains(v)) return false;
  }
  return true;
}

std::pair<int, int> diameter_dominating_pair(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("empty graph has no dominating pair");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  if (auto at = find_asteroidal_triple(g))
    throw PreconditionError("graph has asteroidal triple (" + std::to_string((*at)[0]) + "," +
                            std::to_string((*at)[1]) + "," + std::to_string((*at)[2]) + ")");
  const int n = g.order();
  if (n == 1) return {0, 0};
  auto dist = all_distances(g);
  int d = 0;
  for (const auto& row : dist) d = std::max(d, *std::max_element(row.begin(), row.end()));
  auto label = avoid_components(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (dist[u][v] != d) continue;
      bool ok = true;
      for (int z = 0; z < n && ok; ++z)
        if (z != u && z != v && same_side(label, z, u, v)) ok = false;
      if (ok) return {u, v};
    }
  throw PreconditionError("no diameter dominating pair found");
}

// --- other classes --------------------------------------------------------------

bool is_split(const Graph& g) {
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  std::sort(deg.rbegin(), deg.rend());
  int m = 0;
  for (int i = 0; i < static_cast<int>(deg.size()); ++i)
    if (deg[i] >= i) m = i + 1;
  long long head = std::accumulate(deg.begin(), deg.begin() + m, 0LL);
  long long tail = std::accumulate(deg.begin() + m, deg.end(), 0LL);
  return head == static_cast<long long>(m) * (m - 1) + tail;
}

bool is_cobipartite(const Graph& g) { return is_bipartite(complement(g)); }

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0), order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    done[best] = true;
    order.push_back(best);
    g.neighbors(best).for_each([&](int y) {
      if (!done[y]) ++weight[y];
    });
  }
  // Reverse of the search order is a perfect elimination ordering iff g is chordal.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    VertexSet earlier(n);
    g.neighbors(v).for_each([&](int y) {
      if (pos[y] < pos[v]) {
        earlier.insert(y);
        if (parent < 0 || pos[y] > pos[parent]) parent = y;
      }
    });
    if (parent < 0) continue;
    earlier.erase(parent);
    if (!earlier.is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

bool is_chordal_bipartite(const Graph& g, int cap) { return is_bipartite(g) && chordality(g, cap) <= 4; }

}  // namespace gminor
