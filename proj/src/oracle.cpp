#include "gminor/oracle.hpp"

#include <algorithm>
#include <thread>

#include "gminor/errors.hpp"

namespace gminor {

namespace {

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  s.for_each([&](int v) { out |= g.neighbors(v); });
  out.subtract(s);
  return out;
}

void connected_sets_rec(const Graph& g, VertexSet& s, VertexSet& excluded,
                        const std::function<void(const VertexSet&)>& visit) {
  visit(s);
  VertexSet cand = open_neighborhood(g, s);
  cand.subtract(excluded);
  std::vector<int> order = cand.to_vector();
  std::vector<int> added;
  for (int c : order) {
    s.insert(c);
    connected_sets_rec(g, s, excluded, visit);
    s.erase(c);
    excluded.insert(c);
    added.push_back(c);
  }
  for (int c : added) excluded.erase(c);
}

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapacityError(std::string(what) + " limited to " + std::to_string(cap) + " vertices, got " +
                        std::to_string(n));
}

// Branch-and-bound over connected partitions maximising the block count.
// `block_ok` filters a new block against the ones already placed and
// `leaf_ok` judges a finished family.
struct PartitionSearch {
  using BlockFilter = std::function<bool(const std::vector<VertexSet>&, const VertexSet&)>;
  using LeafFilter = std::function<bool(const Blocks&)>;

  PartitionSearch(const Graph& graph, Coverage cov, BlockFilter bf, LeafFilter lf)
      : g(graph), coverage(cov), block_ok(std::move(bf)), leaf_ok(std::move(lf)) {}

  const Graph& g;
  Coverage coverage;
  BlockFilter block_ok;
  LeafFilter leaf_ok;

  int best = 0;
  bool found = false;
  Blocks best_blocks;
  std::vector<VertexSet> sets;

  void run(const VertexSet& undecided) {
    if (undecided.empty()) {
      if (found && static_cast<int>(sets.size()) <= best) return;
      Blocks blocks;
      for (const auto& s : sets) blocks.push_back(s.to_vector());
      if (!leaf_ok(blocks)) return;
      best = static_cast<int>(sets.size());
      best_blocks = std::move(blocks);
      found = true;
      return;
    }
    if (found && static_cast<int>(sets.size()) + undecided.count() <= best) return;
    for_each_first_block(undecided, [&](const VertexSet& b) { descend(undecided, b); });
    if (coverage == Coverage::Partial) {
      VertexSet rest = undecided;
      rest.erase(rest.first());
      run(rest);
    }
  }

  template <class F>
  void for_each_first_block(const VertexSet& undecided, F&& f) {
    VertexSet forbidden = g.all_vertices();
    forbidden.subtract(undecided);
    enumerate_connected_sets(g, undecided.first(), forbidden, f);
  }

  void descend(const VertexSet& undecided, const VertexSet& b) {
    if (!block_ok(sets, b)) return;
    VertexSet rest = undecided;
    rest.subtract(b);
    sets.push_back(b);
    run(rest);
    sets.pop_back();
  }
};

struct SearchOutcome {
  bool found = false;
  int best = 0;
  Blocks blocks;
};

// Splits the search on the block containing vertex 0 (and, for partial
// coverage, on deleting it). Each chunk keeps its own bound, and the merge
// takes the first chunk attaining the maximum, so the result does not depend
// on the thread count.
SearchOutcome run_search(const PartitionSearch& proto, int threads) {
  const Graph& g = proto.g;
  if (g.order() == 0) {
    PartitionSearch s = proto;
    s.run(VertexSet(0));
    return {s.found, s.best, s.best_blocks};
  }
  if (threads <= 1) {
    PartitionSearch s = proto;
    s.run(g.all_vertices());
    return {s.found, s.best, s.best_blocks};
  }
  std::vector<VertexSet> firsts;
  {
    PartitionSearch s = proto;
    s.for_each_first_block(g.all_vertices(), [&](const VertexSet& b) { firsts.push_back(b); });
  }
  const int chunks = static_cast<int>(firsts.size()) + (proto.coverage == Coverage::Partial ? 1 : 0);
  std::vector<SearchOutcome> out(chunks);
  auto work = [&](int t) {
    for (int c = t; c < chunks; c += threads) {
      PartitionSearch s = proto;
      if (c < static_cast<int>(firsts.size())) {
        s.descend(g.all_vertices(), firsts[c]);
      } else {
        VertexSet rest = g.all_vertices();
        rest.erase(0);
        s.run(rest);
      }
      out[c] = {s.found, s.best, s.best_blocks};
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();
  SearchOutcome merged;
  for (auto& o : out)
    if (o.found && (!merged.found || o.best > merged.best)) merged = std::move(o);
  return merged;
}

bool adjacent_to_all(const Graph& g, const std::vector<VertexSet>& sets, const VertexSet& b) {
  VertexSet nb = open_neighborhood(g, b);
  return std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return nb.intersects(s); });
}

MinorResult clique_search(const Graph& g, Coverage coverage, int threads) {
  PartitionSearch proto(g, coverage,
                        [&g](const std::vector<VertexSet>& sets, const VertexSet& b) {
                          return adjacent_to_all(g, sets, b);
                        },
                        [](const Blocks&) { return true; });
  auto o = run_search(proto, threads);
  return {o.best, o.blocks};
}

Blocks relabel(const Blocks& blocks, const std::vector<int>& original) {
  Blocks out;
  for (const auto& b : blocks) {
    std::vector<int> m;
    for (int v : b) m.push_back(original[v]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

void enumerate_connected_sets(const Graph& g, int root, const VertexSet& forbidden,
                              const std::function<void(const VertexSet&)>& visit) {
  VertexSet s(g.order());
  s.insert(root);
  VertexSet excluded = forbidden;
  connected_sets_rec(g, s, excluded, visit);
}

void enumerate_connected_partitions(const Graph& g, Coverage coverage,
                                    const std::function<bool(const Blocks&)>& visit) {
  bool stop = false;
  std::vector<VertexSet> sets;
  std::function<void(const VertexSet&)> rec = [&](const VertexSet& undecided) {
    if (stop) return;
    if (undecided.empty()) {
      Blocks blocks;
      for (const auto& s : sets) blocks.push_back(s.to_vector());
      if (!visit(blocks)) stop = true;
      return;
    }
    VertexSet forbidden = g.all_vertices();
    forbidden.subtract(undecided);
    enumerate_connected_sets(g, undecided.first(), forbidden, [&](const VertexSet& b) {
      if (stop) return;
      VertexSet rest = undecided;
      rest.subtract(b);
      sets.push_back(b);
      rec(rest);
      sets.pop_back();
    });
    if (coverage == Coverage::Partial && !stop) {
      VertexSet rest = undecided;
      rest.erase(rest.first());
      rec(rest);
    }
  };
  rec(g.all_vertices());
}

MinorResult hadwiger_oracle(const Graph& g, const OracleOptions& opt) {
  MinorResult best;
  for (const auto& comp : components(g)) {
    check_cap(static_cast<int>(comp.size()), opt.cap, "hadwiger oracle component");
    Graph h = induced_subgraph(g, comp);
    auto r = clique_search(h, Coverage::Full, opt.threads);
    if (r.value > best.value) best = {r.value, relabel(r.bags, comp)};
  }
  return best;
}

MinorResult hadwiger_partial_oracle(const Graph& g, const OracleOptions& opt) {
  check_cap(g.order(), opt.cap, "partial hadwiger oracle");
  return clique_search(g, Coverage::Partial, opt.threads);
}

MinorResult max_s_club_minor_oracle(const Graph& g, int s, const OracleOptions& opt) {
  if (!is_connected(g)) throw DomainError("graph cannot be contracted to a graph of finite diameter");
  if (diameter(g) <= s) {
    MinorResult r{g.order(), {}};
    for (int v = 0; v < g.order(); ++v) r.bags.push_back({v});
    return r;
  }
  check_cap(g.order(), opt.cap, "s-club minor oracle");
  PartitionSearch proto(g, Coverage::Full,
                        [](const std::vector<VertexSet>&, const VertexSet&) { return true; },
                        [&g, s](const Blocks& blocks) { return diameter(quotient(g, blocks)) <= s; });
  auto o = run_search(proto, opt.threads);
  return {o.best, o.blocks};
}

std::optional<ContractionResult> min_contraction_oracle(const Graph& g,
                                                        const std::function<bool(const Graph&)>& accept,
                                                        int k_max, long long budget) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  long long inspected = 0;
  for (int k = 0; k <= std::min(k_max, m); ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (++inspected > budget)
        throw CapacityError("contraction oracle exceeded its budget of " + std::to_string(budget) + " subsets");
      std::vector<Edge> s;
      for (int i : idx) s.push_back(edges[i]);
      if (accept(contract_edges(g, s))) return ContractionResult{k, s};
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<ContractionResult> min_club_contraction_oracle(const Graph& g, int s, int k_max, long long budget) {
  if (!is_connected(g)) return std::nullopt;
  return min_contraction_oracle(g, [s](const Graph& h) { return diameter(h) <= s; }, k_max, budget);
}

bool edges_compatible(const Graph& g, Edge e, Edge f) {
  return g.adjacent(e.first, f.first) || g.adjacent(e.first, f.second) || g.adjacent(e.second, f.first) ||
         g.adjacent(e.second, f.second);
}

MatchingResult clique_matching_oracle(const Graph& g, int cap) {
  check_cap(g.order(), cap, "clique matching oracle");
  const auto edges = g.edges();
  MatchingResult best;
  std::vector<Edge> chosen;
  VertexSet used(g.order());
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) > best.value) best = {static_cast<int>(chosen.size()), chosen};
    if (static_cast<int>(chosen.size()) + (g.order() - used.count()) / 2 <= best.value) return;
    for (std::size_t i = from; i < edges.size(); ++i) {
      auto e = edges[i];
      if (used.contains(e.first) || used.contains(e.second)) continue;
      if (!std::all_of(chosen.begin(), chosen.end(), [&](Edge f) { return edges_compatible(g, e, f); }))
        continue;
      chosen.push_back(e);
      used.insert(e.first);
      used.insert(e.second);
      rec(i + 1);
      used.erase(e.first);
      used.erase(e.second);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

void enumerate_nice_structures(const Graph& g, const std::function<bool(const Blocks&)>& visit) {
  const int n = g.order();
  Blocks bags;
  std::vector<VertexSet> sets;
  VertexSet used(n);
  bool stop = false;
  auto fits = [&](const VertexSet& b) { return adjacent_to_all(g, sets, b); };
  std::function<void(int)> rec = [&](int v) {
    if (stop) return;
    if (v == n) {
      if (!visit(bags)) stop = true;
      return;
    }
    if (used.contains(v)) return rec(v + 1);
    rec(v + 1);
    auto place = [&](std::vector<int> bag) {
      VertexSet b(n);
      for (int x : bag) b.insert(x);
      if (!fits(b)) return;
      for (int x : bag) used.insert(x);
      bags.push_back(std::move(bag));
      sets.push_back(b);
      rec(v + 1);
      sets.pop_back();
      for (int x : bags.back()) used.erase(x);
      bags.pop_back();
    };
    place({v});
    for (int w : g.neighbors(v).to_vector())
      if (w > v && !used.contains(w)) place({v, w});
  };
  rec(0);
}

NiceResult nice_structure_oracle(const Graph& g, int cap, int max_singletons) {
  check_cap(g.order(), cap, "nice structure oracle");
  NiceResult r;
  r.c.assign(g.order() + 1, 0);
  enumerate_nice_structures(g, [&](const Blocks& bags) {
    int edge_bags = 0;
    for (const auto& b : bags) edge_bags += b.size() == 2;
    const int p = static_cast<int>(bags.size());
    if (max_singletons >= 0 && p - edge_bags > max_singletons) return true;
    r.c[edge_bags] = std::max(r.c[edge_bags], p);
    if (p > r.max_p) {
      r.max_p = p;
      r.bags = bags;
    }
    return true;
  });
  return r;
}

}  // namespace gminor
