#include "gminor/club.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gminor/errors.hpp"
#include "gminor/recognition.hpp"

namespace gminor {

DistanceProfile distance_profile(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw PreconditionError("vertex out of range");
  DistanceProfile p;
  p.u = u;
  p.v = v;
  p.d = diameter(g);
  if (p.d == kInfinity) throw PreconditionError("graph is disconnected");
  p.from_u = distances(g, u);
  p.from_v = distances(g, v);
  if (p.from_u[v] != p.d)
    throw PreconditionError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not a diameter pair");
  for (int w = 0; w < g.order(); ++w) {
    if (p.from_u[w] == p.d) p.x_u.push_back(w);
    if (p.from_u[w] == p.d - 1) p.y_u.push_back(w);
    if (p.from_v[w] == p.d) p.x_v.push_back(w);
    if (p.from_v[w] == p.d - 1) p.y_v.push_back(w);
  }
  return p;
}

namespace {

// Conditions ii) and iii) at the u-end (x0, x1) given distances from x0, x1.
bool left_end_ok(const DistanceProfile& p, int x0, const std::vector<int>& d0, const std::vector<int>& d1) {
  const int a = p.from_u[x0];
  for (int z : p.x_v)
    if (d0[z] != a) return false;
  for (int z : p.y_v)
    if (d0[z] > a && d1[z] > a) return false;
  return true;
}

// The mirror image at the v-end (x_k, x_{k-1}).
bool right_end_ok(const DistanceProfile& p, int xk, const std::vector<int>& dk, const std::vector<int>& dk1) {
  const int b = p.from_v[xk];
  for (int z : p.x_u)
    if (dk[z] != b) return false;
  for (int z : p.y_u)
    if (dk[z] > b && dk1[z] > b) return false;
  return true;
}

Edge normalized(Edge e) { return {std::min(e.first, e.second), std::max(e.first, e.second)}; }

std::vector<Edge> path_edges(const std::vector<int>& q) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < q.size(); ++i) out.push_back(normalized({q[i - 1], q[i]}));
  return out;
}

bool reaches(const Graph& g, const std::vector<Edge>& s, int target) {
  return diameter(contract_edges(g, s)) <= target;
}

// Maps edges of G/S (indexed by contraction block) back to edges of G.
std::vector<Edge> lift(const Graph& g, const std::vector<Edge>& s, const std::vector<Edge>& contracted) {
  auto blocks = contraction_blocks(g, s);
  std::vector<Edge> out = s;
  for (auto [a, b] : contracted) {
    bool done = false;
    for (int x : blocks[a]) {
      for (int y : blocks[b])
        if (g.adjacent(x, y)) {
          out.push_back(normalized({x, y}));
          done = true;
          break;
        }
      if (done) break;
    }
    if (!done) throw std::logic_error("contracted edge has no preimage");
  }
  return out;
}

// Every edge set of size at most `k` (k <= 2), smallest first.
std::optional<std::vector<Edge>> brute_force(const Graph& g, int k, int s) {
  if (diameter(g) <= s) return std::vector<Edge>{};
  auto edges = g.edges();
  if (k >= 1)
    for (auto e : edges)
      if (reaches(g, {e}, s)) return std::vector<Edge>{e};
  if (k >= 2)
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (reaches(g, {edges[i], edges[j]}, s)) return std::vector<Edge>{edges[i], edges[j]};
  return std::nullopt;
}

// A path pinned at u: x_0..x_{k-2} must be the only vertices at their
// distance from u; then S holds x_0x_1..x_{k-3}x_{k-2} and at most two more edges.
std::optional<std::vector<Edge>> pinned_completion(const Graph& g, const std::vector<int>& dist,
                                                   const std::vector<int>& prefix, int s) {
  const int k = static_cast<int>(prefix.size()) + 1;  // prefix = x_0..x_{k-2}
  for (int i = 0; i < k - 1; ++i)
    if (std::count(dist.begin(), dist.end(), i) != 1) return std::nullopt;
  auto forced = path_edges(prefix);
  Graph h = contract_edges(g, forced);
  auto rest = brute_force(h, 2, s);
  if (!rest) return std::nullopt;
  return lift(g, forced, *rest);
}

// The k = diam - s procedure.
std::optional<std::vector<Edge>> exact(const Graph& g, int k, int s, std::string& rule) {
  if (k <= 2) {
    rule = "brute-force";
    return brute_force(g, k, s);
  }
  auto [u, v] = diameter_dominating_pair(g);
  auto prof = distance_profile(g, u, v);
  auto found = find_satisfying_path(g, prof, k);
  if (found.unpinned) {
    rule = "satisfying-path";
    return path_edges(*found.unpinned);
  }
  rule = "pinned-path";
  if (found.from_u) {
    std::vector<int> prefix(found.from_u->begin(), found.from_u->begin() + (k - 1));
    if (auto r = pinned_completion(g, prof.from_u, prefix, s)) return r;
  }
  if (found.to_v) {
    std::vector<int> suffix(found.to_v->rbegin(), found.to_v->rbegin() + (k - 1));
    if (auto r = pinned_completion(g, prof.from_v, suffix, s)) return r;
  }
  if (!found.found()) rule = "no-satisfying-path";
  return std::nullopt;
}

}  // namespace

bool is_satisfying_path(const Graph& g, const DistanceProfile& prof, const std::vector<int>& q) {
  if (q.size() < 2) throw DomainError("a satisfying path needs at least one edge");
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0 || q[i] >= g.order() || seen.contains(q[i])) throw DomainError("sequence is not a path");
    seen.insert(q[i]);
    if (i > 0 && !g.adjacent(q[i - 1], q[i])) throw DomainError("sequence is not a path");
  }
  const int k = static_cast<int>(q.size()) - 1;
  const int x0 = q.front(), xk = q.back();
  if (prof.from_u[x0] + k + prof.from_v[xk] != prof.d) return false;
  return left_end_ok(prof, x0, distances(g, x0), distances(g, q[1])) &&
         right_end_ok(prof, xk, distances(g, xk), distances(g, q[k - 1]));
}

SatisfyingPathSearch find_satisfying_path(const Graph& g, const DistanceProfile& prof, int k) {
  SatisfyingPathSearch out;
  if (k < 1 || k > prof.d) return out;
  const auto dist = all_distances(g);
  const auto& du = prof.from_u;
  const auto& dv = prof.from_v;
  std::vector<Edge> left, right;
  for (int a = 0; a < g.order(); ++a)
    g.neighbors(a).for_each([&](int b) {
      if (du[b] == du[a] + 1 && left_end_ok(prof, a, dist[a], dist[b])) left.emplace_back(a, b);
      if (dv[a] == dv[b] + 1 && right_end_ok(prof, b, dist[b], dist[a])) right.emplace_back(a, b);
    });
  for (auto [x0, x1] : left)
    for (auto [y, xk] : right) {
      if (du[x0] + k + dv[xk] != prof.d) continue;
      if (k == 1 ? (y != x0 || xk != x1) : (du[y] != du[x0] + k - 1 || dist[x1][y] != k - 2)) continue;
      const bool at_u = x0 == prof.u, at_v = xk == prof.v;
      auto& slot = at_u ? out.from_u : at_v ? out.to_v : out.unpinned;
      if (slot) continue;
      std::vector<int> q{x0};
      if (k >= 2)
        for (int w : shortest_path(g, x1, y)) q.push_back(w);
      q.push_back(xk);
      slot = std::move(q);
      if (out.unpinned) return out;
    }
  return out;
}

ClubDecision s_club_contract_decide(const Graph& g, int k, int s) {
  if (s <= 1) throw UnsupportedError("s-club contraction needs s >= 2 here; use the oracle for s <= 1");
  if (k < 0) throw DomainError("k must be non-negative");
  if (auto at = find_asteroidal_triple(g))
    throw DomainError("graph is not AT-free: asteroidal triple (" + std::to_string((*at)[0]) + ", " +
                      std::to_string((*at)[1]) + ", " + std::to_string((*at)[2]) + ")");
  ClubDecision out;
  if (!is_connected(g)) {
    out.rule = "disconnected";
    return out;
  }
  const int d = diameter(g);
  std::optional<std::vector<Edge>> witness;
  if (d <= s) {
    out.rule = "diameter-at-most-s";
    witness = std::vector<Edge>{};
  } else if (k < d - s) {
    out.rule = "lower-bound";
  } else if (k >= d - s + 2) {
    out.rule = "upper-bound";
    auto [u, v] = diameter_dominating_pair(g);
    auto path = shortest_path(g, u, v);
    path.resize(d - s + 3);
    witness = path_edges(path);
  } else if (k == d - s) {
    witness = exact(g, k, s, out.rule);
  } else {
    witness = exact(g, k - 1, s, out.rule);
    if (!witness) {
      out.rule = "two-edge-reduction";
      auto edges = g.edges();
      auto attempt = [&](const std::vector<Edge>& first) {
        Graph h = contract_edges(g, first);
        const int sz = static_cast<int>(first.size());
        if (diameter(h) != d - sz + 1) return false;
        std::string inner;
        auto r = exact(h, k - sz, s, inner);
        if (r) witness = lift(g, first, *r);
        return r.has_value();
      };
      bool done = false;
      for (std::size_t i = 0; i < edges.size() && !done; ++i) done = attempt({edges[i]});
      for (std::size_t i = 0; i < edges.size() && !done; ++i)
        for (std::size_t j = i + 1; j < edges.size() && !done; ++j) done = attempt({edges[i], edges[j]});
    }
  }
  if (!witness) return out;
  std::sort(witness->begin(), witness->end());
  witness->erase(std::unique(witness->begin(), witness->end()), witness->end());
  if (static_cast<int>(witness->size()) > k || !reaches(g, *witness, s))
    throw std::logic_error("club contraction witness fails validation (" + out.rule + ")");
  out.yes = true;
  out.witness = std::move(*witness);
  return out;
}

ClubContraction min_club_contraction_atfree(const Graph& g, int s) {
  if (!is_connected(g)) throw DomainError("graph is disconnected; no contraction reaches finite diameter");
  const int d = diameter(g);
  ClubContraction out;
  for (int k = std::max(0, d - s);; ++k) {
    auto r = s_club_contract_decide(g, k, s);
    if (r.yes) {
      out.k_min = k;
      out.witness = std::move(r.witness);
      break;
    }
  }
  out.bags = contraction_blocks(g, out.witness);
  return out;
}

int max_s_club_minor_atfree(const Graph& g, int s) { return g.order() - min_club_contraction_atfree(g, s).k_min; }

}  // namespace gminor
