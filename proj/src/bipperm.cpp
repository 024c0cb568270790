#include "gminor/bipperm.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "gminor/errors.hpp"

namespace gminor {

bool is_clique_matching(const Graph& g, std::span<const Edge> m) {
  VertexSet used(g.order());
  for (auto [a, b] : m) {
    if (!g.adjacent(a, b) || used.contains(a) || used.contains(b)) return false;
    used.insert(a);
    used.insert(b);
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!edges_compatible(g, m[i], m[j])) return false;
  return true;
}

namespace {

constexpr int kNone = INT_MIN / 4;

struct Interval {
  int lo = 0, hi = -1;  // positions in the V2 order, empty when lo > hi
};

std::vector<Interval> side2_intervals(const Graph& g, const StrongOrdering& ord) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < ord.side2.size(); ++i) pos[ord.side2[i]] = static_cast<int>(i);
  std::vector<Interval> iv(g.order());
  for (int w : ord.side1) {
    Interval x{INT_MAX, -1};
    g.neighbors(w).for_each([&](int y) {
      x.lo = std::min(x.lo, pos[y]);
      x.hi = std::max(x.hi, pos[y]);
    });
    if (x.hi < 0) x = {0, -1};
    iv[w] = x;
  }
  return iv;
}

AnchoredInstance build_instance(const StrongOrdering& ord, const std::vector<Interval>& iv, int u, int v) {
  AnchoredInstance inst;
  inst.u = u;
  inst.v = v;
  const int pv = static_cast<int>(std::find(ord.side2.begin(), ord.side2.end(), v) - ord.side2.begin());
  inst.position_to_vertex.push_back(-1);
  for (std::size_t p = pv; p < ord.side2.size(); ++p) inst.position_to_vertex.push_back(ord.side2[p]);
  // Interval of w after dropping positions before v, 1-based.
  auto local = [&](int w) -> Interval {
    const auto& x = iv[w];
    if (x.lo > x.hi || x.hi < pv) return {1, 0};
    return {std::max(x.lo, pv) - pv + 1, x.hi - pv + 1};
  };
  const Interval nu = local(u);
  inst.r = nu.hi;

  std::vector<std::pair<int, int>> cover;  // (right end, vertex) with [1, r] inside
  for (int w : ord.side1) {
    if (w == u) continue;
    auto x = local(w);
    if (x.lo == 1 && x.hi >= inst.r) cover.emplace_back(x.hi, w);
  }
  std::sort(cover.begin(), cover.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  VertexSet taken(static_cast<int>(iv.size()));
  int last = INT_MAX;
  for (auto [right, w] : cover) {
    int j = std::min(right, last - 1);
    if (j <= inst.r) break;
    inst.forced.emplace_back(w, inst.position_to_vertex[j]);
    taken.insert(w);
    last = j;
  }

  std::vector<std::pair<int, int>> xs, ys;
  for (int w : ord.side1) {
    if (w == u || taken.contains(w)) continue;
    auto x = local(w);
    if (x.lo > x.hi) continue;
    if (x.lo == 1 && x.hi >= 2)
      xs.emplace_back(std::min(x.hi, inst.r), w);
    else if (x.lo >= 2 && x.lo <= inst.r && x.hi >= inst.r)
      ys.emplace_back(x.lo, w);
  }
  std::sort(xs.begin(), xs.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  std::sort(ys.begin(), ys.end());
  for (auto [right, w] : xs) {
    inst.x.push_back(w);
    inst.x_right.push_back(right);
  }
  for (auto [left, w] : ys) {
    inst.y.push_back(w);
    inst.y_left.push_back(left);
  }
  return inst;
}

// Dynamic program over (i, j, l): best clique-matching containing u-1 whose
// other edges use x_1..x_i and y_1..y_j, with at most l saturated vertices
// in I(i, j), the common neighbourhood of u, x_1..x_i, y_1..y_j (position 1
// counts as saturated whenever it lies in I).
class AnchorDp {
 public:
  explicit AnchorDp(const AnchoredInstance& inst) : in_(inst), s_(static_cast<int>(inst.x.size())), t_(static_cast<int>(inst.y.size())) {
    table_.assign(s_ + 1, std::vector<std::vector<int>>(t_ + 1));
    for (int i = 0; i <= s_; ++i)
      for (int j = 0; j <= t_; ++j) {
        auto& cell = table_[i][j];
        cell.resize(size(i, j) + 1);
        for (int l = 0; l <= size(i, j); ++l) cell[l] = evaluate(i, j, l, nullptr);
        for (int l = 1; l <= size(i, j); ++l)
          if (cell[l] < cell[l - 1]) throw std::logic_error("anchored table not monotone in l");
      }
  }

  int value() const { return table_[s_][t_][size(s_, t_)]; }

  // Matching edges other than u-1, as (side1 vertex, position).
  std::vector<std::pair<int, int>> reconstruct() const {
    std::vector<std::pair<int, int>> out;
    std::vector<bool> occupied(in_.r + 1, false);
    rebuild(s_, t_, size(s_, t_), occupied, out);
    return out;
  }

 private:
  struct Choice {
    int kind = 0;  // 1: x_i unmatched, 2: x_i inside I, 3: x_i before I
    int p = 0, jp = 0;
    std::vector<int> g;  // greedy positions for y_{jp+1}.. (case 3)
  };

  int right(int i) const { return i == 0 ? in_.r : in_.x_right[i - 1]; }
  int left(int j) const { return j == 0 ? 1 : in_.y_left[j - 1]; }
  int size(int i, int j) const { return std::max(0, right(i) - left(j) + 1); }

  int lookup(int i, int j, int l) const {
    if (l < 0) return kNone;
    return table_[i][j][std::min(l, size(i, j))];
  }

  // Greedy picks of a base row, already truncated to the budget l.
  std::vector<int> row_picks(int i, int j, int l) const {
    std::vector<int> picks;
    int inside = 0;
    if (j == 0) {
      int last = INT_MAX;
      for (int f = 1; f <= i; ++f) {
        int p = std::min(in_.x_right[f - 1], last - 1);
        if (p < 2) break;
        if (p <= right(i) && ++inside > l - 1) break;
        picks.push_back(p);
        last = p;
      }
    } else {
      int last = 1;
      for (int f = 1; f <= j; ++f) {
        int p = std::max(in_.y_left[f - 1], last + 1);
        if (p > in_.r) break;
        if (p >= left(j) && ++inside > l) break;
        picks.push_back(p);
        last = p;
      }
    }
    return picks;
  }

  std::vector<int> case3_picks(int i, int j, int l, int p, int jp) const {
    std::vector<int> g;
    int last = p, inside = 0;
    for (int f = jp + 1; f <= j; ++f) {
      int q = std::max(in_.y_left[f - 1], last + 1);
      if (q > right(i)) break;
      if (q >= left(j) && ++inside > l) break;
      g.push_back(q);
      last = q;
    }
    return g;
  }

  int evaluate(int i, int j, int l, Choice* choice) const {
    if (i == 0 && j == 0) return l >= 1 ? 1 : kNone;
    if (j == 0 && l == 0) return kNone;  // position 1 lies in I(i, 0)
    if (i == 0 || j == 0) return 1 + static_cast<int>(row_picks(i, j, l).size());
    const int d = size(i - 1, j) - size(i, j);
    int best = lookup(i - 1, j, l + d);
    if (choice) *choice = {1, 0, 0, {}};
    if (l >= 1 && size(i, j) >= 1) {
      int v = lookup(i - 1, j, l - 1 + d);
      if (v != kNone && 1 + v > best) {
        best = 1 + v;
        if (choice) *choice = {2, 0, 0, {}};
      }
    }
    for (int p = 2; p <= std::min(right(i), left(j) - 1); ++p) {
      int jp = 0;
      while (jp < j && in_.y_left[jp] <= p) ++jp;
      auto g = case3_picks(i, j, l, p, jp);
      const int q = static_cast<int>(g.size());
      int v = lookup(i - 1, jp, size(i - 1, jp) - size(i, j) + l - (q + 1));
      if (v == kNone) continue;
      if (1 + q + v > best) {
        best = 1 + q + v;
        if (choice) *choice = {3, p, jp, std::move(g)};
      }
    }
    return best;
  }

  // Moves the picks lying inside I(i, j) onto unoccupied positions of I(i, j)
  // (any choice is equivalent there) and marks everything used.
  void place(int i, int j, std::vector<int>& picks, std::vector<bool>& occupied) const {
    const int lo = std::max(left(j), 2), hi = right(i);
    int next = lo;
    for (int& p : picks) {
      if (p >= left(j) && p <= hi) {
        while (next <= hi && occupied[next]) ++next;
        if (next > hi) throw std::logic_error("no free position while rebuilding clique-matching");
        p = next++;
      }
      occupied[p] = true;
    }
  }

  void rebuild(int i, int j, int l, std::vector<bool>& occupied, std::vector<std::pair<int, int>>& out) const {
    if (i == 0 && j == 0) return;
    if (i == 0 || j == 0) {
      auto picks = row_picks(i, j, l);
      place(i, j, picks, occupied);
      for (std::size_t f = 0; f < picks.size(); ++f)
        out.emplace_back(j == 0 ? in_.x[f] : in_.y[f], picks[f]);
      return;
    }
    Choice c;
    evaluate(i, j, l, &c);
    const int d = size(i - 1, j) - size(i, j);
    switch (c.kind) {
      case 1:
        rebuild(i - 1, j, std::min(l + d, size(i - 1, j)), occupied, out);
        return;
      case 2: {
        std::vector<int> p{left(j)};
        place(i, j, p, occupied);
        out.emplace_back(in_.x[i - 1], p[0]);
        rebuild(i - 1, j, std::min(l - 1 + d, size(i - 1, j)), occupied, out);
        return;
      }
      default: {
        occupied[c.p] = true;
        out.emplace_back(in_.x[i - 1], c.p);
        place(i, j, c.g, occupied);
        for (std::size_t f = 0; f < c.g.size(); ++f) out.emplace_back(in_.y[c.jp + f], c.g[f]);
        const int q = static_cast<int>(c.g.size());
        const int lp = size(i - 1, c.jp) - size(i, j) + l - (q + 1);
        rebuild(i - 1, c.jp, std::min(lp, size(i - 1, c.jp)), occupied, out);
        return;
      }
    }
  }

  const AnchoredInstance& in_;
  int s_, t_;
  std::vector<std::vector<std::vector<int>>> table_;
};

CliqueMatching solve_with_ordering(const Graph& g, const StrongOrdering& ord) {
  auto iv = side2_intervals(g, ord);
  std::vector<bool> in_side1(g.order(), false);
  for (int w : ord.side1) in_side1[w] = true;
  int best = 0;
  Edge best_anchor{-1, -1};
  for (auto [a, b] : g.edges()) {
    int u = in_side1[a] ? a : b, v = in_side1[a] ? b : a;
    auto inst = build_instance(ord, iv, u, v);
    int value = AnchorDp(inst).value() + static_cast<int>(inst.forced.size());
    if (value > best) {
      best = value;
      best_anchor = {u, v};
    }
  }
  CliqueMatching m;
  if (best == 0) return m;
  auto inst = build_instance(ord, iv, best_anchor.first, best_anchor.second);
  AnchorDp dp(inst);
  m.edges.push_back(best_anchor);
  for (auto e : inst.forced) m.edges.push_back(e);
  for (auto [w, p] : dp.reconstruct()) m.edges.emplace_back(w, inst.position_to_vertex[p]);
  m.size = static_cast<int>(m.edges.size());
  if (m.size != best || !is_clique_matching(g, m.edges))
    throw std::logic_error("rebuilt clique-matching does not match the table value");
  return m;
}

}  // namespace

AnchoredInstance anchor_instance(const Graph& g, const StrongOrdering& ord, int u, int v) {
  if (!g.adjacent(u, v)) throw DomainError("anchor is not an edge");
  if (std::find(ord.side1.begin(), ord.side1.end(), u) == ord.side1.end())
    throw DomainError("anchor must start in the first side");
  return build_instance(ord, side2_intervals(g, ord), u, v);
}

int anchored_clique_matching(const AnchoredInstance& inst) {
  int v = AnchorDp(inst).value();
  return v == kNone ? -1 : v + static_cast<int>(inst.forced.size());
}

CliqueMatching max_clique_matching(const Graph& g, const StrongOrdering& ord) {
  if (!verify_ordering(g, ord)) throw DomainError("ordering lacks the adjacency or enclosure property");
  return solve_with_ordering(g, ord);
}

CliqueMatching max_clique_matching(const Graph& g) {
  auto ord = strong_ordering(g);
  if (!ord) throw DomainError("not a bipartite permutation graph");
  return solve_with_ordering(g, *ord);
}

BippermResult hadwiger_bipperm(const Graph& g) {
  auto ord = strong_ordering(g);
  if (!ord) {
    if (auto colour = bipartition(g); colour.empty() && g.order() > 0)
      throw DomainError("not a bipartite permutation graph: odd cycle");
    throw DomainError("not a bipartite permutation graph: no ordering with adjacency and enclosure");
  }
  BippermResult best;
  auto consider = [&](int h, int singletons, Blocks bags) {
    if (h > best.h) best = {h, singletons, std::move(bags)};
  };
  auto sub_matching = [&](const std::vector<int>& vertices) {
    Graph h = induced_subgraph(g, vertices);
    auto sub = restrict_ordering(*ord, g.order(), vertices);
    if (!verify_ordering(h, sub)) throw std::logic_error("inherited ordering fails on an induced subgraph");
    auto m = solve_with_ordering(h, sub);
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    Blocks bags;
    for (auto [a, b] : m.edges) bags.push_back({std::min(sorted[a], sorted[b]), std::max(sorted[a], sorted[b])});
    return bags;
  };
  std::vector<int> colour = bipartition(g);
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) {
      consider(1, 1, {{comp[0]}});
      continue;
    }
    auto base = sub_matching(comp);
    consider(static_cast<int>(base.size()), 0, base);
    for (int u : comp) {
      std::vector<int> vs;
      for (int w : comp)
        if ((w != u && colour[w] == colour[u]) || g.adjacent(u, w)) vs.push_back(w);
      auto bags = sub_matching(vs);
      bags.insert(bags.begin(), {u});
      consider(static_cast<int>(bags.size()), 1, bags);
    }
  }
  for (auto [a, b] : g.edges()) {
    VertexSet s = g.neighbors(a) | g.neighbors(b);
    s.erase(a);
    s.erase(b);
    auto bags = sub_matching(s.to_vector());
    bags.insert(bags.begin(), {{a}, {b}});
    consider(static_cast<int>(bags.size()), 2, bags);
  }
  return best;
}

}  // namespace gminor
