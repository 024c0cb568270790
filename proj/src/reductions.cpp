#include "gminor/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>

#include "gminor/errors.hpp"

namespace gminor {

void validate(const NaeFormula& f) {
  if (f.n < 1) throw DomainError("formula needs at least one variable");
  for (const auto& c : f.clauses)
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > f.n) throw DomainError("literal " + std::to_string(lit) + " out of range");
}

void validate(const HittingSetInstance& h) {
  if (h.n < 0 || h.k < 0) throw DomainError("universe size and budget must be non-negative");
  for (const auto& s : h.sets) {
    if (s.empty()) throw DomainError("empty set in family");
    for (int x : s)
      if (x < 0 || x >= h.n) throw DomainError("member " + std::to_string(x) + " outside the universe");
  }
}

namespace {

void make_clique(Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

// Universe clique, set copies and x, shared by both hitting-set constructions.
struct HittingBuilder {
  std::vector<Edge> edges;
  int next = 0;
  std::map<std::string, std::vector<int>> roles;

  explicit HittingBuilder(const HittingSetInstance& h) {
    validate(h);
    auto& u = roles["universe"];
    for (int i = 0; i < h.n; ++i) u.push_back(next++);
    for (int i = 0; i < h.n; ++i)
      for (int j = i + 1; j < h.n; ++j) edges.emplace_back(u[i], u[j]);
    auto& copies = roles["set_copies"];
    for (const auto& s : h.sets)
      for (int c = 0; c < 2 * h.k + 1; ++c) {
        int v = next++;
        copies.push_back(v);
        std::vector<int> members = s;
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int x : members) edges.emplace_back(u[x], v);
      }
    int x = next++;
    roles["x"] = {x};
    for (int a : u) edges.emplace_back(a, x);
  }
};

}  // namespace

ReductionInstance nae3sat_to_cobipartite(const NaeFormula& f) {
  validate(f);
  const int n = f.n, m = static_cast<int>(f.clauses.size());
  const int copies = 4 * n - 3;
  ReductionInstance out;
  out.graph = Graph(2 * n + copies * (n + m));
  auto& pos = out.roles["positive"];
  auto& neg = out.roles["negative"];
  int next = 0;
  for (int i = 0; i < n; ++i) {
    pos.push_back(next++);
    neg.push_back(next++);
  }
  auto literal = [&](int lit) { return lit > 0 ? pos[lit - 1] : neg[-lit - 1]; };
  auto& clause_copies = out.roles["clause_copies"];
  for (const auto& c : f.clauses)
    for (int r = 0; r < copies; ++r) {
      int v = next++;
      clause_copies.push_back(v);
      for (int lit : c)
        if (!out.graph.adjacent(v, literal(lit))) out.graph.add_edge(v, literal(lit));
    }
  auto& dummies = out.roles["dummies"];
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < copies; ++r) {
      int v = next++;
      dummies.push_back(v);
      out.graph.add_edge(v, pos[i]);
      out.graph.add_edge(v, neg[i]);
    }
  std::vector<int> lits, rest;
  for (int v = 0; v < 2 * n; ++v) lits.push_back(v);
  for (int v = 2 * n; v < next; ++v) rest.push_back(v);
  make_clique(out.graph, lits);
  make_clique(out.graph, rest);
  out.k = 2 * n - 2;
  out.s = 1;
  out.target = "contraction to K_" + std::to_string(copies * (n + m) + 2);
  return out;
}

ReductionInstance hitting_set_to_split(const HittingSetInstance& h) {
  HittingBuilder b(h);
  const int x = b.roles["x"][0];
  auto& ys = b.roles["y"];
  for (int i = 0; i < 2 * h.k + 1; ++i) {
    ys.push_back(b.next++);
    b.edges.emplace_back(x, ys.back());
  }
  ReductionInstance out{Graph(b.next, b.edges), h.k, 2, "diameter <= 2", std::move(b.roles)};
  return out;
}

ReductionInstance hitting_set_to_chordal(const HittingSetInstance& h) {
  HittingBuilder b(h);
  const int x = b.roles["x"][0];
  auto& zs = b.roles["z"];
  auto& ys = b.roles["y"];
  for (int i = 0; i < 2 * h.k + 1; ++i) zs.push_back(b.next++);
  for (int i = 0; i < 2 * h.k + 1; ++i) {
    ys.push_back(b.next++);
    b.edges.emplace_back(zs[i], ys[i]);
  }
  std::vector<int> clique = zs;
  clique.push_back(x);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) b.edges.emplace_back(clique[i], clique[j]);
  ReductionInstance out{Graph(b.next, b.edges), h.k, 3, "diameter <= 3", std::move(b.roles)};
  return out;
}

Graph pendant_lift(const Graph& g, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  const int n = g.order();
  Graph out(n * (k + 2));
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  int next = n;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i <= k; ++i) out.add_edge(v, next++);
  return out;
}

Graph subdivide_edges(const Graph& g) {
  auto edges = g.edges();
  Graph out(g.order() + static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int mid = g.order() + static_cast<int>(i);
    out.add_edge(edges[i].first, mid);
    out.add_edge(mid, edges[i].second);
  }
  return out;
}

std::optional<std::vector<bool>> nae3sat_solve(const NaeFormula& f) {
  validate(f);
  if (f.n > kSourceSolverCap) throw CapacityError("NAE solver limited to " + std::to_string(kSourceSolverCap) + " variables");
  for (std::uint32_t mask = 0; mask < (1u << f.n); ++mask) {
    auto value = [&](int lit) { return (((mask >> (std::abs(lit) - 1)) & 1u) != 0) == (lit > 0); };
    bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
      bool t = value(c[0]) || value(c[1]) || value(c[2]);
      bool fl = !value(c[0]) || !value(c[1]) || !value(c[2]);
      return t && fl;
    });
    if (ok) {
      std::vector<bool> out(f.n);
      for (int i = 0; i < f.n; ++i) out[i] = (mask >> i) & 1u;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> hitting_set_solve(const HittingSetInstance& h) {
  validate(h);
  if (h.n > kSourceSolverCap) throw CapacityError("hitting-set solver limited to " + std::to_string(kSourceSolverCap) + " elements");
  std::vector<std::uint32_t> masks;
  for (const auto& s : h.sets) {
    std::uint32_t m = 0;
    for (int x : s) m |= 1u << x;
    masks.push_back(m);
  }
  for (int size = 0; size <= std::min(h.k, h.n); ++size) {
    // Combinations of `size` elements in lexicographic order.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::uint32_t chosen = 0;
      for (int x : pick) chosen |= 1u << x;
      if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & chosen) != 0; })) return pick;
      int i = size - 1;
      while (i >= 0 && pick[i] == h.n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

// Tokens of one line with their byte offsets.
struct Tokens {
  std::string_view text;
  std::size_t pos = 0;

  std::optional<std::pair<std::string_view, std::size_t>> next() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    if (pos >= text.size() || text[pos] == '\n') return std::nullopt;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::make_pair(text.substr(start, pos - start), start);
  }
};

long long to_int(std::string_view tok, std::size_t offset) {
  long long v = 0;
  std::size_t i = 0;
  bool neg = false;
  if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    neg = tok[0] == '-';
    i = 1;
  }
  if (i == tok.size()) throw ParseError("expected an integer", offset);
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw ParseError("expected an integer, got '" + std::string(tok) + "'", offset);
    v = v * 10 + (tok[i] - '0');
    if (v > (1LL << 40)) throw ParseError("integer too large", offset);
  }
  return neg ? -v : v;
}

std::vector<std::pair<std::string_view, std::size_t>> split_lines(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.emplace_back(text.substr(start, end - start), start);
    start = end + 1;
  }
  return out;
}

std::vector<std::pair<long long, std::size_t>> line_ints(std::string_view line, std::size_t base) {
  std::vector<std::pair<long long, std::size_t>> out;
  Tokens t{line};
  while (auto tok = t.next()) out.emplace_back(to_int(tok->first, base + tok->second), base + tok->second);
  return out;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

NaeFormula parse_dimacs_cnf(std::string_view text) {
  NaeFormula f;
  long long declared = -1;
  std::vector<int> current;
  std::size_t clause_start = 0;
  for (auto [line, base] : split_lines(text)) {
    if (is_blank(line) || line.front() == 'c' || line.front() == '%') continue;
    if (line.front() == 'p') {
      if (declared >= 0) throw ParseError("duplicate problem line", base);
      Tokens t{line};
      t.next();
      auto kind = t.next();
      if (!kind || kind->first != "cnf") throw FormatError("problem line must read 'p cnf <vars> <clauses>'");
      auto nv = t.next(), nc = t.next();
      if (!nv || !nc) throw ParseError("incomplete problem line", base);
      f.n = static_cast<int>(to_int(nv->first, base + nv->second));
      declared = to_int(nc->first, base + nc->second);
      if (f.n < 1 || declared < 0) throw FormatError("problem line needs n >= 1 and m >= 0");
      continue;
    }
    if (declared < 0) throw ParseError("clause before the problem line", base);
    for (auto [lit, off] : line_ints(line, base)) {
      if (current.empty()) clause_start = off;
      if (lit == 0) {
        if (current.size() != 3) throw FormatError("clause at byte " + std::to_string(clause_start) + " has " +
                                                   std::to_string(current.size()) + " literals; exactly 3 required");
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      if (std::llabs(lit) > f.n) throw ParseError("literal " + std::to_string(lit) + " out of range", off);
      current.push_back(static_cast<int>(lit));
    }
  }
  if (declared < 0) throw FormatError("missing 'p cnf' problem line");
  if (!current.empty()) throw FormatError("last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared)
    throw FormatError("problem line declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

HittingSetInstance parse_set_system(std::string_view text, int k) {
  HittingSetInstance h;
  h.k = k;
  long long m = -1;
  for (auto [line, base] : split_lines(text)) {
    if (is_blank(line) || line[line.find_first_not_of(" \t\r")] == '#') continue;
    auto ints = line_ints(line, base);
    if (m < 0) {
      if (ints.size() != 2) throw ParseError("header must be 'n m'", base);
      h.n = static_cast<int>(ints[0].first);
      m = ints[1].first;
      if (h.n < 0 || m < 0) throw FormatError("header values must be non-negative");
      continue;
    }
    std::vector<int> set;
    for (auto [x, off] : ints) {
      if (x < 0 || x >= h.n) throw ParseError("member " + std::to_string(x) + " outside the universe", off);
      set.push_back(static_cast<int>(x));
    }
    h.sets.push_back(std::move(set));
  }
  if (m < 0) throw FormatError("missing 'n m' header");
  if (static_cast<long long>(h.sets.size()) != m)
    throw FormatError("header declares " + std::to_string(m) + " sets, found " + std::to_string(h.sets.size()));
  validate(h);
  return h;
}

}  // namespace gminor
