#include "gminor/io.hpp"

#include <cctype>
#include <cstdint>
#include <optional>

#include "gminor/errors.hpp"

namespace gminor {

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw DomainError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::EdgeList: return "edgelist";
    case GraphFormat::Dimacs: return "dimacs";
  }
  return "";
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

  std::size_t offset() const { return base_ + pos_; }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long long integer(const char* what) {
    skip_space();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(std::string("expected ") + what, base_ + start);
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > (1LL << 40)) throw ParseError(std::string(what) + " too large", base_ + start);
    }
    return neg ? -v : v;
  }

  std::string_view line() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
    auto out = s_.substr(start, pos_ - start);
    if (pos_ < s_.size()) ++pos_;
    return out;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

 private:
  std::string_view s_;
  std::size_t base_ = 0;
  std::size_t pos_ = 0;
};

void add_parsed_edge(Graph& g, long long u, long long v, std::size_t offset) {
  const long long n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ParseError("vertex out of range [0, " + std::to_string(n) + ")", offset);
  if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), offset);
  if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
    throw ParseError("repeated edge " + std::to_string(u) + " " + std::to_string(v), offset);
  g.add_edge(static_cast<int>(u), static_cast<int>(v));
}

Graph parse_edgelist(std::string_view bytes) {
  Scanner sc(bytes);
  long long n = sc.integer("vertex count");
  long long m = sc.integer("edge count");
  if (n < 0 || m < 0) throw FormatError("negative count in header");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (sc.at_end())
      throw FormatError("header declares " + std::to_string(m) + " edges, found " + std::to_string(i));
    sc.skip_space();
    std::size_t at = sc.offset();
    long long u = sc.integer("edge endpoint");
    long long v = sc.integer("edge endpoint");
    add_parsed_edge(g, u, v, at);
  }
  if (!sc.at_end()) throw FormatError("more edges than the declared " + std::to_string(m));
  return g;
}

Graph parse_dimacs(std::string_view bytes) {
  Scanner sc(bytes);
  std::optional<Graph> g;
  long long declared = 0, seen = 0;
  while (!sc.at_end()) {
    std::size_t at = sc.offset();
    char tag = sc.peek();
    if (tag == 'c') {
      sc.line();
      continue;
    }
    if (tag == 'p') {
      if (g) throw ParseError("second problem line", at);
      std::string_view ln = sc.line();
      std::size_t i = 1;
      while (i < ln.size() && (ln[i] == ' ' || ln[i] == '\t')) ++i;
      std::size_t word = i;
      while (i < ln.size() && std::isalpha(static_cast<unsigned char>(ln[i]))) ++i;
      auto kind = ln.substr(word, i - word);
      if (kind != "edge" && kind != "col") throw ParseError("expected 'p edge n m'", at + word);
      Scanner nums(ln.substr(i), at + i);
      long long n = nums.integer("vertex count");
      declared = nums.integer("edge count");
      if (n < 0 || declared < 0) throw FormatError("negative count in problem line");
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (tag == 'e') {
      if (!g) throw ParseError("edge line before problem line", at);
      std::string_view ln = sc.line();
      Scanner e(ln.substr(1), at + 1);
      long long u = e.integer("edge endpoint");
      long long v = e.integer("edge endpoint");
      add_parsed_edge(*g, u - 1, v - 1, at);
      ++seen;
      continue;
    }
    throw ParseError(std::string("unexpected line tag '") + tag + "'", at);
  }
  if (!g) throw FormatError("missing problem line");
  if (seen != declared)
    throw FormatError("problem line declares " + std::to_string(declared) + " edges, found " +
                      std::to_string(seen));
  return *g;
}

Graph parse_graph6(std::string_view bytes) {
  std::size_t pos = 0;
  const std::string_view header = ">>graph6<<";
  if (bytes.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = bytes.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(bytes[end - 1]))) --end;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("truncated graph6 string", i);
    int c = static_cast<unsigned char>(bytes[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
    return c - 63;
  };
  long long n = 0;
  if (pos < end && bytes[pos] == 126) {
    if (pos + 1 < end && bytes[pos + 1] == 126) {
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k);
      pos += 8;
    } else {
      for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k);
      pos += 4;
    }
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > (1LL << 20)) throw FormatError("graph6 vertex count too large");
  Graph g(static_cast<int>(n));
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(end - pos) != need)
    throw FormatError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " +
                      std::to_string(need) + " for n=" + std::to_string(n));
  long long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  for (long long pad = k; pad < need * 6; ++pad) {
    int chunk = byte_at(pos + static_cast<std::size_t>(pad / 6));
    if ((chunk >> (5 - pad % 6)) & 1)
      throw ParseError("nonzero graph6 padding bit", pos + static_cast<std::size_t>(pad / 6));
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  }
  int chunk = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - used))));
  out.push_back('\n');
  return out;
}

}  // namespace

Graph parse_graph(std::string_view bytes, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return parse_graph6(bytes);
    case GraphFormat::EdgeList: return parse_edgelist(bytes);
    case GraphFormat::Dimacs: return parse_dimacs(bytes);
  }
  throw DomainError("unknown graph format");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return emit_graph6(g);
  auto edges = g.edges();
  std::string out;
  if (format == GraphFormat::EdgeList) {
    out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  } else {
    out = "p edge " + std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace gminor
