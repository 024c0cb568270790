#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gminor/bipperm.hpp"
#include "gminor/club.hpp"
#include "gminor/cograph.hpp"
#include "gminor/errors.hpp"
#include "gminor/io.hpp"
#include "gminor/oracle.hpp"
#include "gminor/recognition.hpp"
#include "gminor/reductions.hpp"

namespace gminor::cli {

using json = nlohmann::json;

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "edgelist";
  bool json = false;
  int cap = -1;  // -1: each oracle's own default
  int threads = 1;
  std::string method = "auto";
  int s = 2;
  int k = -1;
  std::string problem = "hadwiger";
  std::string output;
  std::string out_format = "edgelist";
};

struct Report {
  std::string solver;
  json result;
};

std::string read_bytes(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open input file '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (auto [a, b] : edges) out.push_back({a, b});
  return out;
}

// Edges of a spanning tree inside each bag.
std::vector<Edge> spanning_edges(const Graph& g, const Blocks& bags) {
  std::vector<Edge> out;
  for (const auto& bag : bags) {
    VertexSet in(g.order()), seen(g.order());
    for (int v : bag) in.insert(v);
    std::vector<int> stack{bag.front()};
    seen.insert(bag.front());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      (g.neighbors(v) & in).for_each([&](int w) {
        if (seen.contains(w)) return;
        seen.insert(w);
        out.emplace_back(std::min(v, w), std::max(v, w));
        stack.push_back(w);
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  if (o.cap >= 0) opt.cap = o.cap;
  opt.threads = o.threads;
  return opt;
}

// Independent re-check of an asteroidal triple.
bool is_asteroidal(const Graph& g, const AsteroidalTriple& t) {
  for (int i = 0; i < 3; ++i) {
    int a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
    if (g.adjacent(a, b)) return false;
    VertexSet rest = g.all_vertices();
    g.closed_neighborhood(c).for_each([&](int w) { rest.erase(w); });
    bool together = false;
    for (const auto& comp : components_within(g, rest))
      if (comp.contains(a) && comp.contains(b)) together = true;
    if (!together) return false;
  }
  return true;
}

bool is_induced_p4(const Graph& g, const InducedP4& p) {
  auto [a, b, c, d] = p;
  return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) && !g.adjacent(a, d) &&
         !g.adjacent(b, d);
}

Report cmd_recognize(const Graph& g) {
  json r;
  auto cg = recognize_cograph(g);
  if (auto* t = std::get_if<Cotree>(&cg)) {
    r["cograph"] = {{"member", true}, {"cotree", to_string(*t)}};
  } else {
    const auto& p4 = std::get<InducedP4>(cg);
    if (!is_induced_p4(g, p4)) throw std::logic_error("P4 certificate failed re-verification");
    r["cograph"] = {{"member", false}, {"induced_p4", p4}};
  }
  const bool bip = is_bipartite(g);
  auto ord = bip ? strong_ordering(g) : std::nullopt;
  if (ord) {
    if (!verify_ordering(g, *ord)) throw std::logic_error("strong ordering failed re-verification");
    r["bipartite_permutation"] = {{"member", true}, {"side1", ord->side1}, {"side2", ord->side2}};
  } else {
    r["bipartite_permutation"] = {
        {"member", false},
        {"reason", bip ? "no ordering with the adjacency and enclosure properties" : "not bipartite"}};
  }
  if (auto at = find_asteroidal_triple(g)) {
    if (!is_asteroidal(g, *at)) throw std::logic_error("asteroidal triple failed re-verification");
    r["at_free"] = {{"member", false}, {"asteroidal_triple", *at}};
  } else {
    json a = {{"member", true}};
    if (g.order() > 0 && is_connected(g)) {
      auto [u, v] = diameter_dominating_pair(g);
      if (!is_dominating_pair(g, u, v)) throw std::logic_error("dominating pair failed re-verification");
      a["dominating_pair"] = {u, v};
    }
    r["at_free"] = a;
  }
  r["bipartite"] = bip;
  r["split"] = is_split(g);
  r["cobipartite"] = is_cobipartite(g);
  r["chordal"] = is_chordal(g);
  r["connected"] = g.order() > 0 && is_connected(g);
  const int d = g.order() > 0 ? diameter(g) : 0;
  r["diameter"] = d == kInfinity ? json(nullptr) : json(d);
  return {"recognizers", r};
}

Report cmd_hadwiger(const Graph& g, const Options& o) {
  auto by_cograph = [&] {
    auto r = hadwiger_cograph(g);
    return Report{"cograph", {{"h", r.h}, {"cr_table", r.table.c}, {"cotree", to_string(r.cotree)}, {"witness", nullptr}}};
  };
  auto by_bipperm = [&] {
    auto r = hadwiger_bipperm(g);
    json res = {{"h", r.h}, {"case", r.singletons}, {"witness", r.bags}};
    if (auto ord = strong_ordering(g)) res["ordering"] = {{"side1", ord->side1}, {"side2", ord->side2}};
    return Report{"bipperm", res};
  };
  auto by_oracle = [&] {
    auto r = hadwiger_oracle(g, oracle_options(o));
    return Report{"oracle", {{"h", r.value}, {"witness", r.bags}}};
  };
  if (o.method == "cograph") return by_cograph();
  if (o.method == "bipperm") return by_bipperm();
  if (o.method == "oracle") return by_oracle();
  if (std::holds_alternative<Cotree>(recognize_cograph(g))) return by_cograph();
  if (is_bipartite_permutation(g)) return by_bipperm();
  try {
    return by_oracle();
  } catch (const CapacityError& e) {
    throw UnsupportedError(
        "no polynomial method applies: the graph is neither a cograph nor a bipartite permutation graph, "
        "Hadwiger Number is NP-complete in general, and the exact oracle refused it (" +
        std::string(e.what()) + ")");
  }
}

Report cmd_clique_matching(const Graph& g) {
  auto m = max_clique_matching(g);
  return {"bipperm", {{"size", m.size}, {"matching_edges", edges_json(m.edges)}}};
}

void require_connected(const Graph& g) {
  if (g.order() == 0 || !is_connected(g))
    throw DomainError("graph is disconnected: no contraction reaches a graph of finite diameter");
}

bool use_atfree(const Graph& g, const Options& o) {
  if (o.method == "atfree") return true;
  if (o.method == "oracle") return false;
  return o.s >= 2 && is_at_free(g);
}

template <class F>
Report oracle_fallback(const Options& o, F&& f) {
  if (o.method == "oracle") return f();
  try {
    return f();
  } catch (const CapacityError& e) {
    throw UnsupportedError("the AT-free algorithm does not apply (needs an AT-free graph and s >= 2) and the exact oracle refused the input (" +
                           std::string(e.what()) + ")");
  }
}

Report cmd_club_contract(const Graph& g, const Options& o) {
  if (o.k < 0) throw InputError("--k must be given and non-negative");
  require_connected(g);
  if (use_atfree(g, o)) {
    auto r = s_club_contract_decide(g, o.k, o.s);
    const int k_min = min_club_contraction_atfree(g, o.s).k_min;
    return {"atfree",
            {{"answer", r.yes}, {"k_min", k_min}, {"rule", r.rule}, {"witness_edges", edges_json(r.witness)}}};
  }
  return oracle_fallback(o, [&] {
    auto r = min_club_contraction_oracle(g, o.s, o.k);
    json res = {{"answer", r.has_value()},
                {"k_min", r ? json(r->k) : json(nullptr)},
                {"witness_edges", r ? edges_json(r->edges) : json(nullptr)}};
    return Report{"oracle", res};
  });
}

Report cmd_club_minor(const Graph& g, const Options& o) {
  require_connected(g);
  if (use_atfree(g, o)) {
    auto r = min_club_contraction_atfree(g, o.s);
    return {"atfree",
            {{"k_min", r.k_min}, {"max_minor", g.order() - r.k_min}, {"witness_edges", edges_json(r.witness)}, {"bags", r.bags}}};
  }
  return oracle_fallback(o, [&] {
    auto r = max_s_club_minor_oracle(g, o.s, oracle_options(o));
    return Report{"oracle", {{"k_min", g.order() - r.value},
                             {"max_minor", r.value},
                             {"witness_edges", edges_json(spanning_edges(g, r.bags))},
                             {"bags", r.bags}}};
  });
}

Report cmd_oracle(const Graph& g, const Options& o) {
  const auto opt = oracle_options(o);
  if (o.problem == "hadwiger") {
    auto r = hadwiger_oracle(g, opt);
    return {"oracle", {{"value", r.value}, {"witness_bags", r.bags}}};
  }
  if (o.problem == "hadwiger-partial") {
    auto r = hadwiger_partial_oracle(g, opt);
    return {"oracle", {{"value", r.value}, {"witness_bags", r.bags}}};
  }
  if (o.problem == "clique-matching") {
    auto r = clique_matching_oracle(g, o.cap >= 0 ? o.cap : kMatchingOracleCap);
    return {"oracle", {{"value", r.value}, {"matching_edges", edges_json(r.matching)}}};
  }
  if (o.problem == "nice") {
    auto r = nice_structure_oracle(g, opt.cap);
    return {"oracle", {{"value", r.max_p}, {"cr_table", r.c}, {"witness_bags", r.bags}}};
  }
  require_connected(g);
  if (o.problem == "club-minor") {
    auto r = max_s_club_minor_oracle(g, o.s, opt);
    return {"oracle", {{"value", r.value}, {"witness_bags", r.bags}}};
  }
  const int kmax = o.k >= 0 ? o.k : std::max(0, g.order() - 1);
  auto r = min_club_contraction_oracle(g, o.s, kmax);
  return {"oracle", {{"answer", r.has_value()}, {"k_min", r ? json(r->k) : json(nullptr)},
                     {"witness_edges", r ? edges_json(r->edges) : json(nullptr)}}};
}

Report emit_reduced(const Graph& g, json sidecar, const Options& o) {
  const GraphFormat f = parse_format_name(o.out_format);
  const std::string text = emit_graph(g, f);
  sidecar["vertices"] = g.order();
  sidecar["edges"] = g.size();
  sidecar["format"] = o.out_format;
  json res = sidecar;
  if (o.output.empty()) {
    res["graph"] = text;
  } else {
    std::ofstream gf(o.output, std::ios::binary), sf(o.output + ".json", std::ios::binary);
    if (!gf || !sf) throw InputError("cannot write '" + o.output + "'");
    gf << text;
    sf << sidecar.dump(2) << '\n';
    res["graph_file"] = o.output;
    res["sidecar_file"] = o.output + ".json";
  }
  return {"reduction", res};
}

json instance_sidecar(const ReductionInstance& r) {
  return {{"k", r.k}, {"s", r.s}, {"target", r.target}, {"role_labels", r.roles}};
}

void print_human(std::ostream& out, const std::string& command, const Report& rep, long long elapsed_ms) {
  out << "command: " << command << "\nsolver: " << rep.solver << '\n';
  for (const auto& [key, value] : rep.result.items()) {
    if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos)
      out << key << ":\n" << value.get<std::string>();
    else
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  out << "elapsed_ms: " << elapsed_ms << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hadwiger numbers, clique-matchings and s-club contractions on structured graph classes", "gminor"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto common = [&](CLI::App* sc, bool graph_input = true) {
    sc->add_option("--input", o.input, "Input file, '-' for stdin")->required();
    if (graph_input)
      sc->add_option("--format", o.format, "Input graph format")->check(CLI::IsMember({"graph6", "edgelist", "dimacs"}));
    sc->add_flag("--json", o.json, "Machine-readable JSON report");
  };
  auto oracle_flags = [&](CLI::App* sc) {
    sc->add_option("--cap", o.cap, "Override the oracle's vertex limit")->check(CLI::NonNegativeNumber);
    sc->add_option("--threads", o.threads, "Worker threads for oracle enumeration")->check(CLI::PositiveNumber);
  };

  auto* recognize = app.add_subcommand("recognize", "Class membership with certificates");
  common(recognize);

  auto* hadwiger = app.add_subcommand("hadwiger", "Hadwiger number");
  common(hadwiger);
  oracle_flags(hadwiger);
  hadwiger->add_option("--method", o.method, "auto|cograph|bipperm|oracle")
      ->check(CLI::IsMember({"auto", "cograph", "bipperm", "oracle"}));

  auto* matching = app.add_subcommand("clique-matching", "Maximum clique-matching of a bipartite permutation graph");
  common(matching);

  auto* club = app.add_subcommand("club-contract", "Decide whether k contractions reach diameter <= s");
  common(club);
  oracle_flags(club);
  club->add_option("--s", o.s, "Diameter bound")->required()->check(CLI::NonNegativeNumber);
  club->add_option("--k", o.k, "Contraction budget")->required()->check(CLI::NonNegativeNumber);
  club->add_option("--method", o.method, "auto|atfree|oracle")->check(CLI::IsMember({"auto", "atfree", "oracle"}));

  auto* club_minor = app.add_subcommand("club-minor", "Fewest contractions to diameter <= s and the largest s-club minor");
  common(club_minor);
  oracle_flags(club_minor);
  club_minor->add_option("--s", o.s, "Diameter bound")->required()->check(CLI::NonNegativeNumber);
  club_minor->add_option("--method", o.method, "auto|atfree|oracle")->check(CLI::IsMember({"auto", "atfree", "oracle"}));

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solvers");
  common(oracle);
  oracle_flags(oracle);
  oracle->add_option("--problem", o.problem, "hadwiger|hadwiger-partial|clique-matching|nice|club-minor|club-contract")
      ->check(CLI::IsMember({"hadwiger", "hadwiger-partial", "clique-matching", "nice", "club-minor", "club-contract"}));
  oracle->add_option("--s", o.s, "Diameter bound for club problems")->check(CLI::NonNegativeNumber);
  oracle->add_option("--k", o.k, "Contraction budget for club-contract")->check(CLI::NonNegativeNumber);

  auto* reduce = app.add_subcommand("reduce", "Build hardness instances and graph transformations");
  reduce->require_subcommand(1);
  auto output_flags = [&](CLI::App* sc) {
    sc->add_option("--output", o.output, "Write the graph here and a JSON sidecar to <output>.json");
    sc->add_option("--out-format", o.out_format, "Output graph format")->check(CLI::IsMember({"graph6", "edgelist", "dimacs"}));
  };
  auto* r_nae = reduce->add_subcommand("nae3sat", "NAE-3-SAT (DIMACS CNF) to co-bipartite clique contraction");
  common(r_nae, false);
  output_flags(r_nae);
  auto* r_hit = reduce->add_subcommand("hitting-set", "Hitting set (set-system file) to s-club contraction");
  common(r_hit, false);
  output_flags(r_hit);
  r_hit->add_option("--k", o.k, "Hitting-set budget")->required()->check(CLI::NonNegativeNumber);
  r_hit->add_option("--s", o.s, "2 (split target) or 3 (chordal target)")->check(CLI::IsMember({2, 3}));
  auto* r_lift = reduce->add_subcommand("lift", "Attach k+1 pendant vertices to every vertex");
  common(r_lift);
  output_flags(r_lift);
  r_lift->add_option("--k", o.k, "Budget k")->required()->check(CLI::NonNegativeNumber);
  auto* r_sub = reduce->add_subcommand("subdivide", "Subdivide every edge once");
  common(r_sub);
  output_flags(r_sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  std::string command;
  for (auto* sc : app.get_subcommands()) command = sc->get_name();
  if (command == "reduce")
    for (auto* sc : reduce->get_subcommands()) command += " " + sc->get_name();

  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << "error: " << message << '\n';
    if (o.json) {
      json j = {{"schema_version", kSchemaVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}},
                {"exit_code", code}};
      out << j.dump(2) << '\n';
    }
    return code;
  };

  try {
    const std::string bytes = read_bytes(o.input, in);
    json input = {{"digest", "fnv1a64:" + fnv1a_hex(bytes)}};
    Report rep;
    auto load = [&] {
      Graph g = parse_graph(bytes, parse_format_name(o.format));
      input["format"] = o.format;
      input["vertices"] = g.order();
      input["edges"] = g.size();
      return g;
    };
    if (command == "recognize") rep = cmd_recognize(load());
    else if (command == "hadwiger") rep = cmd_hadwiger(load(), o);
    else if (command == "clique-matching") rep = cmd_clique_matching(load());
    else if (command == "club-contract") rep = cmd_club_contract(load(), o);
    else if (command == "club-minor") rep = cmd_club_minor(load(), o);
    else if (command == "oracle") rep = cmd_oracle(load(), o);
    else if (command == "reduce nae3sat") {
      input["format"] = "dimacs-cnf";
      auto r = nae3sat_to_cobipartite(parse_dimacs_cnf(bytes));
      rep = emit_reduced(r.graph, instance_sidecar(r), o);
    } else if (command == "reduce hitting-set") {
      input["format"] = "set-system";
      auto h = parse_set_system(bytes, o.k);
      auto r = o.s == 3 ? hitting_set_to_chordal(h) : hitting_set_to_split(h);
      rep = emit_reduced(r.graph, instance_sidecar(r), o);
    } else if (command == "reduce lift") {
      rep = emit_reduced(pendant_lift(load(), o.k), {{"k", o.k}}, o);
    } else if (command == "reduce subdivide") {
      rep = emit_reduced(subdivide_edges(load()), json::object(), o);
    } else {
      throw std::logic_error("unhandled command " + command);
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (o.json) {
      json j = {{"schema_version", kSchemaVersion}, {"command", command}, {"input", input}, {"solver", rep.solver},
                {"result", rep.result}};
      out << j.dump(2) << '\n';
    } else {
      print_human(out, command, rep, ms);
    }
    return kOk;
  } catch (const InputError& e) {
    return fail(kInputError, "input", e.what());
  } catch (const ParseError& e) {
    return fail(kInputError, "input", e.what());
  } catch (const FormatError& e) {
    return fail(kInputError, "input", e.what());
  } catch (const CapacityError& e) {
    return fail(kCapacity, "capacity", e.what());
  } catch (const DomainError& e) {
    return fail(kInapplicable, "inapplicable", e.what());
  } catch (const UnsupportedError& e) {
    return fail(kInapplicable, "inapplicable", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "internal", e.what());
  }
}

}  // namespace gminor::cli
