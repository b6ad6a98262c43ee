// egal-orient: command-line front end for the orientation library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "egal/acyclic.hpp"
#include "egal/errors.hpp"
#include "egal/graph.hpp"
#include "egal/oracle.hpp"
#include "egal/reduction.hpp"
#include "egal/routing.hpp"
#include "egal/strong.hpp"
#include "egal/unconstrained.hpp"

namespace {

using namespace egal;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool quiet = false;
  std::optional<std::uint64_t> seed;

  std::string graph_file;
  bool trace = false;
  bool certificate = false;
  std::string pairs = "all";
  std::string constraint = "none";
  std::string objective = "minlex";

  int k = 0;
  int ell = 0;
  std::string setcover_file;
  std::string cover;
  std::string orientation_file;
  std::string sidecar;
  bool print_orientation = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

void print_trace(const std::vector<ReversalStep>& trace) {
  for (const auto& step : trace) {
    std::cout << "reversal " << step.start << ' ' << step.end << ' ' << step.end_indegree << '\n';
  }
}

void print_orientation(const Options& opt, const Orientation& o) {
  if (!opt.quiet) std::cout << serialize_orientation(o);
}

int run_minlex(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  const ReversalResult r = path_reversal(g, opt.seed);
  if (opt.trace) print_trace(r.trace);
  std::cout << "sequence: " << to_string(indegree_sequence(r.orientation)) << '\n';
  print_orientation(opt, r.orientation);
  return 0;
}

int run_sc_minmax(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  const ReversalResult r = sc_path_reversal(g);
  if (opt.trace) print_trace(r.trace);
  std::cout << "max-indegree: " << r.orientation.max_indegree() << '\n';
  if (opt.certificate) {
    const StructureReport report = check_one_edge_structure(r.orientation);
    std::cout << "witness: " << join(report.witness) << '\n';
    std::cout << "witness-bound: " << report.witness_bound.bound << '\n';
    std::cout << "certificate: " << (report.ok ? "ok" : "FAILED") << '\n';
    for (const auto& v : report.violations) std::cerr << "violation: " << v << '\n';
    if (!report.ok) {
      print_orientation(opt, r.orientation);
      return kExitDomain;
    }
  }
  print_orientation(opt, r.orientation);
  return 0;
}

int run_bound_sc(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  std::cout << "sc-lower-bound: " << sc_lower_bound(g) << '\n';
  return 0;
}

int run_route_tables(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  const RoutingTables tables = min_outdegree_routing(g);
  std::vector<int> order(tables.order().begin(), tables.order().end());
  std::cout << "numbering: " << join(order) << '\n';
  for (const auto& entry : tables.entries()) {
    std::cout << entry.tail << ' ' << entry.head << ' ';
    if (entry.interval) {
      std::cout << entry.interval->lo << ' ' << entry.interval->hi << '\n';
    } else {
      std::cout << "UNUSED\n";
    }
  }
  return 0;
}

std::pair<Vertex, Vertex> parse_pair(const std::string& text, int n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pairs expects all or s,t");
  try {
    const int s = std::stoi(text.substr(0, comma));
    const int t = std::stoi(text.substr(comma + 1));
    if (s < 0 || t < 0 || s >= n || t >= n) throw UsageError("--pairs vertex out of range");
    return {s, t};
  } catch (const std::logic_error&) {
    throw UsageError("--pairs expects all or s,t");
  }
}

int run_route_sim(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  const int n = g.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (opt.pairs == "all") {
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) {
        if (s != t) pairs.emplace_back(s, t);
      }
    }
  } else {
    pairs.push_back(parse_pair(opt.pairs, n));
  }
  const RoutingTables tables = min_outdegree_routing(g);
  std::size_t max_hops = 0;
  for (auto [s, t] : pairs) {
    const std::vector<EdgeId> arcs = route(tables, s, t);
    max_hops = std::max(max_hops, arcs.size());
    if (opt.quiet) continue;
    std::cout << "route " << s << ' ' << t << ':';
    Vertex at = s;
    std::cout << ' ' << at;
    for (EdgeId e : arcs) {
      at = g.opposite(e, at);
      std::cout << ' ' << at;
    }
    std::cout << '\n';
  }
  std::cout << "max-hops: " << max_hops << '\n';
  std::cout << "max-table-size: " << tables.max_table_size() << '\n';
  return 0;
}

int run_strip(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  const auto [order, o] = stripping(g);
  std::cout << "order: " << join(order.order) << '\n';
  std::cout << "peak: " << order.peak << '\n';
  print_orientation(opt, o);
  return 0;
}

int run_oracle(const Options& opt) {
  const UndirectedGraph g = read_graph_file(opt.graph_file);
  OracleQuery q;
  if (opt.constraint == "none") {
    q.constraint = Constraint::None;
  } else if (opt.constraint == "sc") {
    q.constraint = Constraint::StronglyConnected;
  } else if (opt.constraint == "acyclic") {
    q.constraint = Constraint::Acyclic;
  } else {
    throw UsageError("unknown constraint " + opt.constraint);
  }
  if (opt.objective == "minmax") {
    q.objective = Objective::MinMaxIndegree;
  } else if (opt.objective == "minlex") {
    q.objective = Objective::MinLexSequence;
  } else if (opt.objective == "convex:square") {
    q.objective = Objective::MinConvexCost;
    q.cost = ConvexCost::square(std::max(1, g.num_edges()));
  } else if (opt.objective == "convex:pow2") {
    q.objective = Objective::MinConvexCost;
    q.cost = ConvexCost::pow2(std::max(1, g.num_edges()));
  } else {
    throw UsageError("unknown objective " + opt.objective);
  }
  const auto result = oracle_solve(g, q);
  if (!result) throw DomainError("infeasible: no orientation satisfies the constraint");
  std::cout << "max-indegree: " << result->max_indegree << '\n';
  std::cout << "sequence: " << to_string(result->sequence) << '\n';
  if (q.cost) std::cout << "cost: " << result->cost << '\n';
  print_orientation(opt, result->witness);
  return 0;
}

int run_gadget_build(const Options& opt) {
  const Gadget h = build_gadget(opt.k, opt.ell);
  std::cout << "# gadget k=" << h.k << " l=" << h.ell << " root=" << h.root;
  if (h.extra) std::cout << " extra=" << *h.extra;
  std::cout << '\n' << serialize_graph(h.graph);
  return 0;
}

SetCoverInstance read_set_cover(const std::string& path) {
  return parse_set_cover(read_text_file(path));
}

int run_gadget_reduce(const Options& opt) {
  const ReductionInstance ri = build_reduction(read_set_cover(opt.setcover_file));
  const std::string sidecar = reduction_sidecar_json(ri);
  if (opt.sidecar.empty()) {
    std::cout << "# sidecar " << sidecar << '\n';
  } else {
    std::ofstream out(opt.sidecar);
    if (!out) throw DomainError("cannot write " + opt.sidecar);
    out << sidecar << '\n';
  }
  std::cout << serialize_graph(ri.graph);
  return 0;
}

std::vector<int> parse_cover(const std::string& text) {
  std::vector<int> cover;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int index = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      cover.push_back(index);
    } catch (const std::logic_error&) {
      throw UsageError("cover must be comma-separated set indices, got '" + item + "'");
    }
  }
  if (cover.empty()) throw UsageError("empty cover");
  return cover;
}

int run_gadget_verify(const Options& opt) {
  const ReductionInstance ri = build_reduction(read_set_cover(opt.setcover_file));
  const std::vector<int> cover = parse_cover(opt.cover);
  for (int s : cover) {
    if (s < 0 || s >= static_cast<int>(ri.instance.sets.size())) {
      throw UsageError("set index " + std::to_string(s) + " out of range");
    }
  }
  const Orientation o = cover_to_orientation(ri, cover);
  int high = 0;
  for (int d : o.indegrees()) high += d >= ri.k ? 1 : 0;
  std::cout << "k: " << ri.k << '\n';
  std::cout << "indegree-k vertices: " << high << '\n';
  std::cout << "max-indegree: " << o.max_indegree() << '\n';
  std::cout << "acyclic: " << (verify_acyclic(o) ? "yes" : "no") << '\n';
  if (opt.print_orientation) print_orientation(opt, o);
  return 0;
}

int run_gadget_extract(const Options& opt) {
  const ReductionInstance ri = build_reduction(read_set_cover(opt.setcover_file));
  const Orientation o = parse_orientation(ri.graph, read_text_file(opt.orientation_file));
  const CoverExtraction ex = orientation_to_cover(ri, o);
  std::cout << "indegree-k vertices: " << ex.high_indegree_vertices << '\n';
  std::cout << "sets: " << join(ex.sets) << '\n';
  std::cout << "cover: " << (ex.is_cover ? "yes" : "no") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Egalitarian graph orientations", "egal-orient"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--quiet", opt.quiet, "Suppress orientation and per-route lines");
  app.add_option("--seed", opt.seed, "Seed for the random initial orientation");

  int (*handler)(const Options&) = nullptr;
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", opt.graph_file, "Graph file")->required()->check(CLI::ExistingFile);
  };

  auto* minlex = app.add_subcommand("minlex", "Minimum lexicographic orientation");
  graph_arg(minlex);
  minlex->add_flag("--trace", opt.trace, "Print one line per path reversal");
  minlex->callback([&] { handler = run_minlex; });

  auto* sc = app.add_subcommand("sc-minmax", "Strongly connected min-max indegree orientation");
  graph_arg(sc);
  sc->add_flag("--trace", opt.trace, "Print one line per path reversal");
  sc->add_flag("--certificate", opt.certificate, "Print and check the optimality witness");
  sc->callback([&] { handler = run_sc_minmax; });

  auto* bound = app.add_subcommand("bound", "Lower bounds");
  bound->require_subcommand(1);
  auto* bound_sc = bound->add_subcommand("sc", "Subset lower bound for strong orientations");
  graph_arg(bound_sc);
  bound_sc->callback([&] { handler = run_bound_sc; });

  auto* tables = app.add_subcommand("route-tables", "Interval routing tables");
  graph_arg(tables);
  tables->callback([&] { handler = run_route_tables; });

  auto* sim = app.add_subcommand("route-sim", "Simulate interval routing");
  graph_arg(sim);
  sim->add_option("--pairs", opt.pairs, "all, or a single pair s,t");
  sim->callback([&] { handler = run_route_sim; });

  auto* strip = app.add_subcommand("strip", "Acyclic orientation by min-degree stripping");
  graph_arg(strip);
  strip->callback([&] { handler = run_strip; });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over all orientations");
  graph_arg(oracle);
  oracle->add_option("--constraint", opt.constraint, "none|sc|acyclic")
      ->check(CLI::IsMember({"none", "sc", "acyclic"}));
  oracle->add_option("--objective", opt.objective, "minmax|minlex|convex:square|convex:pow2")
      ->check(CLI::IsMember({"minmax", "minlex", "convex:square", "convex:pow2"}));
  oracle->callback([&] { handler = run_oracle; });

  auto* gadget = app.add_subcommand("gadget", "Set-cover reduction gadgets");
  gadget->require_subcommand(1);
  auto* build = gadget->add_subcommand("build", "Print one k-gadget");
  build->add_option("k", opt.k)->required();
  build->add_option("l", opt.ell)->required();
  build->callback([&] { handler = run_gadget_build; });

  auto* reduce = gadget->add_subcommand("reduce", "Reduction graph of a set-cover instance");
  reduce->add_option("setcover", opt.setcover_file)->required()->check(CLI::ExistingFile);
  reduce->add_option("--sidecar", opt.sidecar, "Write the root mapping JSON here");
  reduce->callback([&] { handler = run_gadget_reduce; });

  auto* verify = gadget->add_subcommand("verify", "Orientation built from a cover");
  verify->add_option("setcover", opt.setcover_file)->required()->check(CLI::ExistingFile);
  verify->add_option("cover", opt.cover, "Comma-separated 0-based set indices")->required();
  verify->add_flag("--print-orientation", opt.print_orientation);
  verify->callback([&] { handler = run_gadget_verify; });

  auto* extract = gadget->add_subcommand("extract", "Cover read back from an orientation");
  extract->add_option("setcover", opt.setcover_file)->required()->check(CLI::ExistingFile);
  extract->add_option("orientation", opt.orientation_file)->required()->check(CLI::ExistingFile);
  extract->callback([&] { handler = run_gadget_extract; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    return handler(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
