#include "egal/strong.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "egal/errors.hpp"

namespace egal {

namespace {

struct DfsTree {
  std::vector<int> discovery;     // -1 if unreached
  std::vector<EdgeId> parent_edge; // -1 at the root
  std::vector<int> low;
};

// Iterative DFS from vertex 0 with lowpoints computed over edge ids, so
// parallel edges count as back edges.
DfsTree dfs_from_root(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  DfsTree t{std::vector<int>(n, -1), std::vector<EdgeId>(n, -1), std::vector<int>(n, 0)};
  if (n == 0) return t;
  struct Frame {
    Vertex v;
    size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  int clock = 0;
  t.discovery[0] = t.low[0] = clock++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto incident = g.incidence(f.v);
    if (f.next < incident.size()) {
      const Incidence inc = incident[f.next++];
      if (inc.edge == t.parent_edge[f.v]) continue;
      if (t.discovery[inc.other] == -1) {
        t.discovery[inc.other] = t.low[inc.other] = clock++;
        t.parent_edge[inc.other] = inc.edge;
        stack.push_back({inc.other, 0});
      } else {
        t.low[f.v] = std::min(t.low[f.v], t.discovery[inc.other]);
      }
    } else {
      Vertex v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        Vertex parent = stack.back().v;
        t.low[parent] = std::min(t.low[parent], t.low[v]);
      }
    }
  }
  return t;
}

std::vector<bool> reach(const Orientation& o, Vertex from, bool forward) {
  const UndirectedGraph& g = o.graph();
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incidence(x)) {
      Vertex source = forward ? o.tail(inc.edge) : o.head(inc.edge);
      if (source != x || seen[inc.other]) continue;
      seen[inc.other] = true;
      stack.push_back(inc.other);
    }
  }
  return seen;
}

}  // namespace

std::optional<EdgeId> find_bridge(const UndirectedGraph& g) {
  DfsTree t = dfs_from_root(g);
  std::optional<EdgeId> best;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (t.discovery[v] == -1 || t.parent_edge[v] == -1) continue;
    if (t.low[v] > t.discovery[g.opposite(t.parent_edge[v], v)]) {
      if (!best || t.parent_edge[v] < *best) best = t.parent_edge[v];
    }
  }
  return best;
}

void require_strongly_orientable(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return;
  DfsTree t = dfs_from_root(g);
  for (Vertex v = 0; v < n; ++v) {
    if (t.discovery[v] == -1) {
      throw NotStronglyOrientable("disconnected: vertex " + std::to_string(v) +
                                  " is not reachable from vertex 0");
    }
  }
  if (auto bridge = find_bridge(g)) {
    const Edge& e = g.edge(*bridge);
    throw NotStronglyOrientable("bridge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
}

Orientation initial_strong_orientation(const UndirectedGraph& g) {
  require_strongly_orientable(g);
  DfsTree t = dfs_from_root(g);
  std::vector<Vertex> heads(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (t.parent_edge[v] == e) {
      heads[e] = v;
    } else if (t.parent_edge[u] == e) {
      heads[e] = u;
    } else {
      heads[e] = t.discovery[u] < t.discovery[v] ? u : v;
    }
  }
  return Orientation(g, std::move(heads));
}

bool is_strongly_connected(const Orientation& o) {
  const int n = o.num_vertices();
  if (n <= 1) return true;
  auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
  return all(reach(o, 0, true)) && all(reach(o, 0, false));
}

FlowResult two_reaches(const Orientation& o, Vertex u, Vertex v) {
  if (u == v) throw ContractViolation("two_reaches needs distinct endpoints");
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  std::vector<char> flow(g.num_edges(), 0);
  std::vector<EdgeId> via(n);
  std::vector<bool> seen(n);
  FlowResult result;

  for (int round = 0; round < 2; ++round) {
    std::fill(seen.begin(), seen.end(), false);
    std::deque<Vertex> queue{u};
    seen[u] = true;
    while (!queue.empty() && !seen[v]) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incidence(x)) {
        if (seen[inc.other]) continue;
        const bool forward = o.tail(inc.edge) == x && !flow[inc.edge];
        const bool cancel = o.head(inc.edge) == x && flow[inc.edge];
        if (!forward && !cancel) continue;
        seen[inc.other] = true;
        via[inc.other] = inc.edge;
        queue.push_back(inc.other);
      }
    }
    if (!seen[v]) break;
    for (Vertex at = v; at != u;) {
      EdgeId e = via[at];
      flow[e] ^= 1;
      at = g.opposite(e, at);
    }
    ++result.value;
  }

  // Decompose: walk saturated arcs from u, erasing any loop the walk closes.
  std::vector<bool> consumed(g.num_edges(), false);
  std::vector<int> position(n, -1);
  for (int k = 0; k < result.value; ++k) {
    std::vector<Vertex> vertices{u};
    std::vector<EdgeId> arcs;
    position[u] = 0;
    Vertex at = u;
    while (at != v) {
      EdgeId next = -1;
      for (const auto& inc : g.incidence(at)) {
        if (flow[inc.edge] && !consumed[inc.edge] && o.tail(inc.edge) == at) {
          next = inc.edge;
          break;
        }
      }
      if (next < 0) throw InternalError("flow decomposition lost conservation");
      consumed[next] = true;
      Vertex w = o.head(next);
      if (position[w] >= 0) {
        const int keep = position[w];
        for (size_t i = keep + 1; i < vertices.size(); ++i) position[vertices[i]] = -1;
        vertices.resize(keep + 1);
        arcs.resize(keep);
      } else {
        position[w] = static_cast<int>(vertices.size());
        vertices.push_back(w);
        arcs.push_back(next);
      }
      at = w;
    }
    for (Vertex x : vertices) position[x] = -1;
    result.paths.push_back({u, v, std::move(arcs)});
  }
  return result;
}

std::optional<DirectedPath> find_strongly_reversible_path(const Orientation& o) {
  if (!is_strongly_connected(o)) throw ContractViolation("orientation is not strongly connected");
  const int n = o.num_vertices();
  const int k = o.max_indegree();
  std::vector<Vertex> sources;
  for (Vertex u = 0; u < n; ++u) {
    if (o.indegree(u) < k - 1) sources.push_back(u);
  }
  if (sources.empty()) return std::nullopt;
  std::stable_sort(sources.begin(), sources.end(),
                   [&](Vertex a, Vertex b) { return o.indegree(a) < o.indegree(b); });
  for (Vertex v = 0; v < n; ++v) {
    if (o.indegree(v) != k) continue;
    for (Vertex u : sources) {
      FlowResult f = two_reaches(o, u, v);
      if (f.value >= 2) return std::move(f.paths.front());
    }
  }
  return std::nullopt;
}

ReversalResult sc_path_reversal(const UndirectedGraph& g) {
  return sc_path_reversal(initial_strong_orientation(g));
}

ReversalResult sc_path_reversal(Orientation initial) {
  if (!is_strongly_connected(initial)) {
    throw ContractViolation("initial orientation is not strongly connected");
  }
  ReversalResult result{std::move(initial), {}};
  Orientation& o = result.orientation;
  const int limit = o.num_edges();
  while (auto p = find_strongly_reversible_path(o)) {
    if (static_cast<int>(result.trace.size()) >= limit) {
      throw InternalError("strong path reversal exceeded m reversals");
    }
    result.trace.push_back(
        {p->start, p->end, o.indegree(p->end), static_cast<int>(p->arcs.size())});
    reverse_path(o, *p);
    if (!is_strongly_connected(o)) throw InternalError("reversal broke strong connectivity");
  }
  return result;
}

SubsetBound subset_bound(const UndirectedGraph& g, const std::vector<bool>& in_subset) {
  SubsetBound b;
  for (Vertex v = 0; v < g.num_vertices(); ++v) b.size += in_subset[v] ? 1 : 0;
  for (const auto& [u, v] : g.edges()) b.inside_edges += (in_subset[u] && in_subset[v]) ? 1 : 0;
  std::vector<bool> outside(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) outside[v] = !in_subset[v];
  std::vector<int> component;
  const InducedSubgraph rest = induced_subgraph(g, outside);
  b.outside_components = connected_components(rest.graph, component);
  if (b.size > 0) b.bound = (b.inside_edges + b.outside_components + b.size - 1) / b.size;
  return b;
}

int sc_lower_bound(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  if (n > kMaxLowerBoundVertices) {
    throw DomainError("subset enumeration refused for n > " +
                      std::to_string(kMaxLowerBoundVertices) +
                      "; use the structural certificate instead");
  }
  std::vector<std::uint32_t> adjacent(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacent[u] |= 1U << v;
    adjacent[v] |= 1U << u;
  }
  const std::uint32_t everything = (1U << n) - 1;
  int best = 0;
  for (std::uint32_t subset = 1; subset <= everything && subset != 0; ++subset) {
    int inside = 0;
    for (const auto& [u, v] : g.edges()) inside += ((subset >> u) & (subset >> v) & 1U);
    int components = 0;
    std::uint32_t left = everything & ~subset;
    while (left) {
      std::uint32_t frontier = left & (~left + 1);
      std::uint32_t comp = 0;
      while (frontier) {
        comp |= frontier;
        std::uint32_t grown = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) grown |= adjacent[__builtin_ctz(f)];
        frontier = grown & left & ~comp;
      }
      left &= ~comp;
      ++components;
    }
    const int size = __builtin_popcount(subset);
    best = std::max(best, (inside + components + size - 1) / size);
    if (subset == everything) break;
  }
  return best;
}

StructureReport check_one_edge_structure(const Orientation& o) {
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  StructureReport report;
  if (n == 0) {
    report.ok = true;
    return report;
  }
  report.max_indegree = o.max_indegree();
  const int k = report.max_indegree;
  for (Vertex v = 0; v < n; ++v) {
    if (o.indegree(v) == k) {
      report.apex = v;
      break;
    }
  }
  std::vector<bool> in_witness(n, false);
  in_witness[report.apex] = true;
  for (Vertex u = 0; u < n; ++u) {
    if (u != report.apex && two_reaches(o, u, report.apex).value >= 2) in_witness[u] = true;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!in_witness[u]) continue;
    report.witness.push_back(u);
    if (o.indegree(u) < k - 1) {
      report.violations.push_back("vertex " + std::to_string(u) + " has indegree " +
                                  std::to_string(o.indegree(u)) + " < k-1 and two-reaches " +
                                  std::to_string(report.apex));
    }
  }

  std::vector<bool> outside(n);
  for (Vertex v = 0; v < n; ++v) outside[v] = !in_witness[v];
  const InducedSubgraph rest = induced_subgraph(g, outside);
  std::vector<int> component;
  const int count = connected_components(rest.graph, component);
  std::vector<int> arcs_in(count, 0);
  std::vector<int> component_of(n, -1);
  for (Vertex i = 0; i < rest.graph.num_vertices(); ++i) component_of[rest.original[i]] = component[i];
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_witness[o.tail(e)] && in_witness[o.head(e)]) ++arcs_in[component_of[o.tail(e)]];
  }
  std::vector<Vertex> representative(count, -1);
  for (Vertex i = rest.graph.num_vertices() - 1; i >= 0; --i) representative[component[i]] = rest.original[i];
  for (int c = 0; c < count; ++c) {
    if (arcs_in[c] != 1) {
      report.violations.push_back("outside component of vertex " + std::to_string(representative[c]) +
                                  " sends " + std::to_string(arcs_in[c]) +
                                  " arcs into the witness set");
    }
  }
  report.witness_bound = subset_bound(g, in_witness);
  if (report.witness_bound.bound != k) {
    report.violations.push_back("witness subset bound " + std::to_string(report.witness_bound.bound) +
                                " differs from maximum indegree " + std::to_string(k));
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace egal
