#pragma once

// Graph corpora and independent reference checks shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "egal/graph.hpp"

namespace egal::testing {

inline UndirectedGraph make_graph(int n, std::vector<Edge> edges) {
  return UndirectedGraph(n, std::move(edges));
}

inline UndirectedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return UndirectedGraph(n, std::move(edges));
}

inline UndirectedGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, std::move(edges));
}

inline UndirectedGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return UndirectedGraph(n, std::move(edges));
}

// Plain BFS connectivity, independent of the library's component code.
inline bool reference_connected(int n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

// Connected and no edge whose deletion disconnects the graph.
inline bool reference_bridgeless(int n, const std::vector<Edge>& edges) {
  if (!reference_connected(n, edges)) return false;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i != skip) rest.push_back(edges[i]);
    }
    if (!reference_connected(n, rest)) return false;
  }
  return true;
}

// Every labeled simple graph on n vertices, in edge-mask order.
inline std::vector<UndirectedGraph> all_labeled_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<UndirectedGraph> out;
  const std::uint32_t total = 1U << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(pairs[i]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline std::vector<Edge> edge_list(const UndirectedGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

// All labeled graphs with 1..max_n vertices passing the filter.
inline std::vector<UndirectedGraph> small_graphs(
    int max_n, const std::function<bool(int, const std::vector<Edge>&)>& keep) {
  std::vector<UndirectedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& g : all_labeled_graphs(n)) {
      if (keep(g.num_vertices(), edge_list(g))) out.push_back(std::move(g));
    }
  }
  return out;
}

inline std::vector<UndirectedGraph> small_connected_graphs(int max_n) {
  return small_graphs(max_n, reference_connected);
}

// Bridgeless connected graphs need at least three vertices to have edges.
inline std::vector<UndirectedGraph> small_bridgeless_graphs(int max_n) {
  return small_graphs(max_n, [](int n, const std::vector<Edge>& e) {
    return n >= 3 && reference_bridgeless(n, e);
  });
}

// Connected multigraph: random spanning tree plus extra edges, some of
// which repeat an existing pair.
inline UndirectedGraph random_connected_multigraph(std::mt19937_64& rng, int n, int m) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution repeat(0.15);
  while (static_cast<int>(edges.size()) < m) {
    if (repeat(rng)) {
      std::uniform_int_distribution<std::size_t> which(0, edges.size() - 1);
      Edge e = edges[which(rng)];
      edges.push_back({e.v, e.u});
      continue;
    }
    int u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return UndirectedGraph(n, std::move(edges));
}

// Connected graphs with at most max_m edges, n in [2, max_n].
inline std::vector<UndirectedGraph> random_connected_corpus(std::uint64_t seed, int count,
                                                            int max_n, int max_m) {
  std::mt19937_64 rng(seed);
  std::vector<UndirectedGraph> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<int> pick_n(2, max_n);
    const int n = pick_n(rng);
    if (n - 1 > max_m) continue;
    std::uniform_int_distribution<int> pick_m(n - 1, max_m);
    out.push_back(random_connected_multigraph(rng, n, pick_m(rng)));
  }
  return out;
}

// Bridgeless graphs with at most max_m edges, by rejection.
inline std::vector<UndirectedGraph> random_bridgeless_corpus(std::uint64_t seed, int count,
                                                             int max_n, int max_m) {
  std::mt19937_64 rng(seed);
  std::vector<UndirectedGraph> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<int> pick_n(3, max_n);
    const int n = pick_n(rng);
    if (n > max_m) continue;
    std::uniform_int_distribution<int> pick_m(n, max_m);
    UndirectedGraph g = random_connected_multigraph(rng, n, pick_m(rng));
    if (reference_bridgeless(n, edge_list(g))) out.push_back(std::move(g));
  }
  return out;
}

// Tarjan's algorithm; returns the number of strongly connected components.
inline int reference_scc_count(const Orientation& o) {
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) out[o.tail(e)].push_back(o.head(e));
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, components = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : out[v]) {
      if (index[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      ++components;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
      } while (w != v);
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] == -1) visit(v);
  }
  return components;
}

inline bool reference_strongly_connected(const Orientation& o) {
  return reference_scc_count(o) <= 1;
}

// Acyclic iff every strongly connected component is a single vertex.
inline bool reference_acyclic(const Orientation& o) {
  return reference_scc_count(o) == o.num_vertices();
}

// Sorted multiset of per-vertex indegrees.
inline std::vector<int> sorted_indegrees(const Orientation& o) {
  std::vector<int> d(o.indegrees().begin(), o.indegrees().end());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace egal::testing
