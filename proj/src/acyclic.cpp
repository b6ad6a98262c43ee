#include "egal/acyclic.hpp"

#include <algorithm>
#include <set>

#include "egal/errors.hpp"

namespace egal {

std::pair<StrippingOrder, Orientation> stripping(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> remaining(n);
  int max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    max_degree = std::max(max_degree, remaining[v]);
  }
  // Buckets keyed by remaining degree, each ordered by vertex id.
  std::vector<std::set<Vertex>> bucket(max_degree + 1);
  for (Vertex v = 0; v < n; ++v) bucket[remaining[v]].insert(v);

  std::vector<bool> removed(n, false);
  std::vector<Vertex> heads(g.num_edges(), -1);
  StrippingOrder result;
  result.order.reserve(n);
  int low = 0;
  for (int step = 0; step < n; ++step) {
    while (bucket[low].empty()) ++low;
    const Vertex x = *bucket[low].begin();
    bucket[low].erase(bucket[low].begin());
    removed[x] = true;
    result.order.push_back(x);
    result.peak = std::max(result.peak, remaining[x]);
    for (const auto& inc : g.incidence(x)) {
      if (removed[inc.other]) continue;
      heads[inc.edge] = x;
      const Vertex y = inc.other;
      bucket[remaining[y]].erase(y);
      --remaining[y];
      bucket[remaining[y]].insert(y);
      low = std::min(low, remaining[y]);
    }
  }
  return {std::move(result), Orientation(g, std::move(heads))};
}

int degeneracy(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> remaining(n);
  for (Vertex v = 0; v < n; ++v) remaining[v] = g.degree(v);
  std::vector<bool> alive(n, true);
  int alive_count = n;
  int k = 0;
  while (alive_count > 0) {
    // Peel everything below k + 1; if the (k + 1)-core is empty, k is the answer.
    std::vector<bool> keep = alive;
    std::vector<int> degree = remaining;
    int keep_count = alive_count;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < n; ++v) {
        if (!keep[v] || degree[v] > k) continue;
        keep[v] = false;
        --keep_count;
        changed = true;
        for (const auto& inc : g.incidence(v)) {
          if (keep[inc.other]) --degree[inc.other];
        }
      }
    }
    if (keep_count == 0) return k;
    alive = std::move(keep);
    remaining = std::move(degree);
    alive_count = keep_count;
    ++k;
  }
  return k;
}

bool verify_acyclic(const Orientation& o) {
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  std::vector<int> indegree(o.indegrees().begin(), o.indegrees().end());
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int emitted = 0;
  while (!ready.empty()) {
    Vertex x = ready.back();
    ready.pop_back();
    ++emitted;
    for (const auto& inc : g.incidence(x)) {
      if (o.tail(inc.edge) == x && --indegree[inc.other] == 0) ready.push_back(inc.other);
    }
  }
  return emitted == n;
}

bool is_t_strippable(const UndirectedGraph& g, int t) {
  if (t < 0) throw ContractViolation("strippability threshold must be nonnegative");
  return stripping(g).first.peak <= t;
}

}  // namespace egal
