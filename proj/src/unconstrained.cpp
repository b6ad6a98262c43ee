#include "egal/unconstrained.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "egal/errors.hpp"

namespace egal {

bool is_directed_path(const Orientation& o, const DirectedPath& p) {
  const int n = o.num_vertices();
  if (p.start < 0 || p.start >= n || p.end < 0 || p.end >= n) return false;
  if (p.arcs.empty()) return p.start == p.end;
  std::vector<bool> seen(o.num_edges(), false);
  Vertex at = p.start;
  for (EdgeId e : p.arcs) {
    if (e < 0 || e >= o.num_edges() || seen[e] || o.tail(e) != at) return false;
    seen[e] = true;
    at = o.head(e);
  }
  return at == p.end;
}

void reverse_path(Orientation& o, const DirectedPath& p) {
  if (!is_directed_path(o, p)) throw ContractViolation("not a directed path in the orientation");
  for (EdgeId e : p.arcs) o.flip(e);
}

std::optional<DirectedPath> find_reversible_path(const Orientation& o) {
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;

  std::vector<Vertex> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Vertex a, Vertex b) { return o.indegree(a) > o.indegree(b); });
  const int lowest = o.indegree(candidates.back());

  std::vector<EdgeId> toward(n);  // arc leaving a visited vertex toward the target
  std::vector<int> stamp(n, -1);
  std::deque<Vertex> queue;

  for (Vertex target : candidates) {
    const int threshold = o.indegree(target) - 1;
    if (lowest >= threshold) break;
    queue.assign(1, target);
    stamp[target] = target;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incidence(x)) {
        Vertex y = inc.other;
        if (o.head(inc.edge) != x || stamp[y] == target) continue;
        stamp[y] = target;
        toward[y] = inc.edge;
        if (o.indegree(y) < threshold) {
          DirectedPath p{y, target, {}};
          for (Vertex at = y; at != target; at = o.head(toward[at])) p.arcs.push_back(toward[at]);
          return p;
        }
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

Orientation arbitrary_orientation(const UndirectedGraph& g, std::optional<std::uint64_t> seed) {
  Orientation o(g);
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rng() & 1U) o.flip(e);
    }
  }
  return o;
}

ReversalResult path_reversal(const UndirectedGraph& g, std::optional<std::uint64_t> seed) {
  return path_reversal(arbitrary_orientation(g, seed));
}

ReversalResult path_reversal(Orientation initial) {
  ReversalResult result{std::move(initial), {}};
  Orientation& o = result.orientation;
  const int limit = o.num_edges();
  while (auto p = find_reversible_path(o)) {
    if (static_cast<int>(result.trace.size()) >= limit) {
      throw InternalError("path reversal exceeded m reversals");
    }
    result.trace.push_back(
        {p->start, p->end, o.indegree(p->end), static_cast<int>(p->arcs.size())});
    reverse_path(o, *p);
  }
  return result;
}

bool is_directed_cycle(const Orientation& o, const ArcCycle& cycle) {
  if (cycle.empty()) return false;
  DirectedPath p{o.tail(cycle.front()), o.tail(cycle.front()), cycle};
  return is_directed_path(o, p);
}

void reverse_cycle(Orientation& o, const ArcCycle& cycle) {
  if (!is_directed_cycle(o, cycle)) throw ContractViolation("not a directed cycle");
  for (EdgeId e : cycle) o.flip(e);
}

std::vector<ArcCycle> cycle_reversal_sequence(const Orientation& from, const Orientation& to) {
  if (&from.graph() != &to.graph()) {
    throw ContractViolation("orientations of different graphs");
  }
  const UndirectedGraph& g = from.graph();
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (from.indegree(v) != to.indegree(v)) {
      throw ContractViolation("indegree of vertex " + std::to_string(v) + " differs");
    }
  }

  // Disagreeing arcs form a balanced digraph; peel simple cycles off a walk.
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (from.head(e) != to.head(e)) out[from.tail(e)].push_back(e);
  }
  std::vector<size_t> next(n, 0);
  std::vector<int> on_stack(n, -1);
  std::vector<ArcCycle> cycles;
  std::vector<Vertex> stack;
  std::vector<EdgeId> arcs;

  for (Vertex s = 0; s < n; ++s) {
    while (next[s] < out[s].size()) {
      stack.assign(1, s);
      on_stack[s] = 0;
      arcs.clear();
      Vertex at = s;
      do {
        if (next[at] >= out[at].size()) throw InternalError("unbalanced difference digraph");
        EdgeId e = out[at][next[at]++];
        Vertex w = from.head(e);
        arcs.push_back(e);
        if (on_stack[w] >= 0) {
          const int k = on_stack[w];
          cycles.emplace_back(arcs.begin() + k, arcs.end());
          arcs.resize(k);
          for (size_t i = k + 1; i < stack.size(); ++i) on_stack[stack[i]] = -1;
          stack.resize(k + 1);
        } else {
          on_stack[w] = static_cast<int>(stack.size());
          stack.push_back(w);
        }
        at = w;
      } while (!arcs.empty());
      on_stack[s] = -1;
    }
  }
  return cycles;
}

std::vector<std::pair<Vertex, Vertex>> weak_reversal_candidates(const Orientation& o) {
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<int> stamp(n, -1);
  std::vector<Vertex> stack;
  for (Vertex u = 0; u < n; ++u) {
    stamp[u] = u;
    stack.assign(1, u);
    std::vector<Vertex> reached;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incidence(x)) {
        if (o.tail(inc.edge) != x || stamp[inc.other] == u) continue;
        stamp[inc.other] = u;
        stack.push_back(inc.other);
        if (o.indegree(u) == o.indegree(inc.other) - 1) reached.push_back(inc.other);
      }
    }
    std::sort(reached.begin(), reached.end());
    for (Vertex v : reached) pairs.emplace_back(u, v);
  }
  return pairs;
}

ConvexCost::ConvexCost(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("cost table is empty");
  for (size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i] > values_[i - 1])) throw DomainError("cost is not increasing");
    if (i >= 2 && !(values_[i] - values_[i - 1] > values_[i - 1] - values_[i - 2])) {
      throw DomainError("cost is not strictly convex");
    }
  }
}

ConvexCost ConvexCost::square(int max_argument) {
  std::vector<double> v(max_argument + 1);
  for (int i = 0; i <= max_argument; ++i) v[i] = static_cast<double>(i) * i;
  return ConvexCost(std::move(v));
}

ConvexCost ConvexCost::pow2(int max_argument) {
  std::vector<double> v(max_argument + 1);
  for (int i = 0; i <= max_argument; ++i) v[i] = std::ldexp(1.0, i);
  return ConvexCost(std::move(v));
}

double ConvexCost::operator()(int indegree) const {
  if (indegree < 0 || indegree > max_argument()) {
    throw DomainError("cost undefined at indegree " + std::to_string(indegree));
  }
  return values_[indegree];
}

double convex_cost(const Orientation& o, const ConvexCost& f) {
  double total = 0.0;
  for (int d : o.indegrees()) total += f(d);
  return total;
}

}  // namespace egal
