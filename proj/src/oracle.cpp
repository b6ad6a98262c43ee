#include "egal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "egal/acyclic.hpp"
#include "egal/errors.hpp"
#include "egal/strong.hpp"

namespace egal {

namespace {

struct Best {
  bool found = false;
  std::uint64_t index = 0;
  int max_indegree = 0;
  std::vector<int> sequence;
  double cost = 0.0;
  std::uint64_t feasible = 0;
};

// Bitmask digraph checks for graphs with at most 64 vertices.
class SmallDigraph {
 public:
  explicit SmallDigraph(int n) : n_(n), out_(n), in_(n) {}

  void reset() {
    std::fill(out_.begin(), out_.end(), 0);
    std::fill(in_.begin(), in_.end(), 0);
  }
  void add(Vertex tail, Vertex head) {
    out_[tail] |= bit(head);
    in_[head] |= bit(tail);
  }

  bool strongly_connected() const {
    if (n_ <= 1) return true;
    return closure(out_) == all() && closure(in_) == all();
  }

  bool acyclic() const {
    std::uint64_t left = all();
    while (left) {
      bool progressed = false;
      for (std::uint64_t scan = left; scan; scan &= scan - 1) {
        const int v = __builtin_ctzll(scan);
        if ((in_[v] & left) == 0) {
          left &= ~bit(v);
          progressed = true;
        }
      }
      if (!progressed) return false;
    }
    return true;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t all() const { return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1; }

  std::uint64_t closure(const std::vector<std::uint64_t>& adj) const {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctzll(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  int n_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// True when the candidate strictly beats the incumbent.
bool better(const OracleQuery& q, int max_indegree, const std::vector<int>& sequence, double cost,
            const Best& incumbent) {
  if (!incumbent.found) return true;
  switch (q.objective) {
    case Objective::MinMaxIndegree:
      return max_indegree < incumbent.max_indegree;
    case Objective::MinLexSequence:
      return sequence < incumbent.sequence;
    case Objective::MinConvexCost:
      return cost < incumbent.cost;
  }
  return false;
}

Best search_range(const UndirectedGraph& g, const OracleQuery& q, std::uint64_t lo,
                  std::uint64_t hi) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const bool small = n <= 64;
  SmallDigraph digraph(small ? n : 0);
  std::vector<Vertex> heads(m);
  std::vector<int> indegree(n);
  std::vector<int> sequence;
  Best best;
  for (std::uint64_t index = lo; index < hi; ++index) {
    std::fill(indegree.begin(), indegree.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      heads[e] = ((index >> e) & 1U) ? g.edge(e).u : g.edge(e).v;
      ++indegree[heads[e]];
    }
    if (q.constraint != Constraint::None) {
      bool ok = false;
      if (small) {
        digraph.reset();
        for (EdgeId e = 0; e < m; ++e) digraph.add(g.opposite(e, heads[e]), heads[e]);
        ok = q.constraint == Constraint::StronglyConnected ? digraph.strongly_connected()
                                                           : digraph.acyclic();
      } else {
        Orientation o(g, heads);
        ok = q.constraint == Constraint::StronglyConnected ? is_strongly_connected(o)
                                                           : verify_acyclic(o);
      }
      if (!ok) continue;
    }
    ++best.feasible;
    const int max_indegree = n == 0 ? 0 : *std::max_element(indegree.begin(), indegree.end());
    double cost = 0.0;
    if (q.objective == Objective::MinConvexCost) {
      for (int d : indegree) cost += (*q.cost)(d);
    }
    if (q.objective == Objective::MinLexSequence) {
      sequence = indegree;
      std::sort(sequence.begin(), sequence.end(), std::greater<>());
    }
    if (better(q, max_indegree, sequence, cost, best)) {
      best.found = true;
      best.index = index;
      best.max_indegree = max_indegree;
      best.sequence = sequence;
      best.cost = cost;
    }
  }
  return best;
}

}  // namespace

Orientation orientation_from_index(const UndirectedGraph& g, std::uint64_t index) {
  std::vector<Vertex> heads(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    heads[e] = ((index >> e) & 1U) ? g.edge(e).u : g.edge(e).v;
  }
  return Orientation(g, std::move(heads));
}

std::optional<OracleResult> oracle_solve(const UndirectedGraph& g, const OracleQuery& q) {
  const int m = g.num_edges();
  if (m > kMaxOracleEdges) {
    throw DomainError("oracle refuses m = " + std::to_string(m) + " > " +
                      std::to_string(kMaxOracleEdges));
  }
  if (q.objective == Objective::MinConvexCost) {
    if (!q.cost) throw ContractViolation("convex objective without a cost function");
    if (q.cost->max_argument() < m) {
      throw DomainError("cost function undefined up to indegree " + std::to_string(m));
    }
  }
  const std::uint64_t total = std::uint64_t{1} << m;

  int shards = q.shards > 0 ? q.shards : static_cast<int>(std::thread::hardware_concurrency());
  if (total < (std::uint64_t{1} << 14)) shards = 1;
  shards = std::clamp(shards, 1, 64);

  std::vector<Best> partial(shards);
  if (shards == 1) {
    partial[0] = search_range(g, q, 0, total);
  } else {
    std::vector<std::thread> workers;
    for (int s = 0; s < shards; ++s) {
      const std::uint64_t lo = total * s / shards;
      const std::uint64_t hi = total * (s + 1) / shards;
      workers.emplace_back([&, s, lo, hi] { partial[s] = search_range(g, q, lo, hi); });
    }
    for (auto& w : workers) w.join();
  }

  // Shards cover ascending index ranges, so merging in order keeps the
  // lowest-index optimum on ties.
  Best best;
  std::uint64_t feasible = 0;
  for (const Best& p : partial) {
    feasible += p.feasible;
    if (p.found && better(q, p.max_indegree, p.sequence, p.cost, best)) best = p;
  }
  if (!best.found) return std::nullopt;

  Orientation witness = orientation_from_index(g, best.index);
  OracleResult result{witness.max_indegree(), indegree_sequence(witness), 0.0, best.index,
                      witness, feasible};
  if (q.cost) result.cost = convex_cost(witness, *q.cost);
  return result;
}

}  // namespace egal
