#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "egal/graph.hpp"

namespace egal {

/// Arcs chained head-to-tail from start to end. An empty arc list is the
/// trivial path at start (start == end).
struct DirectedPath {
  Vertex start = 0;
  Vertex end = 0;
  std::vector<EdgeId> arcs;
};

bool is_directed_path(const Orientation& o, const DirectedPath& p);

/// Flips every arc of p. Indegree of p.start rises by one and of p.end drops
/// by one. Throws ContractViolation if p is not a directed path in o.
void reverse_path(Orientation& o, const DirectedPath& p);

/// Reversible path (indegree gap of at least two between start and end)
/// whose end has the highest indegree among all such paths; nullopt if none.
/// Candidates ends are tried by decreasing indegree then ascending id, and
/// the start is the first qualifying vertex of a backward BFS.
std::optional<DirectedPath> find_reversible_path(const Orientation& o);

/// Each edge toward its larger endpoint, or uniformly at random when seeded.
Orientation arbitrary_orientation(const UndirectedGraph& g,
                                  std::optional<std::uint64_t> seed = std::nullopt);

struct ReversalStep {
  Vertex start;
  Vertex end;
  int end_indegree;  // indegree of end just before the reversal
  int length;
};

struct ReversalResult {
  Orientation orientation;
  std::vector<ReversalStep> trace;
};

/// Minimum-lexicographic orientation by repeated reversal of reversible
/// paths. Aborts with InternalError if more than m reversals happen.
ReversalResult path_reversal(const UndirectedGraph& g,
                             std::optional<std::uint64_t> seed = std::nullopt);
ReversalResult path_reversal(Orientation initial);

using ArcCycle = std::vector<EdgeId>;

bool is_directed_cycle(const Orientation& o, const ArcCycle& cycle);
void reverse_cycle(Orientation& o, const ArcCycle& cycle);

/// Splits the arcs on which from and to disagree into arc-disjoint simple
/// directed cycles of from. Reversing them all turns from into to.
/// Requires equal per-vertex indegrees (ContractViolation otherwise).
std::vector<ArcCycle> cycle_reversal_sequence(const Orientation& from, const Orientation& to);

/// All (u, v) with a directed u-to-v path and indegree(u) == indegree(v) - 1.
std::vector<std::pair<Vertex, Vertex>> weak_reversal_candidates(const Orientation& o);

/// Increasing, strictly convex cost on indegrees 0..max_argument().
class ConvexCost {
 public:
  /// values[i] is the cost of indegree i. Throws DomainError unless the
  /// table is strictly increasing and strictly convex.
  explicit ConvexCost(std::vector<double> values);

  static ConvexCost square(int max_argument);
  static ConvexCost pow2(int max_argument);

  double operator()(int indegree) const;
  int max_argument() const { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<double> values_;
};

/// Sum of f over all vertex indegrees.
double convex_cost(const Orientation& o, const ConvexCost& f);

}  // namespace egal
