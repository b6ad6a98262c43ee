#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egal/graph.hpp"
#include "egal/unconstrained.hpp"

namespace egal {

/// Lowest-id bridge of g, if any.
std::optional<EdgeId> find_bridge(const UndirectedGraph& g);

/// Throws NotStronglyOrientable naming a bridge or an unreachable vertex
/// when g is disconnected or has a bridge.
void require_strongly_orientable(const UndirectedGraph& g);

/// DFS tree from vertex 0: tree edges point away from the root, every other
/// edge points to its ancestor endpoint.
Orientation initial_strong_orientation(const UndirectedGraph& g);

bool is_strongly_connected(const Orientation& o);

/// Unit-capacity u-to-v flow, stopped at value 2.
struct FlowResult {
  int value = 0;
  std::vector<DirectedPath> paths;  // arc-disjoint, one per unit of flow
};

/// At most two augmenting-path rounds; when value is 2, paths holds two
/// arc-disjoint u-to-v paths taken from the flow decomposition.
FlowResult two_reaches(const Orientation& o, Vertex u, Vertex v);

/// With k the maximum indegree: a path, taken from a two-path flow
/// decomposition, from some u with indegree below k-1 to some v with
/// indegree k such that u two-reaches v. Reversing it keeps o strongly
/// connected. Ends are scanned in ascending id, starts by ascending
/// (indegree, id).
std::optional<DirectedPath> find_strongly_reversible_path(const Orientation& o);

/// Strongly connected orientation minimizing the maximum indegree.
ReversalResult sc_path_reversal(const UndirectedGraph& g);
ReversalResult sc_path_reversal(Orientation initial);

/// Counting data for the subset lower bound of a vertex set U.
struct SubsetBound {
  int size = 0;
  int inside_edges = 0;        // m(U)
  int outside_components = 0;  // components of G[V \ U]
  int bound = 0;               // ceil((m(U) + c(U)) / |U|)
};

SubsetBound subset_bound(const UndirectedGraph& g, const std::vector<bool>& in_subset);

inline constexpr int kMaxLowerBoundVertices = 20;

/// Max of the subset bound over every nonempty U. Exponential; refuses
/// graphs with more than kMaxLowerBoundVertices vertices (DomainError).
int sc_lower_bound(const UndirectedGraph& g);

struct StructureReport {
  bool ok = false;
  int max_indegree = 0;
  Vertex apex = 0;             // lowest-id vertex of maximum indegree
  std::vector<Vertex> witness; // apex plus every vertex that two-reaches it
  SubsetBound witness_bound;
  std::vector<std::string> violations;
};

/// Optimality certificate for a strongly connected orientation: all of the
/// witness set sits at indegree k or k-1, every component outside it sends
/// exactly one arc in, and the witness subset bound equals k.
StructureReport check_one_edge_structure(const Orientation& o);

}  // namespace egal
