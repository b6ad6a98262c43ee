#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egal/graph.hpp"

namespace egal {

/// A directed path or cycle; arcs[j] runs vertices[j] -> vertices[j + 1].
struct Ear {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> arcs;
};

/// Ear 0 is a simple directed cycle; every later ear meets the union of the
/// earlier ones exactly at its endpoints (equal endpoints make it a cycle).
struct EarDecomposition {
  std::vector<Ear> ears;
};

/// nullopt when d is a valid ear decomposition of o, else the first problem.
std::optional<std::string> validate_ear_decomposition(const Orientation& o,
                                                      const EarDecomposition& d);

/// Ear 0 is a cycle through vertex 0 closed along a BFS tree; later ears
/// leave an already covered vertex by an unused arc and run through new
/// vertices until they hit a covered one. Requires n >= 2 and strong
/// connectivity (DomainError otherwise).
EarDecomposition ear_decomposition(const Orientation& o);

/// Ear 0 is a cycle through hub, and every other out-arc of hub starts an
/// ear of at least two arcs, so hub keeps one routing interval per out-arc.
/// Tries each out-arc of hub as the cycle's first arc; nullopt when the
/// greedy search cannot avoid a single-arc ear at hub.
std::optional<EarDecomposition> hub_ear_decomposition(const Orientation& o, Vertex hub);

/// Cyclic vertex order supporting insert-after, over vertex ids < universe.
class CyclicOrdering {
 public:
  explicit CyclicOrdering(int universe = 0);

  /// Resets the order to the given cycle.
  void assign(std::span<const Vertex> cycle);
  void insert_after(Vertex anchor, Vertex v);

  bool contains(Vertex v) const { return next_[v] != -1; }
  Vertex next(Vertex v) const { return next_[v]; }
  Vertex prev(Vertex v) const { return prev_[v]; }
  int size() const { return size_; }

  /// Members in cyclic order starting at from.
  std::vector<Vertex> sequence(Vertex from) const;

 private:
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
  int size_ = 0;
};

/// Interval of the cyclic ordering attached to one arc. (a, a) is every
/// member except a; endpoints are open unless flagged closed.
struct IntervalLabel {
  EdgeId arc = -1;
  Vertex tail = -1;
  Vertex head = -1;
  bool used = false;  // false for arcs of single-arc ears
  Vertex lo = -1;
  Vertex hi = -1;
  bool lo_closed = false;
  bool hi_closed = false;
};

std::string to_string(const IntervalLabel& label);

/// Ordering plus one label per edge id, as produced by build_routing.
struct SymbolicRouting {
  CyclicOrdering ordering;
  std::vector<IntervalLabel> labels;
  Vertex anchor = 0;  // first vertex of ear 0; gets number 0
};

bool interval_contains(const CyclicOrdering& ordering, const IntervalLabel& label, Vertex w);

/// Per-vertex partition check over the vertices currently in the ordering:
/// the used out-labels of v are disjoint and cover every member but v.
std::optional<std::string> check_partition(const SymbolicRouting& routing);

using EarObserver = std::function<void(std::size_t ear_index, const SymbolicRouting&)>;

/// Interval labelling driven by an ear decomposition. The observer, when
/// set, runs after ear 0 and after each later ear.
SymbolicRouting build_routing(const Orientation& o, const EarDecomposition& d,
                              const EarObserver& observer = {});

/// Closed cyclic interval [lo, hi] of vertex numbers.
struct NumericInterval {
  int lo = 0;
  int hi = 0;

  bool contains(int x, int n) const { return (x - lo + n) % n <= (hi - lo + n) % n; }
  bool operator==(const NumericInterval&) const = default;
};

struct TableEntry {
  EdgeId arc;
  Vertex tail;
  Vertex head;
  std::optional<NumericInterval> interval;  // nullopt: arc unused for routing
};

/// Finalized, immutable interval routing scheme.
class RoutingTables {
 public:
  RoutingTables(std::vector<Vertex> order, std::vector<TableEntry> entries);

  int num_vertices() const { return static_cast<int>(order_.size()); }
  int number(Vertex v) const { return number_[v]; }
  Vertex vertex_at(int number) const { return order_[number]; }
  std::span<const Vertex> order() const { return order_; }
  std::span<const TableEntry> entries() const { return entries_; }
  std::span<const int> out_entries(Vertex v) const { return out_[v]; }

  /// Intervals stored at v (used out-arcs only).
  int table_size(Vertex v) const;
  int max_table_size() const;

 private:
  std::vector<Vertex> order_;
  std::vector<int> number_;
  std::vector<TableEntry> entries_;
  std::vector<std::vector<int>> out_;
};

/// Numbers vertices by cyclic position from the anchor and closes every
/// open endpoint: (a, b) becomes [succ(a), pred(b)].
RoutingTables finalize_numeric(const SymbolicRouting& routing);

std::optional<std::string> check_partition(const RoutingTables& tables);

/// Arcs followed by a message from s to t. InternalError if some hop has no
/// matching interval or the walk exceeds n * m hops.
std::vector<EdgeId> route(const RoutingTables& tables, Vertex s, Vertex t);

/// Strong orientation of minimum maximum outdegree (the strong min-max
/// indegree orientation reversed) and its interval routing tables.
RoutingTables min_outdegree_routing(const UndirectedGraph& g);

}  // namespace egal
