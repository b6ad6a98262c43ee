#include "egal/routing.hpp"

#include <algorithm>
#include <deque>

#include "egal/errors.hpp"
#include "egal/strong.hpp"
#include "egal/unconstrained.hpp"

namespace egal {

namespace {

bool ear_follows_orientation(const Orientation& o, const Ear& ear) {
  if (ear.arcs.empty() || ear.vertices.size() != ear.arcs.size() + 1) return false;
  for (size_t j = 0; j < ear.arcs.size(); ++j) {
    EdgeId e = ear.arcs[j];
    if (e < 0 || e >= o.num_edges()) return false;
    if (o.tail(e) != ear.vertices[j] || o.head(e) != ear.vertices[j + 1]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> validate_ear_decomposition(const Orientation& o,
                                                      const EarDecomposition& d) {
  const int n = o.num_vertices();
  if (d.ears.empty()) return "no ears";
  std::vector<int> arc_uses(o.num_edges(), 0);
  std::vector<bool> covered(n, false);
  for (size_t i = 0; i < d.ears.size(); ++i) {
    const Ear& ear = d.ears[i];
    const std::string which = "ear " + std::to_string(i);
    if (!ear_follows_orientation(o, ear)) return which + " does not follow the orientation";
    for (Vertex v : ear.vertices) {
      if (v < 0 || v >= n) return which + " has a vertex out of range";
    }
    for (EdgeId e : ear.arcs) ++arc_uses[e];
    const Vertex first = ear.vertices.front();
    const Vertex last = ear.vertices.back();
    std::vector<Vertex> inner(ear.vertices.begin() + 1, ear.vertices.end() - 1);
    if (i == 0) {
      if (first != last) return which + " is not a cycle";
      inner.push_back(first);
    } else {
      if (!covered[first] || !covered[last]) return which + " does not start and end on earlier ears";
    }
    std::vector<Vertex> sorted = inner;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return which + " is not simple";
    }
    for (Vertex v : inner) {
      if (covered[v]) return which + " meets earlier ears at internal vertex " + std::to_string(v);
      if (i > 0 && (v == first || v == last)) return which + " is not simple";
    }
    for (Vertex v : ear.vertices) covered[v] = true;
  }
  for (EdgeId e = 0; e < o.num_edges(); ++e) {
    if (arc_uses[e] != 1) {
      return "arc " + std::to_string(e) + " used " + std::to_string(arc_uses[e]) + " times";
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) return "vertex " + std::to_string(v) + " not covered";
  }
  return std::nullopt;
}

namespace {

// Grows an ear decomposition ear by ear, tracking covered vertices and
// consumed arcs.
class EarBuilder {
 public:
  explicit EarBuilder(const Orientation& o)
      : o_(o), g_(o.graph()), used_(g_.num_edges(), false), covered_(g_.num_vertices(), false),
        via_(g_.num_vertices(), -1), stamp_(g_.num_vertices(), -1) {}

  // Arcs of a BFS path from `from` to the first vertex accepted by `stop`,
  // through unused arcs and vertices accepted by `pass`; nullopt if none.
  template <class Stop, class Pass>
  std::optional<std::vector<EdgeId>> search(Vertex from, Stop stop, Pass pass) {
    ++round_;
    stamp_[from] = round_;
    std::deque<Vertex> queue{from};
    while (!queue.empty()) {
      const Vertex at = queue.front();
      queue.pop_front();
      for (const auto& inc : g_.incidence(at)) {
        if (used_[inc.edge] || o_.tail(inc.edge) != at) continue;
        if (stop(inc.other)) {
          std::vector<EdgeId> arcs{inc.edge};
          for (Vertex x = at; x != from; x = o_.tail(via_[x])) arcs.push_back(via_[x]);
          std::reverse(arcs.begin(), arcs.end());
          return arcs;
        }
        if (stamp_[inc.other] == round_ || !pass(inc.other)) continue;
        stamp_[inc.other] = round_;
        via_[inc.other] = inc.edge;
        queue.push_back(inc.other);
      }
    }
    return std::nullopt;
  }

  // Appends the ear formed by arcs, starting at their first tail.
  void add(const std::vector<EdgeId>& arcs) {
    Ear ear;
    ear.vertices.push_back(o_.tail(arcs.front()));
    for (EdgeId e : arcs) {
      ear.vertices.push_back(o_.head(e));
      used_[e] = true;
    }
    ear.arcs = arcs;
    for (Vertex v : ear.vertices) {
      if (!covered_[v]) {
        covered_[v] = true;
        covered_order_.push_back(v);
      }
    }
    d_.ears.push_back(std::move(ear));
  }

  // Every remaining arc, taken from covered vertices in covering order:
  // an arc into an uncovered vertex continues through uncovered vertices
  // until it lands back on a covered one.
  EarDecomposition finish() {
    for (size_t idx = 0; idx < covered_order_.size(); ++idx) {
      const Vertex x = covered_order_[idx];
      for (const auto& first : g_.incidence(x)) {
        if (used_[first.edge] || o_.tail(first.edge) != x) continue;
        std::vector<EdgeId> arcs{first.edge};
        if (!covered_[first.other]) {
          auto rest = search(
              first.other, [&](Vertex v) { return covered_[v]; }, [](Vertex) { return true; });
          if (!rest) throw InternalError("ear search found no way back");
          arcs.insert(arcs.end(), rest->begin(), rest->end());
        }
        add(arcs);
      }
    }
    return std::move(d_);
  }

  bool covered(Vertex v) const { return covered_[v]; }

 private:
  const Orientation& o_;
  const UndirectedGraph& g_;
  std::vector<bool> used_;
  std::vector<bool> covered_;
  std::vector<Vertex> covered_order_;
  std::vector<EdgeId> via_;
  std::vector<int> stamp_;
  int round_ = 0;
  EarDecomposition d_;
};

void require_ear_input(const Orientation& o) {
  if (o.num_vertices() < 2) throw DomainError("ear decomposition needs at least two vertices");
  if (!is_strongly_connected(o)) throw DomainError("orientation is not strongly connected");
}

}  // namespace

EarDecomposition ear_decomposition(const Orientation& o) {
  require_ear_input(o);
  EarBuilder builder(o);
  // Ear 0: first arc into vertex 0, closed by a BFS path from 0 to its tail.
  const UndirectedGraph& g = o.graph();
  EdgeId closing = -1;
  for (const auto& inc : g.incidence(0)) {
    if (o.head(inc.edge) == 0) {
      closing = inc.edge;
      break;
    }
  }
  const Vertex last = o.tail(closing);
  auto arcs = builder.search(0, [&](Vertex v) { return v == last; }, [](Vertex) { return true; });
  if (!arcs) throw InternalError("no cycle through vertex 0");
  arcs->push_back(closing);
  builder.add(*arcs);
  return builder.finish();
}

std::optional<EarDecomposition> hub_ear_decomposition(const Orientation& o, Vertex hub) {
  require_ear_input(o);
  const UndirectedGraph& g = o.graph();
  std::vector<EdgeId> out_arcs;
  std::vector<bool> out_neighbour(g.num_vertices(), false);
  for (const auto& inc : g.incidence(hub)) {
    if (o.tail(inc.edge) == hub) {
      out_arcs.push_back(inc.edge);
      out_neighbour[inc.other] = true;
    }
  }
  auto anything = [](Vertex) { return true; };
  for (EdgeId opening : out_arcs) {
    EarBuilder builder(o);
    const Vertex w = o.head(opening);
    // Close the cycle away from the hub's other out-neighbours when possible.
    auto back = builder.search(
        w, [&](Vertex v) { return v == hub; }, [&](Vertex v) { return !out_neighbour[v]; });
    if (!back) back = builder.search(w, [&](Vertex v) { return v == hub; }, anything);
    if (!back) continue;
    std::vector<EdgeId> cycle{opening};
    cycle.insert(cycle.end(), back->begin(), back->end());
    builder.add(cycle);

    // Open one ear per remaining out-arc, preferring arcs whose ear can
    // avoid the hub's other uncovered out-neighbours.
    std::vector<EdgeId> pending;
    for (EdgeId e : out_arcs) {
      if (e != opening) pending.push_back(e);
    }
    auto landed = [&](Vertex v) { return builder.covered(v); };
    auto clear = [&](Vertex v) { return !out_neighbour[v]; };
    bool ok = true;
    while (!pending.empty()) {
      if (std::any_of(pending.begin(), pending.end(),
                      [&](EdgeId e) { return builder.covered(o.head(e)); })) {
        ok = false;
        break;
      }
      size_t pick = 0;
      std::optional<std::vector<EdgeId>> rest;
      for (size_t i = 0; i < pending.size() && !rest; ++i) {
        rest = builder.search(o.head(pending[i]), landed, clear);
        if (rest) pick = i;
      }
      if (!rest) rest = builder.search(o.head(pending[0]), landed, anything);
      if (!rest) throw InternalError("ear search found no way back");
      std::vector<EdgeId> ear{pending[pick]};
      ear.insert(ear.end(), rest->begin(), rest->end());
      builder.add(ear);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (ok) return builder.finish();
  }
  return std::nullopt;
}

CyclicOrdering::CyclicOrdering(int universe) : next_(universe, -1), prev_(universe, -1) {}

void CyclicOrdering::assign(std::span<const Vertex> cycle) {
  std::fill(next_.begin(), next_.end(), -1);
  std::fill(prev_.begin(), prev_.end(), -1);
  size_ = static_cast<int>(cycle.size());
  for (size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % cycle.size()];
    next_[a] = b;
    prev_[b] = a;
  }
}

void CyclicOrdering::insert_after(Vertex anchor, Vertex v) {
  if (!contains(anchor) || contains(v)) throw ContractViolation("bad cyclic insertion");
  Vertex after = next_[anchor];
  next_[anchor] = v;
  prev_[v] = anchor;
  next_[v] = after;
  prev_[after] = v;
  ++size_;
}

std::vector<Vertex> CyclicOrdering::sequence(Vertex from) const {
  std::vector<Vertex> out;
  if (!contains(from)) return out;
  Vertex at = from;
  do {
    out.push_back(at);
    at = next_[at];
  } while (at != from);
  return out;
}

std::string to_string(const IntervalLabel& label) {
  if (!label.used) return "unused";
  return std::string(label.lo_closed ? "[" : "(") + std::to_string(label.lo) + "," +
         std::to_string(label.hi) + (label.hi_closed ? "]" : ")");
}

bool interval_contains(const CyclicOrdering& ordering, const IntervalLabel& label, Vertex w) {
  if (!label.used || !ordering.contains(w)) return false;
  if (w == label.lo) return label.lo_closed;
  for (Vertex at = ordering.next(label.lo); at != label.lo; at = ordering.next(at)) {
    if (at == label.hi) return w == at && label.hi_closed;
    if (at == w) return true;
  }
  // Wrapped all the way round: lo == hi.
  return false;
}

std::optional<std::string> check_partition(const SymbolicRouting& routing) {
  const CyclicOrdering& ordering = routing.ordering;
  const auto members = ordering.sequence(routing.anchor);
  for (Vertex v : members) {
    std::vector<const IntervalLabel*> mine;
    for (const auto& label : routing.labels) {
      if (label.used && label.tail == v) mine.push_back(&label);
    }
    if (mine.empty()) return "vertex " + std::to_string(v) + " has no labelled out-arc";
    for (Vertex w : members) {
      int hits = 0;
      for (const auto* label : mine) hits += interval_contains(ordering, *label, w) ? 1 : 0;
      const int expected = w == v ? 0 : 1;
      if (hits != expected) {
        return "vertex " + std::to_string(v) + ": member " + std::to_string(w) + " covered " +
               std::to_string(hits) + " times";
      }
    }
  }
  return std::nullopt;
}

SymbolicRouting build_routing(const Orientation& o, const EarDecomposition& d,
                              const EarObserver& observer) {
  if (auto problem = validate_ear_decomposition(o, d)) throw ContractViolation(*problem);
  const UndirectedGraph& g = o.graph();
  SymbolicRouting r{CyclicOrdering(g.num_vertices()), std::vector<IntervalLabel>(g.num_edges()),
                    d.ears.front().vertices.front()};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    r.labels[e].arc = e;
    r.labels[e].tail = o.tail(e);
    r.labels[e].head = o.head(e);
  }
  auto assign = [&](EdgeId e, Vertex lo, bool lo_closed, Vertex hi) {
    IntervalLabel& l = r.labels[e];
    l.used = true;
    l.lo = lo;
    l.lo_closed = lo_closed;
    l.hi = hi;
    l.hi_closed = false;
  };

  const Ear& base = d.ears.front();
  r.ordering.assign(std::span(base.vertices).first(base.arcs.size()));
  for (size_t j = 0; j < base.arcs.size(); ++j) {
    assign(base.arcs[j], base.vertices[j], false, base.vertices[j]);
  }
  if (observer) observer(0, r);

  for (size_t i = 1; i < d.ears.size(); ++i) {
    const Ear& ear = d.ears[i];
    if (ear.arcs.size() >= 2) {
      const Vertex first = ear.vertices.front();
      IntervalLabel* opening = nullptr;
      for (auto& label : r.labels) {
        if (label.used && label.tail == first && label.lo == first && !label.lo_closed) {
          if (opening) {
            throw InternalError("two out-labels of vertex " + std::to_string(first) +
                                " start open at it");
          }
          opening = &label;
        }
      }
      if (!opening) {
        throw InternalError("no out-label of vertex " + std::to_string(first) +
                            " starts open at it");
      }

      const Vertex b = r.ordering.next(first);
      Vertex at = first;
      for (size_t j = 1; j + 1 < ear.vertices.size(); ++j) {
        r.ordering.insert_after(at, ear.vertices[j]);
        at = ear.vertices[j];
        assign(ear.arcs[j], ear.vertices[j], false, ear.vertices[j]);
      }
      opening->lo = b;
      opening->lo_closed = true;
      assign(ear.arcs.front(), first, false, b);
    }
    if (observer) observer(i, r);
  }
  return r;
}

RoutingTables::RoutingTables(std::vector<Vertex> order, std::vector<TableEntry> entries)
    : order_(std::move(order)), number_(order_.size(), -1), entries_(std::move(entries)),
      out_(order_.size()) {
  for (size_t i = 0; i < order_.size(); ++i) number_[order_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < entries_.size(); ++i) out_[entries_[i].tail].push_back(static_cast<int>(i));
}

int RoutingTables::table_size(Vertex v) const {
  int size = 0;
  for (int i : out_[v]) size += entries_[i].interval ? 1 : 0;
  return size;
}

int RoutingTables::max_table_size() const {
  int best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, table_size(v));
  return best;
}

RoutingTables finalize_numeric(const SymbolicRouting& routing) {
  const CyclicOrdering& ordering = routing.ordering;
  std::vector<Vertex> order = ordering.sequence(routing.anchor);
  const int n = static_cast<int>(order.size());
  std::vector<int> number(n, -1);
  for (int i = 0; i < n; ++i) number[order[i]] = i;

  std::vector<TableEntry> entries;
  entries.reserve(routing.labels.size());
  for (const auto& label : routing.labels) {
    TableEntry entry{label.arc, label.tail, label.head, std::nullopt};
    if (label.used) {
      const int lo_pos = number[label.lo];
      int span = (number[label.hi] - lo_pos + n) % n;
      if (span == 0) span = n;
      // Members of the half-open walk from lo to hi, minus an open lo.
      const int first = label.lo_closed ? 0 : 1;
      const int last = label.hi_closed ? span : span - 1;
      if (last < first || (label.lo == label.hi && label.lo_closed)) {
        throw InternalError("interval of arc " + std::to_string(label.arc) + " closes to empty");
      }
      entry.interval = NumericInterval{(lo_pos + first) % n, (lo_pos + last) % n};
    }
    entries.push_back(entry);
  }
  return RoutingTables(std::move(order), std::move(entries));
}

std::optional<std::string> check_partition(const RoutingTables& tables) {
  const int n = tables.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    for (int x = 0; x < n; ++x) {
      int hits = 0;
      for (int i : tables.out_entries(v)) {
        const auto& interval = tables.entries()[i].interval;
        hits += (interval && interval->contains(x, n)) ? 1 : 0;
      }
      const int expected = x == tables.number(v) ? 0 : 1;
      if (hits != expected) {
        return "vertex " + std::to_string(v) + ": number " + std::to_string(x) + " covered " +
               std::to_string(hits) + " times";
      }
    }
  }
  return std::nullopt;
}

std::vector<EdgeId> route(const RoutingTables& tables, Vertex s, Vertex t) {
  const int n = tables.num_vertices();
  if (s == t || s < 0 || t < 0 || s >= n || t >= n) throw ContractViolation("bad route endpoints");
  const long long cap = static_cast<long long>(n) * static_cast<long long>(tables.entries().size());
  const int target = tables.number(t);
  std::vector<EdgeId> hops;
  Vertex at = s;
  while (at != t) {
    if (static_cast<long long>(hops.size()) >= cap) {
      throw InternalError("route from " + std::to_string(s) + " to " + std::to_string(t) +
                          " exceeded the hop cap");
    }
    const TableEntry* chosen = nullptr;
    for (int i : tables.out_entries(at)) {
      const auto& entry = tables.entries()[i];
      if (entry.interval && entry.interval->contains(target, n)) {
        chosen = &entry;
        break;
      }
    }
    if (!chosen) {
      throw InternalError("no interval at vertex " + std::to_string(at) + " for destination " +
                          std::to_string(t));
    }
    hops.push_back(chosen->arc);
    at = chosen->head;
  }
  return hops;
}

namespace {

// Moves parallel out-arcs of hub onto distinct neighbours by reversing
// directed cycles hub -> w ~> x -> hub, which keeps every indegree and
// strong connectivity. Stops when no such cycle exists.
int distinct_neighbours(const UndirectedGraph& g, Vertex v) {
  int count = 0;
  Vertex last = -1;
  for (const auto& inc : g.incidence(v)) {
    if (inc.other != last) ++count;
    last = inc.other;
  }
  return count;
}

// Moves out-arcs onto hub until it has outdegree top. Each step reverses one
// of two arc-disjoint paths from some y into hub, which keeps o strongly
// connected and only lowers the outdegree of y.
bool raise_outdegree(Orientation& o, Vertex hub, int top) {
  while (o.outdegree(hub) < top) {
    bool moved = false;
    for (Vertex y = 0; y < o.num_vertices() && !moved; ++y) {
      if (y == hub) continue;
      const FlowResult flow = two_reaches(o, y, hub);
      if (flow.value < 2) continue;
      reverse_path(o, flow.paths.front());
      moved = true;
    }
    if (!moved) return false;
  }
  return true;
}

void spread_out_arcs(Orientation& o, Vertex hub) {
  const UndirectedGraph& g = o.graph();
  const int n = g.num_vertices();
  for (int round = 0; round < g.num_edges(); ++round) {
    std::vector<int> count(n, 0);
    for (const auto& inc : g.incidence(hub)) {
      if (o.tail(inc.edge) == hub) ++count[inc.other];
    }
    EdgeId doubled = -1;
    for (const auto& inc : g.incidence(hub)) {
      if (o.tail(inc.edge) == hub && count[inc.other] >= 2) {
        doubled = inc.edge;
        break;
      }
    }
    if (doubled < 0) return;
    std::vector<EdgeId> closing(n, -1);
    for (const auto& inc : g.incidence(hub)) {
      if (o.head(inc.edge) == hub && count[inc.other] == 0 && closing[inc.other] < 0) {
        closing[inc.other] = inc.edge;
      }
    }
    // BFS from w to a vertex with a spare arc into hub, avoiding hub.
    const Vertex w = o.head(doubled);
    std::vector<EdgeId> via(n, -1);
    std::vector<bool> seen(n, false);
    seen[hub] = seen[w] = true;
    std::deque<Vertex> queue{w};
    Vertex x = -1;
    while (!queue.empty() && x < 0) {
      const Vertex at = queue.front();
      queue.pop_front();
      if (closing[at] >= 0) {
        x = at;
        break;
      }
      for (const auto& inc : g.incidence(at)) {
        if (o.tail(inc.edge) != at || seen[inc.other]) continue;
        seen[inc.other] = true;
        via[inc.other] = inc.edge;
        queue.push_back(inc.other);
      }
    }
    if (x < 0) return;
    std::vector<EdgeId> cycle{closing[x]};
    for (Vertex at = x; at != w; at = o.tail(via[at])) cycle.push_back(via[at]);
    cycle.push_back(doubled);
    for (EdgeId e : cycle) o.flip(e);
  }
}

}  // namespace

RoutingTables min_outdegree_routing(const UndirectedGraph& g) {
  const Orientation base = reversed(sc_path_reversal(g).orientation);
  const int n = base.num_vertices();
  int top = 0;
  for (Vertex v = 0; v < n; ++v) top = std::max(top, base.outdegree(v));
  // Prefer a scheme in which some hub keeps an interval on top out-arcs.
  // Hubs need top distinct neighbours; those already at top go first.
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < n; ++v) {
    if (distinct_neighbours(g, v) >= top) hubs.push_back(v);
  }
  std::stable_sort(hubs.begin(), hubs.end(), [&](Vertex a, Vertex b) {
    return base.outdegree(a) > base.outdegree(b);
  });
  for (Vertex hub : hubs) {
    Orientation o = base;
    if (!raise_outdegree(o, hub, top)) continue;
    spread_out_arcs(o, hub);
    if (auto d = hub_ear_decomposition(o, hub)) return finalize_numeric(build_routing(o, *d));
  }
  return finalize_numeric(build_routing(base, ear_decomposition(base)));
}

}  // namespace egal
