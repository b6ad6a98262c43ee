#include <gtest/gtest.h>

#include <random>

#include "egal/errors.hpp"
#include "egal/oracle.hpp"
#include "egal/unconstrained.hpp"
#include "support.hpp"

using namespace egal;
using namespace egal::testing;

namespace {

// Triangle edges: 0 = 0-1, 1 = 1-2, 2 = 2-0.
const UndirectedGraph& triangle() {
  static const UndirectedGraph g = cycle_graph(3);
  return g;
}

Orientation directed_triangle() { return Orientation(triangle(), {1, 2, 0}); }

}  // namespace

TEST(ReversePath, TwoArcPathInDirectedTriangle) {
  Orientation o = directed_triangle();
  reverse_path(o, {0, 2, {0, 1}});
  EXPECT_EQ(o.tail(0), 1);
  EXPECT_EQ(o.tail(1), 2);
  EXPECT_EQ((std::vector<int>{o.indegree(0), o.indegree(1), o.indegree(2)}),
            (std::vector<int>{2, 1, 0}));
}

TEST(ReversePath, TrivialPathChangesNothing) {
  Orientation o = directed_triangle();
  reverse_path(o, {1, 1, {}});
  EXPECT_EQ(o, directed_triangle());
}

TEST(ReversePath, SingleArcMovesOneUnit) {
  const UndirectedGraph g(3, {{0, 1}, {2, 1}});
  Orientation o(g, {1, 1});
  reverse_path(o, {0, 1, {0}});
  EXPECT_EQ(o.indegree(0), 1);
  EXPECT_EQ(o.indegree(1), 1);
}

TEST(ReversePath, RejectsNonPaths) {
  Orientation o = directed_triangle();
  EXPECT_THROW(reverse_path(o, {1, 0, {0}}), ContractViolation);      // arc against direction
  EXPECT_THROW(reverse_path(o, {0, 1, {0, 0}}), ContractViolation);   // repeated arc
  EXPECT_THROW(reverse_path(o, {0, 0, {0}}), ContractViolation);      // wrong end
  EXPECT_THROW(reverse_path(o, {0, 2, {7}}), ContractViolation);      // no such edge
  EXPECT_EQ(o, directed_triangle());
}

TEST(FindReversiblePath, TriangleWithSink) {
  // 0 <- 1, 2 -> 0, 1 -> 2: indegrees (2, 0, 1).
  const Orientation o(triangle(), {0, 2, 0});
  const auto p = find_reversible_path(o);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->end, 0);
  EXPECT_EQ(p->start, 1);
  EXPECT_TRUE(is_directed_path(o, *p));
}

TEST(FindReversiblePath, DirectedTriangleHasNone) {
  EXPECT_FALSE(find_reversible_path(directed_triangle()).has_value());
}

TEST(FindReversiblePath, StarIntoCentre) {
  const UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Orientation o(star, {0, 0, 0});
  const auto p = find_reversible_path(o);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->end, 0);
  EXPECT_EQ(p->arcs.size(), 1U);
  EXPECT_EQ(p->start, 1);  // lowest id among the indegree-0 leaves
}

TEST(FindReversiblePath, PathGapAlwaysAtLeastTwo) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const UndirectedGraph g = random_connected_multigraph(rng, 7, 12);
    const Orientation o = arbitrary_orientation(g, rng());
    if (auto p = find_reversible_path(o)) {
      ASSERT_TRUE(is_directed_path(o, *p));
      ASSERT_LT(o.indegree(p->start), o.indegree(p->end) - 1);
    }
  }
}

TEST(PathReversal, SmallExamples) {
  EXPECT_EQ(to_string(indegree_sequence(path_reversal(triangle()).orientation)), "1 1 1");
  const UndirectedGraph k4 = complete_graph(4);
  EXPECT_EQ(to_string(indegree_sequence(path_reversal(k4).orientation)), "2 2 1 1");
  const UndirectedGraph p3 = path_graph(3);
  EXPECT_EQ(to_string(indegree_sequence(path_reversal(p3).orientation)), "1 1 0");
  const UndirectedGraph single(1);
  EXPECT_TRUE(path_reversal(single).trace.empty());
}

TEST(PathReversal, OutputAdmitsNoReversiblePath) {
  for (const auto& g : random_connected_corpus(31, 150, 9, 20)) {
    const ReversalResult r = path_reversal(g, 4);
    ASSERT_FALSE(find_reversible_path(r.orientation).has_value());
    ASSERT_TRUE(r.orientation.consistent());
    ASSERT_LE(static_cast<int>(r.trace.size()), g.num_edges());
  }
}

TEST(PathReversal, TraceEndIndegreesNeverRise) {
  for (const auto& g : random_connected_corpus(32, 150, 9, 20)) {
    const ReversalResult r = path_reversal(g, 9);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      ASSERT_LE(r.trace[i].end_indegree, r.trace[i - 1].end_indegree);
    }
  }
}

// Optimal sequences reached from different starts agree as multisets.
TEST(PathReversal, UniqueOptimalSequence) {
  for (const auto& g : random_connected_corpus(33, 60, 8, 16)) {
    const auto a = indegree_sequence(path_reversal(g, 1).orientation);
    const auto b = indegree_sequence(path_reversal(g, 2).orientation);
    const auto c = indegree_sequence(path_reversal(g).orientation);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a, c);
  }
}

TEST(PathReversal, SeededRunsAreDeterministic) {
  const auto corpus = random_connected_corpus(34, 20, 8, 14);
  for (const auto& g : corpus) {
    const ReversalResult a = path_reversal(g, 77);
    const ReversalResult b = path_reversal(g, 77);
    ASSERT_EQ(a.orientation, b.orientation);
    ASSERT_EQ(a.trace.size(), b.trace.size());
  }
}

TEST(CycleReversal, IdentityGivesNoCycles) {
  const Orientation o = directed_triangle();
  EXPECT_TRUE(cycle_reversal_sequence(o, o).empty());
}

TEST(CycleReversal, FullReversalOfTriangle) {
  const Orientation from = directed_triangle();
  const Orientation to = reversed(from);
  const auto cycles = cycle_reversal_sequence(from, to);
  ASSERT_EQ(cycles.size(), 1U);
  EXPECT_EQ(cycles.front().size(), 3U);
}

TEST(CycleReversal, BowTieBothReversed) {
  // Triangles 0-1-2 and 0-3-4 sharing vertex 0.
  const UndirectedGraph g(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const Orientation from(g, {1, 2, 0, 3, 4, 0});
  const Orientation to = reversed(from);
  Orientation work = from;
  for (const auto& c : cycle_reversal_sequence(from, to)) {
    ASSERT_TRUE(is_directed_cycle(work, c));
    reverse_cycle(work, c);
  }
  EXPECT_EQ(work, to);
}

TEST(CycleReversal, RejectsDifferentIndegrees) {
  const Orientation a = directed_triangle();
  const Orientation b(triangle(), {0, 2, 0});
  EXPECT_THROW(cycle_reversal_sequence(a, b), ContractViolation);
}

TEST(WeakReversal, Candidates) {
  EXPECT_TRUE(weak_reversal_candidates(directed_triangle()).empty());
  const UndirectedGraph edge(2, {{0, 1}});
  const auto single = weak_reversal_candidates(Orientation(edge, {1}));
  EXPECT_EQ(single, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
  const UndirectedGraph k4 = complete_graph(4);
  EXPECT_FALSE(weak_reversal_candidates(path_reversal(k4).orientation).empty());
}

// Weak reversals keep the degree multiset, so every orientation reachable
// from the optimum by them is still optimal.
TEST(WeakReversal, PreservesOptimalSequence) {
  std::mt19937_64 rng(41);
  for (const auto& g : random_connected_corpus(42, 60, 7, 12)) {
    Orientation o = path_reversal(g).orientation;
    const DegreeSequence best = indegree_sequence(o);
    for (int step = 0; step < 5; ++step) {
      const auto cand = weak_reversal_candidates(o);
      if (cand.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      const auto [u, v] = cand[pick(rng)];
      // Reverse a shortest u-to-v path found here independently.
      std::vector<EdgeId> via(g.num_vertices(), -1);
      std::vector<bool> seen(g.num_vertices(), false);
      std::vector<Vertex> queue{u};
      seen[u] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (const auto& inc : g.incidence(queue[h])) {
          if (o.tail(inc.edge) == queue[h] && !seen[inc.other]) {
            seen[inc.other] = true;
            via[inc.other] = inc.edge;
            queue.push_back(inc.other);
          }
        }
      }
      ASSERT_TRUE(seen[v]);
      DirectedPath p{u, v, {}};
      for (Vertex at = v; at != u; at = o.tail(via[at])) p.arcs.insert(p.arcs.begin(), via[at]);
      reverse_path(o, p);
      ASSERT_EQ(indegree_sequence(o), best);
    }
  }
}

TEST(ConvexCost, Examples) {
  const ConvexCost sq = ConvexCost::square(6);
  EXPECT_EQ(convex_cost(directed_triangle(), sq), 3.0);
  EXPECT_EQ(convex_cost(Orientation(triangle()), sq), 5.0);
  const UndirectedGraph k4 = complete_graph(4);
  const ConvexCost p2 = ConvexCost::pow2(6);
  EXPECT_EQ(convex_cost(path_reversal(k4).orientation, p2), 12.0);
  // Sink 3 plus a directed triangle on 0, 1, 2: sequence 3 1 1 1.
  const Orientation sink(k4, {1, 0, 3, 2, 3, 3});
  ASSERT_EQ(to_string(indegree_sequence(sink)), "3 1 1 1");
  EXPECT_EQ(convex_cost(sink, p2), 14.0);
}

TEST(ConvexCost, Validation) {
  EXPECT_THROW(ConvexCost({0, 1, 2}), DomainError);     // linear, not strictly convex
  EXPECT_THROW(ConvexCost({2, 1, 3}), DomainError);     // decreasing
  EXPECT_NO_THROW(ConvexCost({0, 1, 3, 6}));
  const ConvexCost f = ConvexCost::square(2);
  EXPECT_THROW(f(3), DomainError);
  EXPECT_THROW(f(-1), DomainError);
  const UndirectedGraph k4 = complete_graph(4);
  EXPECT_THROW(convex_cost(Orientation(k4), f), DomainError);
}

TEST(ArbitraryOrientation, SeedControlsOutput) {
  const UndirectedGraph k4 = complete_graph(4);
  EXPECT_EQ(arbitrary_orientation(k4), Orientation(k4));
  EXPECT_EQ(arbitrary_orientation(k4, 3), arbitrary_orientation(k4, 3));
}
