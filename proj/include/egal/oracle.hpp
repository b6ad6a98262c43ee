#pragma once

#include <cstdint>
#include <optional>

#include "egal/graph.hpp"
#include "egal/unconstrained.hpp"

namespace egal {

enum class Constraint { None, StronglyConnected, Acyclic };
enum class Objective { MinMaxIndegree, MinLexSequence, MinConvexCost };

struct OracleQuery {
  Constraint constraint = Constraint::None;
  Objective objective = Objective::MinLexSequence;
  std::optional<ConvexCost> cost;  // required for MinConvexCost
  int shards = 0;                  // 0: pick from hardware concurrency
};

inline constexpr int kMaxOracleEdges = 24;

struct OracleResult {
  int max_indegree = 0;
  DegreeSequence sequence;
  double cost = 0.0;
  std::uint64_t witness_index = 0;  // bit e set: edge e points at edge(e).u
  Orientation witness;
  std::uint64_t feasible_count = 0;
};

/// Exhaustive search over all 2^m orientations. Returns nullopt when no
/// orientation satisfies the constraint. The witness is the first optimum
/// in binary counting order. Refuses m > kMaxOracleEdges (DomainError).
std::optional<OracleResult> oracle_solve(const UndirectedGraph& g, const OracleQuery& q);

/// Orientation number index in the oracle's enumeration order.
Orientation orientation_from_index(const UndirectedGraph& g, std::uint64_t index);

}  // namespace egal
