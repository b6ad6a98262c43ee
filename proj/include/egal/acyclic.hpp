#pragma once

#include <utility>
#include <vector>

#include "egal/graph.hpp"

namespace egal {

struct StrippingOrder {
  std::vector<Vertex> order;  // removal order
  int peak = 0;               // largest remaining degree at a removal
};

/// Repeatedly removes a minimum-degree vertex (lowest id on ties) and points
/// its remaining edges into it. The result is acyclic: every arc runs from a
/// later-removed vertex to an earlier-removed one.
std::pair<StrippingOrder, Orientation> stripping(const UndirectedGraph& g);

/// Degeneracy by k-core peeling: the largest k whose k-core is nonempty.
int degeneracy(const UndirectedGraph& g);

bool verify_acyclic(const Orientation& o);

bool is_t_strippable(const UndirectedGraph& g, int t);

}  // namespace egal
