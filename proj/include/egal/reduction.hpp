#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/graph.hpp"

namespace egal {

/// Universe {0, ..., universe_size - 1} and a family of subsets of it.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
};

/// Throws DomainError unless every set is nonempty, duplicate-free and in
/// range, and the sets together cover the universe.
void validate(const SetCoverInstance& inst);

/// "u s" header, then s lines of element ids; '#' lines are comments.
SetCoverInstance parse_set_cover(std::string_view text);

std::vector<int> element_frequencies(const SetCoverInstance& inst);
bool is_cover(const SetCoverInstance& inst, const std::vector<int>& chosen);

/// Smallest odd integer above every set size and element frequency.
int choose_k(const SetCoverInstance& inst);

/// Two K_k copies joined by a matching, plus a root r (and, for even ell,
/// an extra vertex s). Local ids: left clique 0..k-1, right clique k..2k-1,
/// r = 2k, s = 2k + 1.
struct Gadget {
  UndirectedGraph graph;
  Vertex root = 0;
  std::optional<Vertex> extra;
  int k = 0;
  int ell = 0;
};

/// Requires k odd and 1 <= ell < k (DomainError). The four gadget
/// properties are checked before returning (InternalError on failure).
Gadget build_gadget(int k, int ell);

/// nullopt when all of: non-root degrees k, root degree k - ell, connected
/// without the root, and (k - 1)-strippable.
std::optional<std::string> check_gadget_properties(const Gadget& h);

enum class GadgetKind { Set, Element };

struct GadgetBlock {
  GadgetKind kind;
  int index;      // set index or element id
  Vertex first;   // vertices first .. first + size - 1
  int size;
  Vertex root;
  int ell;
};

/// Graph of the set-cover reduction: one H_1 per set, one H_{f_x} per
/// element, roots joined whenever the element lies in the set. The graph
/// is owned here; orientations of it must not outlive the instance.
struct ReductionInstance {
  SetCoverInstance instance;
  UndirectedGraph graph;
  int k = 0;
  std::vector<Vertex> set_roots;
  std::vector<Vertex> element_roots;
  std::vector<GadgetBlock> blocks;  // set gadgets first, then element gadgets
  std::vector<int> block_of;        // vertex -> index into blocks
};

ReductionInstance build_reduction(const SetCoverInstance& inst);

/// Vertex of a chosen set gadget that receives all its edges.
Vertex designated_vertex(const ReductionInstance& ri, int set_index);

/// Acyclic orientation with exactly one indegree-k vertex per chosen set.
/// Throws ContractViolation if cover does not cover the universe.
Orientation cover_to_orientation(const ReductionInstance& ri, const std::vector<int>& cover);

struct CoverExtraction {
  std::vector<int> sets;           // sorted set indices
  bool is_cover = false;
  int high_indegree_vertices = 0;  // vertices with indegree >= k
};

/// Sets whose gadget holds an indegree-k vertex, plus, for every element
/// gadget holding one, the lowest-index set containing that element.
/// Throws ContractViolation if o has a directed cycle.
CoverExtraction orientation_to_cover(const ReductionInstance& ri, const Orientation& o);

std::string reduction_sidecar_json(const ReductionInstance& ri);

}  // namespace egal
