#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace egal {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  bool operator==(const Edge&) const = default;
};

struct Incidence {
  EdgeId edge;
  Vertex other;
};

/// Undirected multigraph on vertices 0..n-1 with positional edge ids.
///
/// Parallel edges are allowed, self-loops are not. Incidence lists are
/// ordered by (other endpoint, edge id), so every traversal that walks them
/// visits neighbours in ascending id order. Immutable once built.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int num_vertices);
  UndirectedGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incidence(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

  /// The endpoint of e that is not v.
  Vertex opposite(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Subgraph induced by the vertices with keep[v] set, renumbered densely.
struct InducedSubgraph {
  UndirectedGraph graph;
  std::vector<Vertex> original;  // new id -> id in the parent graph
};

InducedSubgraph induced_subgraph(const UndirectedGraph& g, const std::vector<bool>& keep);

/// Connected components as a per-vertex component index; returns the count.
int connected_components(const UndirectedGraph& g, std::vector<int>& component);

bool is_connected(const UndirectedGraph& g);

/// Per-edge head assignment with cached indegrees.
///
/// Holds a non-owning pointer to its graph; the graph must outlive it.
class Orientation {
 public:
  /// Every edge directed toward its larger-id endpoint.
  explicit Orientation(const UndirectedGraph& g);
  Orientation(const UndirectedGraph& g, std::vector<Vertex> heads);

  const UndirectedGraph& graph() const { return *graph_; }
  int num_vertices() const { return graph_->num_vertices(); }
  int num_edges() const { return graph_->num_edges(); }

  Vertex head(EdgeId e) const { return heads_[e]; }
  Vertex tail(EdgeId e) const { return graph_->opposite(e, heads_[e]); }
  int indegree(Vertex v) const { return indegree_[v]; }
  int outdegree(Vertex v) const { return graph_->degree(v) - indegree_[v]; }
  int max_indegree() const;

  std::span<const Vertex> heads() const { return heads_; }
  std::span<const int> indegrees() const { return indegree_; }

  void flip(EdgeId e);
  void set_head(EdgeId e, Vertex v);

  /// Recounts indegrees from the head array; false if the cache disagrees
  /// or a head is not an endpoint of its edge.
  bool consistent() const;

  bool operator==(const Orientation& other) const {
    return graph_ == other.graph_ && heads_ == other.heads_;
  }

 private:
  const UndirectedGraph* graph_;
  std::vector<Vertex> heads_;
  std::vector<int> indegree_;
};

/// Copy of o with every arc reversed.
Orientation reversed(const Orientation& o);

/// Indegrees sorted in non-increasing order.
struct DegreeSequence {
  std::vector<int> values;

  auto operator<=>(const DegreeSequence&) const = default;
};

DegreeSequence indegree_sequence(const Orientation& o);

enum class LexOrder { Less, Equal, Greater };

/// Lexicographic comparison; Less means a is the more egalitarian sequence.
/// Throws ContractViolation when the lengths differ.
LexOrder lex_compare(const DegreeSequence& a, const DegreeSequence& b);

std::string to_string(const DegreeSequence& s);

/// "n m" header, then one "u v" line per edge; '#' lines are comments.
UndirectedGraph parse_graph(std::string_view text);
UndirectedGraph read_graph_file(const std::string& path);
std::string serialize_graph(const UndirectedGraph& g);

/// One "tail head" line per edge, in edge-id order.
std::string serialize_orientation(const Orientation& o);
Orientation parse_orientation(const UndirectedGraph& g, std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace egal
