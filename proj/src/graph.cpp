#include "egal/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "egal/errors.hpp"

namespace egal {

UndirectedGraph::UndirectedGraph(int num_vertices) : UndirectedGraph(num_vertices, {}) {}

UndirectedGraph::UndirectedGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) throw ContractViolation("negative vertex count");
  incidence_.resize(num_vertices);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw ContractViolation("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) throw ContractViolation("edge " + std::to_string(e) + " is a self-loop");
    incidence_[u].push_back({e, v});
    incidence_[v].push_back({e, u});
  }
  for (auto& list : incidence_) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
      return a.other != b.other ? a.other < b.other : a.edge < b.edge;
    });
  }
}

InducedSubgraph induced_subgraph(const UndirectedGraph& g, const std::vector<bool>& keep) {
  std::vector<Vertex> renumber(g.num_vertices(), -1);
  InducedSubgraph out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep[v]) {
      renumber[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v]) edges.push_back({renumber[u], renumber[v]});
  }
  out.graph = UndirectedGraph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

int connected_components(const UndirectedGraph& g, std::vector<int>& component) {
  component.assign(g.num_vertices(), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (component[s] != -1) continue;
    component[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incidence(x)) {
        if (component[inc.other] == -1) {
          component[inc.other] = count;
          stack.push_back(inc.other);
        }
      }
    }
    ++count;
  }
  return count;
}

bool is_connected(const UndirectedGraph& g) {
  std::vector<int> component;
  return connected_components(g, component) <= 1;
}

Orientation::Orientation(const UndirectedGraph& g)
    : graph_(&g), heads_(g.num_edges()), indegree_(g.num_vertices(), 0) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    heads_[e] = std::max(g.edge(e).u, g.edge(e).v);
    ++indegree_[heads_[e]];
  }
}

Orientation::Orientation(const UndirectedGraph& g, std::vector<Vertex> heads)
    : graph_(&g), heads_(std::move(heads)), indegree_(g.num_vertices(), 0) {
  if (static_cast<int>(heads_.size()) != g.num_edges()) {
    throw ContractViolation("head array size differs from edge count");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (heads_[e] != g.edge(e).u && heads_[e] != g.edge(e).v) {
      throw ContractViolation("head of edge " + std::to_string(e) + " is not an endpoint");
    }
    ++indegree_[heads_[e]];
  }
}

int Orientation::max_indegree() const {
  return indegree_.empty() ? 0 : *std::max_element(indegree_.begin(), indegree_.end());
}

void Orientation::flip(EdgeId e) {
  Vertex old_head = heads_[e];
  Vertex new_head = graph_->opposite(e, old_head);
  heads_[e] = new_head;
  --indegree_[old_head];
  ++indegree_[new_head];
}

void Orientation::set_head(EdgeId e, Vertex v) {
  if (heads_[e] == v) return;
  if (graph_->opposite(e, heads_[e]) != v) {
    throw ContractViolation("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                            std::to_string(e));
  }
  flip(e);
}

bool Orientation::consistent() const {
  std::vector<int> count(graph_->num_vertices(), 0);
  for (EdgeId e = 0; e < graph_->num_edges(); ++e) {
    const Edge& edge = graph_->edge(e);
    if (heads_[e] != edge.u && heads_[e] != edge.v) return false;
    ++count[heads_[e]];
  }
  return count == indegree_;
}

Orientation reversed(const Orientation& o) {
  Orientation out = o;
  for (EdgeId e = 0; e < o.num_edges(); ++e) out.flip(e);
  return out;
}

DegreeSequence indegree_sequence(const Orientation& o) {
  DegreeSequence s{{o.indegrees().begin(), o.indegrees().end()}};
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

LexOrder lex_compare(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.values.size() != b.values.size()) {
    throw ContractViolation("degree sequences of different length");
  }
  if (a < b) return LexOrder::Less;
  if (b < a) return LexOrder::Greater;
  return LexOrder::Equal;
}

std::string to_string(const DegreeSequence& s) {
  std::string out;
  for (size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.values[i]);
  }
  return out;
}

namespace {

// Splits text into lines, dropping comments and blank lines; keeps 1-based
// line numbers for diagnostics.
struct Line {
  int number;
  std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') continue;
    Line line{number, {}};
    size_t i = first;
    while (i < raw.size()) {
      size_t j = raw.find_first_of(" \t\r", i);
      if (j == std::string_view::npos) j = raw.size();
      line.fields.push_back(raw.substr(i, j - i));
      i = raw.find_first_not_of(" \t\r", j);
      if (i == std::string_view::npos) break;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(std::string_view field, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

std::pair<int, int> parse_pair(const Line& line) {
  if (line.fields.size() != 2) throw ParseError(line.number, "expected two integers");
  return {parse_int(line.fields[0], line.number), parse_int(line.fields[1], line.number)};
}

}  // namespace

UndirectedGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  auto [n, m] = parse_pair(lines[0]);
  if (n < 0 || m < 0) throw ParseError(lines[0].number, "negative count in header");
  if (static_cast<int>(lines.size()) - 1 != m) {
    int where = lines.size() > static_cast<size_t>(m) + 1 ? lines[m + 1].number
                                                          : lines.back().number + 1;
    throw ParseError(where, "header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = parse_pair(lines[i]);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(lines[i].number, "vertex out of range");
    }
    if (u == v) throw ParseError(lines[i].number, "self-loop at vertex " + std::to_string(u));
    edges.push_back({u, v});
  }
  return UndirectedGraph(n, std::move(edges));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

UndirectedGraph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

std::string serialize_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_orientation(const Orientation& o) {
  std::ostringstream out;
  for (EdgeId e = 0; e < o.num_edges(); ++e) out << o.tail(e) << ' ' << o.head(e) << '\n';
  return out.str();
}

Orientation parse_orientation(const UndirectedGraph& g, std::string_view text) {
  auto lines = tokenize(text);
  if (static_cast<int>(lines.size()) != g.num_edges()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "expected " + std::to_string(g.num_edges()) + " arcs, found " +
                         std::to_string(lines.size()));
  }
  std::vector<Vertex> heads(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [tail, head] = parse_pair(lines[e]);
    const Edge& edge = g.edge(e);
    if (!((tail == edge.u && head == edge.v) || (tail == edge.v && head == edge.u))) {
      throw ParseError(lines[e].number, "arc does not match edge " + std::to_string(e));
    }
    heads[e] = head;
  }
  return Orientation(g, std::move(heads));
}

}  // namespace egal
