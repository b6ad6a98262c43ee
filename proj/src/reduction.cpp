#include "egal/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "egal/acyclic.hpp"
#include "egal/errors.hpp"
#include "json.hpp"

namespace egal {

void validate(const SetCoverInstance& inst) {
  if (inst.universe_size < 0) throw DomainError("negative universe size");
  if (inst.sets.empty()) throw DomainError("no sets");
  std::vector<bool> hit(inst.universe_size, false);
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    if (s.empty()) throw DomainError("set " + std::to_string(i) + " is empty");
    std::set<int> distinct;
    for (int x : s) {
      if (x < 0 || x >= inst.universe_size) {
        throw DomainError("set " + std::to_string(i) + " has element out of range");
      }
      if (!distinct.insert(x).second) {
        throw DomainError("set " + std::to_string(i) + " repeats element " + std::to_string(x));
      }
      hit[x] = true;
    }
  }
  for (int x = 0; x < inst.universe_size; ++x) {
    if (!hit[x]) throw DomainError("element " + std::to_string(x) + " is in no set");
  }
}

SetCoverInstance parse_set_cover(std::string_view text) {
  std::vector<std::pair<int, std::vector<int>>> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream fields(raw);
    std::vector<int> values;
    std::string token;
    while (fields >> token) {
      try {
        size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        values.push_back(value);
      } catch (const std::exception&) {
        throw ParseError(number, "expected an integer, got '" + token + "'");
      }
    }
    rows.emplace_back(number, std::move(values));
  }
  if (rows.empty() || rows.front().second.size() != 2) throw ParseError(1, "missing 'u s' header");
  SetCoverInstance inst;
  inst.universe_size = rows.front().second[0];
  const int count = rows.front().second[1];
  if (count < 0 || static_cast<int>(rows.size()) - 1 != count) {
    throw ParseError(rows.back().first, "header declares " + std::to_string(count) + " sets, found " +
                                            std::to_string(rows.size() - 1));
  }
  for (size_t i = 1; i < rows.size(); ++i) inst.sets.push_back(std::move(rows[i].second));
  validate(inst);
  return inst;
}

std::vector<int> element_frequencies(const SetCoverInstance& inst) {
  std::vector<int> f(inst.universe_size, 0);
  for (const auto& s : inst.sets) {
    for (int x : s) ++f[x];
  }
  return f;
}

bool is_cover(const SetCoverInstance& inst, const std::vector<int>& chosen) {
  std::vector<bool> hit(inst.universe_size, false);
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(inst.sets.size())) return false;
    for (int x : inst.sets[i]) hit[x] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

int choose_k(const SetCoverInstance& inst) {
  int largest = 0;
  for (const auto& s : inst.sets) largest = std::max(largest, static_cast<int>(s.size()));
  for (int f : element_frequencies(inst)) largest = std::max(largest, f);
  return largest % 2 == 0 ? largest + 1 : largest + 2;
}

Gadget build_gadget(int k, int ell) {
  if (k < 3 || k % 2 == 0) throw DomainError("gadget k must be odd and at least 3");
  if (ell < 1 || ell >= k) throw DomainError("gadget ell must satisfy 1 <= ell < k");
  const Vertex r = 2 * k;
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) edges.push_back({side * k + a, side * k + b});
    }
  }
  // Attachments go to the lowest ids; whatever is left at degree k-1 on the
  // two sides is matched in ascending order.
  int left_taken = 0;
  int right_taken = 0;
  Gadget h;
  if (ell % 2 == 1) {
    const int half = (k - ell) / 2;
    for (int i = 0; i < half; ++i) {
      edges.push_back({i, r});
      edges.push_back({k + i, r});
    }
    left_taken = right_taken = half;
  } else {
    const Vertex s = 2 * k + 1;
    for (int i = 0; i < k - ell; ++i) edges.push_back({i, r});
    for (int i = 0; i < ell / 2; ++i) edges.push_back({k - ell + i, s});
    for (int i = 0; i < k - ell / 2; ++i) edges.push_back({k + i, s});
    left_taken = k - ell + ell / 2;
    right_taken = k - ell / 2;
    h.extra = s;
  }
  if (k - left_taken != k - right_taken) throw InternalError("gadget matching sides differ");
  for (int i = 0; i < k - left_taken; ++i) edges.push_back({left_taken + i, k + right_taken + i});

  h.graph = UndirectedGraph(h.extra ? 2 * k + 2 : 2 * k + 1, std::move(edges));
  h.root = r;
  h.k = k;
  h.ell = ell;
  if (auto problem = check_gadget_properties(h)) throw InternalError(*problem);
  return h;
}

std::optional<std::string> check_gadget_properties(const Gadget& h) {
  const UndirectedGraph& g = h.graph;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v != h.root && g.degree(v) != h.k) {
      return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
    }
  }
  if (g.degree(h.root) != h.k - h.ell) return "root degree is not k - ell";
  std::vector<bool> keep(g.num_vertices(), true);
  keep[h.root] = false;
  if (!is_connected(induced_subgraph(g, keep).graph)) return "gadget minus root is disconnected";
  if (!is_t_strippable(g, h.k - 1)) return "gadget is not (k-1)-strippable";
  return std::nullopt;
}

ReductionInstance build_reduction(const SetCoverInstance& inst) {
  validate(inst);
  ReductionInstance ri;
  ri.instance = inst;
  ri.k = choose_k(inst);
  const int k = ri.k;
  const auto freq = element_frequencies(inst);

  std::vector<Edge> edges;
  int total = 0;
  auto place = [&](GadgetKind kind, int index, int ell) {
    for (int f : freq) {
      if (f >= k) throw InternalError("element frequency reaches k");
    }
    Gadget h = build_gadget(k, ell);
    const Vertex offset = total;
    for (const auto& [u, v] : h.graph.edges()) edges.push_back({u + offset, v + offset});
    ri.blocks.push_back({kind, index, offset, h.graph.num_vertices(), h.root + offset, ell});
    total += h.graph.num_vertices();
    return h.root + offset;
  };
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    ri.set_roots.push_back(place(GadgetKind::Set, static_cast<int>(i), 1));
  }
  for (int x = 0; x < inst.universe_size; ++x) {
    ri.element_roots.push_back(place(GadgetKind::Element, x, freq[x]));
  }
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    for (int x : inst.sets[i]) edges.push_back({ri.set_roots[i], ri.element_roots[x]});
  }
  ri.graph = UndirectedGraph(total, std::move(edges));
  ri.block_of.assign(total, -1);
  for (size_t b = 0; b < ri.blocks.size(); ++b) {
    for (int j = 0; j < ri.blocks[b].size; ++j) ri.block_of[ri.blocks[b].first + j] = static_cast<int>(b);
  }

  for (Vertex v = 0; v < total; ++v) {
    int expected = k;
    const GadgetBlock& block = ri.blocks[ri.block_of[v]];
    if (block.kind == GadgetKind::Set && v == block.root) {
      expected = k + static_cast<int>(inst.sets[block.index].size()) - 1;
    }
    if (ri.graph.degree(v) != expected) {
      throw InternalError("reduction vertex " + std::to_string(v) + " has degree " +
                          std::to_string(ri.graph.degree(v)) + ", expected " + std::to_string(expected));
    }
  }
  if (!is_t_strippable(ri.graph, k)) throw InternalError("reduction graph is not k-strippable");
  return ri;
}

Vertex designated_vertex(const ReductionInstance& ri, int set_index) {
  const GadgetBlock& block = ri.blocks.at(set_index);
  for (Vertex v = block.first; v < block.first + block.size; ++v) {
    if (v == block.root) continue;
    bool adjacent = false;
    for (const auto& inc : ri.graph.incidence(v)) adjacent = adjacent || inc.other == block.root;
    if (!adjacent) return v;
  }
  throw InternalError("set gadget has no vertex away from its root");
}

Orientation cover_to_orientation(const ReductionInstance& ri, const std::vector<int>& cover) {
  if (!is_cover(ri.instance, cover)) throw ContractViolation("chosen sets do not form a cover");
  const UndirectedGraph& g = ri.graph;
  const int n = g.num_vertices();
  std::vector<int> remaining(n);
  for (Vertex v = 0; v < n; ++v) remaining[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> heads(g.num_edges(), -1);

  auto remove = [&](Vertex x) {
    removed[x] = true;
    for (const auto& inc : g.incidence(x)) {
      if (removed[inc.other]) continue;
      heads[inc.edge] = x;
      --remaining[inc.other];
    }
  };
  auto strip_block = [&](const GadgetBlock& block) {
    for (;;) {
      Vertex best = -1;
      for (Vertex v = block.first; v < block.first + block.size; ++v) {
        if (!removed[v] && (best < 0 || remaining[v] < remaining[best])) best = v;
      }
      if (best < 0) return;
      remove(best);
    }
  };

  std::vector<int> chosen = cover;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<bool> is_chosen(ri.instance.sets.size(), false);
  std::vector<bool> designated(n, false);
  for (int i : chosen) {
    is_chosen[i] = true;
    const Vertex d = designated_vertex(ri, i);
    designated[d] = true;
    remove(d);
    strip_block(ri.blocks[i]);
  }
  for (const auto& block : ri.blocks) {
    if (block.kind == GadgetKind::Element) strip_block(block);
  }
  for (const auto& block : ri.blocks) {
    if (block.kind == GadgetKind::Set && !is_chosen[block.index]) strip_block(block);
  }

  Orientation o(g, std::move(heads));
  for (Vertex v = 0; v < n; ++v) {
    if (!designated[v] && o.indegree(v) > ri.k - 1) {
      throw InternalError("vertex " + std::to_string(v) + " reached indegree " +
                          std::to_string(o.indegree(v)) + " while stripping the cover witness");
    }
  }
  return o;
}

CoverExtraction orientation_to_cover(const ReductionInstance& ri, const Orientation& o) {
  if (!verify_acyclic(o)) throw ContractViolation("orientation has a directed cycle");
  std::set<int> sets;
  CoverExtraction out;
  std::vector<bool> seen_block(ri.blocks.size(), false);
  for (Vertex v = 0; v < ri.graph.num_vertices(); ++v) {
    if (o.indegree(v) < ri.k) continue;
    ++out.high_indegree_vertices;
    const int b = ri.block_of[v];
    if (seen_block[b]) continue;
    seen_block[b] = true;
    const GadgetBlock& block = ri.blocks[b];
    if (block.kind == GadgetKind::Set) {
      sets.insert(block.index);
    } else {
      for (size_t i = 0; i < ri.instance.sets.size(); ++i) {
        const auto& s = ri.instance.sets[i];
        if (std::find(s.begin(), s.end(), block.index) != s.end()) {
          sets.insert(static_cast<int>(i));
          break;
        }
      }
    }
  }
  out.sets.assign(sets.begin(), sets.end());
  out.is_cover = is_cover(ri.instance, out.sets);
  return out;
}

std::string reduction_sidecar_json(const ReductionInstance& ri) {
  nlohmann::json j;
  j["k"] = ri.k;
  j["set_roots"] = ri.set_roots;
  j["element_roots"] = ri.element_roots;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : ri.blocks) {
    blocks.push_back({{"kind", b.kind == GadgetKind::Set ? "set" : "element"},
                      {"index", b.index},
                      {"first", b.first},
                      {"size", b.size},
                      {"root", b.root},
                      {"ell", b.ell}});
  }
  j["gadgets"] = std::move(blocks);
  return j.dump();
}

}  // namespace egal
