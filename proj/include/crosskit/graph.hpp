#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crosskit/error.hpp"

namespace crosskit {

using Label = std::string;

// A named set of edge ids of one host graph. Members are kept sorted.
struct EdgeClass {
  std::string name;
  std::vector<int> members;

  bool contains(int e) const { return std::binary_search(members.begin(), members.end(), e); }
  std::size_t size() const { return members.size(); }
};

inline EdgeClass make_class(std::string name, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(name), std::move(members)};
}

inline EdgeClass class_union(const EdgeClass& a, const EdgeClass& b, std::string name = {}) {
  std::vector<int> out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(out));
  if (name.empty()) name = a.name + "+" + b.name;
  return {std::move(name), std::move(out)};
}

inline EdgeClass class_minus(const EdgeClass& a, const EdgeClass& b, std::string name = {}) {
  std::vector<int> out;
  std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                      std::back_inserter(out));
  if (name.empty()) name = a.name + "-" + b.name;
  return {std::move(name), std::move(out)};
}

// Simple undirected graph with labeled vertices and an ordered partition of
// the vertex set. Immutable once built; every operation returns a new value.
//
// The partition is what the file format calls "labels": the edge set is always
// described relative to the complete multipartite graph over these parts.
class Graph {
 public:
  Graph() = default;

  static Graph make(std::vector<std::vector<Label>> parts,
                    const std::vector<std::pair<Label, Label>>& edges) {
    Graph g;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (parts[p].empty()) fail("INVALID_PARTS", "part " + std::to_string(p) + " is empty");
      std::vector<int> ids;
      for (auto& l : parts[p]) ids.push_back(g.add_vertex(l, static_cast<int>(p)));
      g.parts_.push_back(std::move(ids));
    }
    for (auto& [a, b] : edges) g.add_edge(g.index(a), g.index(b));
    return g;
  }

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Label& label(int v) const { return labels_.at(v); }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<int> find(std::string_view l) const {
    auto it = index_.find(std::string(l));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index(std::string_view l) const {
    auto v = find(l);
    if (!v) fail("UNKNOWN_VERTEX", std::string(l));
    return *v;
  }

  std::pair<int, int> edge(int e) const { return edges_.at(e); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::optional<int> edge_index(int u, int v) const {
    auto it = edge_ids_.find(key(u, v));
    if (it == edge_ids_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> edge_index(std::string_view a, std::string_view b) const {
    auto u = find(a), v = find(b);
    if (!u || !v) return std::nullopt;
    return edge_index(*u, *v);
  }

  int other_end(int e, int v) const {
    auto [a, b] = edges_.at(e);
    return a == v ? b : a;
  }
  bool incident(int e, int v) const {
    auto [a, b] = edges_.at(e);
    return a == v || b == v;
  }
  bool share_endpoint(int e, int f) const {
    auto [a, b] = edges_.at(e);
    return incident(f, a) || incident(f, b);
  }

  const std::vector<int>& incident_edges(int v) const { return incidence_.at(v); }
  int degree(int v) const { return static_cast<int>(incidence_.at(v).size()); }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int e : incidence_.at(v)) out.push_back(other_end(e, v));
    return out;
  }

  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int part_of(int v) const { return part_of_.at(v); }
  std::vector<int> part_sizes() const {
    std::vector<int> s;
    for (auto& p : parts_) s.push_back(static_cast<int>(p.size()));
    return s;
  }

  // "K=1,1,4,4" for the partition (the edge set may differ, see base_edges).
  std::string spec() const {
    std::string s = "K=";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i].size());
    }
    return s;
  }

  // Edges of the complete multipartite graph over the partition, in the
  // canonical order: parts i<j, then members of i, then members of j.
  std::vector<std::pair<int, int>> base_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (std::size_t j = i + 1; j < parts_.size(); ++j)
        for (int a : parts_[i])
          for (int b : parts_[j]) out.emplace_back(a, b);
    return out;
  }

  bool is_complete_multipartite() const {
    auto base = base_edges();
    if (base.size() != edges_.size()) return false;
    for (auto [a, b] : base)
      if (!edge_index(a, b)) return false;
    return true;
  }

  std::vector<std::pair<Label, Label>> edge_labels() const {
    std::vector<std::pair<Label, Label>> out;
    for (auto [a, b] : edges_) out.emplace_back(labels_[a], labels_[b]);
    return out;
  }

  std::vector<std::vector<Label>> part_labels() const {
    std::vector<std::vector<Label>> out;
    for (auto& p : parts_) {
      out.emplace_back();
      for (int v : p) out.back().push_back(labels_[v]);
    }
    return out;
  }

 private:
  static std::uint64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  static bool looks_like_crossing_id(const Label& l) {
    if (l.size() < 2 || l[0] != 'c') return false;
    return std::all_of(l.begin() + 1, l.end(), [](unsigned char c) { return std::isdigit(c); });
  }

  int add_vertex(const Label& l, int part) {
    if (l.empty() || looks_like_crossing_id(l))
      fail("INVALID_LABEL", "'" + l + "' is empty or collides with crossing ids");
    if (index_.count(l)) fail("DUPLICATE_LABEL", l);
    int v = num_vertices();
    labels_.push_back(l);
    index_.emplace(l, v);
    part_of_.push_back(part);
    incidence_.emplace_back();
    return v;
  }

  void add_edge(int u, int v) {
    if (u == v) fail("INVALID_EDGE", "self-loop at " + labels_[u]);
    if (edge_ids_.count(key(u, v)))
      fail("INVALID_EDGE", "duplicate edge " + labels_[u] + "-" + labels_[v]);
    int e = num_edges();
    edges_.emplace_back(u, v);
    edge_ids_.emplace(key(u, v), e);
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
  }

  std::vector<Label> labels_;
  std::unordered_map<Label, int> index_;
  std::vector<std::vector<int>> parts_;
  std::vector<int> part_of_;
  std::vector<std::pair<int, int>> edges_;
  std::unordered_map<std::uint64_t, int> edge_ids_;
  std::vector<std::vector<int>> incidence_;
};

// Part labels: up to four parts take the trailing letters of "oxyz", so
// [m,n] gives y1..ym, z1..zn and [1,1,m,n] gives o, x, y.., z..; a singleton
// part gets the bare letter. Wider graphs use v<part>_<index>.
inline std::vector<std::vector<Label>> default_part_labels(const std::vector<int>& sizes) {
  static const std::string letters = "oxyz";
  std::vector<std::vector<Label>> out;
  const std::size_t k = sizes.size();
  for (std::size_t p = 0; p < k; ++p) {
    std::vector<Label> part;
    for (int i = 1; i <= sizes[p]; ++i) {
      if (k <= 4) {
        std::string base(1, letters[4 - k + p]);
        part.push_back(sizes[p] == 1 ? base : base + std::to_string(i));
      } else {
        part.push_back("v" + std::to_string(p + 1) + "_" + std::to_string(i));
      }
    }
    out.push_back(std::move(part));
  }
  return out;
}

inline Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) fail("INVALID_PARTS", "no parts");
  for (int s : sizes)
    if (s < 1) fail("INVALID_PARTS", "part size " + std::to_string(s));
  auto parts = default_part_labels(sizes);
  Graph skeleton = Graph::make(parts, {});
  return Graph::make(parts, [&] {
    std::vector<std::pair<Label, Label>> e;
    for (auto [a, b] : skeleton.base_edges()) e.emplace_back(skeleton.label(a), skeleton.label(b));
    return e;
  }());
}

// Grammar: K=<n1>,<n2>[,...] with positive decimal sizes.
inline Graph parse_graph_spec(std::string_view text) {
  auto bad = [&](std::size_t at, const std::string& why) -> void {
    fail("PARSE_ERROR", "at byte " + std::to_string(at) + ": " + why);
  };
  if (text.size() < 2 || text[0] != 'K' || text[1] != '=') bad(0, "expected 'K='");
  std::vector<int> sizes;
  std::size_t i = 2;
  while (true) {
    std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) bad(start, "size too large");
      ++i;
    }
    if (i == start) bad(i, "expected a part size");
    if (v < 1) bad(start, "part size must be at least 1");
    sizes.push_back(static_cast<int>(v));
    if (i == text.size()) break;
    if (text[i] != ',') bad(i, "expected ','");
    ++i;
  }
  return complete_multipartite(sizes);
}

inline std::vector<int> vertex_ids(const Graph& g, const std::vector<Label>& labels) {
  std::vector<int> out;
  for (auto& l : labels) out.push_back(g.index(l));
  return out;
}

inline EdgeClass edge_class(const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2,
                            std::string name = "E") {
  std::vector<char> in1(g.num_vertices()), in2(g.num_vertices());
  for (int v : v1) in1.at(v) = 1;
  for (int v : v2) in2.at(v) = 1;
  std::vector<int> members;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge(e);
    if ((in1[a] && in2[b]) || (in1[b] && in2[a])) members.push_back(e);
  }
  return {std::move(name), std::move(members)};
}

inline EdgeClass edge_class(const Graph& g, const std::vector<Label>& v1,
                            const std::vector<Label>& v2, std::string name = "E") {
  return edge_class(g, vertex_ids(g, v1), vertex_ids(g, v2), std::move(name));
}

inline EdgeClass all_edges(const Graph& g, std::string name = "E") {
  std::vector<int> m(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) m[e] = e;
  return {std::move(name), std::move(m)};
}

inline EdgeClass star_class(const Graph& g, int v, std::string name = {}) {
  if (name.empty()) name = "E(" + g.label(v) + ")";
  return make_class(std::move(name), g.incident_edges(v));
}

// G^{xTv}: a new vertex joined to every neighbor of v. It goes in its own part.
inline Graph twin_via_template(const Graph& g, std::string_view v, const Label& new_label) {
  int vi = g.index(v);
  if (g.find(new_label)) fail("DUPLICATE_LABEL", new_label);
  auto parts = g.part_labels();
  parts.push_back({new_label});
  auto edges = g.edge_labels();
  for (int u : g.neighbors(vi)) edges.emplace_back(new_label, g.label(u));
  return Graph::make(parts, edges);
}

inline Graph without_edges(const Graph& g, const EdgeClass& s) {
  std::vector<std::pair<Label, Label>> edges;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!s.contains(e)) edges.emplace_back(g.label(g.edge(e).first), g.label(g.edge(e).second));
  return Graph::make(g.part_labels(), edges);
}

// Same labels and same unordered edge set (partition and edge order ignored).
inline bool same_graph(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (auto& l : a.labels())
    if (!b.find(l)) return false;
  for (auto [u, v] : a.edges())
    if (!b.edge_index(a.label(u), a.label(v))) return false;
  return true;
}

// The complete multipartite graph on explicitly labeled parts, for comparing
// construction outputs against their intended targets.
inline Graph complete_on(const std::vector<std::vector<Label>>& parts) {
  Graph skeleton = Graph::make(parts, {});
  std::vector<std::pair<Label, Label>> e;
  for (auto [a, b] : skeleton.base_edges()) e.emplace_back(skeleton.label(a), skeleton.label(b));
  return Graph::make(parts, e);
}

}  // namespace crosskit
