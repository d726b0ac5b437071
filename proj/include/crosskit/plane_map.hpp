#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crosskit/error.hpp"
#include "crosskit/graph.hpp"

namespace crosskit {

// One end of a segment at a node. Segment k of an edge with path
// [c_1..c_t] runs from c_k (or the first endpoint when k = 0) to c_{k+1}
// (or the second endpoint when k = t).
struct SegEnd {
  int edge = 0;
  int seg = 0;
  friend bool operator==(const SegEnd&, const SegEnd&) = default;
  friend auto operator<=>(const SegEnd&, const SegEnd&) = default;
};

struct Crossing {
  std::string id;
  int e = 0;
  int f = 0;
};

// Combinatorial good drawing. Nodes are the graph vertices (ids 0..V-1)
// followed by the crossings (id V + index). Rotations are counterclockwise.
struct Drawing {
  Graph graph;
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<SegEnd>> rotations;

  int num_vertices() const { return graph.num_vertices(); }
  int num_nodes() const { return graph.num_vertices() + static_cast<int>(crossings.size()); }
  int crossing_node(int c) const { return graph.num_vertices() + c; }
  bool is_crossing_node(int n) const { return n >= graph.num_vertices(); }

  std::string node_name(int n) const {
    return is_crossing_node(n) ? crossings.at(n - num_vertices()).id : graph.label(n);
  }

  // Start and end node of segment k of edge e.
  std::pair<int, int> segment_nodes(int e, int k) const {
    const auto& p = paths.at(e);
    auto [u, v] = graph.edge(e);
    int a = k == 0 ? u : crossing_node(p.at(k - 1));
    int b = k == static_cast<int>(p.size()) ? v : crossing_node(p.at(k));
    return {a, b};
  }

  int other_node(SegEnd s, int here) const {
    auto [a, b] = segment_nodes(s.edge, s.seg);
    return a == here ? b : a;
  }
};

// ---------------------------------------------------------------------------
// validation

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
  }
  std::string summary() const {
    if (ok()) return "PASS";
    std::ostringstream os;
    os << "FAIL";
    for (auto& v : violations) os << "\n  " << v.code << ": " << v.detail;
    return os.str();
  }
};

namespace detail {

// Darts of the segment graph: segment s has dart 2s (start to end) and 2s+1.
struct DartIndex {
  std::vector<int> seg_base;            // first segment id of each edge
  std::vector<int> src, dst;            // per dart
  std::vector<std::vector<int>> rot;    // per node, dart ids leaving it
  std::vector<std::pair<int, int>> at;  // dart -> (node, index in rot)
};

inline DartIndex index_darts(const Drawing& d) {
  DartIndex ix;
  int segs = 0;
  for (int e = 0; e < d.graph.num_edges(); ++e) {
    ix.seg_base.push_back(segs);
    segs += static_cast<int>(d.paths[e].size()) + 1;
  }
  ix.src.assign(2 * segs, -1);
  ix.dst.assign(2 * segs, -1);
  ix.at.assign(2 * segs, {-1, -1});
  for (int e = 0; e < d.graph.num_edges(); ++e)
    for (int k = 0; k <= static_cast<int>(d.paths[e].size()); ++k) {
      auto [a, b] = d.segment_nodes(e, k);
      int s = ix.seg_base[e] + k;
      ix.src[2 * s] = a, ix.dst[2 * s] = b;
      ix.src[2 * s + 1] = b, ix.dst[2 * s + 1] = a;
    }
  ix.rot.resize(d.num_nodes());
  for (int n = 0; n < d.num_nodes(); ++n)
    for (auto se : d.rotations[n]) {
      int s = ix.seg_base[se.edge] + se.seg;
      int dart = ix.src[2 * s] == n ? 2 * s : 2 * s + 1;
      ix.at[dart] = {n, static_cast<int>(ix.rot[n].size())};
      ix.rot[n].push_back(dart);
    }
  return ix;
}

inline int face_next(const DartIndex& ix, int h) {
  int t = h ^ 1;
  auto [n, i] = ix.at[t];
  const auto& r = ix.rot[n];
  return r[(i + r.size() - 1) % r.size()];
}

// Returns the face id of every dart.
inline std::vector<int> face_ids(const DartIndex& ix, int* count = nullptr) {
  std::vector<int> face(ix.src.size(), -1);
  int f = 0;
  for (std::size_t h = 0; h < ix.src.size(); ++h) {
    if (face[h] >= 0) continue;
    int cur = static_cast<int>(h);
    while (face[cur] < 0) {
      face[cur] = f;
      cur = face_next(ix, cur);
    }
    ++f;
  }
  if (count) *count = f;
  return face;
}

inline int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace detail

inline ValidationReport validate(const Drawing& d) {
  ValidationReport rep;
  auto add = [&](const std::string& c, const std::string& w) { rep.violations.push_back({c, w}); };
  const Graph& g = d.graph;
  const int nc = static_cast<int>(d.crossings.size());

  if (static_cast<int>(d.paths.size()) != g.num_edges() ||
      static_cast<int>(d.rotations.size()) != d.num_nodes()) {
    add("STRUCTURE", "path or rotation table has the wrong length");
    return rep;
  }
  bool structural = true;
  for (int c = 0; c < nc; ++c) {
    auto& x = d.crossings[c];
    if (x.e < 0 || x.f < 0 || x.e >= g.num_edges() || x.f >= g.num_edges() || x.e == x.f) {
      add("STRUCTURE", x.id + " names invalid edges");
      structural = false;
    }
  }
  if (!structural) return rep;

  // Occurrence of crossings on paths.
  std::vector<int> seen_on_e(nc, 0), seen_on_f(nc, 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    std::vector<int> sorted = d.paths[e];
    for (int c : sorted)
      if (c < 0 || c >= nc) {
        add("STRUCTURE", "edge " + std::to_string(e) + " lists an unknown crossing");
        return rep;
      }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      add("SELF_CROSSING", "edge " + g.label(g.edge(e).first) + "-" + g.label(g.edge(e).second) +
                               " passes a crossing twice");
      structural = false;
    }
    for (int c : d.paths[e]) {
      auto& x = d.crossings[c];
      if (x.e == e) ++seen_on_e[c];
      else if (x.f == e) ++seen_on_f[c];
      else {
        add("STRUCTURE", x.id + " lies on an edge it does not belong to");
        structural = false;
      }
    }
  }
  for (int c = 0; c < nc; ++c)
    if (seen_on_e[c] != 1 || seen_on_f[c] != 1) {
      add("STRUCTURE", d.crossings[c].id + " is not on exactly one position of each of its edges");
      structural = false;
    }

  // Goodness of crossing pairs.
  std::map<std::pair<int, int>, std::string> pairs;
  for (auto& x : d.crossings) {
    if (g.share_endpoint(x.e, x.f)) add("ADJACENT_CROSSING", x.id + " joins edges sharing an endpoint");
    auto key = std::minmax(x.e, x.f);
    auto [it, fresh] = pairs.emplace(key, x.id);
    if (!fresh) add("DOUBLE_CROSSING", x.id + " and " + it->second + " cross the same edge pair");
  }
  if (!structural) return rep;

  // Rotation contents.
  std::vector<std::vector<SegEnd>> expect(d.num_nodes());
  for (int e = 0; e < g.num_edges(); ++e) {
    const int t = static_cast<int>(d.paths[e].size());
    expect[g.edge(e).first].push_back({e, 0});
    expect[g.edge(e).second].push_back({e, t});
    for (int k = 0; k < t; ++k) {
      int n = d.crossing_node(d.paths[e][k]);
      expect[n].push_back({e, k});
      expect[n].push_back({e, k + 1});
    }
  }
  for (int n = 0; n < d.num_nodes(); ++n) {
    auto have = d.rotations[n];
    std::sort(have.begin(), have.end());
    std::sort(expect[n].begin(), expect[n].end());
    if (have != expect[n]) {
      if (d.is_crossing_node(n) && d.rotations[n].size() != 4)
        add("DEGREE", d.node_name(n) + " has rotation degree " + std::to_string(d.rotations[n].size()));
      else
        add("STRUCTURE", "rotation at " + d.node_name(n) + " does not list its segment ends");
      structural = false;
    }
  }
  if (!structural) return rep;

  for (int c = 0; c < nc; ++c) {
    auto& r = d.rotations[d.crossing_node(c)];
    if (!(r[0].edge == r[2].edge && r[1].edge == r[3].edge && r[0].edge != r[1].edge))
      add("NON_ALTERNATING", d.crossings[c].id + " is a touching, not a crossing");
  }

  // Euler relation per component of the segment graph.
  auto ix = detail::index_darts(d);
  int nf = 0;
  auto face = detail::face_ids(ix, &nf);
  std::vector<int> parent(d.num_nodes());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t h = 0; h < ix.src.size(); h += 2)
    parent[detail::find_root(parent, ix.src[h])] = detail::find_root(parent, ix.dst[h]);
  std::map<int, std::array<long, 3>> comp;  // V, E, F
  for (int n = 0; n < d.num_nodes(); ++n) comp[detail::find_root(parent, n)][0]++;
  for (std::size_t h = 0; h < ix.src.size(); h += 2) comp[detail::find_root(parent, ix.src[h])][1]++;
  std::vector<char> face_done(nf, 0);
  for (std::size_t h = 0; h < ix.src.size(); ++h)
    if (!face_done[face[h]]) {
      face_done[face[h]] = 1;
      comp[detail::find_root(parent, ix.src[h])][2]++;
    }
  for (auto& [root, vef] : comp) {
    long faces = vef[1] == 0 ? 1 : vef[2];
    long chi = vef[0] - vef[1] + faces;
    if (chi != 2)
      add("NONPLANAR_MAP", "component of " + d.node_name(root) + ": V-E+F = " + std::to_string(chi));
  }
  return rep;
}

inline void require_valid(const Drawing& d, const std::string& context) {
  auto rep = validate(d);
  if (!rep.ok()) fail("GOODNESS_VIOLATION", context + ": " + rep.summary());
}

// ---------------------------------------------------------------------------
// counting

inline void check_class(const Drawing& d, const EdgeClass& a) {
  for (int e : a.members)
    if (e < 0 || e >= d.graph.num_edges()) fail("UNKNOWN_EDGE", a.name + " has edge " + std::to_string(e));
}

inline long crossings_total(const Drawing& d) { return static_cast<long>(d.crossings.size()); }

// Crossings with one edge in A and the other in B; with A = B this is cr_D(A).
inline long crossings_between(const Drawing& d, const EdgeClass& a, const EdgeClass& b) {
  check_class(d, a);
  check_class(d, b);
  long n = 0;
  for (auto& x : d.crossings)
    if ((a.contains(x.e) && b.contains(x.f)) || (a.contains(x.f) && b.contains(x.e))) ++n;
  return n;
}

inline long crossings_within(const Drawing& d, const EdgeClass& a) { return crossings_between(d, a, a); }

inline long vertex_crossings(const Drawing& d, std::string_view v) {
  int vi = d.graph.index(v);
  long n = 0;
  for (auto& x : d.crossings)
    if (d.graph.incident(x.e, vi) || d.graph.incident(x.f, vi)) ++n;
  return n;
}

inline long vertex_pair_crossings(const Drawing& d, std::string_view u, std::string_view v) {
  int ui = d.graph.index(u), vi = d.graph.index(v);
  long n = 0;
  for (auto& x : d.crossings) {
    const Graph& g = d.graph;
    if ((g.incident(x.e, ui) && g.incident(x.f, vi)) || (g.incident(x.e, vi) && g.incident(x.f, ui))) ++n;
  }
  return n;
}

struct RotationView {
  Label vertex;
  std::vector<Label> neighbors;
};

inline RotationView rotation(const Drawing& d, std::string_view v) {
  int vi = d.graph.index(v);
  RotationView r{d.graph.label(vi), {}};
  for (auto se : d.rotations[vi]) r.neighbors.push_back(d.graph.label(d.graph.other_end(se.edge, vi)));
  return r;
}

// Neighbors strictly between a and b, going counterclockwise from a.
inline std::vector<Label> subrotation_interval(const Drawing& d, std::string_view v, std::string_view a,
                                               std::string_view b) {
  auto r = rotation(d, v);
  auto pos = [&](std::string_view x) {
    auto it = std::find(r.neighbors.begin(), r.neighbors.end(), x);
    if (it == r.neighbors.end()) fail("NOT_A_NEIGHBOR", std::string(x) + " of " + std::string(v));
    return static_cast<std::size_t>(it - r.neighbors.begin());
  };
  std::size_t i = pos(a), j = pos(b), n = r.neighbors.size();
  std::vector<Label> out;
  if (i == j) {
    for (std::size_t k = 1; k < n; ++k) out.push_back(r.neighbors[(i + k) % n]);
    return out;
  }
  for (std::size_t k = (i + 1) % n; k != j; k = (k + 1) % n) out.push_back(r.neighbors[k]);
  return out;
}

// ---------------------------------------------------------------------------
// the K_{1,1,m,n} ledger

struct K11mnRoles {
  int o = -1, x = -1;
  std::vector<int> Y, Z;
};

inline bool is_k11mn(const Graph& g) {
  auto s = g.part_sizes();
  return s.size() == 4 && s[0] == 1 && s[1] == 1 && g.is_complete_multipartite();
}

inline K11mnRoles k11mn_roles(const Graph& g) {
  if (!is_k11mn(g)) fail("WRONG_FAMILY", "expected K_{1,1,m,n}, got " + g.spec());
  return {g.parts()[0][0], g.parts()[1][0], g.parts()[2], g.parts()[3]};
}

struct K11mnClasses {
  EdgeClass OX, OY, OZ, XY, XZ, YZ;
};

inline K11mnClasses k11mn_classes(const Graph& g) {
  auto r = k11mn_roles(g);
  std::vector<int> O{r.o}, X{r.x};
  return {edge_class(g, O, X, "E(O,X)"), edge_class(g, O, r.Y, "E(O,Y)"), edge_class(g, O, r.Z, "E(O,Z)"),
          edge_class(g, X, r.Y, "E(X,Y)"), edge_class(g, X, r.Z, "E(X,Z)"), edge_class(g, r.Y, r.Z, "E(Y,Z)")};
}

struct LedgerTerm {
  std::string name;
  long value = 0;
};

struct CrossingLedger {
  std::vector<LedgerTerm> terms;
  long total = 0;

  long sum() const {
    long s = 0;
    for (auto& t : terms) s += t.value;
    return s;
  }
};

inline CrossingLedger lemma2_decomposition(const Drawing& d) {
  auto c = k11mn_classes(d.graph);
  CrossingLedger l;
  l.terms = {
      {"cr(E(Y,Z))", crossings_within(d, c.YZ)},
      {"cr(E(O,X),E(Y,Z))", crossings_between(d, c.OX, c.YZ)},
      {"cr(E(X,Y),E(Y,Z))", crossings_between(d, c.XY, c.YZ)},
      {"cr(E(O,Z),E(X,Y)+E(Y,Z))", crossings_between(d, c.OZ, class_union(c.XY, c.YZ))},
      {"cr(E(O,Y),E(X,Z))", crossings_between(d, c.OY, c.XZ)},
      {"cr(E(O,Y),E(X,Y)+E(Y,Z))", crossings_between(d, c.OY, class_union(c.XY, c.YZ))},
      {"cr(E(X,Z),E(O,Z)+E(Y,Z))", crossings_between(d, c.XZ, class_union(c.OZ, c.YZ))},
  };
  l.total = crossings_total(d);
  if (l.sum() != l.total)
    fail("LEDGER_MISMATCH", "terms sum to " + std::to_string(l.sum()) + ", total is " + std::to_string(l.total));
  return l;
}

// ---------------------------------------------------------------------------
// file format

inline nlohmann::ordered_json encode_json(const Drawing& d) {
  using nlohmann::ordered_json;
  const Graph& g = d.graph;
  ordered_json gj;
  gj["spec"] = g.spec();
  gj["labels"] = g.part_labels();
  auto base = g.base_edges();
  ordered_json extra = ordered_json::array(), removed = ordered_json::array();
  for (auto [a, b] : g.edges()) {
    bool in_base = g.part_of(a) != g.part_of(b);
    if (!in_base) extra.push_back({g.label(a), g.label(b)});
  }
  for (auto [a, b] : base)
    if (!g.edge_index(a, b)) removed.push_back({g.label(a), g.label(b)});
  gj["extra_edges"] = extra;
  gj["removed_edges"] = removed;

  ordered_json j;
  j["graph"] = gj;
  j["edges"] = ordered_json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({g.label(a), g.label(b)});
  j["crossings"] = ordered_json::array();
  for (auto& x : d.crossings) j["crossings"].push_back({{"id", x.id}, {"edges", {x.e, x.f}}});
  j["edge_paths"] = ordered_json::array();
  for (auto& p : d.paths) {
    ordered_json arr = ordered_json::array();
    for (int c : p) arr.push_back(d.crossings[c].id);
    j["edge_paths"].push_back(arr);
  }
  ordered_json rot = ordered_json::object();
  for (int n = 0; n < d.num_nodes(); ++n) {
    ordered_json arr = ordered_json::array();
    for (auto se : d.rotations[n]) arr.push_back({{"edge", se.edge}, {"seg", se.seg}});
    rot[d.node_name(n)] = arr;
  }
  j["rotations"] = rot;
  return j;
}

inline std::string encode(const Drawing& d) { return encode_json(d).dump(1) + "\n"; }

namespace detail {

inline const nlohmann::json& need(const nlohmann::json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail("SCHEMA_ERROR", path + "/" + key + " missing");
  return j.at(key);
}

inline std::string need_string(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) fail("SCHEMA_ERROR", path + " must be a string");
  return j.get<std::string>();
}

inline int need_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) fail("SCHEMA_ERROR", path + " must be an integer");
  return j.get<int>();
}

inline std::pair<Label, Label> need_pair(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail("SCHEMA_ERROR", path + " must be a label pair");
  return {need_string(j[0], path + "/0"), need_string(j[1], path + "/1")};
}

}  // namespace detail

inline Drawing decode(const std::string& bytes) {
  using detail::need;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    fail("SCHEMA_ERROR", std::string("/ is not JSON: ") + e.what());
  }
  const auto& gj = need(j, "graph", "");
  std::string spec = detail::need_string(need(gj, "spec", "/graph"), "/graph/spec");
  Graph shape;
  try {
    shape = parse_graph_spec(spec);
  } catch (const Error& e) {
    fail("SCHEMA_ERROR", "/graph/spec: " + std::string(e.what()));
  }
  const auto& lj = need(gj, "labels", "/graph");
  if (!lj.is_array() || lj.size() != shape.parts().size())
    fail("SCHEMA_ERROR", "/graph/labels does not match the spec");
  std::vector<std::vector<Label>> parts;
  for (std::size_t p = 0; p < lj.size(); ++p) {
    std::string path = "/graph/labels/" + std::to_string(p);
    if (!lj[p].is_array() || lj[p].size() != shape.parts()[p].size())
      fail("SCHEMA_ERROR", path + " does not match the spec");
    parts.emplace_back();
    for (std::size_t i = 0; i < lj[p].size(); ++i)
      parts.back().push_back(detail::need_string(lj[p][i], path + "/" + std::to_string(i)));
  }
  Graph skeleton;
  try {
    skeleton = complete_on(parts);
  } catch (const Error& e) {
    fail("SCHEMA_ERROR", "/graph/labels: " + std::string(e.what()));
  }
  // Expected edge set: base - removed + extra.
  std::set<std::pair<Label, Label>> expected;
  auto norm = [](std::pair<Label, Label> p) {
    if (p.second < p.first) std::swap(p.first, p.second);
    return p;
  };
  for (auto& e : skeleton.edge_labels()) expected.insert(norm(e));
  const auto& rj = need(gj, "removed_edges", "/graph");
  const auto& xj = need(gj, "extra_edges", "/graph");
  if (!rj.is_array()) fail("SCHEMA_ERROR", "/graph/removed_edges must be an array");
  if (!xj.is_array()) fail("SCHEMA_ERROR", "/graph/extra_edges must be an array");
  for (std::size_t i = 0; i < rj.size(); ++i) {
    auto p = norm(detail::need_pair(rj[i], "/graph/removed_edges/" + std::to_string(i)));
    if (!expected.erase(p)) fail("SCHEMA_ERROR", "/graph/removed_edges/" + std::to_string(i) + " is not a base edge");
  }
  for (std::size_t i = 0; i < xj.size(); ++i) {
    auto p = norm(detail::need_pair(xj[i], "/graph/extra_edges/" + std::to_string(i)));
    if (!skeleton.find(p.first) || !skeleton.find(p.second) || p.first == p.second ||
        !expected.insert(p).second)
      fail("SCHEMA_ERROR", "/graph/extra_edges/" + std::to_string(i) + " is invalid");
  }
  const auto& ej = need(j, "edges", "");
  if (!ej.is_array()) fail("SCHEMA_ERROR", "/edges must be an array");
  std::vector<std::pair<Label, Label>> edges;
  std::set<std::pair<Label, Label>> listed;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    auto p = detail::need_pair(ej[i], "/edges/" + std::to_string(i));
    if (!expected.count(norm(p)) || !listed.insert(norm(p)).second)
      fail("SCHEMA_ERROR", "/edges/" + std::to_string(i) + " is not in spec+extra-removed or repeats");
    edges.push_back(p);
  }
  if (listed.size() != expected.size()) fail("SCHEMA_ERROR", "/edges misses edges of spec+extra-removed");

  Drawing d;
  d.graph = Graph::make(parts, edges);
  const int ne = d.graph.num_edges();

  const auto& cj = need(j, "crossings", "");
  if (!cj.is_array()) fail("SCHEMA_ERROR", "/crossings must be an array");
  std::map<std::string, int> cid;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    std::string path = "/crossings/" + std::to_string(i);
    Crossing x;
    x.id = detail::need_string(need(cj[i], "id", path), path + "/id");
    const auto& pe = need(cj[i], "edges", path);
    if (!pe.is_array() || pe.size() != 2) fail("SCHEMA_ERROR", path + "/edges must hold two edge indices");
    x.e = detail::need_int(pe[0], path + "/edges/0");
    x.f = detail::need_int(pe[1], path + "/edges/1");
    if (x.e < 0 || x.e >= ne || x.f < 0 || x.f >= ne || x.e == x.f)
      fail("SCHEMA_ERROR", path + "/edges out of range");
    if (d.graph.find(x.id) || !cid.emplace(x.id, static_cast<int>(i)).second)
      fail("SCHEMA_ERROR", path + "/id is not unique");
    d.crossings.push_back(x);
  }
  const auto& pj = need(j, "edge_paths", "");
  if (!pj.is_array() || static_cast<int>(pj.size()) != ne)
    fail("SCHEMA_ERROR", "/edge_paths must have one entry per edge");
  for (int e = 0; e < ne; ++e) {
    std::string path = "/edge_paths/" + std::to_string(e);
    if (!pj[e].is_array()) fail("SCHEMA_ERROR", path + " must be an array");
    d.paths.emplace_back();
    for (std::size_t k = 0; k < pj[e].size(); ++k) {
      auto id = detail::need_string(pj[e][k], path + "/" + std::to_string(k));
      auto it = cid.find(id);
      if (it == cid.end()) fail("SCHEMA_ERROR", path + "/" + std::to_string(k) + " unknown crossing " + id);
      d.paths.back().push_back(it->second);
    }
  }
  const auto& rotj = need(j, "rotations", "");
  if (!rotj.is_object()) fail("SCHEMA_ERROR", "/rotations must be an object");
  d.rotations.resize(d.num_nodes());
  for (int n = 0; n < d.num_nodes(); ++n) {
    std::string name = d.node_name(n);
    std::string path = "/rotations/" + name;
    const auto& arr = need(rotj, name, "/rotations");
    if (!arr.is_array()) fail("SCHEMA_ERROR", path + " must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string ip = path + "/" + std::to_string(i);
      SegEnd se{detail::need_int(need(arr[i], "edge", ip), ip + "/edge"),
                detail::need_int(need(arr[i], "seg", ip), ip + "/seg")};
      if (se.edge < 0 || se.edge >= ne || se.seg < 0 || se.seg > static_cast<int>(d.paths[se.edge].size()))
        fail("SCHEMA_ERROR", ip + " refers to a missing segment");
      d.rotations[n].push_back(se);
    }
    if (d.is_crossing_node(n)) {
      auto& r = d.rotations[n];
      if (r.size() != 4) fail("SCHEMA_ERROR", path + " crossing node must have degree 4");
      if (!(r[0].edge == r[2].edge && r[1].edge == r[3].edge && r[0].edge != r[1].edge))
        fail("SCHEMA_ERROR", path + " crossing rotation must alternate between its two edges");
    }
  }
  if (rotj.size() != static_cast<std::size_t>(d.num_nodes()))
    fail("SCHEMA_ERROR", "/rotations has entries for unknown nodes");
  return d;
}

// FNV-1a over the fields that make up the canonical encoding; tags drawings
// in certificates.
inline std::string digest(const Drawing& d) {
  std::uint64_t h = 1469598103934665603ull;
  auto byte = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  auto num = [&](long long v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
  };
  auto str = [&](const std::string& t) {
    num(static_cast<long long>(t.size()));
    for (unsigned char c : t) byte(c);
  };
  const Graph& g = d.graph;
  for (auto& part : g.parts()) {
    num(static_cast<long long>(part.size()));
    for (int v : part) str(g.label(v));
  }
  for (auto [a, b] : g.edges()) num(a), num(b);
  for (auto& c : d.crossings) str(c.id), num(c.e), num(c.f);
  for (auto& p : d.paths) {
    num(static_cast<long long>(p.size()));
    for (int c : p) num(c);
  }
  for (auto& r : d.rotations) {
    num(static_cast<long long>(r.size()));
    for (auto se : r) num(se.edge), num(se.seg);
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace crosskit
