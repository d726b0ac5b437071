#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "crosskit/error.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/plane_map.hpp"

namespace crosskit {

// Which side of a template edge a parallel copy runs on. After = the copy is
// the counterclockwise successor of the template in the start vertex's
// rotation, i.e. it runs on the template's left.
enum class Side { Before, After };

inline Side opposite(Side s) { return s == Side::After ? Side::Before : Side::After; }

// Mutable half-edge form of a drawing. Darts come in pairs (h, h^1); each
// node keeps its outgoing darts in counterclockwise order. The face on the
// left of h continues with rot_prev(h^1).
class MapBuilder {
 public:
  explicit MapBuilder(const Drawing& d) {
    const Graph& g = d.graph;
    for (int v = 0; v < g.num_vertices(); ++v) {
      nodes_.push_back({g.label(v), {}, true});
      by_label_[g.label(v)] = v;
      vertex_order_.push_back(v);
    }
    for (auto& p : g.parts()) parts_.push_back(p);
    for (std::size_t c = 0; c < d.crossings.size(); ++c) nodes_.push_back({{}, {}, true});
    std::vector<std::vector<int>> seg_dart(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
      edges_.push_back({g.edge(e).first, g.edge(e).second, true, next_order_++});
      for (int k = 0; k <= static_cast<int>(d.paths[e].size()); ++k) {
        auto [a, b] = d.segment_nodes(e, k);
        seg_dart[e].push_back(new_pair(e, a, b));
      }
    }
    for (int n = 0; n < d.num_nodes(); ++n)
      for (auto se : d.rotations[n]) {
        int h = seg_dart[se.edge][se.seg];
        nodes_[n].rot.push_back(src_[h] == n ? h : h ^ 1);
      }
  }

  // --- queries -------------------------------------------------------------

  int node(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) fail("UNKNOWN_VERTEX", std::string(label));
    return it->second;
  }
  bool is_vertex(int n) const { return !nodes_[n].label.empty(); }
  const std::string& label(int n) const { return nodes_[n].label; }
  int src(int h) const { return src_[h]; }
  int dst(int h) const { return src_[h ^ 1]; }
  int edge_of(int h) const { return dart_edge_[h]; }
  const std::vector<int>& rot(int n) const { return nodes_[n].rot; }
  int edge_first(int e) const { return edges_[e].a; }
  int edge_second(int e) const { return edges_[e].b; }
  bool edge_alive(int e) const { return edges_[e].alive; }

  int pos(int h) const {
    const auto& r = nodes_[src_[h]].rot;
    auto it = std::find(r.begin(), r.end(), h);
    if (it == r.end()) fail("STRUCTURE", "dart missing from its rotation");
    return static_cast<int>(it - r.begin());
  }
  int rot_next(int h) const {
    const auto& r = nodes_[src_[h]].rot;
    return r[(pos(h) + 1) % r.size()];
  }
  int rot_prev(int h) const {
    const auto& r = nodes_[src_[h]].rot;
    return r[(pos(h) + r.size() - 1) % r.size()];
  }
  int face_next(int h) const { return rot_prev(h ^ 1); }

  std::vector<int> face(int h) const {
    std::vector<int> out{h};
    for (int c = face_next(h); c != h; c = face_next(c)) {
      out.push_back(c);
      if (out.size() > 4 * src_.size() + 8) fail("STRUCTURE", "face walk does not close");
    }
    return out;
  }

  // The dart continuing straight through a crossing (or degree-2) node.
  int straight(int h) const {
    int t = h ^ 1, n = src_[t];
    const auto& r = nodes_[n].rot;
    int i = pos(t);
    if (r.size() == 4) return r[(i + 2) % 4];
    if (r.size() == 2) return r[(i + 1) % 2];
    fail("STRUCTURE", "cannot pass through a node of degree " + std::to_string(r.size()));
  }

  // Dart leaving node n along edge e.
  int dart_from(int n, int e) const {
    for (int h : nodes_[n].rot)
      if (dart_edge_[h] == e) return h;
    fail("UNKNOWN_EDGE", "edge " + std::to_string(e) + " does not leave node " + std::to_string(n));
  }

  // Edge id joining two vertex nodes.
  int edge_between(int u, int v) const {
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (edges_[e].alive && ((edges_[e].a == u && edges_[e].b == v) || (edges_[e].a == v && edges_[e].b == u)))
        return static_cast<int>(e);
    fail("UNKNOWN_EDGE", label(u) + "-" + label(v));
  }

  // Darts of edge e walking from its first endpoint.
  std::vector<int> edge_darts(int e) const {
    std::vector<int> out{dart_from(edges_[e].a, e)};
    while (!is_vertex(dst(out.back()))) out.push_back(straight(out.back()));
    return out;
  }

  // --- primitive mutations ---------------------------------------------------

  int new_pair(int e, int from, int to) {
    int h = static_cast<int>(src_.size());
    src_.push_back(from);
    src_.push_back(to);
    dart_edge_.push_back(e);
    dart_edge_.push_back(e);
    return h;
  }

  void insert_after(int n, int after, int h) {
    auto& r = nodes_[n].rot;
    if (after < 0) {
      r.push_back(h);
      return;
    }
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) fail("STRUCTURE", "insert position missing");
    r.insert(it + 1, h);
  }

  void replace_in_rot(int n, int old_h, int new_h) {
    auto& r = nodes_[n].rot;
    auto it = std::find(r.begin(), r.end(), old_h);
    if (it == r.end()) fail("STRUCTURE", "dart to replace missing");
    *it = new_h;
  }

  void erase_from_rot(int n, int h) {
    auto& r = nodes_[n].rot;
    auto it = std::find(r.begin(), r.end(), h);
    if (it == r.end()) fail("STRUCTURE", "dart to erase missing");
    r.erase(it);
  }

  // Splits the segment of h (A->B) with a new node c next to A. Afterwards h
  // runs A->c, h^1 leaves c, and the returned node's rotation is [h^1, n]
  // with n running c->B. The dart n is stored in last_split_.
  int subdivide(int h) {
    int a = src_[h], b = dst(h);
    (void)a;
    int c = static_cast<int>(nodes_.size());
    nodes_.push_back({{}, {}, true});
    int n = new_pair(dart_edge_[h], c, b);
    replace_in_rot(b, h ^ 1, n ^ 1);
    src_[h ^ 1] = c;
    nodes_[c].rot = {h ^ 1, n};
    last_split_ = n;
    return c;
  }
  int last_split() const { return last_split_; }

  int add_edge_record(int a, int b) {
    edges_.push_back({a, b, true, next_order_++});
    return static_cast<int>(edges_.size()) - 1;
  }
  void set_edge_end(int e, int b) { edges_[e].b = b; }
  void flip_edge(int e) { std::swap(edges_[e].a, edges_[e].b); }
  void take_order(int e, int from) { edges_[e].order = edges_[from].order; }

  // Turns a degree-2 node created by subdivide into a real vertex and splits
  // the edge through it into two fresh edges.
  void promote_to_vertex(int c, const Label& l, int first_end_near) {
    if (by_label_.count(l)) fail("DUPLICATE_LABEL", l);
    if (nodes_[c].rot.size() != 2) fail("STRUCTURE", "only a degree-2 node can become a vertex");
    int old = dart_edge_[nodes_[c].rot[0]];
    nodes_[c].label = l;
    by_label_[l] = c;
    vertex_order_.push_back(c);
    parts_.push_back({c});
    edges_[old].alive = false;
    for (int h : nodes_[c].rot) {
      // Walk from c along h to the far vertex and relabel darts.
      int far = -1;
      std::vector<int> darts{h};
      while (!is_vertex(dst(darts.back()))) darts.push_back(straight(darts.back()));
      far = dst(darts.back());
      int e = far == first_end_near ? add_edge_record(far, c) : add_edge_record(c, far);
      for (int d : darts) dart_edge_[d] = dart_edge_[d ^ 1] = e;
    }
  }

  // Removes edge e; crossing nodes on it are dissolved into the other edge.
  void remove_edge(int e) {
    auto darts = edge_darts(e);
    erase_from_rot(edges_[e].a, darts.front());
    erase_from_rot(edges_[e].b, darts.back() ^ 1);
    for (std::size_t i = 0; i + 1 < darts.size(); ++i) {
      int n = dst(darts[i]);
      erase_from_rot(n, darts[i] ^ 1);
      erase_from_rot(n, darts[i + 1]);
      auto r = nodes_[n].rot;
      if (r.size() != 2) fail("STRUCTURE", "dissolving a node of degree " + std::to_string(r.size() + 2));
      int p = r[0], q = r[1];  // p: n->P, q: n->Q
      int qn = src_[q ^ 1];
      src_[p] = qn;  // p now runs Q->P, paired with p^1 (P->Q)
      replace_in_rot(qn, q ^ 1, p);
      nodes_[n].rot.clear();
      nodes_[n].alive = false;
    }
    edges_[e].alive = false;
  }

  // --- export ---------------------------------------------------------------

  Drawing build() const {
    std::vector<int> vnode;
    std::unordered_map<int, int> vid;
    for (int n : vertex_order_)
      if (nodes_[n].alive) {
        vid[n] = static_cast<int>(vnode.size());
        vnode.push_back(n);
      }
    std::vector<std::vector<Label>> parts;
    for (auto& p : parts_) {
      std::vector<Label> ls;
      for (int n : p)
        if (nodes_[n].alive) ls.push_back(nodes_[n].label);
      if (!ls.empty()) parts.push_back(ls);
    }
    std::vector<int> eorder;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (edges_[e].alive) eorder.push_back(static_cast<int>(e));
    std::sort(eorder.begin(), eorder.end(), [&](int x, int y) { return edges_[x].order < edges_[y].order; });
    std::vector<std::pair<Label, Label>> elabels;
    for (int e : eorder) elabels.emplace_back(nodes_[edges_[e].a].label, nodes_[edges_[e].b].label);

    Drawing d;
    d.graph = Graph::make(parts, elabels);
    const int nv = d.graph.num_vertices();
    std::unordered_map<int, int> cid;            // builder node -> crossing index
    std::unordered_map<int, SegEnd> dart_end;    // builder dart -> segment end
    d.paths.resize(eorder.size());
    for (std::size_t ei = 0; ei < eorder.size(); ++ei) {
      auto darts = edge_darts(eorder[ei]);
      for (std::size_t k = 0; k < darts.size(); ++k) {
        dart_end[darts[k]] = dart_end[darts[k] ^ 1] = {static_cast<int>(ei), static_cast<int>(k)};
        if (k + 1 == darts.size()) break;
        int n = dst(darts[k]);
        if (nodes_[n].rot.size() != 4) fail("STRUCTURE", "crossing node of degree " + std::to_string(nodes_[n].rot.size()));
        auto it = cid.find(n);
        if (it == cid.end()) {
          int c = static_cast<int>(d.crossings.size());
          cid[n] = c;
          d.crossings.push_back({"c" + std::to_string(c + 1), static_cast<int>(ei), -1});
          d.paths[ei].push_back(c);
        } else {
          d.crossings[it->second].f = static_cast<int>(ei);
          d.paths[ei].push_back(it->second);
        }
      }
    }
    d.rotations.resize(nv + d.crossings.size());
    auto fill = [&](int bn, int dn) {
      auto& out = d.rotations[dn];
      for (int h : nodes_[bn].rot) out.push_back(dart_end.at(h));
      auto mn = std::min_element(out.begin(), out.end());
      std::rotate(out.begin(), mn, out.end());
    };
    for (int i = 0; i < nv; ++i) fill(vnode[i], i);
    for (auto [bn, c] : cid) fill(bn, nv + c);
    return d;
  }

 private:
  struct NodeRec {
    Label label;  // empty for crossing nodes
    std::vector<int> rot;
    bool alive = true;
  };
  struct EdgeRec {
    int a, b;
    bool alive;
    int order;
  };

  std::vector<NodeRec> nodes_;
  std::vector<int> src_, dart_edge_;
  std::vector<EdgeRec> edges_;
  std::unordered_map<Label, int> by_label_;
  std::vector<int> vertex_order_;
  std::vector<std::vector<int>> parts_;
  int next_order_ = 0;
  int last_split_ = -1;
};

// Draws one new edge through the map, face by face. The state is a corner:
// a node plus the dart after which the next segment leaves it.
class Walker {
 public:
  Walker(MapBuilder& b, int start, int corner_dart)
      : b_(b), node_(start), corner_(corner_dart), edge_(b.add_edge_record(start, -1)) {}

  int edge() const { return edge_; }
  int node() const { return node_; }
  int corner() const { return corner_; }

  // Crosses the segment of g (which leaves node at) right next to that node.
  // When a side is given the face is searched in the matching direction:
  // forward for a walk on the left, backward on the right. This picks the
  // nearby occurrence when both sides of a bridge lie on one face.
  void cross(int at, int g, std::optional<Side> side = std::nullopt) {
    auto f = ordered_face(side);
    bool left_of_g = false, found = false;
    for (int h : f) {
      if (h == g || h == (g ^ 1)) {
        left_of_g = h == g;
        found = true;
        break;
      }
    }
    if (!found || b_.src(g) != at) fail("GOODNESS_VIOLATION", "target segment is not on the current face");
    bool corner_on_split = corner_ == (g ^ 1);
    int c = b_.subdivide(g);
    int n = b_.last_split();
    if (corner_on_split) corner_ = n ^ 1;
    int in = left_of_g ? n : (g ^ 1);
    int out = left_of_g ? (g ^ 1) : n;
    connect(c, in);
    node_ = c;
    corner_ = out;
  }

  // Ends the edge at target, entering it at the nearest corner on the current face.
  void finish(int target, std::optional<Side> side = std::nullopt) {
    for (int h : ordered_face(side))
      if (b_.src(h) == target) {
        connect(target, h);
        b_.set_edge_end(edge_, target);
        return;
      }
    fail("GOODNESS_VIOLATION", "endpoint " + b_.label(target) + " is not on the current face");
  }

  // Runs alongside the template starting with dart h, crossing what it
  // crosses, until it reaches a vertex or stop(node, dart) says no. Returns
  // the template dart that arrives at the stopping node.
  int follow(int h, Side side, const std::function<bool(int, int)>& stop = nullptr) {
    while (true) {
      int q = b_.dst(h);
      if (b_.is_vertex(q)) return h;
      int tw = h ^ 1;
      int g = side == Side::After ? b_.rot_prev(tw) : b_.rot_next(tw);
      if (stop && stop(q, g)) return h;
      cross(q, g, side);
      h = b_.straight(h);
    }
  }

  // At vertex a reached along template dart `arrive`, crosses the darts on
  // our side strictly between the arrival and `leave`, next to a.
  void pass_around(int arrive, int leave, Side side) {
    int a = b_.dst(arrive);
    int g = side == Side::After ? b_.rot_prev(arrive ^ 1) : b_.rot_next(arrive ^ 1);
    while (g != leave) {
      cross(a, g, side);
      g = side == Side::After ? b_.rot_prev(g) : b_.rot_next(g);
    }
  }

 private:
  std::vector<int> ordered_face(std::optional<Side> side) const {
    auto f = b_.face(corner_);
    if (side == Side::Before) std::reverse(f.begin() + 1, f.end());
    return f;
  }

  void connect(int to, int after_at_to) {
    int s = b_.new_pair(edge_, node_, to);
    b_.insert_after(node_, corner_, s);
    b_.insert_after(to, after_at_to, s ^ 1);
  }

  MapBuilder& b_;
  int node_, corner_, edge_;
};

// Corner at vertex a for a copy of template dart t on the given side.
inline int side_corner(const MapBuilder& b, int t, Side side) {
  return side == Side::After ? t : b.rot_prev(t);
}

// ---------------------------------------------------------------------------
// surgeries on immutable drawings

inline Drawing mirror(const Drawing& d) {
  Drawing m = d;
  for (auto& r : m.rotations) {
    std::reverse(r.begin(), r.end());
    auto mn = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), mn, r.end());
  }
  return m;
}

inline Drawing delete_edges(const Drawing& d, const EdgeClass& s) {
  check_class(d, s);
  if (s.members.empty()) return d;
  MapBuilder b(d);
  for (int e : s.members) b.remove_edge(e);
  Drawing out = b.build();
  require_valid(out, "delete_edges");
  return out;
}

inline int edge_by_labels(const Graph& g, std::string_view a, std::string_view b) {
  auto e = g.edge_index(a, b);
  if (!e) fail("UNKNOWN_EDGE", std::string(a) + "-" + std::string(b));
  return *e;
}

// New vertex on edge vu right next to v.
inline Drawing subdivide_on_spoke(const Drawing& d, std::string_view v, std::string_view u, const Label& name) {
  int e = edge_by_labels(d.graph, v, u);
  MapBuilder b(d);
  int vn = b.node(v);
  int c = b.subdivide(b.dart_from(vn, e));
  b.promote_to_vertex(c, name, vn);
  Drawing out = b.build();
  require_valid(out, "subdivide_on_spoke");
  return out;
}

// Spoke darts at a hub, walking in one rotational direction from `from`,
// must name exactly the given neighbors in order.
inline void cross_spokes(MapBuilder& b, Walker& w, int hub, int first, bool clockwise,
                         const std::vector<Label>& spokes) {
  int g = first;
  for (auto& l : spokes) {
    int e = b.edge_of(g);
    int other = b.edge_first(e) == hub ? b.edge_second(e) : b.edge_first(e);
    if (b.label(other) != l) fail("BAD_INTERVAL", "expected spoke to " + l + ", found " + b.label(other));
    w.cross(hub, g, clockwise ? Side::After : Side::Before);
    g = clockwise ? b.rot_prev(g) : b.rot_next(g);
  }
}

// New edge a-t drawn alongside template edge a-w. Outside the disk of `hub`
// it crosses what the template crosses; a template crossing with an edge at
// the hub marks the disk boundary. Inside the disk it crosses the listed
// spokes of the hub in order, then ends at t.
inline Drawing add_parallel_edge(const Drawing& d, std::string_view a, std::string_view t, std::string_view w,
                                 Side side, std::string_view hub, const std::vector<Label>& disk) {
  int te = edge_by_labels(d.graph, a, w);
  MapBuilder b(d);
  int an = b.node(a), tn = b.node(t), hn = b.node(hub);
  int t0 = b.dart_from(an, te);
  Walker wk(b, an, side_corner(b, t0, side));
  auto at_hub = [&](int, int g) {
    int e = b.edge_of(g);
    return b.edge_first(e) == hn || b.edge_second(e) == hn;
  };
  int last = wk.follow(t0, side, at_hub);
  if (!disk.empty()) {
    if (b.dst(last) != hn) fail("BAD_INTERVAL", "disk spokes need a template ending at the hub");
    bool cw = side == Side::After;
    int first = cw ? b.rot_prev(last ^ 1) : b.rot_next(last ^ 1);
    cross_spokes(b, wk, hn, first, cw, disk);
  }
  wk.finish(tn, side);
  Drawing out = b.build();
  require_valid(out, "add_parallel_edge");
  return out;
}

// New edge from the first to the last vertex of `path`, running beside the
// path edges on one side and around each interior vertex on that side.
inline Drawing add_edge_along_path(const Drawing& d, const std::vector<Label>& path, Side side) {
  if (path.size() < 2) fail("BAD_INTERVAL", "path needs two vertices");
  MapBuilder b(d);
  std::vector<int> pn;
  for (auto& l : path) pn.push_back(b.node(l));
  int h = b.dart_from(pn[0], edge_by_labels(d.graph, path[0], path[1]));
  Walker wk(b, pn[0], side_corner(b, h, side));
  for (std::size_t i = 1;; ++i) {
    int last = wk.follow(h, side);
    if (b.dst(last) != pn[i]) fail("STRUCTURE", "path edge does not reach " + path[i]);
    if (i + 1 == path.size()) break;
    h = b.dart_from(pn[i], edge_by_labels(d.graph, path[i], path[i + 1]));
    wk.pass_around(last, h, side);
  }
  wk.finish(pn.back(), side);
  Drawing out = b.build();
  require_valid(out, "add_edge_along_path");
  return out;
}

namespace detail {

inline std::vector<int> crossing_partners(const Drawing& d, int e) {
  std::vector<int> out;
  for (int c : d.paths[e]) out.push_back(d.crossings[c].e == e ? d.crossings[c].f : d.crossings[c].e);
  return out;
}

}  // namespace detail

// Redraws the part of e inside the disk of v so that it crosses exactly the
// spokes to the given neighbors of v.
inline Drawing reroute_in_disk(const Drawing& d, int e, std::string_view v, const std::vector<Label>& interval) {
  if (e < 0 || e >= d.graph.num_edges()) fail("UNKNOWN_EDGE", std::to_string(e));
  const Graph& g = d.graph;
  int hv = g.index(v);
  auto [u1, u2] = g.edge(e);
  if (u1 == hv || u2 == hv) fail("BAD_INTERVAL", "edge is a spoke of the hub");
  auto is_spoke = [&](int f) { return g.incident(f, hv); };
  // The disk end is the endpoint adjacent to v; prefer the one whose path
  // meets the spokes first.
  auto partners = detail::crossing_partners(d, e);
  bool n1 = g.edge_index(u1, hv).has_value(), n2 = g.edge_index(u2, hv).has_value();
  if (!n1 && !n2) fail("BAD_INTERVAL", "edge does not end next to the hub");
  int tail = u2;
  if (n1 && !n2) tail = u1;
  if (n1 && n2 && !partners.empty() && is_spoke(partners.front()) && !is_spoke(partners.back())) tail = u1;
  int head = tail == u1 ? u2 : u1;

  std::vector<int> outside;
  for (int f : partners)
    if (!is_spoke(f)) outside.push_back(f);
  std::sort(outside.begin(), outside.end());
  std::set<Label> want(interval.begin(), interval.end());
  if (want.size() != interval.size()) fail("BAD_INTERVAL", "repeated spoke");
  for (auto& l : want)
    if (!g.edge_index(l, g.label(hv))) fail("BAD_INTERVAL", l + " is not a neighbor of " + g.label(hv));

  std::string last_error = "no side admits the interval";
  for (Side side : {Side::After, Side::Before}) {
    try {
      MapBuilder b(d);
      int hn = b.node(v), an = b.node(g.label(head)), tn = b.node(g.label(tail));
      int t0 = b.dart_from(an, e);
      Walker wk(b, an, side_corner(b, t0, side));
      wk.follow(t0, side, [&](int, int gd) {
        int f = b.edge_of(gd);
        return b.edge_first(f) == hn || b.edge_second(f) == hn;
      });
      Side end_side = side;
      if (!interval.empty()) {
        int hd = -1;
        for (int h : b.face(wk.corner()))
          if (b.src(h) == hn) {
            hd = h;
            break;
          }
        if (hd < 0) fail("BAD_INTERVAL", "hub not reachable on this side");
        auto spoke_label = [&](int gd) {
          int f = b.edge_of(gd);
          return b.label(b.edge_first(f) == hn ? b.edge_second(f) : b.edge_first(f));
        };
        bool cw = want.count(spoke_label(hd)) > 0;
        end_side = cw ? Side::After : Side::Before;
        int gd = cw ? hd : b.rot_next(hd);
        std::size_t crossed = 0;
        while (crossed < want.size()) {
          if (!want.count(spoke_label(gd))) fail("BAD_INTERVAL", "spokes are not a rotation interval");
          wk.cross(hn, gd, cw ? Side::After : Side::Before);
          ++crossed;
          gd = cw ? b.rot_prev(gd) : b.rot_next(gd);
        }
      }
      wk.finish(tn, end_side);
      b.remove_edge(e);
      b.take_order(wk.edge(), e);
      if (g.edge(e).first != head) b.flip_edge(wk.edge());
      Drawing out = b.build();
      auto rep = validate(out);
      if (!rep.ok()) fail("GOODNESS_VIOLATION", rep.summary());
      auto now = detail::crossing_partners(out, e);
      std::vector<int> out_now;
      std::set<Label> in_now;
      for (int f : now) {
        if (out.graph.incident(f, hv)) in_now.insert(out.graph.label(out.graph.other_end(f, hv)));
        else out_now.push_back(f);
      }
      std::sort(out_now.begin(), out_now.end());
      if (out_now != outside) fail("GOODNESS_VIOLATION", "outside crossings changed");
      if (in_now != want) fail("BAD_INTERVAL", "disk crossings differ from the interval");
      return out;
    } catch (const Error& err) {
      last_error = err.what();
    }
  }
  if (last_error.rfind("BAD_INTERVAL", 0) == 0) fail("BAD_INTERVAL", last_error);
  fail("GOODNESS_VIOLATION", last_error);
}

}  // namespace crosskit
