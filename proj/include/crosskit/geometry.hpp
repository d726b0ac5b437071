#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crosskit/error.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/plane_map.hpp"

namespace crosskit {

// Lattice points; any rational layout can be scaled onto the lattice.
struct Point {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

// Vertex positions by vertex id. Edges are straight unless bends lists
// interior polyline points for them (indexed by edge id, may be short).
struct GeometricLayout {
  std::vector<Point> position;
  std::vector<std::vector<Point>> bends;
};

inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 29;

namespace geo {

using i128 = __int128;

inline i128 cross(Point o, Point a, Point b) {
  return i128(a.x - o.x) * (b.y - o.y) - i128(a.y - o.y) * (b.x - o.x);
}
inline int sign(i128 v) { return (v > 0) - (v < 0); }
inline int orient(Point a, Point b, Point c) { return sign(cross(a, b, c)); }

// c collinear with ab: is it within the closed box of ab?
inline bool within(Point a, Point b, Point c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

// Exact fraction num/den with den > 0.
struct Frac {
  i128 num, den;
};
inline bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
inline bool operator==(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }

// Half-plane then cross product: counterclockwise order starting at +x.
inline bool angle_less(Point a, Point b) {
  auto half = [](Point v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return orient({0, 0}, a, b) > 0;
}

inline Point minus(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace geo

inline Drawing from_geometric(const GeometricLayout& layout, const Graph& g) {
  using geo::i128;
  auto degenerate = [](const std::string& what) { fail("DEGENERATE_LAYOUT", what); };
  const int nv = g.num_vertices(), ne = g.num_edges();
  if (static_cast<int>(layout.position.size()) != nv) degenerate("layout has " + std::to_string(layout.position.size()) + " positions for " + std::to_string(nv) + " vertices");

  std::map<Point, int> at_vertex;
  auto check_range = [&](Point p) {
    if (p.x <= -kCoordLimit || p.x >= kCoordLimit || p.y <= -kCoordLimit || p.y >= kCoordLimit)
      degenerate("coordinate out of range at " + to_string(p));
  };
  for (int v = 0; v < nv; ++v) {
    check_range(layout.position[v]);
    if (!at_vertex.emplace(layout.position[v], v).second)
      degenerate("vertices " + g.label(at_vertex[layout.position[v]]) + " and " + g.label(v) + " share " + to_string(layout.position[v]));
  }

  struct Piece {
    int edge, index;
    Point a, b;
  };
  std::vector<std::vector<Point>> poly(ne);
  std::vector<Piece> pieces;
  for (int e = 0; e < ne; ++e) {
    auto [u, v] = g.edge(e);
    poly[e].push_back(layout.position[u]);
    if (e < static_cast<int>(layout.bends.size()))
      for (Point p : layout.bends[e]) {
        check_range(p);
        if (at_vertex.count(p)) degenerate("bend of edge " + std::to_string(e) + " on vertex at " + to_string(p));
        poly[e].push_back(p);
      }
    poly[e].push_back(layout.position[v]);
    for (std::size_t j = 0; j + 1 < poly[e].size(); ++j) {
      if (poly[e][j] == poly[e][j + 1]) degenerate("zero-length piece at " + to_string(poly[e][j]));
      pieces.push_back({e, static_cast<int>(j), poly[e][j], poly[e][j + 1]});
    }
  }

  // Vertices must not lie on pieces except at their own endpoints.
  for (auto& p : pieces)
    for (auto& [pt, v] : at_vertex) {
      if (pt == p.a || pt == p.b) continue;
      if (geo::orient(p.a, p.b, pt) == 0 && geo::within(p.a, p.b, pt))
        degenerate("vertex " + g.label(v) + " at " + to_string(pt) + " lies on an edge");
    }

  struct Hit {
    int piece;
    geo::Frac t;
    int crossing;
  };
  std::vector<std::vector<Hit>> hits(pieces.size());
  std::vector<std::pair<int, int>> xs;  // crossing -> (piece, piece)

  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece &p = pieces[i], &q = pieces[j];
      // Cheap reject on bounding boxes.
      if (std::max(p.a.x, p.b.x) < std::min(q.a.x, q.b.x) || std::max(q.a.x, q.b.x) < std::min(p.a.x, p.b.x) ||
          std::max(p.a.y, p.b.y) < std::min(q.a.y, q.b.y) || std::max(q.a.y, q.b.y) < std::min(p.a.y, p.b.y))
        continue;
      int o1 = geo::orient(p.a, p.b, q.a), o2 = geo::orient(p.a, p.b, q.b);
      int o3 = geo::orient(q.a, q.b, p.a), o4 = geo::orient(q.a, q.b, p.b);
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        if (p.edge == q.edge) degenerate("edge " + std::to_string(p.edge) + " crosses itself");
        Point d1 = geo::minus(p.b, p.a), d2 = geo::minus(q.b, q.a), w = geo::minus(q.a, p.a);
        i128 den = i128(d1.x) * d2.y - i128(d1.y) * d2.x;
        i128 tp = i128(w.x) * d2.y - i128(w.y) * d2.x;
        i128 tq = i128(w.x) * d1.y - i128(w.y) * d1.x;
        if (den < 0) den = -den, tp = -tp, tq = -tq;
        int c = static_cast<int>(xs.size());
        xs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        hits[i].push_back({static_cast<int>(i), {tp, den}, c});
        hits[j].push_back({static_cast<int>(j), {tq, den}, c});
        continue;
      }
      // Any other contact is allowed only at a shared piece endpoint where
      // the pieces leave in different directions.
      std::vector<Point> contacts;
      if (o1 == 0 && geo::within(p.a, p.b, q.a)) contacts.push_back(q.a);
      if (o2 == 0 && geo::within(p.a, p.b, q.b)) contacts.push_back(q.b);
      if (o3 == 0 && geo::within(q.a, q.b, p.a)) contacts.push_back(p.a);
      if (o4 == 0 && geo::within(q.a, q.b, p.b)) contacts.push_back(p.b);
      if (contacts.empty()) continue;
      for (Point c : contacts) {
        bool p_end = c == p.a || c == p.b, q_end = c == q.a || c == q.b;
        if (!p_end || !q_end) degenerate("segments touch at " + to_string(c));
        bool consecutive = p.edge == q.edge && std::abs(p.index - q.index) == 1;
        auto vit = at_vertex.find(c);
        bool shared_vertex = vit != at_vertex.end() && p.edge != q.edge;
        if (!consecutive && !shared_vertex) degenerate("edges meet at " + to_string(c));
        Point dp = geo::minus(c == p.a ? p.b : p.a, c), dq = geo::minus(c == q.a ? q.b : q.a, c);
        if (geo::orient({0, 0}, dp, dq) == 0 && i128(dp.x) * dq.x + i128(dp.y) * dq.y > 0)
          degenerate("segments overlap at " + to_string(c));
      }
    }

  // Order crossings along each edge.
  const int nc = static_cast<int>(xs.size());
  std::vector<std::vector<int>> order(ne);
  for (int e = 0; e < ne; ++e) {
    std::vector<Hit> all;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].edge == e)
        for (auto& h : hits[i]) all.push_back(h);
    std::sort(all.begin(), all.end(), [&](const Hit& a, const Hit& b) {
      if (pieces[a.piece].index != pieces[b.piece].index) return pieces[a.piece].index < pieces[b.piece].index;
      return a.t < b.t;
    });
    for (std::size_t k = 0; k + 1 < all.size(); ++k)
      if (all[k].piece == all[k + 1].piece && all[k].t == all[k + 1].t)
        degenerate("three edges through one point on edge " + g.label(g.edge(e).first) + "-" + g.label(g.edge(e).second));
    for (auto& h : all) order[e].push_back(h.crossing);
  }

  // Canonical crossing ids by first appearance.
  std::vector<int> cid(nc, -1);
  Drawing d;
  d.graph = g;
  d.paths.resize(ne);
  for (int e = 0; e < ne; ++e)
    for (int c : order[e]) {
      if (cid[c] < 0) {
        cid[c] = static_cast<int>(d.crossings.size());
        int e1 = pieces[xs[c].first].edge, e2 = pieces[xs[c].second].edge;
        d.crossings.push_back({"c" + std::to_string(cid[c] + 1), std::min(e1, e2), std::max(e1, e2)});
      }
      d.paths[e].push_back(cid[c]);
    }

  d.rotations.assign(nv + nc, {});
  auto sort_ccw = [](std::vector<std::pair<Point, SegEnd>>& dirs) {
    std::sort(dirs.begin(), dirs.end(), [](auto& a, auto& b) { return geo::angle_less(a.first, b.first); });
  };
  auto canon = [](std::vector<SegEnd>& r) {
    if (r.empty()) return;
    std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  };
  for (int v = 0; v < nv; ++v) {
    std::vector<std::pair<Point, SegEnd>> dirs;
    for (int e : g.incident_edges(v)) {
      bool first = g.edge(e).first == v;
      const auto& pl = poly[e];
      Point dir = first ? geo::minus(pl[1], pl[0]) : geo::minus(pl[pl.size() - 2], pl.back());
      dirs.push_back({dir, {e, first ? 0 : static_cast<int>(d.paths[e].size())}});
    }
    sort_ccw(dirs);
    for (auto& [p, s] : dirs) d.rotations[v].push_back(s);
    canon(d.rotations[v]);
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<std::pair<Point, SegEnd>> dirs;
    for (int side = 0; side < 2; ++side) {
      const Piece& p = pieces[side == 0 ? xs[c].first : xs[c].second];
      int j = 0;
      const auto& path = d.paths[p.edge];
      while (path[j] != cid[c]) ++j;
      Point fwd = geo::minus(p.b, p.a);
      dirs.push_back({fwd, {p.edge, j + 1}});
      dirs.push_back({Point{-fwd.x, -fwd.y}, {p.edge, j}});
    }
    sort_ccw(dirs);
    auto& r = d.rotations[nv + cid[c]];
    for (auto& [p, s] : dirs) r.push_back(s);
    canon(r);
  }
  require_valid(d, "from_geometric");
  return d;
}

}  // namespace crosskit
