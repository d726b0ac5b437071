#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "crosskit/error.hpp"
#include "crosskit/geometry.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/plane_map.hpp"

namespace crosskit {

// Parts on the two axes, split around the origin, every edge straight.
inline Drawing zarankiewicz_drawing(int m, int n) {
  if (m < 1 || n < 1) fail("INVALID_PARTS", "K_{m,n} needs m,n >= 1");
  Graph g = complete_multipartite({m, n});
  auto axis = [](int k) {
    std::vector<std::int64_t> c;
    for (int i = -(k / 2); i < 0; ++i) c.push_back(i);
    for (int i = 1; i <= (k + 1) / 2; ++i) c.push_back(i);
    return c;
  };
  GeometricLayout L;
  L.position.resize(g.num_vertices());
  auto xs = axis(m), ys = axis(n);
  for (int i = 0; i < m; ++i) L.position[g.parts()[0][i]] = {xs[i], 0};
  for (int j = 0; j < n; ++j) L.position[g.parts()[1][j]] = {0, ys[j]};
  return from_geometric(L, g);
}

inline constexpr int kCylinderMax = 16;

// K_{1,1,m,n} on a sphere: Y and Z alternate in four blocks Y1 Z1 Y2 Z2 along
// an equator, o and x sit at the poles. Edges between neighbouring blocks
// hug the equator, (Y1,Z1) and (Y2,Z2) on o's hemisphere, the other two on
// x's; o-x runs through the Y2|Z2 gap. Projected so that o is the centre of
// a regular polygon and x lies outside; x's spokes wind around on nested
// copies of the polygon.
inline Drawing cylinder_k11mn(int m, int n) {
  if (m < 2 || n < 2 || m > kCylinderMax || n > kCylinderMax)
    fail("UNSUPPORTED_SIZE", "cylinder drawings cover 2 <= m,n <= " + std::to_string(kCylinderMax));
  Graph g = complete_multipartite({1, 1, m, n});
  const int N = m + n;
  const int ya = (m + 1) / 2, za = (n + 1) / 2;
  const int o = g.index("o"), x = g.index("x");
  const auto& Y = g.parts()[2];
  const auto& Z = g.parts()[3];

  std::vector<int> slot(g.num_vertices(), -1);  // equator position
  std::vector<char> first_block(g.num_vertices(), 0);
  int k = 0;
  for (int i = 0; i < ya; ++i) slot[Y[i]] = k++, first_block[Y[i]] = 1;
  for (int i = 0; i < za; ++i) slot[Z[i]] = k++, first_block[Z[i]] = 1;
  for (int i = ya; i < m; ++i) slot[Y[i]] = k++;
  for (int i = za; i < n; ++i) slot[Z[i]] = k++;
  const int gap = ya + za + (m - ya) - 1;  // between the last of Y2 and the first of Z2

  const double R = double(1 << 22);
  const double turn = 2 * std::numbers::pi / N, phase = 0.37 * turn / N;
  auto corner = [&](int i, double s) {
    double a = phase + turn * (((i % N) + N) % N);
    return std::pair{s * R * std::cos(a), s * R * std::sin(a)};
  };
  auto lattice = [](std::pair<double, double> p) { return Point{std::llround(p.first), std::llround(p.second)}; };
  auto on_side = [&](int i, double t, double s) {  // point at fraction t of polygon side i, scaled
    auto [ax, ay] = corner(i, s);
    auto [bx, by] = corner(i + 1, s);
    return std::pair{ax + t * (bx - ax), ay + t * (by - ay)};
  };

  GeometricLayout L;
  L.position.resize(g.num_vertices());
  L.bends.resize(g.num_edges());
  L.position[o] = {0, 0};
  for (int v : Y) L.position[v] = lattice(corner(slot[v], 1));
  for (int v : Z) L.position[v] = lattice(corner(slot[v], 1));

  struct Arc {
    int edge, start, len;
    bool inner, reversed;
  };
  std::vector<Arc> arcs;
  for (int y : Y)
    for (int z : Z) {
      int e = *g.edge_index(y, z);
      bool inner = first_block[y] == first_block[z];
      int from = inner ? slot[y] : slot[z], to = inner ? slot[z] : slot[y];
      arcs.push_back({e, from, ((to - from) % N + N) % N, inner, !inner});
    }
  // Shorter arcs run closer to the equator so nested arcs stay disjoint.
  for (bool inner : {true, false}) {
    std::vector<Arc*> side;
    for (auto& a : arcs)
      if (a.inner == inner) side.push_back(&a);
    std::sort(side.begin(), side.end(), [](Arc* a, Arc* b) { return std::pair{a->len, a->start} < std::pair{b->len, b->start}; });
    const double cnt = double(side.size()) + 1, c2 = std::pow(std::cos(std::numbers::pi / N), 2);
    for (std::size_t r = 0; r < side.size(); ++r) {
      double depth = double(r + 1) / cnt;
      double s = inner ? 1 - 0.8 * depth : (1 + 0.5 * depth) / c2;
      std::vector<Point> pts;
      for (int i = 0; i < side[r]->len; ++i) pts.push_back(lattice(on_side(side[r]->start + i, 0.5, s)));
      if (side[r]->reversed) std::reverse(pts.begin(), pts.end());
      L.bends[side[r]->edge] = pts;
    }
  }

  const double outer = 1.5 / std::pow(std::cos(std::numbers::pi / N), 2);
  auto lambda = [&](int t) { return outer * (1.1 + 0.2 * t / N); };
  const double far = lambda(N) * 1.2;
  L.position[x] = lattice(on_side(gap, 1.0 / 3, far));
  // x's spoke to the t-th vertex after the gap travels ccw on its own level.
  for (int t = 0; t < N; ++t) {
    int target = (gap + 1 + t) % N;
    int v = -1;
    for (int u : Y)
      if (slot[u] == target) v = u;
    for (int u : Z)
      if (slot[u] == target) v = u;
    int e = *g.edge_index(x, v);
    double lam = lambda(t), eps = 0.5 * (t + 1) / (N + 1);
    std::vector<Point> pts{lattice(on_side(gap, 1.0 / 3 + eps, lam))};
    for (int i = 1; i <= t + 1; ++i) pts.push_back(lattice(corner(gap + i, lam)));
    if (g.edge(e).first != x) std::reverse(pts.begin(), pts.end());
    L.bends[e] = pts;
  }
  return from_geometric(L, g);
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Straight-line drawing on random lattice points; redrawn with a derived
// seed whenever the sample is degenerate.
inline Drawing random_geometric_drawing(const Graph& g, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(attempt)));
    GeometricLayout L;
    for (int v = 0; v < g.num_vertices(); ++v) {
      auto c = [&] { return static_cast<std::int64_t>(rng() >> 39) - (std::int64_t{1} << 24); };
      std::int64_t px = c(), py = c();
      L.position.push_back({px, py});
    }
    try {
      return from_geometric(L, g);
    } catch (const Error& err) {
      if (err.code() != "DEGENERATE_LAYOUT" || attempt > 1000) throw;
    }
  }
}

}  // namespace crosskit
