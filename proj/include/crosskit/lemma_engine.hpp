#pragma once

#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crosskit/bounds.hpp"
#include "crosskit/error.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/map_builder.hpp"
#include "crosskit/plane_map.hpp"

namespace crosskit {

// ---------------------------------------------------------------------------
// certificates

struct Equality {
  std::string tag;
  i64 predicted = 0, measured = 0;
  bool at_most = false;  // measured <= predicted instead of equality

  bool pass() const { return at_most ? measured <= predicted : measured == predicted; }
};

struct PipelineCertificate {
  std::string pipeline;
  std::vector<Equality> equalities;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, std::string>> aliases;  // name used in the argument -> vertex
  std::vector<std::pair<std::string, std::string>> digests;
  std::string statement;
  std::optional<i64> bound;

  void equal(std::string tag, i64 predicted, i64 measured) {
    equalities.push_back({std::move(tag), predicted, measured, false});
  }
  void at_most(std::string tag, i64 limit, i64 measured) {
    equalities.push_back({std::move(tag), limit, measured, true});
  }
  void check(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }

  // Pulls in a sub-step's equalities under a prefix.
  void absorb(const PipelineCertificate& sub, const std::string& prefix) {
    for (auto e : sub.equalities) {
      e.tag = prefix + "." + e.tag;
      equalities.push_back(e);
    }
    for (auto& [n, ok] : sub.checks) checks.emplace_back(prefix + "." + n, ok);
  }

  bool passed() const {
    for (auto& e : equalities)
      if (!e.pass()) return false;
    for (auto& c : checks)
      if (!c.second) return false;
    return true;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (auto& e : equalities)
      if (!e.pass())
        out.push_back(e.tag + ": predicted " + std::to_string(e.predicted) + ", measured " + std::to_string(e.measured));
    for (auto& [n, ok] : checks)
      if (!ok) out.push_back(n);
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["pipeline"] = pipeline;
    j["pass"] = passed();
    j["equalities"] = nlohmann::ordered_json::array();
    for (auto& e : equalities) {
      nlohmann::ordered_json q{{"tag", e.tag}, {"predicted", e.predicted}, {"measured", e.measured}, {"pass", e.pass()}};
      if (e.at_most) q["relation"] = "<=";
      j["equalities"].push_back(q);
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& [n, ok] : checks) j["checks"].push_back({{"name", n}, {"pass", ok}});
    j["aliases"] = nlohmann::ordered_json::object();
    for (auto& [a, v] : aliases) j["aliases"][a] = v;
    j["digests"] = nlohmann::ordered_json::object();
    for (auto& [a, v] : digests) j["digests"][a] = v;
    j["bound"] = {{"statement", statement}, {"value", bound ? nlohmann::ordered_json(*bound) : nlohmann::ordered_json()}};
    return j;
  }
};

inline Label fresh_label(const Graph& g, const std::string& base) {
  if (!g.find(base)) return base;
  for (int i = 1;; ++i)
    if (auto l = base + "_" + std::to_string(i); !g.find(l)) return l;
}

// ---------------------------------------------------------------------------
// the vertex-splitting lemma

struct Lemma1Context {
  Drawing D;
  Label v;
  std::vector<Label> U;  // counterclockwise at v, u_0 first
  std::vector<Label> W;
  std::vector<std::vector<Label>> gaps;  // gaps[i]: strictly between u_i and u_{i+1}
  int k = 0, p = 0, q = 0;

  std::vector<int> gap_sizes() const {
    std::vector<int> s;
    for (auto& g : gaps) s.push_back(static_cast<int>(g.size()));
    return s;
  }
};

// U is read off the rotation at v; `first` fixes u_0, otherwise u_0 is the
// first member of U in the stored rotation.
inline Lemma1Context lemma1_context(const Drawing& D, std::string_view v, const std::vector<Label>& U, int k = 0,
                                    std::optional<Label> first = std::nullopt) {
  auto r = rotation(D, v).neighbors;
  std::set<Label> want(U.begin(), U.end());
  if (want.size() != U.size()) fail("DUPLICATE_LABEL", "repeated vertex in U");
  for (auto& u : want)
    if (std::find(r.begin(), r.end(), u) == r.end()) fail("NOT_A_NEIGHBOR", u + " is not a neighbor of " + std::string(v));
  if (U.empty()) fail("INVALID_PARTS", "U is empty");
  if (first && !want.count(*first)) fail("NOT_A_NEIGHBOR", *first + " is not in U");

  Lemma1Context c;
  c.D = D;
  c.v = std::string(v);
  std::size_t start = 0;
  while (first ? r[start] != *first : !want.count(r[start])) ++start;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Label& w = r[(start + i) % r.size()];
    if (want.count(w)) {
      c.U.push_back(w);
      c.gaps.emplace_back();
    } else {
      c.W.push_back(w);
      c.gaps.back().push_back(w);
    }
  }
  c.p = static_cast<int>(c.U.size());
  c.q = static_cast<int>(c.W.size());
  if (k < 0 || k >= c.p) fail("INVALID_ARGUMENT", "k must lie in 0.." + std::to_string(c.p - 1));
  c.k = k;
  return c;
}

// The disk term of cr(D^1_k): how often the new edges cross the spokes to W.
inline i64 lemma1_disk_sum(const std::vector<int>& w, int k) {
  const int p = static_cast<int>(w.size()), h = p / 2;
  i64 s = 0;
  for (int t = k; t <= k + h - 2; ++t) s += i64(k + h - t - 1) * w[t % p];
  for (int t = k + h; t <= k + p - 1; ++t) s += i64(t + 1 - k - h) * w[t % p];
  return s;
}

struct Lemma1Output {
  Drawing drawing;
  PipelineCertificate cert;
  Label x, y;
};

namespace detail {

inline void sweep_hub(MapBuilder& b, Walker& w, int hub, int from, Side side, int stop_edge) {
  auto step = [&](int g) { return side == Side::After ? b.rot_prev(g) : b.rot_next(g); };
  std::size_t guard = 0;
  for (int g = step(from); b.edge_of(g) != stop_edge; g = step(g)) {
    if (++guard > b.rot(hub).size()) fail("STRUCTURE", "sweep at " + b.label(hub) + " never meets its stop");
    w.cross(hub, g, side);
  }
}

// From u alongside its spoke to the hub, then around the hub next to it
// until the spoke of the target.
inline void arc_through_hub(MapBuilder& b, int u, int spoke, Side side, int hub, int stop_edge, int target) {
  int t0 = b.dart_from(u, spoke);
  Walker w(b, u, side_corner(b, t0, side));
  int last = w.follow(t0, side);
  if (b.dst(last) != hub) fail("STRUCTURE", "spoke copy does not reach the hub");
  sweep_hub(b, w, hub, last ^ 1, side, stop_edge);
  w.finish(target, side);
}

struct Spokes {
  int hub;
  std::vector<int> u, e;  // nodes u_i and edges vu_i
};

inline Spokes spokes_of(const MapBuilder& b, const Lemma1Context& c) {
  Spokes s{b.node(c.v), {}, {}};
  for (auto& l : c.U) {
    s.u.push_back(b.node(l));
    s.e.push_back(b.edge_between(s.hub, s.u.back()));
  }
  return s;
}

struct Placed {
  int node, to_hub, to_u;
};

inline Placed place_on_spoke(MapBuilder& b, const Spokes& s, int i, const Label& name) {
  int c = b.subdivide(b.dart_from(s.hub, s.e[i]));
  b.promote_to_vertex(c, name, s.hub);
  return {c, b.edge_between(c, s.hub), b.edge_between(c, s.u[i])};
}

// Every u_i other than u_k gets an edge to x: the first half of the
// indices after k passes clockwise around v, the second half counterclockwise.
inline void draw_split_arcs(MapBuilder& b, const Spokes& s, int k, const Placed& x) {
  const int p = static_cast<int>(s.u.size()), h = p / 2;
  for (int i = k + 1; i <= k + h - 1; ++i)
    arc_through_hub(b, s.u[i % p], s.e[i % p], Side::After, s.hub, x.to_hub, x.node);
  for (int i = k + p - 1; i >= k + h; --i)
    arc_through_hub(b, s.u[i % p], s.e[i % p], Side::Before, s.hub, x.to_hub, x.node);
}

inline std::pair<std::vector<std::vector<Label>>, std::vector<std::pair<Label, Label>>> split_graph_parts(
    const Lemma1Context& c, const std::vector<Label>& fresh) {
  const Graph& g = c.D.graph;
  std::set<Label> U(c.U.begin(), c.U.end());
  auto parts = g.part_labels();
  std::vector<std::pair<Label, Label>> edges;
  for (auto& [a, b] : g.edge_labels()) {
    bool spoke = (a == c.v && U.count(b)) || (b == c.v && U.count(a));
    if (!spoke) edges.emplace_back(a, b);
  }
  for (auto& f : fresh) {
    parts.push_back({f});
    edges.emplace_back(c.v, f);
    for (auto& u : c.U) edges.emplace_back(f, u);
  }
  return {parts, edges};
}

inline void need_even(const Lemma1Context& c) {
  if (c.p % 2) fail("ODD_P", "|U| = " + std::to_string(c.p) + " is odd");
  if (c.p < 2) fail("INVALID_PARTS", "U needs at least two vertices");
}

// cr_D(E({v},U), rest) with rest either everything off the U-spokes or
// everything not at v; both are the same number because spokes at v never
// cross each other.
inline long spoke_crossings(const Lemma1Context& c) {
  const Graph& g = c.D.graph;
  auto EU = edge_class(g, std::vector<Label>{c.v}, c.U, "E(v,U)");
  return crossings_between(c.D, EU, class_minus(all_edges(g), EU));
}

}  // namespace detail

// D^1_k: x appears on vu_k next to v and takes over every spoke to U.
inline Lemma1Output lemma1_d1(const Lemma1Context& c, Label x = {}) {
  detail::need_even(c);
  require_valid(c.D, "lemma1_d1 input");
  if (x.empty()) x = fresh_label(c.D.graph, "x");
  MapBuilder b(c.D);
  auto s = detail::spokes_of(b, c);
  auto px = detail::place_on_spoke(b, s, c.k, x);
  detail::draw_split_arcs(b, s, c.k, px);
  for (int i = 0; i < c.p; ++i)
    if (i != c.k) b.remove_edge(s.e[i]);
  Lemma1Output out{b.build(), {}, x, {}};
  require_valid(out.drawing, "lemma1_d1");

  auto& cert = out.cert;
  cert.pipeline = "lemma1-d1";
  cert.digests = {{"input", digest(c.D)}, {"output", digest(out.drawing)}};
  cert.aliases.emplace_back("x", x);
  const i64 disk = lemma1_disk_sum(c.gap_sizes(), c.k);
  const i64 total = crossings_total(out.drawing), at_x = vertex_crossings(out.drawing, x);
  cert.equal("Z1", crossings_total(c.D) + disk, total);
  cert.equal("C3", disk + detail::spoke_crossings(c), at_x);
  const Graph& g1 = out.drawing.graph;
  auto Ex = star_class(g1, g1.index(x));
  cert.equal("C2", crossings_within(out.drawing, class_minus(all_edges(g1), Ex)) + at_x, total);
  auto [parts, edges] = detail::split_graph_parts(c, {x});
  cert.check("graph=G1", same_graph(g1, Graph::make(parts, edges)));
  return out;
}

// D^2_k: x as in D^1_{k+p/2}, and y on vu_k joined to U and v. Each y-edge
// runs beside the old spoke vu_i; the one to u_{k+p/2} runs beside x u_{k+p/2},
// around x and beside xv. The old spokes are dropped at the end.
inline Lemma1Output lemma1_d2(const Lemma1Context& c, Label x = {}, Label y = {}) {
  detail::need_even(c);
  require_valid(c.D, "lemma1_d2 input");
  if (x.empty()) x = fresh_label(c.D.graph, "x");
  if (y.empty()) y = fresh_label(c.D.graph, x == "y" ? "y_1" : "y");
  if (x == y) fail("DUPLICATE_LABEL", x);
  const int p = c.p, h = p / 2, k = c.k, kk = (k + h) % p;
  MapBuilder b(c.D);
  auto s = detail::spokes_of(b, c);
  auto px = detail::place_on_spoke(b, s, kk, x);
  detail::draw_split_arcs(b, s, kk, px);
  auto py = detail::place_on_spoke(b, s, k, y);
  for (int i = k + 1; i <= k + h - 1; ++i)
    detail::arc_through_hub(b, s.u[i % p], s.e[i % p], Side::After, s.hub, py.to_hub, py.node);
  for (int i = k + p - 1; i >= k + h + 1; --i)
    detail::arc_through_hub(b, s.u[i % p], s.e[i % p], Side::Before, s.hub, py.to_hub, py.node);
  {
    int t0 = b.dart_from(s.u[kk], px.to_u);
    Walker w(b, s.u[kk], side_corner(b, t0, Side::Before));
    int last = w.follow(t0, Side::Before);
    if (b.dst(last) != px.node) fail("STRUCTURE", "copy of x-u does not reach x");
    int leave = b.dart_from(px.node, px.to_hub);
    w.pass_around(last, leave, Side::Before);
    int at_hub = w.follow(leave, Side::Before);
    detail::sweep_hub(b, w, s.hub, at_hub ^ 1, Side::Before, py.to_hub);
    w.finish(py.node, Side::Before);
  }
  for (int i = 0; i < p; ++i)
    if (i != k && i != kk) b.remove_edge(s.e[i]);
  Lemma1Output out{b.build(), {}, x, y};
  require_valid(out.drawing, "lemma1_d2");

  auto& cert = out.cert;
  cert.pipeline = "lemma1-d2";
  cert.digests = {{"input", digest(c.D)}, {"output", digest(out.drawing)}};
  cert.aliases = {{"x", x}, {"y", y}};
  const auto w = c.gap_sizes();
  const i64 cr0 = crossings_total(c.D), spokes = detail::spoke_crossings(c);
  const i64 total = crossings_total(out.drawing);
  const i64 at_y = vertex_crossings(out.drawing, y), xy = vertex_pair_crossings(out.drawing, x, y);
  cert.equal("D2", cr0 + spokes + i64(h) * (c.q + h - 1), total);
  cert.equal("Z0", lemma1_disk_sum(w, k) + i64(h) * (h - 1) + spokes, at_y);
  cert.equal("cr(x,y)", i64(h) * (h - 1), xy);
  cert.equal("Z1+cr(y)", cr0 + lemma1_disk_sum(w, kk) + at_y, total);
  cert.equal("C3", lemma1_disk_sum(w, kk) + spokes, vertex_crossings(out.drawing, x) - xy);
  auto [parts, edges] = detail::split_graph_parts(c, {x, y});
  cert.check("graph=G2", same_graph(out.drawing.graph, Graph::make(parts, edges)));
  return out;
}

struct Lemma1Run {
  Label v;
  std::vector<Label> U;
  int k = 0;
  bool d1 = false, d2 = false;
  std::string error;  // set when a transform threw

  bool ok() const { return d1 && d2 && error.empty(); }
};

// Both transforms for every vertex v, every even subset U of its neighbors
// with |U| >= 2, and every k.
inline std::vector<Lemma1Run> lemma1_sweep(const Drawing& D) {
  const Graph& g = D.graph;
  std::vector<Lemma1Run> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() > 20) fail("UNSUPPORTED_SIZE", "degree of " + g.label(v) + " too large to enumerate subsets");
    for (unsigned mask = 1; mask < (1u << nb.size()); ++mask) {
      if (std::popcount(mask) % 2) continue;
      std::vector<Label> U;
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (mask >> i & 1) U.push_back(g.label(nb[i]));
      for (int k = 0; k < static_cast<int>(U.size()); ++k) {
        Lemma1Run r{g.label(v), U, k};
        try {
          auto c = lemma1_context(D, r.v, U, k);
          r.d1 = lemma1_d1(c).cert.passed();
          r.d2 = lemma1_d2(c).cert.passed();
        } catch (const Error& e) {
          r.error = e.what();
        }
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// the redrawing arguments for K_{1,1,m,n}

struct PipelineResult {
  PipelineCertificate cert;
  std::vector<std::pair<std::string, Drawing>> drawings;

  const Drawing& drawing(const std::string& name) const {
    for (auto& [n, d] : drawings)
      if (n == name) return d;
    fail("UNKNOWN_VERTEX", "no drawing named " + name);
  }
};

namespace detail {

struct Roles {
  Label o, x;
  std::vector<Label> Y, Z;
  int m, n;
};

inline Roles roles_of(const Drawing& d) {
  auto r = k11mn_roles(d.graph);
  Roles out{d.graph.label(r.o), d.graph.label(r.x), {}, {}, static_cast<int>(r.Y.size()), static_cast<int>(r.Z.size())};
  for (int v : r.Y) out.Y.push_back(d.graph.label(v));
  for (int v : r.Z) out.Z.push_back(d.graph.label(v));
  return out;
}

inline std::vector<Label> cat(std::vector<Label> a, const std::vector<Label>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline EdgeClass cls(const Graph& g, const std::vector<Label>& a, const std::vector<Label>& b) {
  return edge_class(g, a, b);
}

inline EdgeClass rest(const Graph& g, const EdgeClass& a) { return class_minus(all_edges(g), a); }

inline std::string fmt_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline void attach_bound(PipelineCertificate& cert, int thm, int m, int n, const CrSource& src,
                         const std::string& formula, const std::string& measured) {
  cert.statement = formula + "; " + measured;
  try {
    auto b = theorem_lower_bound(thm, m, n, src);
    cert.bound = b.value;
    cert.statement += "; with known values the right side is " + fmt_rational(b.exact);
  } catch (const Error& e) {
    if (e.code() != "MISSING_VALUE") throw;
    cert.statement += "; " + std::string(e.what());
  }
}

// New edge a-t beside the edge a-w up to the disk of the hub, then straight
// to t. Either side that reaches t is acceptable; the count is the same.
inline Drawing beside_until_hub(const Drawing& d, const Label& a, const Label& t, const Label& w) {
  std::string why;
  for (Side side : {Side::After, Side::Before}) {
    try {
      return add_parallel_edge(d, a, t, w, side, t, {});
    } catch (const Error& e) {
      why = e.what();
    }
  }
  fail("GOODNESS_VIOLATION", why);
}

inline void require_parity(int m, int n, int pm, int pn, const std::string& what) {
  if (m % 2 != pm || n % 2 != pn) fail("WRONG_PARITY", what);
}

}  // namespace detail

// m, n even.
inline PipelineResult thm1_pipeline(const Drawing& D, const CrSource& src = {}) {
  using namespace detail;
  auto R = roles_of(D);
  const int m = R.m, n = R.n;
  require_parity(m, n, 0, 0, "needs m and n even");
  require_valid(D, "thm1 input");
  const Graph& g = D.graph;
  PipelineResult res;
  auto& cert = res.cert;
  cert.pipeline = "thm1";
  cert.digests.emplace_back("input", digest(D));
  const i64 cr = crossings_total(D);
  auto OY = cls(g, {R.o}, R.Y), XZ = cls(g, {R.x}, R.Z), OZ = cls(g, {R.o}, R.Z), XY = cls(g, {R.x}, R.Y);
  auto YZ = cls(g, R.Y, R.Z);

  // Lose E(X,Z); x joins Z as z_0 and o is split along Y.
  Drawing D1 = delete_edges(D, XZ);
  cert.equal("B4", cr - crossings_between(D, XZ, class_union(class_union(OY, OZ), YZ)), crossings_total(D1));
  cert.aliases.emplace_back("z0", R.x);
  auto zn1 = fresh_label(g, "z" + std::to_string(n + 1)), zn2 = fresh_label(g, "z" + std::to_string(n + 2));
  auto L2 = lemma1_d2(lemma1_context(D1, R.o, R.Y), zn1, zn2);
  cert.absorb(L2.cert, "D_2");
  const Drawing& D2 = L2.drawing;
  cert.equal("B5", crossings_total(D1) + crossings_between(D, OY, class_union(XY, YZ)) + i64(m / 2) * (n + m / 2),
             crossings_total(D2));
  cert.check("D_2 is K_{m+1,n+3}", same_graph(D2.graph, complete_on({cat({R.o}, R.Y), cat(cat({R.x}, R.Z), {zn1, zn2})})));

  // Lose E(O,Y); o joins Y as y_0 and x is split along Z.
  Drawing D3 = delete_edges(D, OY);
  cert.equal("B2", cr - crossings_between(D, OY, class_union(class_union(XY, XZ), YZ)), crossings_total(D3));
  cert.aliases.emplace_back("y0", R.o);
  auto ym1 = fresh_label(g, "y" + std::to_string(m + 1)), ym2 = fresh_label(g, "y" + std::to_string(m + 2));
  auto L4 = lemma1_d2(lemma1_context(D3, R.x, R.Z), ym1, ym2);
  cert.absorb(L4.cert, "D_4");
  const Drawing& D4 = L4.drawing;
  cert.equal("B3", crossings_total(D3) + crossings_between(D, XZ, class_union(OZ, YZ)) + i64(n / 2) * (m + n / 2),
             crossings_total(D4));
  cert.check("D_4 is K_{m+3,n+1}", same_graph(D4.graph, complete_on({cat({R.x}, R.Z), cat(cat({R.o}, R.Y), {ym1, ym2})})));

  const i64 oyxz = crossings_between(D, OY, XZ);
  const i64 sum = crossings_total(D2) + crossings_total(D4);
  cert.equal("B6", 2 * cr - 2 * oyxz + i64(n / 2) * (m + n / 2) + i64(m / 2) * (n + m / 2), sum);
  cert.digests.emplace_back("D_2", digest(D2));
  cert.digests.emplace_back("D_4", digest(D4));

  Rational rhs = (Rational(sum - i64(m) * n) - Rational(i64(m) * m + i64(n) * n, 4)) / 2;
  attach_bound(cert, 1, m, n, src,
               "cr(K_{1,1," + std::to_string(m) + "," + std::to_string(n) + "}) >= 1/2(cr(K_{" + std::to_string(m + 1) +
                   "," + std::to_string(n + 3) + "}) + cr(K_{" + std::to_string(m + 3) + "," + std::to_string(n + 1) +
                   "}) - mn - (m^2+n^2)/4)",
               "here 1/2(" + std::to_string(crossings_total(D2)) + " + " + std::to_string(crossings_total(D4)) +
                   " - mn - (m^2+n^2)/4) = " + fmt_rational(rhs) + " = cr(D) - cr_D(E(O,Y),E(X,Z)) = " +
                   std::to_string(cr) + " - " + std::to_string(oyxz));
  cert.check("measured inequality", rhs <= Rational(cr));
  res.drawings = {{"D_1", D1}, {"D_2", D2}, {"D_3", D3}, {"D_4", D4}};
  return res;
}

namespace detail {

// Both odd-n arguments start by splitting o along X and Z with x read as
// z_0; the W-gaps are the Y_i.
struct OddStart {
  Lemma1Context ctx;
  Lemma1Output at0, ath;
  std::vector<int> Ysz;
  Label y0;
};

inline OddStart odd_start(const Drawing& D, const Roles& R, PipelineCertificate& cert) {
  const int n = R.n, h = (n + 1) / 2;
  OddStart s;
  s.ctx = lemma1_context(D, R.o, cat({R.x}, R.Z), 0, R.x);
  s.Ysz = s.ctx.gap_sizes();
  s.y0 = fresh_label(D.graph, "y0");
  for (int i = 0; i <= n; ++i) cert.aliases.emplace_back("z" + std::to_string(i), s.ctx.U[i]);
  cert.aliases.emplace_back("y0", s.y0);
  const i64 cr = crossings_total(D);
  auto Y = [&](int i) { return i64(s.Ysz[i]); };

  s.ctx.k = 0;
  s.at0 = lemma1_d1(s.ctx, s.y0);
  cert.absorb(s.at0.cert, "D1_0");
  i64 b7 = cr;
  for (int i = 0; i <= h - 2; ++i) b7 += (h - i - 1) * Y(i);
  for (int i = h; i <= n; ++i) b7 += (i + 1 - h) * Y(i);
  cert.equal("B7", b7, crossings_total(s.at0.drawing));

  s.ctx.k = h;
  s.ath = lemma1_d1(s.ctx, s.y0);
  cert.absorb(s.ath.cert, "D1_h");
  i64 b8 = cr;
  for (int i = h; i <= n - 1; ++i) b8 += (n - i) * Y(i);
  for (int i = 0; i <= h - 1; ++i) b8 += (i + 1) * Y(i);
  cert.equal("B8", b8, crossings_total(s.ath.drawing));
  s.ctx.k = 0;
  return s;
}

}  // namespace detail

// m, n odd.
inline PipelineResult thm2_pipeline(const Drawing& D_in, const CrSource& src = {}) {
  using namespace detail;
  auto R = roles_of(D_in);
  const int m = R.m, n = R.n, h = (n + 1) / 2;
  require_parity(m, n, 1, 1, "needs m and n odd");
  require_valid(D_in, "thm2 input");
  PipelineResult res;
  auto& cert = res.cert;
  cert.pipeline = "thm2";
  cert.digests.emplace_back("input", digest(D_in));

  // Orientation: the gaps before z_h must hold at least as many of Y as
  // the gaps after; otherwise read the drawing in the mirror.
  Drawing D = D_in;
  {
    auto w = lemma1_context(D, R.o, cat({R.x}, R.Z), 0, R.x).gap_sizes();
    int lo = 0, hi = 0;
    for (int i = 0; i <= n; ++i) (i < h ? lo : hi) += w[i];
    if (lo < hi) D = mirror(D_in);
    cert.check("mirrored=" + std::string(lo < hi ? "yes" : "no"), true);
  }
  const Graph& g = D.graph;
  const i64 cr = crossings_total(D);
  auto s = odd_start(D, R, cert);
  i64 c = 0;
  for (int i = h; i <= n; ++i) c += s.Ysz[i];
  cert.at_most("c<=(m-1)/2", (m - 1) / 2, c);

  auto Y = [&](int i) { return i64(s.Ysz[i]); };
  i64 z6 = cr + c;
  for (int i = 0; i <= h - 2; ++i) z6 += (h - i - 1) * Y(i);
  for (int i = h; i <= n; ++i) z6 += (i - h) * Y(i);
  cert.equal("Z6", z6, crossings_total(s.at0.drawing));

  // D': y_0 z_0 turns the other way inside the disk of o.
  std::vector<Label> far;
  for (int i = h; i <= n; ++i)
    for (auto& l : s.ctx.gaps[i]) far.push_back(l);
  const Drawing& Dh = s.ath.drawing;
  Drawing Dp = reroute_in_disk(Dh, edge_by_labels(Dh.graph, s.y0, R.x), R.o, far);
  i64 z7 = cr + c;
  for (int i = h; i <= n - 1; ++i) z7 += (n - i) * Y(i);
  for (int i = 0; i <= h - 1; ++i) z7 += i * Y(i);
  cert.equal("Z7", z7, crossings_total(Dp));

  auto OX = cls(g, {R.o}, {R.x});
  const i64 L = crossings_between(D, OX, rest(g, OX));
  Drawing E1 = beside_until_hub(Dp, R.x, R.o, s.y0);
  cert.equal("B9", crossings_total(Dp) + L, crossings_total(E1));
  Drawing E2 = add_edge_along_path(s.at0.drawing, {R.o, s.y0, R.x}, Side::After);
  cert.equal("B10", crossings_total(s.at0.drawing) + L + (n - 1) / 2, crossings_total(E2));

  auto target = complete_on({{R.x}, cat({s.y0}, R.Y), cat({R.o}, R.Z)});
  cert.check("D_1 is K_{1,m+1,n+1}", same_graph(E1.graph, target));
  cert.check("D_2 is K_{1,m+1,n+1}", same_graph(E2.graph, target));
  const i64 sum = crossings_total(E1) + crossings_total(E2);
  cert.equal("B11", 2 * (cr + L + c) + i64((n - 1) / 2) * m + (n - 1) / 2, sum);
  cert.digests.emplace_back("D_1", digest(E1));
  cert.digests.emplace_back("D_2", digest(E2));

  // cr(D) + L + c = (sum - ((n-1)/2)(m+1)) / 2 and L <= cr(D) - cr(K_{2,m,n}).
  Rational half = Rational(sum - i64((n - 1) / 2) * (m + 1), 2);
  attach_bound(cert, 2, m, n, src,
               "cr(K_{1,1," + std::to_string(m) + "," + std::to_string(n) + "}) >= 1/2(cr(K_{1," + std::to_string(m + 1) +
                   "," + std::to_string(n + 1) + "}) + cr(K_{2," + std::to_string(m) + "," + std::to_string(n) +
                   "}) - (m+1)(n+1)/4 + 1)",
               "here (cr(D_1) + cr(D_2) - (n-1)(m+1)/2)/2 = (" + std::to_string(crossings_total(E1)) + " + " +
                   std::to_string(crossings_total(E2)) + " - " + std::to_string(i64((n - 1) / 2) * (m + 1)) +
                   ")/2 = " + fmt_rational(half) + " = cr(D) + L + c with cr(D) = " + std::to_string(cr) +
                   ", L = " + std::to_string(L) + ", c = " + std::to_string(c));
  cert.check("measured inequality", half - Rational(c) <= Rational(2 * cr));
  res.drawings = {{"D1_0", s.at0.drawing}, {"D1_h", s.ath.drawing}, {"D'", Dp}, {"D_1", E1}, {"D_2", E2}};
  return res;
}

// m even, n odd.
inline PipelineResult thm3_pipeline(const Drawing& D, const CrSource& src = {}) {
  using namespace detail;
  auto R = roles_of(D);
  const int m = R.m, n = R.n, h = (n + 1) / 2;
  require_parity(m, n, 0, 1, "needs m even and n odd");
  require_valid(D, "thm3 input");
  const Graph& g = D.graph;
  PipelineResult res;
  auto& cert = res.cert;
  cert.pipeline = "thm3";
  cert.digests.emplace_back("input", digest(D));
  const i64 cr = crossings_total(D);
  auto s = odd_start(D, R, cert);
  const Drawing &D10 = s.at0.drawing, &D1h = s.ath.drawing;

  auto OX = cls(g, {R.o}, {R.x}), XZ = cls(g, {R.x}, R.Z), OZ = cls(g, {R.o}, R.Z), YZ = cls(g, R.Y, R.Z);
  auto YOZ = cls(g, R.Y, cat({R.o}, R.Z));
  const i64 L = crossings_between(D, OX, rest(g, OX));
  const i64 xz_rest = crossings_between(D, XZ, rest(g, XZ));

  Drawing E1 = beside_until_hub(D1h, R.x, R.o, s.y0);
  cert.equal("J1", crossings_total(D1h) + L, crossings_total(E1));
  Drawing E2 = delete_edges(D10, cls(D10.graph, {R.x}, R.Z));
  cert.equal("J2", crossings_total(D10) - xz_rest, crossings_total(E2));
  cert.check("D_2 is K_{m+1,n+2}", same_graph(E2.graph, complete_on({cat({s.y0}, R.Y), cat({R.o, R.x}, R.Z)})));

  // In D_1, o is z_0 and x is split along O and Z.
  auto y1 = fresh_label(E1.graph, "y" + std::to_string(m + 1)), y2 = fresh_label(E1.graph, "y" + std::to_string(m + 2));
  auto L3 = lemma1_d2(lemma1_context(E1, R.x, cat({R.o}, R.Z), 0, R.o), y1, y2);
  cert.absorb(L3.cert, "D_3");
  const Drawing& E3 = L3.drawing;
  cert.check("D_3 is K_{m+3,n+2}",
             same_graph(E3.graph, complete_on({cat(cat({s.y0}, R.Y), {y1, y2}), cat({R.o, R.x}, R.Z)})));

  const Graph& g1 = E1.graph;
  auto OZ1 = cat({R.o}, R.Z);
  auto X_OZ = cls(g1, {R.x}, OZ1), rest_x = class_minus(all_edges(g1), star_class(g1, g1.index(R.x)));
  auto XO1 = cls(g1, {R.x}, {R.o}), XZ1 = cls(g1, {R.x}, R.Z);
  auto Y_OZ1 = cls(g1, R.Y, OZ1), y0_OZ1 = cls(g1, {s.y0}, OZ1);
  const i64 x1 = crossings_between(E1, XO1, Y_OZ1), x2 = crossings_between(E1, XO1, y0_OZ1);
  const i64 x3 = crossings_between(E1, XZ1, Y_OZ1), x4 = crossings_between(E1, XZ1, y0_OZ1);
  cert.equal("X0", x1 + x2 + x3 + x4, crossings_between(E1, X_OZ, rest_x));
  cert.equal("X1", crossings_between(D, OX, YZ), x1);
  cert.equal("X2", 0, x2);
  cert.equal("X3", crossings_between(D, XZ, YOZ), x3);
  cert.equal("X4", crossings_between(D, XZ, OZ), x4);
  cert.equal("X5", crossings_between(D, XZ, OZ) + crossings_between(D, XZ, YOZ), xz_rest);
  const i64 tail = i64(h) * (m + h);
  cert.equal("C6", crossings_total(E1) + crossings_between(D, OX, YZ) + xz_rest + tail, crossings_total(E3));
  const i64 sum = crossings_total(E2) + crossings_total(E3);
  cert.equal("C7", 2 * L + crossings_total(D10) + crossings_total(D1h) + tail, sum);
  cert.equal("C8", 2 * (cr + L) + i64(h) * m + tail, sum);
  cert.digests.emplace_back("D_2", digest(E2));
  cert.digests.emplace_back("D_3", digest(E3));

  // cr(D) + L = (cr(D_2) + cr(D_3) - h m - h(m+h)) / 2, and L <= cr(D) - cr(K_{2,m,n}).
  Rational half = Rational(sum - i64(h) * m - tail, 2);
  attach_bound(cert, 3, m, n, src,
               "cr(K_{1,1," + std::to_string(m) + "," + std::to_string(n) + "}) >= 1/4(cr(K_{" + std::to_string(m + 1) +
                   "," + std::to_string(n + 2) + "}) + cr(K_{" + std::to_string(m + 3) + "," + std::to_string(n + 2) +
                   "}) + 2cr(K_{2," + std::to_string(m) + "," + std::to_string(n) + "}) - m(n+1) - (n+1)^2/4)",
               "here (cr(D_2) + cr(D_3) - hm - h(m+h))/2 = (" + std::to_string(crossings_total(E2)) + " + " +
                   std::to_string(crossings_total(E3)) + " - " + std::to_string(i64(h) * m + tail) + ")/2 = " +
                   fmt_rational(half) + " = cr(D) + L with cr(D) = " + std::to_string(cr) + ", L = " + std::to_string(L));
  cert.check("measured inequality", half <= Rational(2 * cr));
  res.drawings = {{"D1_0", D10}, {"D1_h", D1h}, {"D_1", E1}, {"D_2", E2}, {"D_3", E3}};
  return res;
}

struct Lemma3Report {
  i64 against_yz = 0, against_rest = 0, limit = 0;
  bool identity = false, holds = false;
  i64 slack() const { return limit - against_rest; }
};

inline Lemma3Report lemma3_check(const Drawing& D, i64 cr_k2mn) {
  auto c = k11mn_classes(D.graph);
  Lemma3Report r;
  r.against_yz = crossings_between(D, c.OX, c.YZ);
  r.against_rest = crossings_between(D, c.OX, class_minus(all_edges(D.graph), c.OX));
  r.limit = crossings_total(D) - cr_k2mn;
  r.identity = r.against_yz == r.against_rest;
  r.holds = r.against_rest <= r.limit;
  return r;
}

}  // namespace crosskit
