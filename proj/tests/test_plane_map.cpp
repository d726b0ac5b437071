#include <algorithm>

#include <gtest/gtest.h>
#include <json.hpp>

#include "crosskit/generators.hpp"
#include "crosskit/map_builder.hpp"
#include "crosskit/plane_map.hpp"

using namespace crosskit;

namespace {

// Planar star with v's rotation (u0, w0, u1, w1).
Drawing star() {
  Graph g = Graph::make({{"v"}, {"u0", "w0", "u1", "w1"}}, {{"v", "u0"}, {"v", "w0"}, {"v", "u1"}, {"v", "w1"}});
  GeometricLayout L;
  L.position = {{0, 0}, {10, 0}, {0, 10}, {-10, 0}, {0, -10}};
  return from_geometric(L, g);
}

bool cyclic_equal(std::vector<Label> a, const std::vector<Label>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return a.empty() && b.empty();
}

// Edges a-b and c-d drawn so they meet twice.
Drawing double_crossing() {
  auto j = nlohmann::json::parse(R"({
    "graph": {"spec": "K=2,2", "labels": [["a","c"],["b","d"]],
              "extra_edges": [], "removed_edges": [["a","d"],["c","b"]]},
    "edges": [["a","b"],["c","d"]],
    "crossings": [{"id":"c1","edges":[0,1]}, {"id":"c2","edges":[0,1]}],
    "edge_paths": [["c1","c2"],["c1","c2"]],
    "rotations": {
      "a": [{"edge":0,"seg":0}], "c": [{"edge":1,"seg":0}],
      "b": [{"edge":0,"seg":2}], "d": [{"edge":1,"seg":2}],
      "c1": [{"edge":0,"seg":1},{"edge":1,"seg":0},{"edge":0,"seg":0},{"edge":1,"seg":1}],
      "c2": [{"edge":0,"seg":2},{"edge":1,"seg":2},{"edge":0,"seg":1},{"edge":1,"seg":1}]
    }})");
  return decode(j.dump());
}

std::string decode_code(const std::string& text) {
  try {
    decode(text);
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

}  // namespace

TEST(Validate, GeneratedDrawingsPass) {
  EXPECT_TRUE(validate(zarankiewicz_drawing(3, 3)).ok());
  EXPECT_TRUE(validate(star()).ok());
}

TEST(Validate, DoubleCrossing) {
  auto rep = validate(double_crossing());
  EXPECT_TRUE(rep.has("DOUBLE_CROSSING")) << rep.summary();
}

TEST(Validate, CrossingOfAnEdgeWithItself) {
  auto d = double_crossing();
  d.crossings[1].f = 0;
  EXPECT_FALSE(validate(d).ok());
}

TEST(Validate, WrongRotationBreaksEuler) {
  // K_4 with one vertex inside: reversing one outer vertex rotation gives a
  // map of higher genus.
  Graph g = complete_multipartite({1, 1, 1, 1});
  GeometricLayout L;
  L.position = {{0, 0}, {100, 0}, {0, 100}, {20, 20}};
  Drawing d = from_geometric(L, g);
  ASSERT_EQ(crossings_total(d), 0);
  auto& r = d.rotations[g.index("y")];
  std::reverse(r.begin(), r.end());
  auto rep = validate(d);
  EXPECT_TRUE(rep.has("NONPLANAR_MAP")) << rep.summary();
}

TEST(Count, ZarankiewiczThreeThree) {
  Drawing d = zarankiewicz_drawing(3, 3);
  EXPECT_EQ(crossings_total(d), 1);
  EXPECT_EQ(crossings_between(d, all_edges(d.graph), make_class("none", {})), 0);
  auto& c = d.crossings.at(0);
  auto [a1, b1] = d.graph.edge(c.e);
  auto [a2, b2] = d.graph.edge(c.f);
  // a1 and a2 both lie in the first part.
  EXPECT_EQ(d.graph.part_of(a1), d.graph.part_of(a2));
  EXPECT_EQ(vertex_pair_crossings(d, d.graph.label(a1), d.graph.label(a2)), 1);
  EXPECT_EQ(vertex_pair_crossings(d, d.graph.label(b1), d.graph.label(b2)), 1);
  EXPECT_EQ(vertex_crossings(d, d.graph.label(a1)), 1);
}

TEST(Count, PlanarVertexHasNoCrossings) {
  Drawing s = star();
  for (auto& l : s.graph.labels()) EXPECT_EQ(vertex_crossings(s, l), 0);
  try {
    vertex_crossings(s, "nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UNKNOWN_VERTEX");
  }
}

TEST(Count, UnknownEdgeInClass) {
  Drawing s = star();
  try {
    crossings_between(s, make_class("bad", {99}), all_edges(s.graph));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UNKNOWN_EDGE");
  }
}

TEST(Rotation, StarIntervals) {
  Drawing s = star();
  EXPECT_TRUE(cyclic_equal(rotation(s, "v").neighbors, {"u0", "w0", "u1", "w1"}));
  EXPECT_EQ(subrotation_interval(s, "v", "u0", "u1"), (std::vector<Label>{"w0"}));
  EXPECT_EQ(subrotation_interval(s, "v", "u1", "u0"), (std::vector<Label>{"w1"}));
  EXPECT_EQ(subrotation_interval(s, "v", "w0", "w0"), (std::vector<Label>{"u1", "w1", "u0"}));
  try {
    subrotation_interval(s, "v", "u0", "v");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NOT_A_NEIGHBOR");
  }
}

TEST(Rotation, AxisVertexSeesOtherAxisInOrder) {
  // y2 sits at x = 1; z1..z4 at y = -2, -1, 1, 2.
  Drawing d = zarankiewicz_drawing(3, 4);
  EXPECT_TRUE(cyclic_equal(rotation(d, "y2").neighbors, {"z4", "z3", "z2", "z1"}));
}

TEST(Surgery, DeleteEdges) {
  Drawing d = zarankiewicz_drawing(3, 3);
  EXPECT_EQ(encode(delete_edges(d, make_class("none", {}))), encode(d));
  Drawing e = delete_edges(d, make_class("one", {d.crossings[0].e}));
  EXPECT_EQ(crossings_total(e), 0);
  EXPECT_TRUE(validate(e).ok());
}

TEST(Surgery, SubdivideKeepsCrossingOrder) {
  Drawing d = zarankiewicz_drawing(5, 7);
  int target = -1;
  for (int e = 0; e < d.graph.num_edges(); ++e)
    if (d.paths[e].size() == 3) target = e;
  ASSERT_GE(target, 0);
  auto [a, b] = d.graph.edge(target);
  Label v = d.graph.label(a), u = d.graph.label(b);
  std::vector<std::pair<Label, Label>> before;
  for (int c : d.paths[target]) {
    int f = d.crossings[c].e == target ? d.crossings[c].f : d.crossings[c].e;
    before.emplace_back(d.graph.label(d.graph.edge(f).first), d.graph.label(d.graph.edge(f).second));
  }
  Drawing s = subdivide_on_spoke(d, v, u, "t");
  EXPECT_EQ(crossings_total(s), crossings_total(d));
  int near = edge_by_labels(s.graph, v, "t"), far = edge_by_labels(s.graph, "t", u);
  EXPECT_TRUE(s.paths[near].empty());
  ASSERT_EQ(s.paths[far].size(), 3u);
  // The far part runs from t to u or from u to t; read it from t.
  std::vector<std::pair<Label, Label>> after;
  for (int c : s.paths[far]) {
    int f = s.crossings[c].e == far ? s.crossings[c].f : s.crossings[c].e;
    after.emplace_back(s.graph.label(s.graph.edge(f).first), s.graph.label(s.graph.edge(f).second));
  }
  if (s.graph.label(s.graph.edge(far).first) != "t") std::reverse(after.begin(), after.end());
  EXPECT_EQ(after, before);
}

TEST(Surgery, SubdivideCrossingFree) {
  Drawing s = subdivide_on_spoke(star(), "v", "u0", "t");
  EXPECT_EQ(crossings_total(s), 0);
  EXPECT_EQ(s.graph.num_edges(), 5);
}

TEST(Surgery, ParallelEdgeThroughDisk) {
  Drawing s = subdivide_on_spoke(star(), "v", "u0", "t");
  Drawing d = add_parallel_edge(s, "u1", "t", "v", Side::After, "v", {"w0"});
  EXPECT_EQ(crossings_total(d), 1);
  EXPECT_EQ(vertex_pair_crossings(d, "u1", "v"), 1);  // u1-t against v-w0
}

TEST(Surgery, RerouteInsideTheDisk) {
  // a-b passes over the spoke v-w right next to v.
  Graph g = Graph::make({{"v"}, {"w", "a", "b"}}, {{"v", "w"}, {"v", "a"}, {"v", "b"}, {"a", "b"}});
  GeometricLayout L;
  L.position = {{0, 0}, {10, 0}, {5, -5}, {5, 5}};
  Drawing d = from_geometric(L, g);
  ASSERT_EQ(crossings_total(d), 1);
  int e = edge_by_labels(g, "a", "b");
  Drawing same = reroute_in_disk(d, e, "v", {"w"});
  EXPECT_EQ(crossings_total(same), 1);
  EXPECT_EQ(rotation(same, "v").neighbors, rotation(d, "v").neighbors);
  Drawing none = reroute_in_disk(d, e, "v", {});
  EXPECT_EQ(crossings_total(none), 0);
  EXPECT_TRUE(validate(none).ok());
}

TEST(Ledger, CylinderFourFour) {
  auto l = lemma2_decomposition(cylinder_k11mn(4, 4));
  EXPECT_EQ(l.terms.size(), 7u);
  EXPECT_EQ(l.sum(), 24);
  EXPECT_EQ(l.total, 24);
}

TEST(Ledger, RandomDrawingsBalance) {
  Graph g = complete_multipartite({1, 1, 3, 3});
  for (int s = 0; s < 100; ++s) {
    auto l = lemma2_decomposition(random_geometric_drawing(g, s));
    EXPECT_EQ(l.sum(), l.total) << "seed " << s;
  }
}

TEST(FileFormat, RoundTripIsByteIdentical) {
  for (Drawing d : {zarankiewicz_drawing(3, 3), cylinder_k11mn(3, 4), random_geometric_drawing(complete_multipartite({2, 3, 2}), 7)}) {
    std::string a = encode(d);
    Drawing back = decode(a);
    EXPECT_EQ(encode(back), a);
    EXPECT_EQ(digest(back), digest(d));
  }
}

TEST(FileFormat, CrossingNodeOfDegreeThree) {
  auto j = nlohmann::json::parse(encode(zarankiewicz_drawing(3, 3)));
  j["rotations"]["c1"].erase(0);
  EXPECT_EQ(decode_code(j.dump()), "SCHEMA_ERROR");
}

TEST(FileFormat, NonAlternatingCrossing) {
  auto j = nlohmann::json::parse(encode(zarankiewicz_drawing(3, 3)));
  auto& r = j["rotations"]["c1"];
  std::swap(r[1], r[2]);
  EXPECT_EQ(decode_code(j.dump()), "SCHEMA_ERROR");
}

TEST(FileFormat, MissingKeysAndBadJson) {
  EXPECT_EQ(decode_code("{"), "SCHEMA_ERROR");
  EXPECT_EQ(decode_code("{}"), "SCHEMA_ERROR");
  auto j = nlohmann::json::parse(encode(zarankiewicz_drawing(2, 2)));
  j.erase("edge_paths");
  EXPECT_EQ(decode_code(j.dump()), "SCHEMA_ERROR");
}
