#include <functional>

#include <gtest/gtest.h>

#include "crosskit/graph.hpp"

using namespace crosskit;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

}  // namespace

TEST(CompleteMultipartite, EdgeCounts) {
  EXPECT_EQ(complete_multipartite({1, 1, 4, 4}).num_edges(), 33);
  EXPECT_EQ(complete_multipartite({1, 1, 4, 4}).num_vertices(), 10);
  EXPECT_EQ(complete_multipartite({3, 3}).num_edges(), 9);
  EXPECT_EQ(complete_multipartite({2, 3, 2}).num_edges(), 16);
}

TEST(CompleteMultipartite, DefaultLabels) {
  Graph g = complete_multipartite({1, 1, 2, 3});
  EXPECT_EQ(g.part_labels(), (std::vector<std::vector<Label>>{{"o"}, {"x"}, {"y1", "y2"}, {"z1", "z2", "z3"}}));
  Graph b = complete_multipartite({2, 2});
  EXPECT_EQ(b.part_labels(), (std::vector<std::vector<Label>>{{"y1", "y2"}, {"z1", "z2"}}));
}

TEST(CompleteMultipartite, RejectsEmptyInput) {
  EXPECT_EQ(code_of([] { complete_multipartite({}); }), "INVALID_PARTS");
  EXPECT_EQ(code_of([] { complete_multipartite({2, 0}); }), "INVALID_PARTS");
}

TEST(EdgeClass, Sizes) {
  Graph g = complete_multipartite({1, 1, 4, 4});
  EXPECT_EQ(edge_class(g, std::vector<Label>{"o"}, {"z1", "z2", "z3", "z4"}).size(), 4u);
  EXPECT_EQ(edge_class(g, std::vector<Label>{"y1", "y2", "y3", "y4"}, {"z1", "z2", "z3", "z4"}).size(), 16u);
  Graph k33 = complete_multipartite({3, 3});
  EXPECT_EQ(edge_class(k33, std::vector<Label>{"y1", "y2", "y3"}, {"y1", "y2", "y3"}).size(), 0u);
  EXPECT_EQ(code_of([&] { edge_class(g, std::vector<Label>{"q"}, {"o"}); }), "UNKNOWN_VERTEX");
}

TEST(EdgeClass, UnionAndDifference) {
  Graph g = complete_multipartite({1, 1, 2, 2});
  auto a = edge_class(g, std::vector<Label>{"o"}, {"y1", "y2"});
  auto b = edge_class(g, std::vector<Label>{"o"}, {"z1", "z2"});
  auto u = class_union(a, b);
  EXPECT_EQ(u.size(), 4u);
  EXPECT_EQ(class_minus(u, a).members, b.members);
  EXPECT_EQ(class_minus(a, a).size(), 0u);
}

TEST(Twin, StarAndBipartite) {
  Graph star = complete_multipartite({1, 3});
  Graph t = twin_via_template(star, "y", "x");
  EXPECT_EQ(t.num_edges(), 6);
  EXPECT_EQ(t.neighbors(t.index("x")).size(), 3u);

  Graph k33 = complete_multipartite({3, 3});
  Graph k34 = twin_via_template(k33, "y1", "y4");
  std::vector<std::pair<Label, Label>> edges;
  for (auto a : {"y1", "y2", "y3", "y4"})
    for (auto b : {"z1", "z2", "z3"}) edges.emplace_back(a, b);
  EXPECT_TRUE(same_graph(k34, Graph::make({{"y1", "y2", "y3", "y4"}, {"z1", "z2", "z3"}}, edges)));
  EXPECT_EQ(code_of([&] { twin_via_template(k33, "y1", "z1"); }), "DUPLICATE_LABEL");
}

TEST(Twin, PendantOnPath) {
  Graph p3 = Graph::make({{"a"}, {"b"}, {"c"}}, {{"a", "b"}, {"b", "c"}});
  Graph t = twin_via_template(p3, "a", "a2");
  EXPECT_EQ(t.num_edges(), 3);
  EXPECT_TRUE(t.edge_index("a2", "b").has_value());
}

TEST(GraphSpec, Parses) {
  EXPECT_TRUE(same_graph(parse_graph_spec("K=1,1,4,4"), complete_multipartite({1, 1, 4, 4})));
  EXPECT_EQ(parse_graph_spec("K=5,7").num_edges(), 35);
  EXPECT_EQ(parse_graph_spec("K=5,7").spec(), "K=5,7");
}

TEST(GraphSpec, Errors) {
  for (auto bad : {"K=0,3", "K=", "K3,3", "K=3,,3", "K=3,3,", "K=a", ""})
    EXPECT_EQ(code_of([&] { parse_graph_spec(bad); }), "PARSE_ERROR") << bad;
  try {
    parse_graph_spec("K=3,x");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("byte 4"), std::string::npos);
  }
}

TEST(GraphMake, RejectsCrossingLikeLabels) {
  EXPECT_EQ(code_of([] { Graph::make({{"c1"}, {"a"}}, {}); }), "INVALID_LABEL");
  EXPECT_EQ(code_of([] { Graph::make({{"a", "a"}}, {}); }), "DUPLICATE_LABEL");
}

TEST(GraphMake, CompletenessFlag) {
  EXPECT_TRUE(complete_multipartite({2, 3}).is_complete_multipartite());
  Graph g = complete_multipartite({2, 3});
  EXPECT_FALSE(without_edges(g, make_class("one", {0})).is_complete_multipartite());
}
