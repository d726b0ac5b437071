#include <gtest/gtest.h>

#include "crosskit/bounds.hpp"
#include "crosskit/generators.hpp"
#include "crosskit/oracle.hpp"

using namespace crosskit;

namespace {

template <class F>
std::string code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

int independent_pair_partner(const Graph& g, int e) {
  for (int f = 0; f < g.num_edges(); ++f)
    if (f != e && !g.share_endpoint(e, f)) return f;
  return -1;
}

}  // namespace

TEST(Planarity, Kuratowski) {
  EXPECT_TRUE(planarity(complete_multipartite({1, 1, 1, 1})));
  EXPECT_FALSE(planarity(parse_graph_spec("K=1,1,1,1,1")));
  EXPECT_FALSE(planarity(complete_multipartite({3, 3})));
  EXPECT_TRUE(planarity(complete_multipartite({2, 2, 2})));
}

TEST(Planarize, Counts) {
  Graph g = complete_multipartite({3, 3});
  auto p0 = planarize(g, {});
  EXPECT_EQ(p0.n, 6);
  EXPECT_EQ(p0.edges.size(), 9u);
  PlanarizationSelection s;
  s.pairs = {{0, independent_pair_partner(g, 0)}};
  auto p1 = planarize(g, s);
  EXPECT_EQ(p1.n, 7);
  EXPECT_EQ(p1.edges.size(), 11u);
}

TEST(Planarize, SomePairCertifiesOne) {
  Graph g = complete_multipartite({3, 3});
  bool found = false;
  for (int e = 0; e < g.num_edges() && !found; ++e)
    for (int f = e + 1; f < g.num_edges() && !found; ++f)
      if (!g.share_endpoint(e, f)) found = is_planar(planarize(g, {{{e, f}}, {}}));
  EXPECT_TRUE(found);
}

TEST(Selection, Rejections) {
  Graph g = complete_multipartite({3, 3});
  int f = independent_pair_partner(g, 0);
  EXPECT_EQ(code_of([&] { check_selection(g, {{{0, 1}}, {}}); }), "ADJACENT_PAIR");
  EXPECT_EQ(code_of([&] { check_selection(g, {{{0, f}, {f, 0}}, {}}); }), "DUPLICATE_PAIR");
  EXPECT_EQ(code_of([&] { check_selection(g, {{{0, 99}}, {}}); }), "UNKNOWN_EDGE");
}

TEST(Exact, SmallValues) {
  struct Case {
    const char* spec;
    int value;
  };
  for (auto c : std::vector<Case>{{"K=1,1,1,1", 0}, {"K=3,3", 1}, {"K=3,4", 2}, {"K=2,2,2", 0}, {"K=2,3,2", 2},
                                  {"K=1,3,3", 3}, {"K=1,1,2,2", 1}, {"K=1,1,2,3", 3}, {"K=1,1,1,3", 1}}) {
    Graph g = parse_graph_spec(c.spec);
    auto r = exact_crossing_number(g, 4, 2);
    ASSERT_TRUE(r.exact) << c.spec;
    EXPECT_EQ(r.value, c.value) << c.spec;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(static_cast<int>(r.witness->pairs.size()), c.value);
    EXPECT_TRUE(verify_witness(g, *r.witness)) << c.spec;
  }
}

TEST(Exact, AgreesWithRegistry) {
  for (auto sizes : std::vector<std::vector<i64>>{{1, 3, 3}, {1, 1, 2, 3}, {1, 1, 1, 3}, {3, 3}, {3, 4}}) {
    auto k = known_value(sizes);
    ASSERT_TRUE(k.has_value());
    std::vector<int> s(sizes.begin(), sizes.end());
    EXPECT_EQ(exact_crossing_number(complete_multipartite(s), 4).value, k->value) << sizes_spec(sizes);
  }
}

// No registry pattern covers these two; compare with the family formulas.
TEST(Exact, MatchesFamilyFormulas) {
  EXPECT_EQ(exact_crossing_number(complete_multipartite({2, 2, 2}), 2).value, hc_value(HcFamily::K2mn, 2, 2));
  EXPECT_EQ(exact_crossing_number(complete_multipartite({1, 1, 2, 2}), 2).value, hc_value(HcFamily::K11mn, 2, 2));
}

TEST(Exact, BudgetExceeded) {
  auto r = exact_crossing_number(complete_multipartite({3, 4}), 1);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.at_least, 2);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Exact, Monotone) {
  for (auto sizes : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {1, 1, 2, 2}}) {
    Graph g = complete_multipartite(sizes);
    int full = exact_crossing_number(g, 4).value;
    for (int e : {0, g.num_edges() / 2, g.num_edges() - 1}) {
      auto r = exact_crossing_number(without_edges(g, make_class("e", {e})), 4);
      ASSERT_TRUE(r.exact);
      EXPECT_LE(r.value, full);
    }
  }
}

TEST(Exact, IndependentOfJobs) {
  Graph g = complete_multipartite({2, 3, 2});
  auto a = exact_crossing_number(g, 3, 1), b = exact_crossing_number(g, 3, 4);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(witness_json(*a.witness).dump(), witness_json(*b.witness).dump());
}

TEST(Exact, GeneratorsAreUpperBounds) {
  EXPECT_GE(crossings_total(zarankiewicz_drawing(3, 3)), exact_crossing_number(complete_multipartite({3, 3}), 3).value);
  EXPECT_GE(crossings_total(zarankiewicz_drawing(3, 4)), exact_crossing_number(complete_multipartite({3, 4}), 3).value);
  EXPECT_GE(crossings_total(cylinder_k11mn(2, 2)), exact_crossing_number(complete_multipartite({1, 1, 2, 2}), 3).value);
  EXPECT_GE(crossings_total(cylinder_k11mn(2, 3)), exact_crossing_number(complete_multipartite({1, 1, 2, 3}), 4).value);
}

TEST(Witness, JsonRoundTrip) {
  Graph g = complete_multipartite({3, 4});
  auto r = exact_crossing_number(g, 3);
  ASSERT_TRUE(r.witness);
  auto j = witness_json(*r.witness);
  EXPECT_EQ(j["k"], 2);
  auto back = witness_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.pairs, r.witness->pairs);
  EXPECT_EQ(back.orderings, r.witness->orderings);
  EXPECT_TRUE(verify_witness(g, back));
  EXPECT_EQ(code_of([] { witness_from_json(nlohmann::json::parse(R"({"pairs": [[0]]})")); }), "SCHEMA_ERROR");
}

TEST(Witness, WrongSelectionDoesNotVerify) {
  Graph g = complete_multipartite({3, 3});
  EXPECT_FALSE(verify_witness(g, {}));
}
