#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "crosskit/generators.hpp"
#include "crosskit/lemma_engine.hpp"

using namespace crosskit;

namespace {

Drawing star() {
  Graph g = Graph::make({{"v"}, {"u0", "w0", "u1", "w1"}}, {{"v", "u0"}, {"v", "w0"}, {"v", "u1"}, {"v", "w1"}});
  GeometricLayout L;
  L.position = {{0, 0}, {10, 0}, {0, 10}, {-10, 0}, {0, -10}};
  return from_geometric(L, g);
}

template <class F>
std::string code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

}  // namespace

TEST(VertexSplit, StarSplitOnce) {
  auto c = lemma1_context(star(), "v", {"u0", "u1"}, 0);
  EXPECT_EQ(c.p, 2);
  EXPECT_EQ(c.q, 2);
  auto d1 = lemma1_d1(c);
  EXPECT_EQ(crossings_total(d1.drawing), 1);
  EXPECT_TRUE(d1.cert.passed());
  auto d2 = lemma1_d2(c);
  EXPECT_EQ(crossings_total(d2.drawing), 2);
  EXPECT_TRUE(d2.cert.passed());
  EXPECT_TRUE(validate(d1.drawing).ok());
  EXPECT_TRUE(validate(d2.drawing).ok());
}

TEST(VertexSplit, EmptyWKeepsTheCount) {
  Drawing d = random_geometric_drawing(complete_multipartite({1, 4}), 5);
  auto c = lemma1_context(d, "y", {"z1", "z2", "z3", "z4"}, 1);
  EXPECT_EQ(c.q, 0);
  auto out = lemma1_d1(c);
  EXPECT_EQ(crossings_total(out.drawing), crossings_total(d));
}

TEST(VertexSplit, TwoLeavesNoExtraCrossings) {
  Drawing d = random_geometric_drawing(complete_multipartite({1, 2}), 1);
  auto c = lemma1_context(d, "y", {"z1", "z2"}, 0);
  EXPECT_EQ(crossings_total(lemma1_d2(c).drawing), crossings_total(d));
}

TEST(VertexSplit, CylinderAtO) {
  Drawing D = cylinder_k11mn(4, 4);
  const std::vector<Label> Y{"y1", "y2", "y3", "y4"};
  for (int k = 0; k < 4; ++k) {
    auto c = lemma1_context(D, "o", Y, k);
    auto a = lemma1_d1(c);
    auto b = lemma1_d2(c);
    EXPECT_TRUE(a.cert.passed()) << k;
    EXPECT_TRUE(b.cert.passed()) << k;
    // D2 total: 24 + cr_D(E(O,Y), E - E(o)) + 2 * (5 + 1).
    auto cl = k11mn_classes(D.graph);
    long spokes = crossings_between(D, cl.OY, class_minus(all_edges(D.graph), star_class(D.graph, D.graph.index("o"))));
    EXPECT_EQ(crossings_total(b.drawing), 24 + spokes + 12) << k;
  }
}

TEST(VertexSplit, RotationShift) {
  Graph g = complete_multipartite({1, 1, 3, 3});
  for (std::uint64_t s = 0; s < 10; ++s) {
    Drawing D = random_geometric_drawing(g, s);
    auto base = lemma1_context(D, "o", {"y1", "y2", "z1", "z2"}, 0);
    auto w = base.gap_sizes();
    for (int k = 0; k + 1 < base.p; ++k) {
      auto a = lemma1_d1(lemma1_context(D, "o", base.U, k));
      auto b = lemma1_d1(lemma1_context(D, "o", base.U, k + 1));
      EXPECT_EQ(crossings_total(b.drawing) - crossings_total(a.drawing),
                lemma1_disk_sum(w, k + 1) - lemma1_disk_sum(w, k));
      // Starting the reading at u_{k+1} and using index 0 is the same drawing count.
      auto shifted = lemma1_d1(lemma1_context(D, "o", base.U, 0, base.U[k + 1]));
      EXPECT_EQ(crossings_total(shifted.drawing), crossings_total(b.drawing));
    }
  }
}

TEST(VertexSplit, SweepOverSmallGraphs) {
  for (auto sizes : std::vector<std::vector<int>>{{1, 4}, {2, 3, 2}, {1, 1, 2, 2}}) {
    Drawing D = random_geometric_drawing(complete_multipartite(sizes), 11);
    auto runs = lemma1_sweep(D);
    EXPECT_FALSE(runs.empty());
    for (auto& r : runs) EXPECT_TRUE(r.ok()) << D.graph.spec() << " v=" << r.v << " k=" << r.k << " " << r.error;
  }
}

TEST(VertexSplit, Errors) {
  Drawing s = star();
  EXPECT_EQ(code_of([&] { lemma1_d1(lemma1_context(s, "v", {"u0", "w0", "u1"}, 0)); }), "ODD_P");
  EXPECT_EQ(code_of([&] { lemma1_context(s, "v", {"u0", "v"}, 0); }), "NOT_A_NEIGHBOR");
  EXPECT_EQ(code_of([&] { lemma1_context(s, "v", {"u0", "u0"}, 0); }), "DUPLICATE_LABEL");
  EXPECT_EQ(code_of([&] { lemma1_context(s, "v", {"u0", "u1"}, 2); }), "INVALID_ARGUMENT");
}

TEST(VertexSplit, OutputGraphs) {
  auto c = lemma1_context(star(), "v", {"u0", "u1"}, 1);
  auto a = lemma1_d1(c, "t");
  const Graph& g1 = a.drawing.graph;
  EXPECT_TRUE(g1.edge_index("t", "v").has_value());
  EXPECT_TRUE(g1.edge_index("t", "u0").has_value());
  EXPECT_FALSE(g1.edge_index("v", "u0").has_value());
  auto b = lemma1_d2(c, "t", "s");
  const Graph& g2 = b.drawing.graph;
  for (auto l : {"u0", "u1", "v"}) EXPECT_TRUE(g2.edge_index("s", l).has_value()) << l;
  EXPECT_FALSE(g2.edge_index("s", "t").has_value());
}

TEST(Pipelines, CylinderBounds) {
  struct Case {
    int thm, m, n;
    i64 bound;
  };
  for (auto cs : std::vector<Case>{{1, 4, 4, 24}, {1, 2, 2, 1}, {2, 3, 3, 8}, {3, 4, 3, 14}, {3, 2, 3, 3}}) {
    Drawing D = cylinder_k11mn(cs.m, cs.n);
    auto r = cs.thm == 1 ? thm1_pipeline(D) : cs.thm == 2 ? thm2_pipeline(D) : thm3_pipeline(D);
    EXPECT_TRUE(r.cert.passed()) << cs.thm << " " << cs.m << "," << cs.n;
    ASSERT_TRUE(r.cert.bound.has_value());
    EXPECT_EQ(*r.cert.bound, cs.bound);
    for (auto& [name, d] : r.drawings) EXPECT_TRUE(validate(d).ok()) << name;
  }
}

TEST(Pipelines, ThmOneTargets) {
  auto r = thm1_pipeline(cylinder_k11mn(4, 4));
  // Two-colour each output and compare side sizes.
  auto sides = [](const Drawing& d) {
    const Graph& g = d.graph;
    std::vector<int> col(g.num_vertices(), -1);
    std::vector<int> count(2, 0);
    for (int s = 0; s < g.num_vertices(); ++s) {
      if (col[s] >= 0) continue;
      col[s] = 0;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count[col[v]];
        for (int u : g.neighbors(v)) {
          if (col[u] < 0) col[u] = 1 - col[v], stack.push_back(u);
          else if (col[u] == col[v]) return std::vector<int>{-1};
        }
      }
    }
    std::sort(count.begin(), count.end());
    return count;
  };
  for (auto name : {"D_2", "D_4"}) {
    const Drawing& d = r.drawing(name);
    EXPECT_EQ(sides(d), (std::vector<int>{5, 7})) << name;
    EXPECT_EQ(d.graph.num_edges(), 35) << name;
  }
}

TEST(Pipelines, RandomDrawings) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    EXPECT_TRUE(thm1_pipeline(random_geometric_drawing(complete_multipartite({1, 1, 2, 2}), s)).cert.passed()) << s;
    EXPECT_TRUE(thm2_pipeline(random_geometric_drawing(complete_multipartite({1, 1, 3, 3}), s)).cert.passed()) << s;
    EXPECT_TRUE(thm3_pipeline(random_geometric_drawing(complete_multipartite({1, 1, 2, 3}), s)).cert.passed()) << s;
  }
}

TEST(Pipelines, ConclusionNeverExceedsTheDrawing) {
  struct Case {
    int thm, m, n;
  };
  for (auto cs : std::vector<Case>{{1, 2, 2}, {1, 4, 4}, {2, 3, 3}, {3, 2, 3}, {3, 4, 3}})
    for (std::uint64_t s = 0; s < 5; ++s) {
      Drawing D = random_geometric_drawing(complete_multipartite({1, 1, cs.m, cs.n}), 100 + s);
      auto r = cs.thm == 1 ? thm1_pipeline(D) : cs.thm == 2 ? thm2_pipeline(D) : thm3_pipeline(D);
      ASSERT_TRUE(r.cert.bound.has_value());
      EXPECT_LE(*r.cert.bound, crossings_total(D));
    }
}

TEST(Pipelines, Parity) {
  EXPECT_EQ(code_of([] { thm1_pipeline(cylinder_k11mn(3, 4)); }), "WRONG_PARITY");
  EXPECT_EQ(code_of([] { thm2_pipeline(cylinder_k11mn(4, 3)); }), "WRONG_PARITY");
  EXPECT_EQ(code_of([] { thm3_pipeline(cylinder_k11mn(3, 3)); }), "WRONG_PARITY");
  EXPECT_EQ(code_of([] { thm1_pipeline(zarankiewicz_drawing(4, 4)); }), "WRONG_FAMILY");
}

TEST(Pipelines, CertificateJson) {
  auto j = thm1_pipeline(cylinder_k11mn(2, 2)).cert.to_json();
  EXPECT_EQ(j["pipeline"], "thm1");
  EXPECT_EQ(j["pass"], true);
  ASSERT_FALSE(j["equalities"].empty());
  for (auto& e : j["equalities"]) {
    EXPECT_TRUE(e.contains("tag"));
    EXPECT_TRUE(e.contains("predicted"));
    EXPECT_TRUE(e.contains("measured"));
    EXPECT_EQ(e["pass"], true);
  }
  std::set<std::string> tags;
  for (auto& e : j["equalities"]) tags.insert(e["tag"].get<std::string>());
  for (auto t : {"B4", "B5", "B6"}) EXPECT_TRUE(tags.count(t)) << t;
  EXPECT_EQ(j["bound"]["value"], 1);
}

TEST(OxCrossings, Examples) {
  auto r = lemma3_check(cylinder_k11mn(3, 3), 7);
  EXPECT_TRUE(r.identity);
  EXPECT_TRUE(r.holds);
  EXPECT_GE(r.slack(), 0);
  Graph g = complete_multipartite({1, 1, 2, 2});
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto q = lemma3_check(random_geometric_drawing(g, s), 0);
    EXPECT_TRUE(q.holds && q.identity);
    EXPECT_EQ(q.limit, crossings_total(random_geometric_drawing(g, s)));
  }
}

TEST(OxCrossings, WrongFamily) {
  EXPECT_EQ(code_of([] { lemma3_check(zarankiewicz_drawing(3, 3), 0); }), "WRONG_FAMILY");
}
