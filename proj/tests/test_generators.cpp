#include <gtest/gtest.h>

#include "crosskit/bounds.hpp"
#include "crosskit/generators.hpp"

using namespace crosskit;

namespace {

std::string layout_code(const GeometricLayout& L, const Graph& g) {
  try {
    from_geometric(L, g);
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

}  // namespace

TEST(Geometric, ConvexDiagonalsCrossOnce) {
  Graph g = Graph::make({{"a", "c"}, {"b", "d"}}, {{"a", "b"}, {"c", "d"}});
  GeometricLayout L;
  L.position = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};  // a, c, b, d by id
  // ids: a=0, c=1, b=2, d=3; a-b and c-d are the diagonals
  EXPECT_EQ(crossings_total(from_geometric(L, g)), 1);
}

TEST(Geometric, FourPoints) {
  Graph k4 = complete_multipartite({1, 1, 1, 1});
  GeometricLayout convex;
  convex.position = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  EXPECT_EQ(crossings_total(from_geometric(convex, k4)), 1);
  GeometricLayout inside;
  inside.position = {{0, 0}, {30, 0}, {0, 30}, {5, 5}};
  EXPECT_EQ(crossings_total(from_geometric(inside, k4)), 0);
}

TEST(Geometric, Degenerate) {
  // Three segments through the origin.
  Graph g = Graph::make({{"a1", "a2", "a3"}, {"b1", "b2", "b3"}}, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}});
  GeometricLayout L;
  L.position = {{-10, 0}, {0, -10}, {-10, -10}, {10, 0}, {0, 10}, {10, 10}};
  EXPECT_EQ(layout_code(L, g), "DEGENERATE_LAYOUT");
  // A vertex on another edge.
  Graph p = Graph::make({{"a"}, {"b"}, {"c"}}, {{"a", "b"}});
  GeometricLayout M;
  M.position = {{0, 0}, {10, 0}, {5, 0}};
  EXPECT_EQ(layout_code(M, p), "DEGENERATE_LAYOUT");
}

TEST(Zarankiewicz, Values) {
  EXPECT_EQ(crossings_total(zarankiewicz_drawing(3, 3)), 1);
  EXPECT_EQ(crossings_total(zarankiewicz_drawing(5, 7)), 36);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(crossings_total(zarankiewicz_drawing(1, n)), 0);
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(crossings_total(zarankiewicz_drawing(m, n)), zarankiewicz_number(m, n));
}

TEST(Cylinder, Values) {
  EXPECT_EQ(crossings_total(cylinder_k11mn(4, 4)), 24);
  EXPECT_EQ(crossings_total(cylinder_k11mn(3, 3)), 8);
  EXPECT_EQ(crossings_total(cylinder_k11mn(4, 5)), 38);
  for (int m = 2; m <= 9; ++m)
    for (int n = 2; n <= 9; ++n) {
      Drawing d = cylinder_k11mn(m, n);
      EXPECT_EQ(crossings_total(d), hc_value(HcFamily::K11mn, m, n)) << m << "," << n;
      EXPECT_TRUE(validate(d).ok());
    }
}

TEST(Cylinder, SizeLimits) {
  try {
    cylinder_k11mn(1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UNSUPPORTED_SIZE");
  }
}

TEST(Random, DeterministicAndValid) {
  Graph g = complete_multipartite({1, 1, 3, 3});
  for (std::uint64_t s = 0; s < 10; ++s) {
    Drawing a = random_geometric_drawing(g, s);
    EXPECT_EQ(encode(a), encode(random_geometric_drawing(g, s)));
    EXPECT_TRUE(validate(a).ok());
  }
  EXPECT_NE(encode(random_geometric_drawing(g, 1)), encode(random_geometric_drawing(g, 2)));
}

TEST(Random, KThreeThreeNeverPlanar) {
  Graph g = complete_multipartite({3, 3});
  for (std::uint64_t s = 0; s < 30; ++s) EXPECT_GE(crossings_total(random_geometric_drawing(g, s)), 1);
}
