#include <gtest/gtest.h>

#include "crosskit/bounds.hpp"

using namespace crosskit;

TEST(Zarankiewicz, Number) {
  EXPECT_EQ(zarankiewicz_number(3, 3), 1);
  EXPECT_EQ(zarankiewicz_number(5, 7), 36);
  for (int n = 0; n < 10; ++n) EXPECT_EQ(zarankiewicz_number(2, n), 0);
}

TEST(MultipartiteFormula, ReducesToZarankiewicz) {
  for (i64 m = 1; m <= 8; ++m)
    for (i64 n = 1; n <= 8; ++n) EXPECT_EQ(harborth_bound({m, n}), zarankiewicz_number(m, n));
}

TEST(MultipartiteFormula, Families) {
  EXPECT_EQ(harborth_bound({1, 1, 4, 4}), 24);
  EXPECT_EQ(harborth_bound({1, 3, 3}), 3);
  for (i64 m = 1; m <= 12; ++m)
    for (i64 n = 1; n <= 12; ++n) {
      EXPECT_EQ(harborth_bound({1, m, n}), hc_value(HcFamily::K1mn, m, n));
      EXPECT_EQ(harborth_bound({2, m, n}), hc_value(HcFamily::K2mn, m, n));
      EXPECT_EQ(harborth_bound({1, 1, m, n}), hc_value(HcFamily::K11mn, m, n));
    }
}

TEST(MultipartiteFormula, DiagonalVariantDisagrees) {
  // Including i = j breaks the family formulas, which is why strict is the default.
  bool differs = false;
  for (i64 m = 1; m <= 6; ++m)
    for (i64 n = 1; n <= 6; ++n)
      differs |= harborth_bound({1, 1, m, n}, HarborthRange::WithDiagonal) != hc_value(HcFamily::K11mn, m, n);
  EXPECT_TRUE(differs);
}

TEST(HcValue, Examples) {
  EXPECT_EQ(hc_value(HcFamily::K11mn, 4, 4), 24);
  EXPECT_EQ(hc_value(HcFamily::K11mn, 3, 4), 14);
  EXPECT_EQ(hc_value(HcFamily::K2mn, 3, 3), 7);
}

TEST(PriorBounds, UnderZc) {
  CrSource zc;
  zc.assume_zc = true;
  EXPECT_EQ(prior_lower_bound(PriorKind::A10, 4, 4, zc).value, 12);
  EXPECT_EQ(prior_lower_bound(PriorKind::A4, 4, 5, zc).value, 20);
  EXPECT_EQ(prior_lower_bound(PriorKind::A6, 3, 3, zc).value, 3);
}

TEST(TheoremBounds, Examples) {
  CrSource reg;
  EXPECT_EQ(theorem_lower_bound(1, 4, 4, reg).value, 24);
  EXPECT_EQ(theorem_lower_bound(2, 3, 3, reg).value, 8);
  EXPECT_EQ(theorem_lower_bound(3, 4, 3, reg).value, 14);
  EXPECT_TRUE(theorem_lower_bound(1, 4, 4, reg).integral);
}

TEST(TheoremBounds, ParityAndMissingValues) {
  CrSource reg;
  auto code = [&](int thm, i64 m, i64 n) {
    try {
      theorem_lower_bound(thm, m, n, reg);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code(1, 3, 4), "WRONG_PARITY");
  EXPECT_EQ(code(2, 4, 3), "WRONG_PARITY");
  EXPECT_EQ(code(3, 3, 3), "WRONG_PARITY");
  EXPECT_EQ(code(1, 20, 20), "MISSING_VALUE");
}

TEST(Registry, KnownValues) {
  EXPECT_EQ(known_value({5, 6})->value, 24);
  EXPECT_EQ(known_value({1, 1, 3, 5})->value, 23);
  EXPECT_FALSE(known_value({1, 1, 7, 7}).has_value());
}

TEST(Registry, Coherence) {
  for (i64 n = 1; n <= 12; ++n) {
    auto k = known_value({2, 3, n});
    ASSERT_TRUE(k.has_value()) << n;
    EXPECT_EQ(k->value, hc_value(HcFamily::K2mn, 3, n));
  }
}

TEST(StatusReport, FourFourIsExact) {
  auto r = bound_report(4, 4, {});
  EXPECT_EQ(r.best().value, 24);
  EXPECT_EQ(r.upper, 24);
  EXPECT_TRUE(r.exact());
}

TEST(StatusReport, ThreeByNExact) {
  for (auto& r : status_report({3, 3}, {1, 6}, {})) EXPECT_TRUE(r.exact()) << r.n;
}

TEST(StatusReport, EvenGridUnderZc) {
  Assumptions as;
  as.zc = true;
  for (auto& r : status_report({2, 20}, {2, 20}, as))
    if (r.m % 2 == 0 && r.n % 2 == 0) EXPECT_TRUE(r.exact()) << r.m << "," << r.n;
}

TEST(StatusReport, LowerNeverAboveUpper) {
  for (bool zc : {false, true})
    for (bool h : {false, true}) {
      Assumptions as{zc, h};
      for (auto& r : status_report({1, 10}, {1, 10}, as))
        for (auto& l : r.lower_bounds) EXPECT_LE(l.value, r.upper) << r.m << "," << r.n << " " << l.source;
    }
}

TEST(StatusReport, CsvShape) {
  auto csv = report_csv(status_report({4, 4}, {4, 4}, {}));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,n,lower,lower_source,assumptions,upper,status");
  EXPECT_NE(csv.find(",24,"), std::string::npos);
  EXPECT_NE(csv.find("exact"), std::string::npos);
}
