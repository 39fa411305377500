#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "schubert/mdpair_search.hpp"
#include "schubert/morphism_oracle.hpp"

using namespace schubert;

TEST(Classify, Examples) {
  const auto a = classify({1, 2, 6});
  EXPECT_EQ(a.verdict, Verdict::MustBeConstant);
  EXPECT_EQ(a.branch, Branch::MdPairObstruction);

  const auto b = classify({3, 2, 6});
  EXPECT_EQ(b.verdict, Verdict::NonconstantImpliesIsomorphism);
  EXPECT_EQ(b.branch, Branch::MdPairTypeMatch);
  EXPECT_NE(b.details.find("l = n-k-1"), std::string::npos);

  const auto c = classify({2, 0, 6});
  EXPECT_EQ(c.verdict, Verdict::MustBeConstant);
  EXPECT_EQ(c.branch, Branch::DimensionBound);
  EXPECT_NE(c.details.find("= 12 > 6"), std::string::npos);

  const auto d = classify({0, 2, 5});
  EXPECT_EQ(d.verdict, Verdict::NotCovered);
  EXPECT_EQ(d.branch, Branch::ProjectiveDomain);

  const auto e = classify({2, 2, 6});
  EXPECT_EQ(e.verdict, Verdict::NonconstantImpliesIsomorphism);
  EXPECT_NE(e.details.find("l = k"), std::string::npos);
}

TEST(Classify, RejectsInvalidQueries) {
  EXPECT_THROW(classify({6, 2, 6}), std::invalid_argument);
  EXPECT_THROW(classify({1, -1, 6}), std::invalid_argument);
  EXPECT_THROW(classify({0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(classify_table(2), std::invalid_argument);
}

TEST(ClassifyTable, SixMatchesDirectEnumeration) {
  const int n = 6;
  const auto table = classify_table(n);
  ASSERT_EQ(table.size(), 6u);
  std::set<std::pair<int, int>> iso;
  for (int l = 0; l < n; ++l) {
    ASSERT_EQ(table[l].size(), 6u);
    for (int k = 0; k < n; ++k) {
      if (table[l][k].verdict == Verdict::NonconstantImpliesIsomorphism) iso.insert({l, k});
    }
  }
  std::set<std::pair<int, int>> expected;
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= 4; ++k) {
      if (k == l || k == n - l - 1) expected.insert({l, k});
    }
  }
  EXPECT_EQ(iso, expected);
}

TEST(ClassifyTable, ThreeHasOneInteriorCell) {
  const auto table = classify_table(3);
  EXPECT_EQ(table[1][1].verdict, Verdict::NonconstantImpliesIsomorphism);
  EXPECT_EQ(table[1][0].verdict, Verdict::MustBeConstant);
  EXPECT_EQ(table[1][2].verdict, Verdict::MustBeConstant);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(table[0][k].verdict, Verdict::NotCovered);
    EXPECT_EQ(table[2][k].verdict, Verdict::NotCovered);
  }
}

TEST(ClassifyTable, AgreesWithClassifyAndSymmetries) {
  for (int n = 3; n <= 8; ++n) {
    const auto table = classify_table(n);
    for (int l = 0; l < n; ++l) {
      for (int k = 0; k < n; ++k) {
        const auto& cell = table[l][k];
        ASSERT_EQ(cell.verdict, classify({l, k, n}).verdict);
        if (l >= 1 && l <= n - 2) {
          if (k == l) ASSERT_EQ(cell.verdict, Verdict::NonconstantImpliesIsomorphism);
          ASSERT_EQ(cell.verdict, table[n - l - 1][n - k - 1].verdict);
        }
        if (cell.verdict == Verdict::NonconstantImpliesIsomorphism) {
          ASSERT_TRUE(l == k || l == n - k - 1);
        }
      }
    }
  }
}

TEST(RenderTable, GlyphGrid) {
  const std::string grid = render_table(classify_table(3));
  EXPECT_EQ(grid, "  0 1 2\n0 - - -\n1 C I C\n2 - - -\n");
}
