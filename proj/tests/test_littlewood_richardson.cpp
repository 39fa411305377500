#include <gtest/gtest.h>

#include "schubert/littlewood_richardson.hpp"
#include "schubert/schur_oracle.hpp"

using namespace schubert;

TEST(LrCoefficient, SmallProducts) {
  EXPECT_EQ(lr_coefficient({1}, {1}, {2}), 1);
  EXPECT_EQ(lr_coefficient({1}, {1}, {1, 1}), 1);
  EXPECT_EQ(lr_coefficient({2, 2}, {2, 2}, {4, 4}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
}

TEST(LrCoefficient, IdentityElement) {
  for (const Partition& lambda : box_partitions(GrassmannContext(2, 6))) {
    EXPECT_EQ(lr_coefficient(lambda, {0, 0, 0}, lambda), 1) << to_string(lambda);
    EXPECT_EQ(lr_coefficient({}, lambda, lambda), 1) << to_string(lambda);
  }
}

TEST(LrCoefficient, IncompatibleShapesGiveZero) {
  EXPECT_EQ(lr_coefficient({2}, {1}, {1, 1, 1}), 0);  // lambda not inside nu
  EXPECT_EQ(lr_coefficient({1}, {1}, {3}), 0);        // weights do not add up
  EXPECT_EQ(lr_coefficient({1}, {3}, {2, 2}), 0);     // mu not inside nu
}

TEST(LrCoefficient, Symmetric) {
  const GrassmannContext ctx(2, 5);
  const auto box = box_partitions(ctx);
  for (const Partition& lambda : box) {
    for (const Partition& mu : box) {
      for (const Partition& nu : box) {
        if (nu.weight() != lambda.weight() + mu.weight()) continue;
        ASSERT_EQ(lr_coefficient(lambda, mu, nu), lr_coefficient(mu, lambda, nu));
      }
    }
  }
}

TEST(LrTableaux, EnumeratedFillingsAreValid) {
  std::vector<LrTableau> seen;
  for_each_lr_tableau({2, 1}, {2, 1}, {3, 2, 1}, [&](const LrTableau& t) { seen.push_back(t); });
  ASSERT_EQ(seen.size(), 2u);
  for (const LrTableau& t : seen) EXPECT_TRUE(is_lr_tableau(t));
  // Shape (3,2,1)/(2,1): rows {x}, {y}, {z}. The two fillings read 1,1,2 and 1,2,1.
  EXPECT_EQ(seen[0].rows, (std::vector<std::vector<int>>{{1}, {1}, {2}}));
  EXPECT_EQ(seen[1].rows, (std::vector<std::vector<int>>{{1}, {2}, {1}}));
}

TEST(LrTableaux, ValidatorRejectsBrokenFillings) {
  // Reading word 2,1 is not a lattice word.
  EXPECT_FALSE(is_lr_tableau({{2, 1}, {1}, {{2}, {1}}}));
  // Column not strictly increasing.
  EXPECT_FALSE(is_lr_tableau({{1, 1}, {}, {{1}, {1}}}));
  // Row decreasing.
  EXPECT_FALSE(is_lr_tableau({{2}, {}, {{2, 1}}}));
  EXPECT_TRUE(is_lr_tableau({{2, 1}, {}, {{1, 1}, {2}}}));
}

TEST(LrCoefficient, AgreesWithSchurOracleInSmallBoxes) {
  // Full untruncated expansions in 4 variables, shapes inside a 3x3 box.
  SchurOracle oracle(4);
  const auto box = box_partitions(GrassmannContext(2, 5));
  for (const Partition& lambda : box) {
    for (const Partition& mu : box) {
      const auto expected = oracle.expand(lambda, mu);
      for (const auto& [nu, coeff] : expected) {
        ASSERT_EQ(lr_coefficient(lambda, mu, nu), coeff)
            << to_string(lambda) << " * " << to_string(mu) << " -> " << to_string(nu);
      }
      // Conversely every nonzero LR count with <= 4 rows appears in the oracle.
      Coefficient total = 0;
      for (const auto& [nu, coeff] : expected) total += coeff;
      Coefficient lr_total = 0;
      for (const Partition& nu : box_partitions(GrassmannContext(3, 9))) {
        if (nu.weight() == lambda.weight() + mu.weight()) lr_total += lr_coefficient(lambda, mu, nu);
      }
      ASSERT_EQ(lr_total, total) << to_string(lambda) << " * " << to_string(mu);
    }
  }
}
