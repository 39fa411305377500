#include <cstdlib>
#include <stdexcept>

#include <gtest/gtest.h>

#include "schubert/chow_ring.hpp"
#include "schubert/mdpair_search.hpp"

using namespace schubert;

namespace schubert {
void PrintTo(const ZeroPair& z, std::ostream* os) {
  *os << "{" << to_string(z.a) << ", " << to_string(z.b) << "}";
}
void PrintTo(const MdPair& p, std::ostream* os) {
  *os << "{" << to_string(p.a) << ", " << to_string(p.b) << "}";
}
}  // namespace schubert

namespace {

// Brute force: every unordered basis pair through full multiplication.
std::vector<ZeroPair> brute_force_zero_pairs(const GrassmannContext& ctx, int max_codim_sum) {
  const auto box = box_partitions(ctx);
  std::vector<ZeroPair> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = 0; j < box.size(); ++j) {
      const Partition& a = box[i];
      const Partition& b = box[j];
      if (b < a || a.weight() + b.weight() > max_codim_sum) continue;
      if (multiply(schubert_class(ctx, a), schubert_class(ctx, b)).is_zero()) {
        out.push_back({a, b, a.weight() + b.weight()});
      }
    }
  }
  std::sort(out.begin(), out.end(), zero_pair_less);
  return out;
}

int brute_force_egd(const GrassmannContext& ctx) {
  const auto pairs = brute_force_zero_pairs(ctx, 2 * ctx.dim());
  return pairs.front().codim_sum - 1;
}

ZeroPair zp(Partition a, Partition b) { return {a, b, a.weight() + b.weight()}; }

}  // namespace

TEST(EnumerateZeroPairs, Examples) {
  const GrassmannContext g26(2, 6);
  EXPECT_EQ(enumerate_zero_pairs(g26, 7),
            (std::vector<ZeroPair>{zp({1, 1, 1}, {4, 0, 0})}));
  EXPECT_TRUE(enumerate_zero_pairs(g26, 2).empty());

  const GrassmannContext g13(1, 3);
  EXPECT_EQ(enumerate_zero_pairs(g13, 4), (std::vector<ZeroPair>{zp({1, 1}, {2, 0})}));
  // Codim sum 5 exceeds dim G(1,3) = 4, so every pair at sum 5 vanishes too.
  const auto pairs = enumerate_zero_pairs(g13, 5);
  EXPECT_EQ(pairs, brute_force_zero_pairs(g13, 5));
  EXPECT_EQ(pairs, (std::vector<ZeroPair>{zp({1, 1}, {2, 0}), zp({1, 0}, {2, 2}),
                                          zp({1, 1}, {2, 1}), zp({2, 0}, {2, 1})}));
}

TEST(EnumerateZeroPairs, ScanCountsEveryUnorderedPair) {
  const GrassmannContext ctx(1, 3);
  // 6 classes -> 21 unordered pairs with repetition, all with sum <= 8.
  EXPECT_EQ(scan_zero_pairs(ctx, 8).scanned, 21u);
  EXPECT_EQ(scan_zero_pairs(ctx, 0).scanned, 1u);
}

TEST(EnumerateZeroPairs, FastAndProductScansAgreeUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const GrassmannContext ctx(k, n);
      const auto fast = scan_zero_pairs(ctx, 2 * ctx.dim(), VanishingTest::Fast);
      const auto full = scan_zero_pairs(ctx, 2 * ctx.dim(), VanishingTest::Product);
      ASSERT_EQ(fast.pairs, full.pairs) << "G(" << k << "," << n << ")";
      ASSERT_EQ(fast.scanned, full.scanned);
    }
  }
}

TEST(EnumerateZeroPairs, OrderIndependentOfThreadCount) {
  const GrassmannContext ctx(2, 7);
  ::setenv("SCHUBERT_THREADS", "1", 1);
  const auto serial = enumerate_zero_pairs(ctx, 2 * ctx.dim());
  ::setenv("SCHUBERT_THREADS", "4", 1);
  const auto threaded = enumerate_zero_pairs(ctx, 2 * ctx.dim());
  ::unsetenv("SCHUBERT_THREADS");
  EXPECT_EQ(serial, threaded);
  EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end(), zero_pair_less));
}

TEST(ComputeEgd, Examples) {
  EXPECT_EQ(compute_egd(GrassmannContext(2, 6)), 6);
  EXPECT_EQ(compute_egd(GrassmannContext(0, 4)), 4);
  EXPECT_EQ(compute_egd(GrassmannContext(1, 4)), brute_force_egd(GrassmannContext(1, 4)));
  EXPECT_EQ(compute_egd(GrassmannContext(1, 4)), 4);
}

TEST(ComputeEgd, MatchesBruteForceUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      const GrassmannContext ctx(k, n);
      ASSERT_EQ(compute_egd(ctx), brute_force_egd(ctx));
    }
  }
}

TEST(MdPairs, Examples) {
  const auto g26 = md_pairs(GrassmannContext(2, 6));
  ASSERT_EQ(g26.size(), 1u);
  EXPECT_EQ(g26[0], (MdPair{{1, 1, 1}, {4, 0, 0}}));
  EXPECT_EQ(g26[0].type(), std::make_pair(3, 4));

  const auto g16 = md_pairs(GrassmannContext(1, 6));
  ASSERT_EQ(g16.size(), 1u);
  EXPECT_EQ(g16[0], (MdPair{{1, 1}, {5, 0}}));
  EXPECT_EQ(g16[0].type(), std::make_pair(2, 5));

  // P^3: sigma_a * sigma_b = 0 iff a + b > 3.
  EXPECT_EQ(md_pairs(GrassmannContext(0, 3)),
            (std::vector<MdPair>{{{1}, {3}}, {{2}, {2}}}));
}

TEST(MdPairs, UniqueInteriorPairUpToTen) {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const GrassmannContext ctx(k, n);
      const auto pairs = md_pairs(ctx);
      ASSERT_EQ(pairs.size(), 1u) << "G(" << k << "," << n << ")";
      ASSERT_EQ(pairs[0].type(), pair_type(k + 1, n - k));
      const auto [h, p] = special_symbols(ctx);
      const Partition h_codim = dual_partition(ctx, symbol_to_dim_partition(ctx, h));
      const Partition p_codim = dual_partition(ctx, symbol_to_dim_partition(ctx, p));
      ASSERT_EQ(pairs[0], (MdPair{h_codim, p_codim}));
      // G(k,n) and G(n-k-1,n) have the same md-pair types.
      const auto mirror = md_pairs(GrassmannContext(n - k - 1, n));
      ASSERT_EQ(mirror.size(), 1u);
      ASSERT_EQ(mirror[0].type(), pairs[0].type());
    }
  }
}

TEST(HasMdPairOfType, Examples) {
  EXPECT_FALSE(has_mdpair_of_type(GrassmannContext(1, 6), {3, 4}));
  EXPECT_TRUE(has_mdpair_of_type(GrassmannContext(2, 6), {3, 4}));
  EXPECT_TRUE(has_mdpair_of_type(GrassmannContext(2, 6), {4, 3}));
  EXPECT_FALSE(has_mdpair_of_type(GrassmannContext(2, 6), {1, 2}));
}

TEST(SearchReport, CrossValidatedReport) {
  const SearchReport r = search_md_pairs(GrassmannContext(2, 6), true);
  EXPECT_EQ(r.egd, 6);
  EXPECT_TRUE(r.cross_validated);
  EXPECT_TRUE(r.disagreements.empty());
  ASSERT_EQ(r.md_pairs.size(), 1u);
  EXPECT_EQ(r.zero_pairs.size(), 1u);
  EXPECT_GT(r.scanned, 0u);
}

TEST(VerifyPropComp, Examples) {
  const auto r26 = verify_prop_comp(GrassmannContext(2, 6));
  EXPECT_TRUE(r26.passed);
  EXPECT_TRUE(r26.counterexamples.empty());
  const std::vector<std::pair<Partition, Partition>> expected{
      {{1, 1, 1}, {4, 4, 0}}, {{4, 0, 0}, {3, 3, 3}}};
  auto found = r26.exceptional_pairs;
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, expected);

  const auto r13 = verify_prop_comp(GrassmannContext(1, 3));
  EXPECT_TRUE(r13.passed);
  EXPECT_GT(r13.hypothesis_count, 0u);

  EXPECT_THROW(verify_prop_comp(GrassmannContext(5, 6)), std::invalid_argument);
  EXPECT_THROW(verify_prop_comp(GrassmannContext(0, 6)), std::invalid_argument);
}

TEST(VerifyPropComp, HypothesisCountMatchesDirectCount) {
  const GrassmannContext ctx(1, 3);
  const auto box = box_partitions(ctx);
  std::size_t count = 0;
  for (const Partition& l : box) {
    for (const Partition& m : box) {
      // |lambda| <= |mu| - k(n-k) + (k+1) with k = 1, n = 3.
      if (l.weight() <= m.weight() - 2 + 2) ++count;
    }
  }
  EXPECT_EQ(verify_prop_comp(ctx).hypothesis_count, count);
}

TEST(VerifyThmMd, Examples) {
  for (const auto& [k, n] : {std::pair{2, 6}, {2, 5}, {3, 8}}) {
    const auto r = verify_thm_md(GrassmannContext(k, n));
    EXPECT_TRUE(r.passed) << "G(" << k << "," << n << ")";
    EXPECT_EQ(r.exceptional_pairs.size(), 1u);
  }
  EXPECT_THROW(verify_thm_md(GrassmannContext(0, 4)), std::invalid_argument);
}

TEST(VerifyEgd, ProjectiveSpacesToo) {
  EXPECT_TRUE(verify_egd(GrassmannContext(0, 5)).passed);
  EXPECT_TRUE(verify_egd(GrassmannContext(4, 5)).passed);
}
