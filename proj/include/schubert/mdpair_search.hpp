#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schubert/grassmann.hpp"

namespace schubert {

/// Unordered pair of basis classes {sigma_a, sigma_b} (codimension
/// convention) with zero product. Canonical form has a <= b lexicographically.
struct ZeroPair {
  Partition a;
  Partition b;
  int codim_sum = 0;

  friend bool operator==(const ZeroPair&, const ZeroPair&) = default;
};

/// Order used by every report: codim sum, then a, then b.
bool zero_pair_less(const ZeroPair& lhs, const ZeroPair& rhs);

/// A maximal disjoint pair: zero product at total codimension egd + 1.
struct MdPair {
  Partition a;
  Partition b;

  [[nodiscard]] int codim_a() const { return a.weight(); }
  [[nodiscard]] int codim_b() const { return b.weight(); }
  /// Codimensions as an unordered pair, smaller first.
  [[nodiscard]] std::pair<int, int> type() const;

  friend bool operator==(const MdPair&, const MdPair&) = default;
};

/// Unordered pair of codimensions, normalized smaller first.
std::pair<int, int> pair_type(int i, int j);

struct ZeroPairScan {
  std::vector<ZeroPair> pairs{};
  std::size_t scanned = 0;
};

/// How a basis product is decided to vanish.
enum class VanishingTest {
  Fast,     ///< Bruhat comparison of I^vee with J.
  Product,  ///< Full LR multiplication restricted to the box.
};

/// Every unordered basis pair {a, b}, a == b allowed, with |a| + |b| <=
/// max_codim_sum and sigma_a * sigma_b == 0. Output is sorted with
/// zero_pair_less regardless of thread count.
ZeroPairScan scan_zero_pairs(const GrassmannContext& ctx, int max_codim_sum,
                             VanishingTest test = VanishingTest::Fast);

std::vector<ZeroPair> enumerate_zero_pairs(const GrassmannContext& ctx, int max_codim_sum);

struct EgdResult {
  int egd = 0;
  std::size_t scanned = 0;
};

/// Effective good divisibility over Schubert basis pairs: the smallest
/// codim sum of a zero product, minus one. Scans codim sums in increasing
/// order and stops at the first one with a zero product.
EgdResult compute_egd_scan(const GrassmannContext& ctx);
int compute_egd(const GrassmannContext& ctx);

/// All basis md-pairs, sorted like zero pairs.
std::vector<MdPair> md_pairs(const GrassmannContext& ctx);

/// Whether ctx has an md-pair of type {t.first, t.second}. False whenever
/// the codimensions do not add up to egd + 1.
bool has_mdpair_of_type(const GrassmannContext& ctx, std::pair<int, int> t);

struct SearchReport {
  GrassmannContext ctx;
  std::size_t scanned = 0;
  /// Zero pairs with codim sum <= egd + 1.
  std::vector<ZeroPair> zero_pairs{};
  int egd = 0;
  std::vector<MdPair> md_pairs{};
  /// True when every scanned pair was also checked by full multiplication.
  bool cross_validated = false;
  /// Pairs where the fast criterion and the LR product disagree.
  std::vector<ZeroPair> disagreements{};
  std::chrono::milliseconds elapsed{0};
};

SearchReport search_md_pairs(const GrassmannContext& ctx, bool cross_validate = false);

struct Counterexample {
  Partition a;
  Partition b;
  std::string reason;
};

struct VerificationReport {
  std::string claim;
  int k = 0;
  int n = 0;
  bool passed = false;
  std::vector<Counterexample> counterexamples{};
  /// Number of cases satisfying the claim's hypothesis that were checked.
  std::size_t hypothesis_count = 0;
  /// Pairs the claim singles out as the exceptions, as found by the scan.
  std::vector<std::pair<Partition, Partition>> exceptional_pairs{};
};

/// For 1 <= k <= n-2: over all ordered box pairs (lambda, mu) with
/// |lambda| <= |mu| - k(n-k) + (k+1), lambda is not contained in mu exactly
/// for ((n-k,0,...,0), (n-k-1,...,n-k-1)) and ((1,...,1), (n-k,...,n-k,0)).
VerificationReport verify_prop_comp(const GrassmannContext& ctx);

/// For 1 <= k <= n-2: the only zero basis product with codim sum <= n+1 is
/// [X_{I_H}] * [X_{I_p}]. Scans with both vanishing tests and requires them
/// to agree.
VerificationReport verify_thm_md(const GrassmannContext& ctx);

/// compute_egd(ctx) == n.
VerificationReport verify_egd(const GrassmannContext& ctx);

}  // namespace schubert
