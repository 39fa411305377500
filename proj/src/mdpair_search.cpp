#include "schubert/mdpair_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/chow_ring.hpp"
#include "schubert/parallel.hpp"

namespace schubert {

namespace {

/// Box partitions with the Schubert symbol J of each class: [X_J] = sigma_a.
struct BasisTable {
  std::vector<Partition> partitions;
  std::vector<SchubertSymbol> symbols;

  explicit BasisTable(const GrassmannContext& ctx) : partitions(box_partitions(ctx)) {
    symbols.reserve(partitions.size());
    for (const Partition& a : partitions) {
      symbols.push_back(dim_partition_to_symbol(ctx, dual_partition(ctx, a)));
    }
  }
};

ZeroPair canonical_pair(const Partition& a, const Partition& b) {
  if (b < a) return {b, a, a.weight() + b.weight()};
  return {a, b, a.weight() + b.weight()};
}

bool vanishes(const GrassmannContext& ctx, const BasisTable& basis, std::size_t i, std::size_t j,
              VanishingTest test) {
  if (test == VanishingTest::Fast) {
    return product_vanishes_fast(ctx, basis.symbols[i], basis.symbols[j]);
  }
  return multiply_basis(ctx, basis.partitions[i], basis.partitions[j]).is_zero();
}

void require_interior(const GrassmannContext& ctx, const char* claim) {
  if (ctx.k() < 1 || ctx.k() > ctx.n() - 2) {
    throw std::invalid_argument(std::string(claim) + " needs 1 <= k <= n-2, got G(" +
                                std::to_string(ctx.k()) + "," + std::to_string(ctx.n()) + ")");
  }
}

}  // namespace

bool zero_pair_less(const ZeroPair& lhs, const ZeroPair& rhs) {
  if (lhs.codim_sum != rhs.codim_sum) return lhs.codim_sum < rhs.codim_sum;
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  return lhs.b < rhs.b;
}

std::pair<int, int> pair_type(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

std::pair<int, int> MdPair::type() const { return pair_type(codim_a(), codim_b()); }

ZeroPairScan scan_zero_pairs(const GrassmannContext& ctx, int max_codim_sum, VanishingTest test) {
  const BasisTable basis(ctx);
  const std::size_t count = basis.partitions.size();
  std::vector<std::vector<ZeroPair>> found(count);
  std::vector<std::size_t> scanned(count, 0);

  // Partitions are sorted by weight, so the inner loop can stop early.
  parallel_for(count, [&](std::size_t i) {
    const int wa = basis.partitions[i].weight();
    for (std::size_t j = i; j < count; ++j) {
      if (wa + basis.partitions[j].weight() > max_codim_sum) break;
      ++scanned[i];
      if (vanishes(ctx, basis, i, j, test)) {
        found[i].push_back(canonical_pair(basis.partitions[i], basis.partitions[j]));
      }
    }
  });

  ZeroPairScan result;
  for (std::size_t i = 0; i < count; ++i) {
    result.scanned += scanned[i];
    result.pairs.insert(result.pairs.end(), found[i].begin(), found[i].end());
  }
  std::sort(result.pairs.begin(), result.pairs.end(), zero_pair_less);
  return result;
}

std::vector<ZeroPair> enumerate_zero_pairs(const GrassmannContext& ctx, int max_codim_sum) {
  return scan_zero_pairs(ctx, max_codim_sum).pairs;
}

EgdResult compute_egd_scan(const GrassmannContext& ctx) {
  const BasisTable basis(ctx);
  const std::size_t count = basis.partitions.size();
  EgdResult result;
  for (int sum = 0; sum <= 2 * ctx.dim(); ++sum) {
    bool hit = false;
    for (std::size_t i = 0; i < count && !hit; ++i) {
      const int wa = basis.partitions[i].weight();
      if (2 * wa > sum) break;
      for (std::size_t j = i; j < count; ++j) {
        const int wb = basis.partitions[j].weight();
        if (wa + wb > sum) break;
        if (wa + wb < sum) continue;
        ++result.scanned;
        if (vanishes(ctx, basis, i, j, VanishingTest::Fast)) {
          hit = true;
          break;
        }
      }
    }
    if (hit) {
      result.egd = sum - 1;
      return result;
    }
  }
  // sigma_box * sigma_box vanishes whenever dim >= 1, which every context has.
  throw std::logic_error("no zero product found in G(" + std::to_string(ctx.k()) + "," +
                         std::to_string(ctx.n()) + ")");
}

int compute_egd(const GrassmannContext& ctx) { return compute_egd_scan(ctx).egd; }

std::vector<MdPair> md_pairs(const GrassmannContext& ctx) {
  const int egd = compute_egd(ctx);
  std::vector<MdPair> out;
  for (const ZeroPair& z : enumerate_zero_pairs(ctx, egd + 1)) {
    if (z.codim_sum == egd + 1) out.push_back({z.a, z.b});
  }
  return out;
}

bool has_mdpair_of_type(const GrassmannContext& ctx, std::pair<int, int> t) {
  const auto wanted = pair_type(t.first, t.second);
  if (wanted.first + wanted.second != compute_egd(ctx) + 1) return false;
  const auto pairs = md_pairs(ctx);
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const MdPair& p) { return p.type() == wanted; });
}

SearchReport search_md_pairs(const GrassmannContext& ctx, bool cross_validate) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report{ctx};
  const EgdResult egd = compute_egd_scan(ctx);
  report.egd = egd.egd;

  ZeroPairScan fast = scan_zero_pairs(ctx, egd.egd + 1, VanishingTest::Fast);
  report.scanned = fast.scanned;
  if (cross_validate) {
    const ZeroPairScan full = scan_zero_pairs(ctx, egd.egd + 1, VanishingTest::Product);
    std::set_symmetric_difference(fast.pairs.begin(), fast.pairs.end(), full.pairs.begin(),
                                  full.pairs.end(), std::back_inserter(report.disagreements),
                                  zero_pair_less);
    report.cross_validated = true;
  }
  report.zero_pairs = std::move(fast.pairs);
  for (const ZeroPair& z : report.zero_pairs) {
    if (z.codim_sum == egd.egd + 1) report.md_pairs.push_back({z.a, z.b});
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport verify_prop_comp(const GrassmannContext& ctx) {
  require_interior(ctx, "prop-comp");
  const int k = ctx.k();
  const int n = ctx.n();
  VerificationReport report{"prop-comp", k, n};

  std::vector<int> hook(static_cast<std::size_t>(k + 1), 0);
  hook[0] = n - k;
  const Partition first_row(hook);
  const Partition short_rectangle(std::vector<int>(static_cast<std::size_t>(k + 1), n - k - 1));
  const Partition column(std::vector<int>(static_cast<std::size_t>(k + 1), 1));
  std::vector<int> tall(static_cast<std::size_t>(k + 1), n - k);
  tall.back() = 0;
  const Partition tall_rectangle(tall);
  auto exceptional = [&](const Partition& lambda, const Partition& mu) {
    return (lambda == first_row && mu == short_rectangle) ||
           (lambda == column && mu == tall_rectangle);
  };

  const std::vector<Partition> box = box_partitions(ctx);
  const int slack = (k + 1) - k * (n - k);
  for (const Partition& lambda : box) {
    for (const Partition& mu : box) {
      if (lambda.weight() > mu.weight() + slack) continue;
      ++report.hypothesis_count;
      const bool not_contained = !mu.contains(lambda);
      const bool expected = exceptional(lambda, mu);
      if (not_contained) report.exceptional_pairs.emplace_back(lambda, mu);
      if (not_contained != expected) {
        report.counterexamples.push_back(
            {lambda, mu, not_contained ? "lambda not <= mu outside the two exceptions"
                                       : "exceptional pair is contained"});
      }
    }
  }
  report.passed = report.counterexamples.empty() && report.exceptional_pairs.size() == 2;
  return report;
}

VerificationReport verify_thm_md(const GrassmannContext& ctx) {
  require_interior(ctx, "thm-md");
  VerificationReport report{"thm-md", ctx.k(), ctx.n()};

  const int bound = ctx.n() + 1;
  const ZeroPairScan fast = scan_zero_pairs(ctx, bound, VanishingTest::Fast);
  const ZeroPairScan full = scan_zero_pairs(ctx, bound, VanishingTest::Product);
  report.hypothesis_count = fast.scanned;

  std::vector<ZeroPair> disagreements;
  std::set_symmetric_difference(fast.pairs.begin(), fast.pairs.end(), full.pairs.begin(),
                                full.pairs.end(), std::back_inserter(disagreements),
                                zero_pair_less);
  for (const ZeroPair& z : disagreements) {
    report.counterexamples.push_back({z.a, z.b, "fast criterion and LR product disagree"});
  }

  const auto [hyperplane, point] = special_symbols(ctx);
  const auto h = symbol_class(ctx, hyperplane).terms().begin()->first;
  const auto p = symbol_class(ctx, point).terms().begin()->first;
  const ZeroPair expected = canonical_pair(h, p);
  for (const ZeroPair& z : fast.pairs) {
    report.exceptional_pairs.emplace_back(z.a, z.b);
    if (!(z == expected)) report.counterexamples.push_back({z.a, z.b, "unexpected zero product"});
  }
  if (std::find(fast.pairs.begin(), fast.pairs.end(), expected) == fast.pairs.end()) {
    report.counterexamples.push_back({expected.a, expected.b, "[X_H]*[X_p] not found as zero"});
  }
  report.passed = report.counterexamples.empty();
  return report;
}

VerificationReport verify_egd(const GrassmannContext& ctx) {
  VerificationReport report{"egd", ctx.k(), ctx.n()};
  const EgdResult result = compute_egd_scan(ctx);
  report.hypothesis_count = result.scanned;
  if (result.egd != ctx.n()) {
    report.counterexamples.push_back(
        {ctx.empty(), ctx.empty(), "egd = " + std::to_string(result.egd) + ", expected n"});
  }
  report.passed = report.counterexamples.empty();
  return report;
}

}  // namespace schubert
