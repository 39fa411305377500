#include "schubert/schur_oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schubert {

namespace {

// Partitions of `weight` with at most `max_rows` parts, each at most `max_part`,
// in decreasing lexicographic order.
void partitions_of(int weight, int max_rows, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (weight == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_rows) return;
  const int remaining_rows = max_rows - static_cast<int>(prefix.size());
  for (int v = std::min(weight, max_part); v >= 1; --v) {
    if (v * remaining_rows < weight) break;
    prefix.push_back(v);
    partitions_of(weight - v, max_rows, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SchurOracle::SchurOracle(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("Schur oracle needs at least one variable");
}

Coefficient SchurOracle::count_strips(const std::vector<int>& current,
                                      const std::vector<int>& content, std::size_t letter) {
  // Removes the horizontal strip of the largest remaining letter from `current`.
  if (letter == 0) {
    return std::all_of(current.begin(), current.end(), [](int v) { return v == 0; }) ? 1 : 0;
  }
  std::vector<int> prefix(content.begin(), content.begin() + static_cast<long>(letter));
  auto key = std::make_pair(current, prefix);
  if (auto it = kostka_memo_.find(key); it != kostka_memo_.end()) return it->second;

  const int strip = content[letter - 1];
  Coefficient total = 0;
  std::vector<int> next(current.size());
  // next_j ranges over [current_{j+1}, current_j]; strip size is the total drop.
  std::function<void(std::size_t, int)> choose = [&](std::size_t row, int left) {
    if (row == current.size()) {
      if (left == 0) {
        total = checked_add(total, count_strips(next, content, letter - 1));
      }
      return;
    }
    const int below = row + 1 < current.size() ? current[row + 1] : 0;
    for (int v = current[row]; v >= below; --v) {
      const int removed = current[row] - v;
      if (removed > left) break;
      next[row] = v;
      choose(row + 1, left - removed);
    }
  };
  choose(0, strip);
  kostka_memo_.emplace(std::move(key), total);
  return total;
}

Coefficient SchurOracle::kostka(const Partition& shape, const std::vector<int>& content) {
  if (static_cast<int>(content.size()) > num_vars_) {
    throw std::invalid_argument("content has more parts than variables");
  }
  int total = 0;
  for (int c : content) {
    if (c < 0) return 0;
    total += c;
  }
  if (total != shape.weight()) return 0;
  if (static_cast<int>(shape.length()) > num_vars_) return 0;
  std::vector<int> sorted = content;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
  const Partition s = shape.trimmed();
  std::vector<int> rows(s.parts().begin(), s.parts().end());
  return count_strips(rows, sorted, sorted.size());
}

Coefficient SchurOracle::product_monomial(const Partition& lambda, const Partition& mu,
                                          const Partition& exponent) {
  const auto m = static_cast<std::size_t>(num_vars_);
  const int lambda_weight = lambda.weight();
  std::vector<int> beta(m, 0);
  std::vector<int> gamma(m, 0);
  Coefficient total = 0;
  // beta_i can't exceed the first row of lambda: each letter appears at most
  // once per column.
  std::function<void(std::size_t, int)> split = [&](std::size_t i, int left) {
    if (i == m) {
      if (left != 0) return;
      const Coefficient a = kostka(lambda, beta);
      if (a == 0) return;
      const Coefficient b = kostka(mu, gamma);
      total = checked_add(total, checked_mul(a, b));
      return;
    }
    const int e = exponent[i];
    for (int v = std::min({e, left, lambda[0]}); v >= 0; --v) {
      if (e - v > mu[0]) break;
      beta[i] = v;
      gamma[i] = e - v;
      split(i + 1, left - v);
    }
  };
  split(0, lambda_weight);
  return total;
}

std::map<Partition, Coefficient> SchurOracle::expand(const Partition& lambda,
                                                      const Partition& mu) {
  if (static_cast<int>(lambda.length()) > num_vars_ || static_cast<int>(mu.length()) > num_vars_) {
    throw std::invalid_argument("Schur oracle needs at least as many variables as rows: " +
                                to_string(lambda) + ", " + to_string(mu) + " with " +
                                std::to_string(num_vars_) + " variables");
  }
  const int weight = lambda.weight() + mu.weight();
  std::vector<Partition> candidates;
  std::vector<int> prefix;
  partitions_of(weight, num_vars_, lambda[0] + mu[0], prefix, candidates);

  // Candidates are in decreasing lex order, so each one is the leading
  // monomial of what remains once the larger Schur terms are subtracted.
  std::map<Partition, Coefficient> result;
  std::vector<std::pair<Partition, Coefficient>> found;
  for (const Partition& nu : candidates) {
    const Partition exponent = nu.padded(static_cast<std::size_t>(num_vars_));
    Coefficient residual = product_monomial(lambda, mu, exponent);
    const std::vector<int> content(exponent.parts().begin(), exponent.parts().end());
    for (const auto& [alpha, c] : found) {
      residual = checked_sub(residual, checked_mul(c, kostka(alpha, content)));
    }
    if (residual != 0) {
      found.emplace_back(nu, residual);
      result.emplace(nu, residual);
    }
  }
  return result;
}

std::map<Partition, Coefficient> lr_oracle(const Partition& lambda, const Partition& mu,
                                           int num_vars) {
  SchurOracle oracle(num_vars);
  return oracle.expand(lambda, mu);
}

}  // namespace schubert
