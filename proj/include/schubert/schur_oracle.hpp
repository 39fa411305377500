#pragma once

#include <map>
#include <vector>

#include "schubert/checked.hpp"
#include "schubert/grassmann.hpp"

namespace schubert {

/// Independent check on the LR rule: expands products of Schur polynomials
/// in a fixed number of variables from semistandard-tableau monomial counts,
/// then recovers Schur coefficients by leading-monomial elimination.
///
/// Only monomials with partition exponents are materialized. The coefficient
/// of x^beta in s_lambda is the number of SSYT of shape lambda and content
/// beta, which is symmetric in beta, so it is looked up under sort(beta).
/// The leading (lex-largest) monomial of a symmetric polynomial always has a
/// partition exponent, so elimination never needs any other monomial.
///
/// Holds a memo of tableau counts; one instance is not safe to share across
/// threads.
class SchurOracle {
 public:
  explicit SchurOracle(int num_vars);

  [[nodiscard]] int num_vars() const { return num_vars_; }

  /// Number of SSYT of shape `shape` with content `content` (a composition
  /// of at most num_vars parts). Counted by stacking horizontal strips.
  Coefficient kostka(const Partition& shape, const std::vector<int>& content);

  /// Coefficient of x^exponent in s_lambda(x_1..x_m) * s_mu(x_1..x_m).
  Coefficient product_monomial(const Partition& lambda, const Partition& mu,
                               const Partition& exponent);

  /// s_lambda * s_mu = sum_nu coeff * s_nu over nu with at most num_vars rows.
  std::map<Partition, Coefficient> expand(const Partition& lambda, const Partition& mu);

 private:
  Coefficient count_strips(const std::vector<int>& current, const std::vector<int>& content,
                           std::size_t letter);

  int num_vars_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Coefficient> kostka_memo_;
};

/// Full (untruncated) expansion of s_lambda * s_mu in num_vars variables.
/// Throws std::invalid_argument if either factor has more than num_vars rows.
std::map<Partition, Coefficient> lr_oracle(const Partition& lambda, const Partition& mu,
                                           int num_vars);

}  // namespace schubert
