#pragma once

#include <functional>
#include <vector>

#include "schubert/checked.hpp"
#include "schubert/grassmann.hpp"

namespace schubert {

/// A filling of the skew shape outer/inner. rows[r] holds the entries of
/// row r from left to right, starting at column inner[r].
struct LrTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;
};

/// Rows weakly increase, columns strictly increase, the right-to-left,
/// top-to-bottom reading word is a lattice word, and the content is a
/// partition. Also checks that the filling has the skew shape.
bool is_lr_tableau(const LrTableau& t);

/// Calls `visit` for every LR tableau of shape nu/lambda and content mu.
/// Enumeration is row-wise backtracking in reading order with lattice-word
/// pruning.
void for_each_lr_tableau(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const std::function<void(const LrTableau&)>& visit);

/// c^nu_{lambda,mu}: the number of LR tableaux of shape nu/lambda with
/// content mu. Zero unless lambda, mu are contained in nu and the weights
/// add up.
Coefficient lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schubert
