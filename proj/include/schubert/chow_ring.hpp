#pragma once

#include <map>
#include <optional>
#include <string>

#include "schubert/checked.hpp"
#include "schubert/grassmann.hpp"

namespace schubert {

/// An element of the Chow ring of G(k,n) in the Schubert basis.
///
/// Keys are codimension-convention partitions padded to k+1 parts: sigma_a
/// has codimension |a|. For a Schubert symbol I the class [X_I] is sigma_a
/// with a = dual_partition(lambda_I). Zero coefficients are never stored.
class CycleClass {
 public:
  explicit CycleClass(GrassmannContext ctx) : ctx_(ctx) {}

  [[nodiscard]] const GrassmannContext& context() const { return ctx_; }
  [[nodiscard]] const std::map<Partition, Coefficient>& terms() const& { return terms_; }
  [[nodiscard]] std::map<Partition, Coefficient> terms() && { return std::move(terms_); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// All coefficients strictly positive (and the class is nonzero).
  [[nodiscard]] bool is_effective() const;
  /// Common weight of all keys; nullopt for the zero class or mixed degrees.
  [[nodiscard]] std::optional<int> degree() const;
  [[nodiscard]] Coefficient coefficient(const Partition& a) const;

  /// Adds coeff * sigma_a. `a` is box-checked and normalized.
  void add_term(const Partition& a, Coefficient coeff);

  CycleClass& operator+=(const CycleClass& other);

  friend bool operator==(const CycleClass&, const CycleClass&) = default;

 private:
  GrassmannContext ctx_;
  std::map<Partition, Coefficient> terms_;
};

/// The basis class sigma_a (codimension convention).
CycleClass schubert_class(const GrassmannContext& ctx, const Partition& a);

/// [X_I] for a Schubert symbol I.
CycleClass symbol_class(const GrassmannContext& ctx, const SchubertSymbol& symbol);

/// sigma_a * sigma_b in the Chow ring: LR expansion restricted to the box.
CycleClass multiply_basis(const GrassmannContext& ctx, const Partition& a, const Partition& b);

/// Bilinear extension of multiply_basis. Throws on context mismatch.
CycleClass multiply(const CycleClass& x, const CycleClass& y);

/// [X_I] * [X_J] == 0, decided by I^vee not<= J. O(k), no tableaux.
bool product_vanishes_fast(const GrassmannContext& ctx, const SchubertSymbol& i,
                           const SchubertSymbol& j);

/// Same criterion on codimension partitions: sigma_a * sigma_b == 0 iff a is
/// not contained in the complement of b.
bool basis_product_vanishes_fast(const GrassmannContext& ctx, const Partition& a,
                                 const Partition& b);

/// Coefficient of the point class (full box) in x * y. Both classes must be
/// homogeneous with degrees summing to dim; the zero class pairs to 0.
Coefficient poincare_pair(const CycleClass& x, const CycleClass& y);

/// Terms in decreasing lexicographic order, e.g. "σ(2) + σ(1,1)"; "0" when empty.
std::string to_string(const CycleClass& c);

}  // namespace schubert
