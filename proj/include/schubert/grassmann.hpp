#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

/// Weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are significant for storage but not for comparison:
/// (2,1) and (2,1,0) compare equal, and ordering is lexicographic on the
/// zero-padded sequences. Box membership is checked against a
/// GrassmannContext, which also normalizes to the fixed length k+1.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }

  /// Part at `i` (0-based), zero past the stored length.
  [[nodiscard]] int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  [[nodiscard]] int weight() const;
  /// Number of nonzero parts.
  [[nodiscard]] std::size_t length() const;

  /// Same partition stored at exactly `len` parts. Throws if a nonzero part
  /// would be dropped.
  [[nodiscard]] Partition padded(std::size_t len) const;
  /// Same partition with trailing zeros removed.
  [[nodiscard]] Partition trimmed() const;

  /// Young-diagram containment: other_i <= this_i for every i.
  [[nodiscard]] bool contains(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

/// Strictly increasing sequence of positive 1-based indices.
class SchubertSymbol {
 public:
  SchubertSymbol() = default;
  explicit SchubertSymbol(std::vector<int> indices);
  SchubertSymbol(std::initializer_list<int> indices)
      : SchubertSymbol(std::vector<int>(indices)) {}

  [[nodiscard]] std::span<const int> indices() const { return indices_; }
  [[nodiscard]] std::size_t size() const { return indices_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return indices_.at(i); }

  friend bool operator==(const SchubertSymbol&, const SchubertSymbol&) = default;
  friend auto operator<=>(const SchubertSymbol&, const SchubertSymbol&) = default;

 private:
  std::vector<int> indices_;
};

/// The Grassmannian G(k,n) of k-planes in P^n, i.e. (k+1)-dimensional
/// subspaces of an (n+1)-dimensional vector space. Its Schubert classes are
/// indexed by partitions in a rows() x cols() box.
class GrassmannContext {
 public:
  GrassmannContext(int k, int n);

  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int rows() const { return k_ + 1; }
  [[nodiscard]] int cols() const { return n_ - k_; }
  [[nodiscard]] int dim() const { return rows() * cols(); }

  [[nodiscard]] bool in_box(const Partition& p) const;
  /// Pads `p` to length k+1; throws std::invalid_argument if it leaves the box.
  [[nodiscard]] Partition normalize(const Partition& p) const;
  /// Throws std::invalid_argument unless `s` has k+1 indices in [1, n+1].
  void validate(const SchubertSymbol& s) const;

  [[nodiscard]] Partition full_box() const;
  [[nodiscard]] Partition empty() const;

  friend bool operator==(const GrassmannContext&, const GrassmannContext&) = default;

 private:
  int k_;
  int n_;
};

/// lambda_I with lambda_j = i_{k+2-j} - (k+2-j); its weight is dim X_I.
Partition symbol_to_dim_partition(const GrassmannContext& ctx, const SchubertSymbol& symbol);
/// Inverse of symbol_to_dim_partition.
SchubertSymbol dim_partition_to_symbol(const GrassmannContext& ctx, const Partition& lambda);

/// I^vee = {n+2-i_{k+1} < ... < n+2-i_1}.
SchubertSymbol dual_symbol(const GrassmannContext& ctx, const SchubertSymbol& symbol);
/// Complement in the box rotated by 180 degrees: lambda^vee_j = (n-k) - lambda_{k+2-j}.
/// Also the conversion between dimension and codimension conventions.
Partition dual_partition(const GrassmannContext& ctx, const Partition& lambda);

/// Bruhat order by componentwise index comparison.
bool bruhat_leq(const SchubertSymbol& lhs, const SchubertSymbol& rhs);
/// Bruhat order by Young-diagram containment of the dimension partitions.
bool bruhat_leq_by_diagram(const GrassmannContext& ctx, const SchubertSymbol& lhs,
                           const SchubertSymbol& rhs);

/// (I_H, I_p): k-planes inside a hyperplane, k-planes through a point.
std::pair<SchubertSymbol, SchubertSymbol> special_symbols(const GrassmannContext& ctx);

/// ASCII Young diagram, one line per row of the box. Each cell is two
/// characters: "# " filled, ". " empty, "* " overlay (overlay wins over
/// filled). Trailing whitespace is stripped from every line.
std::string render_diagram(const GrassmannContext& ctx, const Partition& lambda,
                           const std::optional<Partition>& overlay = std::nullopt);

/// Every partition in the box, ordered by (weight, parts lexicographically).
std::vector<Partition> box_partitions(const GrassmannContext& ctx);

/// Every valid Schubert symbol for ctx in lexicographic order.
std::vector<SchubertSymbol> all_symbols(const GrassmannContext& ctx);

std::string to_string(const Partition& p);
std::string to_string(const SchubertSymbol& s);

}  // namespace schubert
