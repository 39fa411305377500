#include "schubert/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part: " + to_string(*this));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition is not weakly decreasing: " + to_string(*this));
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::length() const {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

Partition Partition::padded(std::size_t len) const {
  if (length() > len) {
    throw std::invalid_argument("partition " + to_string(*this) + " has more than " +
                                std::to_string(len) + " nonzero parts");
  }
  std::vector<int> out(len, 0);
  std::copy_n(parts_.begin(), std::min(len, parts_.size()), out.begin());
  Partition result;
  result.parts_ = std::move(out);
  return result;
}

Partition Partition::trimmed() const { return padded(length()); }

bool Partition::contains(const Partition& other) const {
  const std::size_t len = std::max(size(), other.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (other[i] > (*this)[i]) return false;
  }
  return true;
}

bool operator==(const Partition& a, const Partition& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

SchubertSymbol::SchubertSymbol(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] <= 0) {
      throw std::invalid_argument("Schubert symbol indices are 1-based: " + to_string(*this));
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("Schubert symbol is not strictly increasing: " +
                                  to_string(*this));
    }
  }
}

GrassmannContext::GrassmannContext(int k, int n) : k_(k), n_(n) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::invalid_argument("invalid Grassmannian G(" + std::to_string(k) + "," +
                                std::to_string(n) + "): need n >= 1 and 0 <= k <= n-1");
  }
}

bool GrassmannContext::in_box(const Partition& p) const {
  return p.length() <= static_cast<std::size_t>(rows()) && p[0] <= cols();
}

Partition GrassmannContext::normalize(const Partition& p) const {
  if (!in_box(p)) {
    throw std::invalid_argument("partition " + to_string(p) + " does not fit in the " +
                                std::to_string(rows()) + "x" + std::to_string(cols()) + " box");
  }
  return p.padded(static_cast<std::size_t>(rows()));
}

void GrassmannContext::validate(const SchubertSymbol& s) const {
  if (s.size() != static_cast<std::size_t>(rows())) {
    throw std::invalid_argument("Schubert symbol " + to_string(s) + " must have " +
                                std::to_string(rows()) + " indices");
  }
  if (s[0] < 1 || s[s.size() - 1] > n_ + 1) {
    throw std::invalid_argument("Schubert symbol " + to_string(s) + " leaves the range [1, " +
                                std::to_string(n_ + 1) + "]");
  }
}

Partition GrassmannContext::full_box() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(rows()), cols()));
}

Partition GrassmannContext::empty() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(rows()), 0));
}

Partition symbol_to_dim_partition(const GrassmannContext& ctx, const SchubertSymbol& symbol) {
  ctx.validate(symbol);
  const int rows = ctx.rows();
  std::vector<int> parts(static_cast<std::size_t>(rows));
  // 0-based: lambda[j] = i[rows-1-j] - (rows-j)
  for (int j = 0; j < rows; ++j) {
    parts[static_cast<std::size_t>(j)] = symbol[static_cast<std::size_t>(rows - 1 - j)] - (rows - j);
  }
  return Partition(std::move(parts));
}

SchubertSymbol dim_partition_to_symbol(const GrassmannContext& ctx, const Partition& lambda) {
  const Partition p = ctx.normalize(lambda);
  const int rows = ctx.rows();
  std::vector<int> indices(static_cast<std::size_t>(rows));
  for (int j = 0; j < rows; ++j) {
    indices[static_cast<std::size_t>(rows - 1 - j)] = p[static_cast<std::size_t>(j)] + (rows - j);
  }
  return SchubertSymbol(std::move(indices));
}

SchubertSymbol dual_symbol(const GrassmannContext& ctx, const SchubertSymbol& symbol) {
  ctx.validate(symbol);
  std::vector<int> indices(symbol.size());
  for (std::size_t j = 0; j < symbol.size(); ++j) {
    indices[j] = ctx.n() + 2 - symbol[symbol.size() - 1 - j];
  }
  return SchubertSymbol(std::move(indices));
}

Partition dual_partition(const GrassmannContext& ctx, const Partition& lambda) {
  const Partition p = ctx.normalize(lambda);
  const auto rows = static_cast<std::size_t>(ctx.rows());
  std::vector<int> parts(rows);
  for (std::size_t j = 0; j < rows; ++j) parts[j] = ctx.cols() - p[rows - 1 - j];
  return Partition(std::move(parts));
}

bool bruhat_leq(const SchubertSymbol& lhs, const SchubertSymbol& rhs) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("cannot compare Schubert symbols " + to_string(lhs) + " and " +
                                to_string(rhs) + " from different Grassmannians");
  }
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    if (lhs[j] > rhs[j]) return false;
  }
  return true;
}

bool bruhat_leq_by_diagram(const GrassmannContext& ctx, const SchubertSymbol& lhs,
                           const SchubertSymbol& rhs) {
  return symbol_to_dim_partition(ctx, rhs).contains(symbol_to_dim_partition(ctx, lhs));
}

std::pair<SchubertSymbol, SchubertSymbol> special_symbols(const GrassmannContext& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  std::vector<int> hyperplane;
  for (int i = n - k; i <= n; ++i) hyperplane.push_back(i);
  std::vector<int> point{1};
  for (int i = n - k + 2; i <= n + 1; ++i) point.push_back(i);
  return {SchubertSymbol(std::move(hyperplane)), SchubertSymbol(std::move(point))};
}

std::string render_diagram(const GrassmannContext& ctx, const Partition& lambda,
                           const std::optional<Partition>& overlay) {
  const Partition filled = ctx.normalize(lambda);
  std::optional<Partition> marked;
  if (overlay) {
    if (!ctx.in_box(*overlay)) {
      throw std::invalid_argument("overlay " + to_string(*overlay) + " exceeds the box");
    }
    marked = ctx.normalize(*overlay);
  }
  std::string out;
  for (int r = 0; r < ctx.rows(); ++r) {
    std::string line;
    for (int c = 0; c < ctx.cols(); ++c) {
      const auto row = static_cast<std::size_t>(r);
      if (marked && c < (*marked)[row]) {
        line += "* ";
      } else if (c < filled[row]) {
        line += "# ";
      } else {
        line += ". ";
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

void fill_partitions(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == rows) {
    out.emplace_back(prefix);
    return;
  }
  const int bound = prefix.empty() ? cols : prefix.back();
  for (int v = 0; v <= bound; ++v) {
    prefix.push_back(v);
    fill_partitions(rows, cols, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> box_partitions(const GrassmannContext& ctx) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  fill_partitions(ctx.rows(), ctx.cols(), prefix, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  });
  return out;
}

std::vector<SchubertSymbol> all_symbols(const GrassmannContext& ctx) {
  std::vector<SchubertSymbol> out;
  for (const Partition& p : box_partitions(ctx)) out.push_back(dim_partition_to_symbol(ctx, p));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string join(std::span<const int> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  return os.str();
}

}  // namespace

std::string to_string(const Partition& p) { return "(" + join(p.parts()) + ")"; }

std::string to_string(const SchubertSymbol& s) { return "{" + join(s.indices()) + "}"; }

}  // namespace schubert
