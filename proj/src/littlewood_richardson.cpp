#include "schubert/littlewood_richardson.hpp"

#include <algorithm>

namespace schubert {

namespace {

class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
      : outer_(nu.trimmed()),
        inner_(lambda.padded(std::max(nu.length(), lambda.length()))),
        content_(mu.trimmed()),
        counts_(content_.size() + 1, 0),
        grid_(outer_.size()) {
    for (std::size_t r = 0; r < outer_.size(); ++r) {
      grid_[r].assign(static_cast<std::size_t>(outer_[r]), 0);
      for (int c = outer_[r] - 1; c >= inner_[r]; --c) cells_.emplace_back(r, c);
    }
  }

  /// Calls `on_complete` once per valid filling; the grid is live during the
  /// call.
  template <typename F>
  void run(F&& on_complete) {
    fill(0, on_complete);
  }

  [[nodiscard]] LrTableau snapshot() const {
    LrTableau t{outer_, inner_, {}};
    for (std::size_t r = 0; r < outer_.size(); ++r) {
      t.rows.emplace_back(grid_[r].begin() + inner_[r], grid_[r].end());
    }
    return t;
  }

 private:
  template <typename F>
  void fill(std::size_t idx, F& on_complete) {
    if (idx == cells_.size()) {
      on_complete();
      return;
    }
    const auto [r, c] = cells_[idx];
    const int m = static_cast<int>(content_.size());
    // Row r is filled right to left, so the right neighbour is already placed.
    int hi = m;
    if (c + 1 < outer_[r]) hi = grid_[r][static_cast<std::size_t>(c + 1)];
    int lo = 1;
    if (r > 0 && c >= inner_[r - 1]) lo = grid_[r - 1][static_cast<std::size_t>(c)] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (counts_[vi] >= content_[vi - 1]) continue;
      if (v > 1 && counts_[vi] >= counts_[vi - 1]) continue;
      ++counts_[vi];
      grid_[r][static_cast<std::size_t>(c)] = v;
      fill(idx + 1, on_complete);
      grid_[r][static_cast<std::size_t>(c)] = 0;
      --counts_[vi];
    }
  }

  Partition outer_;
  Partition inner_;
  Partition content_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<std::size_t, int>> cells_;
};

bool shapes_compatible(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return nu.weight() == lambda.weight() + mu.weight() && nu.contains(lambda) && nu.contains(mu);
}

}  // namespace

bool is_lr_tableau(const LrTableau& t) {
  const Partition outer = t.outer.trimmed();
  if (!outer.contains(t.inner)) return false;
  if (t.rows.size() != outer.size()) return false;
  auto at = [&](std::size_t r, int c) {
    return t.rows[r][static_cast<std::size_t>(c - t.inner[r])];
  };
  for (std::size_t r = 0; r < outer.size(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != outer[r] - t.inner[r]) return false;
    for (int c = t.inner[r]; c < outer[r]; ++c) {
      if (at(r, c) < 1) return false;
      if (c > t.inner[r] && at(r, c - 1) > at(r, c)) return false;
      if (r > 0 && c >= t.inner[r - 1] && at(r - 1, c) >= at(r, c)) return false;
    }
  }
  std::vector<int> counts;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    for (int c = outer[r] - 1; c >= t.inner[r]; --c) {
      const auto v = static_cast<std::size_t>(at(r, c));
      if (counts.size() <= v) counts.resize(v + 1, 0);
      ++counts[v];
      if (v > 1 && counts[v] > counts[v - 1]) return false;
    }
  }
  return true;
}

void for_each_lr_tableau(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const std::function<void(const LrTableau&)>& visit) {
  if (!shapes_compatible(lambda, mu, nu)) return;
  LrFiller filler(lambda, mu, nu);
  filler.run([&] { visit(filler.snapshot()); });
}

Coefficient lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!shapes_compatible(lambda, mu, nu)) return 0;
  LrFiller filler(lambda, mu, nu);
  Coefficient count = 0;
  filler.run([&] { count = checked_add(count, 1); });
  return count;
}

}  // namespace schubert
