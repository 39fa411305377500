#include "schubert/chow_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "schubert/littlewood_richardson.hpp"

namespace schubert {

namespace {

void require_same_context(const CycleClass& x, const CycleClass& y) {
  if (!(x.context() == y.context())) {
    throw std::invalid_argument("cycle classes live on different Grassmannians");
  }
}

// Box partitions nu of the given weight with lower <= nu componentwise.
void outer_shapes(const GrassmannContext& ctx, const Partition& lower, int weight,
                  std::vector<int>& prefix, std::vector<Partition>& out) {
  const auto row = prefix.size();
  if (row == static_cast<std::size_t>(ctx.rows())) {
    if (weight == 0) out.emplace_back(prefix);
    return;
  }
  const int rows_left = ctx.rows() - static_cast<int>(row);
  const int cap = row == 0 ? ctx.cols() : prefix.back();
  for (int v = lower[row]; v <= cap && v <= weight; ++v) {
    if (v * rows_left < weight) continue;
    prefix.push_back(v);
    outer_shapes(ctx, lower, weight - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool CycleClass::is_effective() const {
  if (terms_.empty()) return false;
  for (const auto& [a, c] : terms_) {
    if (c <= 0) return false;
  }
  return true;
}

std::optional<int> CycleClass::degree() const {
  std::optional<int> d;
  for (const auto& [a, c] : terms_) {
    if (!d) {
      d = a.weight();
    } else if (*d != a.weight()) {
      return std::nullopt;
    }
  }
  return d;
}

Coefficient CycleClass::coefficient(const Partition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

void CycleClass::add_term(const Partition& a, Coefficient coeff) {
  if (coeff == 0) return;
  const Partition key = ctx_.normalize(a);
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

CycleClass& CycleClass::operator+=(const CycleClass& other) {
  require_same_context(*this, other);
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

CycleClass schubert_class(const GrassmannContext& ctx, const Partition& a) {
  CycleClass c(ctx);
  c.add_term(a, 1);
  return c;
}

CycleClass symbol_class(const GrassmannContext& ctx, const SchubertSymbol& symbol) {
  return schubert_class(ctx, dual_partition(ctx, symbol_to_dim_partition(ctx, symbol)));
}

CycleClass multiply_basis(const GrassmannContext& ctx, const Partition& a, const Partition& b) {
  const Partition pa = ctx.normalize(a);
  const Partition pb = ctx.normalize(b);
  CycleClass result(ctx);
  const int weight = pa.weight() + pb.weight();
  if (weight > ctx.dim()) return result;

  std::vector<int> lower(static_cast<std::size_t>(ctx.rows()));
  for (std::size_t i = 0; i < lower.size(); ++i) lower[i] = std::max(pa[i], pb[i]);
  std::vector<Partition> shapes;
  std::vector<int> prefix;
  outer_shapes(ctx, Partition(lower), weight, prefix, shapes);
  for (const Partition& nu : shapes) result.add_term(nu, lr_coefficient(pa, pb, nu));
  return result;
}

CycleClass multiply(const CycleClass& x, const CycleClass& y) {
  require_same_context(x, y);
  CycleClass result(x.context());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const Coefficient scale = checked_mul(ca, cb);
      const CycleClass product = multiply_basis(x.context(), a, b);
      for (const auto& [nu, c] : product.terms()) {
        result.add_term(nu, checked_mul(scale, c));
      }
    }
  }
  return result;
}

bool product_vanishes_fast(const GrassmannContext& ctx, const SchubertSymbol& i,
                           const SchubertSymbol& j) {
  ctx.validate(j);
  return !bruhat_leq(dual_symbol(ctx, i), j);
}

bool basis_product_vanishes_fast(const GrassmannContext& ctx, const Partition& a,
                                 const Partition& b) {
  // [X_I] = sigma_a means lambda_I = a^vee, i.e. I^vee has partition a.
  const SchubertSymbol i = dim_partition_to_symbol(ctx, dual_partition(ctx, a));
  const SchubertSymbol j = dim_partition_to_symbol(ctx, dual_partition(ctx, b));
  return product_vanishes_fast(ctx, i, j);
}

Coefficient poincare_pair(const CycleClass& x, const CycleClass& y) {
  require_same_context(x, y);
  if (x.is_zero() || y.is_zero()) return 0;
  const auto dx = x.degree();
  const auto dy = y.degree();
  if (!dx || !dy) throw std::invalid_argument("Poincare pairing needs homogeneous classes");
  if (*dx + *dy != x.context().dim()) {
    throw std::invalid_argument("Poincare pairing needs complementary degrees, got " +
                                std::to_string(*dx) + " + " + std::to_string(*dy) +
                                " != " + std::to_string(x.context().dim()));
  }
  return multiply(x, y).coefficient(x.context().full_box());
}

std::string to_string(const CycleClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    Coefficient coeff = it->second;
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (coeff < 0) coeff = -coeff;
    if (coeff != 1) os << coeff;
    const Partition key = it->first.trimmed();
    os << "σ" << (key.size() == 0 ? std::string("(0)") : to_string(key));
    first = false;
  }
  return os.str();
}

}  // namespace schubert
