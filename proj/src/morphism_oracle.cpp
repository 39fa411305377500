#include "schubert/morphism_oracle.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "schubert/grassmann.hpp"
#include "schubert/mdpair_search.hpp"

namespace schubert {

namespace {

void validate(const MorphismQuery& q) {
  if (q.n < 1 || q.l < 0 || q.l > q.n - 1 || q.k < 0 || q.k > q.n - 1) {
    throw std::invalid_argument("invalid morphism query G(" + std::to_string(q.l) + "," +
                                std::to_string(q.n) + ") -> G(" + std::to_string(q.k) + "," +
                                std::to_string(q.n) + ")");
  }
}

std::string type_string(int i, int j) {
  const auto t = pair_type(i, j);
  return "{" + std::to_string(t.first) + "," + std::to_string(t.second) + "}";
}

// Shared by classify and classify_table; the type lookup is the only part
// that needs the md-pair search.
template <typename HasType>
ClassificationOutcome decide(const MorphismQuery& q, HasType&& has_type) {
  validate(q);
  const int l = q.l;
  const int k = q.k;
  const int n = q.n;
  if (l == 0 || l == n - 1) {
    return {q, Verdict::NotCovered, Branch::ProjectiveDomain,
            "domain G(" + std::to_string(l) + "," + std::to_string(n) +
                ") is a projective space; requires l != 0, n-1"};
  }
  if (k == 0 || k == n - 1) {
    const int dim = GrassmannContext(l, n).dim();
    if (dim <= n) {
      throw std::logic_error("dim G(l,n) = " + std::to_string(dim) + " <= n for interior l");
    }
    return {q, Verdict::MustBeConstant, Branch::DimensionBound,
            "target is P^" + std::to_string(n) + " and dim G(" + std::to_string(l) + "," +
                std::to_string(n) + ") = " + std::to_string(dim) + " > " + std::to_string(n)};
  }
  if (!has_type(l, n, pair_type(k + 1, n - k))) {
    return {q, Verdict::MustBeConstant, Branch::MdPairObstruction,
            "G(" + std::to_string(l) + "," + std::to_string(n) + ") has no md-pair of type " +
                type_string(k + 1, n - k) +
                "; constancy then follows from the reduction to smaller Grassmannians "
                "(cited, not mechanized)"};
  }
  std::string identity;
  if (l == k) identity = "l = k";
  if (l == n - k - 1) identity += identity.empty() ? "l = n-k-1" : ", l = n-k-1";
  if (identity.empty()) {
    throw std::logic_error("md-pair type " + type_string(k + 1, n - k) + " found in G(" +
                           std::to_string(l) + "," + std::to_string(n) +
                           ") with l not in {k, n-k-1}");
  }
  return {q, Verdict::NonconstantImpliesIsomorphism, Branch::MdPairTypeMatch,
          identity + "; md-pair type " + type_string(k + 1, n - k) +
              " matches; isomorphism by the Hwang-Mok theorem (cited)"};
}

}  // namespace

ClassificationOutcome classify(const MorphismQuery& q) {
  return decide(q, [](int l, int n, std::pair<int, int> t) {
    return has_mdpair_of_type(GrassmannContext(l, n), t);
  });
}

std::vector<std::vector<ClassificationOutcome>> classify_table(int n) {
  if (n < 3) throw std::invalid_argument("classification table needs n >= 3");
  // One search per source Grassmannian.
  std::map<int, std::vector<std::pair<int, int>>> types;
  auto has_type = [&](int l, int m, std::pair<int, int> t) {
    auto it = types.find(l);
    if (it == types.end()) {
      std::vector<std::pair<int, int>> found;
      for (const MdPair& p : md_pairs(GrassmannContext(l, m))) found.push_back(p.type());
      it = types.emplace(l, std::move(found)).first;
    }
    for (const auto& found : it->second) {
      if (found == t) return true;
    }
    return false;
  };
  std::vector<std::vector<ClassificationOutcome>> table(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) table[static_cast<std::size_t>(l)].push_back(decide({l, k, n}, has_type));
  }
  return table;
}

char verdict_glyph(Verdict v) {
  switch (v) {
    case Verdict::MustBeConstant: return 'C';
    case Verdict::NonconstantImpliesIsomorphism: return 'I';
    case Verdict::NotCovered: return '-';
  }
  return '?';
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::MustBeConstant: return "MUST_BE_CONSTANT";
    case Verdict::NonconstantImpliesIsomorphism: return "NONCONSTANT_IMPLIES_ISOMORPHISM";
    case Verdict::NotCovered: return "NOT_COVERED";
  }
  return "UNKNOWN";
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::ProjectiveDomain: return "projective-domain";
    case Branch::DimensionBound: return "dimension";
    case Branch::MdPairObstruction: return "mdpair-type-mismatch";
    case Branch::MdPairTypeMatch: return "mdpair-type-match";
  }
  return "unknown";
}

std::string render_table(const std::vector<std::vector<ClassificationOutcome>>& table) {
  std::ostringstream os;
  const std::size_t n = table.size();
  const std::size_t width = std::to_string(n).size();
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  os << std::string(width, ' ');
  for (std::size_t k = 0; k < n; ++k) os << ' ' << pad(std::to_string(k));
  os << '\n';
  for (std::size_t l = 0; l < n; ++l) {
    os << pad(std::to_string(l));
    for (const ClassificationOutcome& cell : table[l]) {
      os << ' ' << std::string(width - 1, ' ') << verdict_glyph(cell.verdict);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace schubert
