#pragma once

#include <string>
#include <vector>

namespace schubert {

/// A morphism G(l,n) -> G(k,n) to classify.
struct MorphismQuery {
  int l;
  int k;
  int n;
};

enum class Verdict {
  MustBeConstant,
  NonconstantImpliesIsomorphism,
  NotCovered,
};

/// Which step of the decision procedure settled the query.
enum class Branch {
  ProjectiveDomain,  ///< l in {0, n-1}: outside the theorem's hypothesis.
  DimensionBound,    ///< k in {0, n-1} and dim G(l,n) > n.
  MdPairObstruction, ///< G(l,n) has no md-pair of type {k+1, n-k}.
  MdPairTypeMatch,   ///< md-pair types agree, so l = k or l = n-k-1.
};

struct ClassificationOutcome {
  MorphismQuery query;
  Verdict verdict;
  Branch branch;
  std::string details;
};

/// Decision procedure for nonconstant morphisms G(l,n) -> G(k,n). The md-pair
/// branch runs the live search on G(l,n). Throws std::invalid_argument for
/// indices outside [0, n-1] or n < 1.
ClassificationOutcome classify(const MorphismQuery& q);

/// outcome[l][k] for every 0 <= l, k <= n-1. Requires n >= 3.
std::vector<std::vector<ClassificationOutcome>> classify_table(int n);

/// "C" must be constant, "I" nonconstant implies isomorphism, "-" not covered.
char verdict_glyph(Verdict v);
std::string to_string(Verdict v);
std::string to_string(Branch b);

/// Aligned text grid, rows indexed by l and columns by k.
std::string render_table(const std::vector<std::vector<ClassificationOutcome>>& table);

}  // namespace schubert
