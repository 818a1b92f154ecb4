#pragma once

#include <string>
#include <vector>

#include "flagorder/ideal.hpp"
#include "flagorder/morphism.hpp"

namespace flagorder {

struct HypothesisCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct SampleOutcome {
  std::string element;
  bool source_member = false;
  bool target_member = false;
  std::string witness;
};

struct IntersectionReport {
  bool pass = true;
  int degree_bound = 0;
  /// decomposition, ideal_invariance, compatibility.
  std::vector<HypothesisCheck> hypotheses;
  std::vector<SampleOutcome> samples;
  /// Samples where X in F_L1 and Phi(X) in F_L2 disagree.
  std::vector<std::string> counterexamples;
};

/// Scaled-down instance of F_L2 intersect Phi(Frac(L1) # W1^) = Phi(F_L1)
/// for L2 = phi(L1) (+) I. Hypotheses: the decomposition holds for every
/// monomial up to the bound, psi of every source generator fixes each ideal
/// generator, and phi, psi are compatible. Each sample is then tested on
/// both sides at the bound.
IntersectionReport check_intersection(const Morphism& m, const IdealSpec& ideal,
                                      const std::vector<SkewElement>& samples, int degree_bound);

struct QuotientEmbeddingReport {
  bool pass = true;
  int degree_bound = 0;
  /// Members X whose image does not fix I.
  std::vector<std::string> not_fixing;
  /// Members X with Phi(X)(phi(a)) - phi(X(a)) outside I for some monomial a.
  std::vector<std::string> action_mismatch;
  /// Pairs X != Y of members with equal classes, or X == Y with distinct ones.
  std::vector<std::string> class_mismatch;
};

/// eta: F_L1 -> F_L2[I] / I F_L2 on the member samples: images fix I, the
/// induced action on L2 / I matches the source action through phi, and
/// distinct members stay distinct in the quotient.
QuotientEmbeddingReport check_quotient_embedding(const Morphism& m, const IdealSpec& ideal,
                                                 const std::vector<SkewElement>& samples,
                                                 int degree_bound);

}  // namespace flagorder
