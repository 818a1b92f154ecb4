#pragma once

#include <vector>

#include "flagorder/poly.hpp"

namespace flagorder {

/// Ideal given by generators; nonempty, all nonzero, one variable list.
struct IdealSpec {
  std::vector<MultiPoly> generators;

  const VarList& vars() const { return generators.front().vars(); }
  void validate() const;
  std::string to_string() const;
};

/// Ideal membership by multivariate division with remainder under grlex.
///
/// The reduction basis is exact (a Groebner basis) when the generators are
/// all affine-linear (they are row-reduced first), all monomials, or have
/// pairwise coprime leading monomials. Otherwise the verdicts are heuristic
/// and exact() reports false.
class IdealReducer {
 public:
  explicit IdealReducer(const IdealSpec& ideal);

  MultiPoly remainder(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return remainder(p).is_zero(); }
  bool exact() const { return exact_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }

 private:
  std::vector<MultiPoly> basis_;
  bool exact_ = false;
};

}  // namespace flagorder
