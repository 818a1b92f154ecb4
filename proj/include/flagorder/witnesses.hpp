#pragma once

#include <vector>

#include "flagorder/flag_data.hpp"
#include "flagorder/skew.hpp"

namespace flagorder {

using RatMatrix = std::vector<std::vector<RatFunc>>;

/// Determinant by fraction-field Gaussian elimination.
RatFunc determinant(const RatMatrix& a);
/// Classical adjugate from cofactors: adj(A) A = det(A) I.
RatMatrix adjugate(const RatMatrix& a);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

struct DetWitnesses {
  std::vector<MultiPoly> witnesses;
  /// matrix[i][j] = X_i(a_j).
  RatMatrix matrix;
  RatFunc det;
  /// adj(A) A == det * Id, checked exactly.
  bool adjugate_ok = false;
};

/// Greedily picks candidates a_1..a_n (in the given order) making the columns
/// (X_i(a_j))_i independent over Frac(L). Throws WitnessesNotFoundError when
/// the candidates run out.
DetWitnesses find_det_witnesses(const std::vector<SkewElement>& elems,
                                const std::vector<MultiPoly>& candidates);

/// Candidates are the monomials of degree <= max_degree in enumeration order.
DetWitnesses find_det_witnesses(const std::vector<SkewElement>& elems, const FlagData& data,
                                int max_degree);

}  // namespace flagorder
