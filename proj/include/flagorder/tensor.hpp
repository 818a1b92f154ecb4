#pragma once

#include <string>
#include <vector>

#include "flagorder/flag_data.hpp"
#include "flagorder/membership.hpp"
#include "flagorder/skew.hpp"
#include "flagorder/witnesses.hpp"

namespace flagorder {

/// Factors over disjoint variable lists and their joint data:
/// L = L1 (x) L2, W = W1 x W2, M = M1 x M2.
struct TensorData {
  FlagData left;
  FlagData right;
  FlagData joint;
};

/// Throws AlignmentError if the variable lists overlap.
TensorData make_tensor_data(const FlagData& left, const FlagData& right);

/// X (x) Y -> X Y in the joint skew ring.
SkewElement tensor_embed(const TensorData& t, const SkewElement& x, const SkewElement& y);
SkewElement embed_left(const TensorData& t, const SkewElement& x);
SkewElement embed_right(const TensorData& t, const SkewElement& y);

/// Witness search among simple tensors a (x) b, i.e. joint monomials of
/// degree <= max_degree.
DetWitnesses find_det_witnesses(const std::vector<SkewElement>& elems, const TensorData& t,
                                int max_degree);

struct TensorWitnesses {
  DetWitnesses left;
  DetWitnesses right;
  /// Elements X_i (x) Y_k and witnesses a_j (x) b_l, in row-major order.
  DetWitnesses joint;
  /// det = det1^m * det2^n with n, m the factor sizes.
  bool det_factors = false;
};

/// Kronecker construction from factor witnesses; every joint witness is a
/// simple tensor by construction.
TensorWitnesses find_tensor_witnesses(const TensorData& t, const std::vector<SkewElement>& elems1,
                                      const std::vector<SkewElement>& elems2, int max_degree);

struct TensorCheck {
  std::string name;
  bool pass = true;
  bool machine_checked = true;
  std::vector<std::string> witnesses;
  std::string detail;
};

struct PrincipalTensorReport {
  bool pass = true;
  int degree_bound = 0;
  int word_len = 0;
  std::size_t products_checked = 0;
  std::vector<TensorCheck> checks;
};

/// On the embedded generators: (i) every factor variable and W generator is
/// among them, cross-factor generators commute, (iii) every product of at
/// most `word_len` embedded generators passes member_standard on the joint
/// data. Condition (ii) is recorded, not checked.
PrincipalTensorReport check_principal_tensor(const TensorData& t,
                                             const std::vector<SkewElement>& gens1,
                                             const std::vector<SkewElement>& gens2,
                                             int degree_bound, int word_len = 3);

}  // namespace flagorder
