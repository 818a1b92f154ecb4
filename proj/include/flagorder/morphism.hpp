#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagorder/flag_data.hpp"
#include "flagorder/membership.hpp"
#include "flagorder/skew.hpp"

namespace flagorder {

inline constexpr int kDefaultComplementDegree = 3;

/// Phi: Frac(L1) # W1^ -> Frac(L2) # W2^, f w -> phi(f) psi(w).
///
/// `phi[i]` is the image of source variable i (over the target variables).
/// `psi_w[j]` / `psi_m[j]` are the images of the j-th W / M generator of the
/// source. `complement` generates U with L2 = phi(L1) (x) U.
struct Morphism {
  FlagData source;
  FlagData target;
  std::vector<MultiPoly> phi;
  std::vector<Automorphism> psi_w;
  std::vector<Automorphism> psi_m;
  std::optional<std::vector<MultiPoly>> complement;
  /// psi on every element of the enumerated source W.
  std::map<Automorphism, Automorphism> w_images;
};

struct MorphismReport {
  bool pass = true;
  /// One entry per violation, e.g. the pair (w, x_i) breaking compatibility.
  std::vector<std::string> violations;
  /// Outcome of the complement check when a complement was given.
  std::optional<bool> complement_ok;
  /// Monomials in phi(vars) and U whose images are linearly dependent.
  std::vector<std::string> dependent;
  int complement_degree = 0;
  std::string note;
};

/// Validates the data without throwing: compatibility on every (generator,
/// variable) pair, psi respects the relations of W (by enumerating its
/// graph), commutation of M generators and the conjugation action of W on M,
/// and the complement decomposition up to `complement_degree`.
MorphismReport check_morphism(const FlagData& source, const FlagData& target,
                              const std::vector<MultiPoly>& phi,
                              const std::vector<Automorphism>& psi_w,
                              const std::vector<Automorphism>& psi_m,
                              const std::optional<std::vector<MultiPoly>>& complement,
                              int complement_degree = kDefaultComplementDegree);

/// check_morphism, then packages the result. Throws CompatibilityError
/// listing the violations.
Morphism build_morphism(const FlagData& source, const FlagData& target,
                        std::vector<MultiPoly> phi, std::vector<Automorphism> psi_w,
                        std::vector<Automorphism> psi_m,
                        std::optional<std::vector<MultiPoly>> complement,
                        int complement_degree = kDefaultComplementDegree);

/// phi extended to rational functions.
RatFunc apply_phi(const Morphism& m, const RatFunc& f);

/// psi(w); throws DomainError if w is outside the group generated by the
/// source generators.
Automorphism apply_psi(const Morphism& m, const Automorphism& w);

/// Phi(X) = sum phi(f_w) psi(w).
SkewElement apply_morphism(const Morphism& m, const SkewElement& x);

/// Whether Phi(X) lies in the target standard flag order. If X itself is not
/// a source member the source verdict is returned with a note.
MembershipVerdict check_restriction(const Morphism& m, const SkewElement& x, int degree_bound);

struct DirectProductReport {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Hypotheses for spherical restriction: W2^ = psi(W1^) x H^ with
/// H^ = <h_gens>. Checks that H commutes with psi of every source
/// generator, that the finite parts meet trivially, that H fixes phi(L1) and
/// psi fixes U, and that psi(W1^) and H^ generate W2^.
DirectProductReport check_direct_product(const Morphism& m, const std::vector<Automorphism>& h_gens);

struct SphericalRestriction {
  /// e2 Phi(X) e2.
  SkewElement image;
  /// Phi(e1 X e1) averaged over the finite part of H.
  SkewElement expected;
  bool identity_holds = false;
};

/// Throws DirectProductError when check_direct_product fails.
SphericalRestriction spherical_restriction(const Morphism& m, const SkewElement& x,
                                           const std::vector<Automorphism>& h_gens);

}  // namespace flagorder
