#pragma once

#include <vector>

#include "flagorder/poly.hpp"

namespace flagorder {

/// Greatest common divisor, normalized to leading coefficient 1.
///
/// Recursive primitive Euclidean algorithm: the polynomials are viewed as
/// univariate in their last shared variable over the fraction field of the
/// remaining ones, contents are split off recursively and primitive
/// pseudo-remainder sequences run on the primitive parts. This is the
/// performance hot spot of the library.
///
/// Throws UndefinedGcdError when both inputs are zero.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

/// Least common multiple, leading coefficient 1.
MultiPoly poly_lcm(const MultiPoly& p, const MultiPoly& q);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& p, std::size_t var);

/// Pseudo-remainder of a by b with respect to `var`; requires b to involve var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// One piece of a denominator split.
struct DenominatorFactor {
  MultiPoly factor;       // leading coefficient 1
  bool certified_prime;   // total degree 1, hence irreducible
};

struct DenominatorSplit {
  bool squarefree = true;
  /// Pairwise coprime factors whose product is the input up to a scalar.
  /// Filled only when `squarefree` holds.
  std::vector<DenominatorFactor> factors;
};

/// Splits a nonzero polynomial into pairwise coprime squarefree pieces using
/// content extraction in every variable and gcd with partial derivatives.
/// No factorization beyond that is attempted; pieces of total degree 1 are
/// flagged as certified primes.
DenominatorSplit split_denominator(const MultiPoly& d);

}  // namespace flagorder
