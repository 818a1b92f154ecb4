#pragma once

#include <cstddef>

#include "flagorder/flag_data.hpp"
#include "flagorder/membership.hpp"
#include "flagorder/skew.hpp"

namespace flagorder {

/// Divided difference 1/(x_b - x_a) ((a b) - 1) for zero-based variable
/// indices a, b. Throws InvalidGeneratorError if (a b) is not in W.
SkewElement divided_difference(std::size_t a, std::size_t b, const FlagData& data);

/// Demazure operator d_i = 1/(x_{i+1} - x_i) ((i, i+1) - 1), one-based i.
SkewElement demazure(std::size_t i, const FlagData& data);

/// e = (1/#W) sum_{w in W} w.
SkewElement symmetrizer(const FlagData& data);

/// Average of a over the orbit of W.
RatFunc reynolds(const RatFunc& a, const FlagData& data);

/// e X e.
SkewElement spherical_project(const SkewElement& x, const FlagData& data);

/// Y = e X e maps W-invariants to W-invariant polynomials: Y(reynolds(m)) is
/// a polynomial fixed by every generator of W, for every monomial m of
/// degree <= degree_bound. The witness is the offending monomial m.
MembershipVerdict check_spherical(const SkewElement& x, const FlagData& data, int degree_bound);

}  // namespace flagorder
