#pragma once

#include <map>

#include "flagorder/poly.hpp"

namespace flagorder {

/// Incremental row echelon form of polynomials viewed as coefficient vectors
/// over the monomial basis. Used for bounded linear-independence and span
/// checks.
class PolyEchelon {
 public:
  /// Reduces p against the stored rows; zero iff p lies in their span.
  MultiPoly reduce(const MultiPoly& p) const;
  /// Adds p; false (and nothing stored) if p is already in the span.
  bool insert(const MultiPoly& p);
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Greater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
  };
  std::map<Exponents, MultiPoly, Greater> rows_;
};

}  // namespace flagorder
