#pragma once

#include <string>

#include "flagorder/poly.hpp"

namespace flagorder {

/// Element of Frac(Q[x1..xn]) in canonical form: gcd(num, den) = 1 and den
/// has leading coefficient 1 under grlex. Canonical form makes structural
/// equality decide equality.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(VarList vars);
  /// Polynomial embedded as p/1.
  RatFunc(MultiPoly p);  // NOLINT(google-explicit-constructor)
  /// Canonicalizes; throws ZeroDivisorError on a zero denominator.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(VarList vars, const Rat& c);
  /// Skips the gcd: caller guarantees num and den are coprime.
  static RatFunc from_coprime(MultiPoly num, MultiPoly den);

  const VarList& vars() const { return num_.vars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_polynomial().
  MultiPoly as_polynomial() const;

  RatFunc operator-() const;
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  RatFunc& operator+=(const RatFunc& g) { return *this = *this + g; }
  RatFunc& operator-=(const RatFunc& g) { return *this = *this - g; }
  RatFunc& operator*=(const RatFunc& g) { return *this = *this * g; }

  /// Ring homomorphism on numerator and denominator (images over `target`).
  RatFunc substitute(const std::vector<MultiPoly>& images, const VarList& target) const;
  RatFunc embed(const VarList& superset) const;

  /// "num" or "(num)/(den)".
  std::string to_string() const;

  /// Structural equality of canonical forms.
  friend bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

 private:
  void normalize_leading();

  MultiPoly num_;
  MultiPoly den_;
};

/// Equality by cross-multiplication, independent of canonical forms.
bool ratfunc_eq(const RatFunc& f, const RatFunc& g);

/// Re-runs canonicalization from scratch (gcd of num and den).
RatFunc canonicalize(const RatFunc& f);

}  // namespace flagorder
