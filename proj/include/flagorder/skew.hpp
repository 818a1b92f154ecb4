#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagorder/automorphism.hpp"
#include "flagorder/flag_data.hpp"
#include "flagorder/ratfunc.hpp"

namespace flagorder {

/// Finite sum  sum_w f_w * w  in Frac(Lambda) # W^, left coefficients.
///
/// Zero coefficients are pruned after every operation, so the key set of
/// terms() is exactly the support.
class SkewElement {
 public:
  SkewElement() = default;
  explicit SkewElement(VarList vars) : vars_(std::move(vars)) {}

  static SkewElement one(VarList vars);
  /// f * id.
  static SkewElement scalar(const RatFunc& f);
  /// f * w.
  static SkewElement term(const RatFunc& f, const Automorphism& w);
  /// 1 * w.
  static SkewElement group_element(VarList vars, const Automorphism& w);

  const VarList& vars() const { return vars_; }
  const std::map<Automorphism, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Support is {id} (or empty).
  bool is_scalar() const;
  RatFunc coefficient(const Automorphism& w) const;

  SkewElement operator-() const;
  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  /// Skew multiplication (a1 m1)(a2 m2) = a1 m1(a2) (m1 m2).
  friend SkewElement operator*(const SkewElement& x, const SkewElement& y);
  /// Left multiplication by a scalar f * X.
  friend SkewElement operator*(const RatFunc& f, const SkewElement& x);

  /// Reparsable text: terms print as "(coeff)*auto" joined by " + ", unit
  /// coefficients omitted.
  std::string to_string() const;

  friend bool operator==(const SkewElement& a, const SkewElement& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Automorphism& w, const RatFunc& f);

  VarList vars_;
  std::map<Automorphism, RatFunc> terms_;
};

inline SkewElement skew_mul(const SkewElement& x, const SkewElement& y) { return x * y; }

/// Automorphisms with nonzero coefficient, in key order.
std::vector<Automorphism> support(const SkewElement& x);

/// X(a) = sum_w f_w * w(a).
RatFunc evaluate(const SkewElement& x, const RatFunc& a);

/// X^dagger(a) = sum_w alpha_w * w^{-1}(a) with right coefficients
/// alpha_w = w^{-1}(f_w).
RatFunc coevaluate(const SkewElement& x, const RatFunc& a);

/// Right-coefficient form: X = sum_w w * alpha_w.
std::map<Automorphism, RatFunc> to_right_coefficients(const SkewElement& x);
SkewElement from_right_coefficients(const VarList& vars,
                                    const std::map<Automorphism, RatFunc>& alphas);

/// sum_w alpha_w * w^{-1}; its evaluation is the co-evaluation of X.
SkewElement formal_transpose(const SkewElement& x);

/// Reinterprets X over a superset of its variables; automorphisms act as the
/// identity on the new variables.
SkewElement embed(const SkewElement& x, const VarList& superset);

struct GenerationReport {
  bool pass = true;
  int word_len = 0;
  std::vector<Automorphism> missing;
};

/// Whether the M-parts of the supports of `elems` generate, as a monoid, every
/// M-word of length at most `word_len`. Requires semidirect data.
GenerationReport supports_generate_monoid(const std::vector<SkewElement>& elems,
                                          const FlagData& data, int word_len);

}  // namespace flagorder
