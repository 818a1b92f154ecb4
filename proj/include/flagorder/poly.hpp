#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagorder/rational.hpp"
#include "flagorder/varlist.hpp"

namespace flagorder {

/// Exponent vector; its length equals the size of the owning VarList.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, first declared variable most significant.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Rat coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exps == b.exps && a.coeff == b.coeff;
  }
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are stored in strictly decreasing grlex order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarList vars, const Rat& c);
  static MultiPoly variable(VarList vars, std::size_t index);
  static MultiPoly variable(VarList vars, std::string_view name);
  static MultiPoly monomial(VarList vars, Exponents exps, const Rat& c = 1);
  /// Sorts and merges; zero coefficients are dropped.
  static MultiPoly from_terms(VarList vars, std::vector<Term> terms);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rat constant_term() const;
  Rat coefficient(const Exponents& e) const;

  /// Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Rat& leading_coeff() const { return terms_.front().coeff; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  std::vector<bool> used_variables() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;
  /// Scaled to leading coefficient 1; zero stays zero.
  MultiPoly monic() const;
  /// Scaled to integer coefficients with content 1 and positive leading
  /// coefficient.
  MultiPoly integer_primitive() const;

  /// Ring homomorphism x_i -> images[i]; every image lives over `target`.
  MultiPoly substitute(const std::vector<MultiPoly>& images, const VarList& target) const;
  /// Reinterprets this polynomial over a superset variable list.
  MultiPoly embed(const VarList& superset) const;

  /// Coefficients with respect to one variable: result[k] multiplies var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(VarList vars, std::size_t var,
                                     const std::vector<MultiPoly>& coeffs);

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  VarList vars_;
  std::vector<Term> terms_;
};

/// Throws AlignmentError unless both polynomials share one variable list.
void require_same_vars(const VarList& a, const VarList& b);

/// Total order on polynomials: compares term lists in grlex order. Used to
/// pick deterministic witnesses.
bool poly_less(const MultiPoly& a, const MultiPoly& b);

/// Exact quotient p / q, or nullopt if q does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// All monomials of total degree <= max_degree in enumeration order: by
/// degree ascending, then lexicographically with the first variable's
/// exponent largest first (1, x1, x2, ..., x1^2, x1*x2, ...).
std::vector<Exponents> monomials_up_to(std::size_t nvars, int max_degree);

std::string monomial_to_string(const VarList& vars, const Exponents& e);

}  // namespace flagorder
