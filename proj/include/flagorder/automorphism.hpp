#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagorder/poly.hpp"
#include "flagorder/ratfunc.hpp"

namespace flagorder {

/// Signed-affine substitution x_i -> s_i * x_{perm(i)} + t_i.
///
/// Covers permutations, sign flips and shifts, and every product of them.
/// The tuple (perm, signs, shifts) is the identity of the value: two
/// automorphisms are equal iff they act identically on the variables.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(std::vector<std::size_t> perm, std::vector<int> signs, std::vector<Rat> shifts);

  static Automorphism identity(std::size_t n);
  /// x_i -> x_{images[i]}.
  static Automorphism permutation(std::vector<std::size_t> images);
  /// Zero-based cycle (a b c): x_a -> x_b -> x_c -> x_a.
  static Automorphism cycle(std::size_t n, const std::vector<std::size_t>& entries);
  static Automorphism transposition(std::size_t n, std::size_t i, std::size_t j);
  static Automorphism sign_flip(std::size_t n, std::size_t i);
  static Automorphism shift(std::size_t n, std::size_t i, const Rat& t);

  std::size_t size() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  const std::vector<Rat>& shifts() const { return shifts_; }

  bool is_identity() const;
  /// No shifts.
  bool is_signed_permutation() const;
  /// Identity permutation, all signs +1.
  bool is_pure_shift() const;

  /// (*this) o w, i.e. apply w first: (v o w)(f) = v(w(f)).
  Automorphism compose(const Automorphism& w) const;
  Automorphism inverse() const;

  /// Splits a = w o mu with w a signed permutation and mu a pure shift.
  Automorphism signed_part() const;
  Automorphism shift_part() const;

  MultiPoly image_of_variable(std::size_t i, const VarList& vars) const;
  MultiPoly apply(const MultiPoly& p) const;
  RatFunc apply(const RatFunc& f) const;

  /// Product of atoms accepted by the parser, e.g. "perm(1 2)*shift(x1:-1)";
  /// "id" for the identity.
  std::string to_string(const VarList& vars) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.perm_ == b.perm_ && a.signs_ == b.signs_ && a.shifts_ == b.shifts_;
  }
  friend bool operator<(const Automorphism& a, const Automorphism& b);

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
  std::vector<Rat> shifts_;
};

inline Automorphism auto_compose(const Automorphism& v, const Automorphism& w) {
  return v.compose(w);
}
inline Automorphism auto_inverse(const Automorphism& w) { return w.inverse(); }
inline RatFunc auto_apply(const Automorphism& w, const RatFunc& f) { return w.apply(f); }

/// Extends an automorphism of `from` variables to `to` (a superset), acting
/// as the identity on the added variables.
Automorphism extend_automorphism(const Automorphism& a, const VarList& from, const VarList& to);

}  // namespace flagorder
