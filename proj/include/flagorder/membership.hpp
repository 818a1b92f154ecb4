#pragma once

#include <optional>
#include <string>

#include "flagorder/flag_data.hpp"
#include "flagorder/ideal.hpp"
#include "flagorder/skew.hpp"

namespace flagorder {

inline constexpr int kDefaultDegreeBound = 6;

enum class MemberStatus { member, non_member, member_up_to_degree };
enum class MembershipMode { exact_squarefree, degree_bounded };
/// `exact` tries the residue-class criterion first and falls back to the
/// degree sweep when it does not apply; `bounded` goes straight to the sweep.
enum class ModeRequest { exact, bounded };

std::string to_string(MemberStatus s);
std::string to_string(MembershipMode m);

struct MembershipVerdict {
  MemberStatus status = MemberStatus::member;
  MembershipMode mode = MembershipMode::exact_squarefree;
  int degree_bound = 0;
  /// Present iff status is non_member: an input a with X(a) outside the
  /// target (Lambda, or the ideal).
  std::optional<MultiPoly> witness;
  std::string note;

  bool holds() const { return status != MemberStatus::non_member; }
};

/// X in F_Lambda, i.e. X(Lambda) in Lambda.
///
/// Exact mode applies when the least common denominator D of the
/// coefficients is squarefree: for every prime factor p of D the support is
/// grouped into classes of automorphisms that agree modulo p, and X is a
/// member iff every class sum of D-scaled coefficients vanishes modulo p.
/// Otherwise X is evaluated on every monomial of degree <= degree_bound;
/// a failure there is conclusive.
///
/// Throws DomainError if the support leaves W^ = W x| M.
MembershipVerdict member_standard(const SkewElement& x, const FlagData& data, int degree_bound,
                                  ModeRequest mode = ModeRequest::exact);

/// X in F_Lambda[I]: X(I) in I. Tested on g*m for every generator g and
/// monomial m of degree <= degree_bound. Only a polynomial multiple of the
/// identity is an exact member; the note says "heuristic" when the ideal
/// basis is not known to decide membership.
MembershipVerdict member_fixes_ideal(const SkewElement& x, const IdealSpec& ideal,
                                     const FlagData& data, int degree_bound);

/// X in I F_Lambda: X(Lambda) in I.
MembershipVerdict member_into_ideal(const SkewElement& x, const IdealSpec& ideal,
                                    const FlagData& data, int degree_bound);

enum class ClassEquality { equal, equal_up_to_degree, not_equal };
std::string to_string(ClassEquality c);

struct QuotientVerdict {
  ClassEquality status = ClassEquality::equal;
  int degree_bound = 0;
  std::optional<MultiPoly> witness;
  std::string note;
};

/// Compares the classes of X and Y in F_Lambda[I] / I F_Lambda through their
/// action on Lambda / I: equal iff (X - Y)(m) in I for every tested monomial.
/// Throws DomainError if X or Y does not fix I at the bound.
QuotientVerdict quotient_class_eq(const SkewElement& x, const SkewElement& y,
                                  const IdealSpec& ideal, const FlagData& data, int degree_bound);

/// Ensures the support lies in W^ generated by the data; throws DomainError.
void require_support_in_hat(const SkewElement& x, const FlagData& data);

}  // namespace flagorder
