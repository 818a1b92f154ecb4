#include "flagorder/membership.hpp"

#include <algorithm>

#include "flagorder/errors.hpp"
#include "flagorder/gcd.hpp"

namespace flagorder {

std::string to_string(MemberStatus s) {
  switch (s) {
    case MemberStatus::member: return "member";
    case MemberStatus::non_member: return "non_member";
    case MemberStatus::member_up_to_degree: return "member_up_to_degree";
  }
  return "?";
}

std::string to_string(MembershipMode m) {
  return m == MembershipMode::exact_squarefree ? "exact_squarefree" : "degree_bounded";
}

std::string to_string(ClassEquality c) {
  switch (c) {
    case ClassEquality::equal: return "equal";
    case ClassEquality::equal_up_to_degree: return "equal_up_to_degree";
    case ClassEquality::not_equal: return "not_equal";
  }
  return "?";
}

void require_support_in_hat(const SkewElement& x, const FlagData& data) {
  require_same_vars(x.vars(), data.vars());
  for (const auto& [w, f] : x.terms()) {
    if (!data.in_hat(w)) {
      throw DomainError("support element " + w.to_string(x.vars()) + " is not in the group W^");
    }
  }
}

namespace {

// X written as (1/D) * sum_w g_w * w with polynomial g_w.
struct Cleared {
  MultiPoly denom;
  std::vector<std::pair<Automorphism, MultiPoly>> terms;
};

Cleared clear_denominators(const SkewElement& x) {
  Cleared c;
  c.denom = MultiPoly::constant(x.vars(), 1);
  for (const auto& [w, f] : x.terms()) c.denom = poly_lcm(c.denom, f.den());
  for (const auto& [w, f] : x.terms()) {
    c.terms.emplace_back(w, f.num() * *divide_exact(c.denom, f.den()));
  }
  return c;
}

MultiPoly apply_cleared(const Cleared& c, const MultiPoly& a) {
  MultiPoly h(a.vars());
  for (const auto& [w, g] : c.terms) h += g * w.apply(a);
  return h;
}

bool maps_into_lambda(const Cleared& c, const MultiPoly& a) {
  return divide_exact(apply_cleared(c, a), c.denom).has_value();
}

std::optional<MultiPoly> first_failure(const Cleared& c, const VarList& vars, int from_degree,
                                       int to_degree) {
  for (const auto& e : monomials_up_to(vars.size(), to_degree)) {
    if (total_degree(e) < from_degree) continue;
    MultiPoly m = MultiPoly::monomial(vars, e);
    if (!maps_into_lambda(c, m)) return m;
  }
  return std::nullopt;
}

MembershipVerdict bounded_verdict(const Cleared& c, const VarList& vars, int degree_bound) {
  MembershipVerdict v;
  v.mode = MembershipMode::degree_bounded;
  v.degree_bound = degree_bound;
  if (auto w = first_failure(c, vars, 0, degree_bound)) {
    v.status = MemberStatus::non_member;
    v.witness = std::move(*w);
  } else {
    v.status = MemberStatus::member_up_to_degree;
  }
  return v;
}

enum class ResidueOutcome { pass, fail };

ResidueOutcome residue_test(const Cleared& c, const MultiPoly& p) {
  const VarList& vars = p.vars();
  const std::size_t n = vars.size();
  // Class representatives by their images of the variables.
  std::vector<std::vector<MultiPoly>> reps;
  std::vector<MultiPoly> sums;
  for (const auto& [w, g] : c.terms) {
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(w.image_of_variable(i, vars));
    std::size_t k = 0;
    for (; k < reps.size(); ++k) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i) {
        same = divide_exact(images[i] - reps[k][i], p).has_value();
      }
      if (same) break;
    }
    if (k == reps.size()) {
      reps.push_back(std::move(images));
      sums.emplace_back(vars);
    }
    sums[k] += g;
  }
  for (const auto& s : sums) {
    if (!divide_exact(s, p)) return ResidueOutcome::fail;
  }
  return ResidueOutcome::pass;
}

}  // namespace

MembershipVerdict member_standard(const SkewElement& x, const FlagData& data, int degree_bound,
                                  ModeRequest mode) {
  if (degree_bound < 1) throw Error("degree bound must be at least 1");
  require_support_in_hat(x, data);
  const Cleared c = clear_denominators(x);
  const VarList& vars = x.vars();

  if (mode == ModeRequest::bounded) return bounded_verdict(c, vars, degree_bound);

  MembershipVerdict v;
  v.mode = MembershipMode::exact_squarefree;
  v.degree_bound = degree_bound;
  if (c.denom.is_constant()) {
    v.status = MemberStatus::member;
    return v;
  }
  const DenominatorSplit split = split_denominator(c.denom);
  if (!split.squarefree) {
    MembershipVerdict b = bounded_verdict(c, vars, degree_bound);
    b.note = "denominator is not squarefree; degree-bounded check";
    return b;
  }
  bool failed_certified = false;
  for (const auto& piece : split.factors) {
    if (residue_test(c, piece.factor) == ResidueOutcome::pass) continue;
    if (!piece.certified_prime) {
      MembershipVerdict b = bounded_verdict(c, vars, degree_bound);
      b.note = "factor " + piece.factor.to_string() +
               " could not be split into primes; degree-bounded check";
      return b;
    }
    failed_certified = true;
    break;
  }
  if (!failed_certified) {
    v.status = MemberStatus::member;
    return v;
  }
  v.status = MemberStatus::non_member;
  const int reach = std::max<int>(degree_bound, static_cast<int>(c.terms.size()));
  for (int d = 0; d <= reach + 16; ++d) {
    if (auto w = first_failure(c, vars, d, d)) {
      v.witness = std::move(*w);
      return v;
    }
  }
  throw Error("residue criterion failed but no monomial witness was found");
}

namespace {

bool coefficients_in_ideal(const SkewElement& x, const IdealReducer& red) {
  for (const auto& [w, f] : x.terms()) {
    if (!f.is_polynomial() || !red.contains(f.as_polynomial())) return false;
  }
  return true;
}

std::string heuristic_note(const IdealReducer& red) {
  return red.exact() ? "" : "ideal basis is not known to be exact; membership is heuristic";
}

}  // namespace

MembershipVerdict member_fixes_ideal(const SkewElement& x, const IdealSpec& ideal,
                                     const FlagData& data, int degree_bound) {
  ideal.validate();
  require_same_vars(x.vars(), ideal.vars());
  MembershipVerdict base = member_standard(x, data, degree_bound);
  if (base.status == MemberStatus::non_member) {
    base.note = "not in the standard flag order";
    return base;
  }
  const IdealReducer red(ideal);
  MembershipVerdict v;
  v.degree_bound = degree_bound;
  v.note = heuristic_note(red);

  // A polynomial multiple of the identity fixes every ideal.
  if (x.is_scalar() && (x.is_zero() || x.terms().begin()->second.is_polynomial())) {
    v.status = MemberStatus::member;
    v.mode = MembershipMode::exact_squarefree;
    return v;
  }

  v.mode = MembershipMode::degree_bounded;
  const VarList& vars = x.vars();
  for (const auto& e : monomials_up_to(vars.size(), degree_bound)) {
    const MultiPoly m = MultiPoly::monomial(vars, e);
    for (const auto& g : ideal.generators) {
      const MultiPoly a = g * m;
      const RatFunc img = evaluate(x, RatFunc(a));
      if (!img.is_polynomial() || !red.contains(img.as_polynomial())) {
        v.status = MemberStatus::non_member;
        v.witness = a;
        return v;
      }
    }
  }
  v.status = MemberStatus::member_up_to_degree;
  return v;
}

MembershipVerdict member_into_ideal(const SkewElement& x, const IdealSpec& ideal,
                                    const FlagData& data, int degree_bound) {
  ideal.validate();
  require_same_vars(x.vars(), ideal.vars());
  MembershipVerdict base = member_standard(x, data, degree_bound);
  if (base.status == MemberStatus::non_member) {
    base.note = "not in the standard flag order";
    return base;
  }
  const IdealReducer red(ideal);
  MembershipVerdict v;
  v.degree_bound = degree_bound;
  v.note = heuristic_note(red);
  if (red.exact() && coefficients_in_ideal(x, red)) {
    v.status = MemberStatus::member;
    v.mode = MembershipMode::exact_squarefree;
    return v;
  }
  v.mode = MembershipMode::degree_bounded;
  const VarList& vars = x.vars();
  for (const auto& e : monomials_up_to(vars.size(), degree_bound)) {
    const MultiPoly m = MultiPoly::monomial(vars, e);
    const RatFunc img = evaluate(x, RatFunc(m));
    if (!img.is_polynomial() || !red.contains(img.as_polynomial())) {
      v.status = MemberStatus::non_member;
      v.witness = m;
      return v;
    }
  }
  v.status = MemberStatus::member_up_to_degree;
  return v;
}

QuotientVerdict quotient_class_eq(const SkewElement& x, const SkewElement& y,
                                  const IdealSpec& ideal, const FlagData& data, int degree_bound) {
  for (const SkewElement* z : {&x, &y}) {
    const MembershipVerdict f = member_fixes_ideal(*z, ideal, data, degree_bound);
    if (!f.holds()) {
      throw DomainError(z->to_string() + " does not fix the ideal " + ideal.to_string());
    }
  }
  QuotientVerdict q;
  q.degree_bound = degree_bound;
  if (x == y) {
    q.status = ClassEquality::equal;
    return q;
  }
  const SkewElement diff = x - y;
  const IdealReducer red(ideal);
  if (!red.exact()) q.note = heuristic_note(red);
  if (red.exact() && coefficients_in_ideal(diff, red)) {
    q.status = ClassEquality::equal;
    return q;
  }
  const VarList& vars = x.vars();
  for (const auto& e : monomials_up_to(vars.size(), degree_bound)) {
    const MultiPoly m = MultiPoly::monomial(vars, e);
    const RatFunc img = evaluate(diff, RatFunc(m));
    if (!img.is_polynomial() || !red.contains(img.as_polynomial())) {
      q.status = ClassEquality::not_equal;
      q.witness = m;
      return q;
    }
  }
  q.status = ClassEquality::equal_up_to_degree;
  return q;
}

}  // namespace flagorder
