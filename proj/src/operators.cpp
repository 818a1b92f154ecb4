#include "flagorder/operators.hpp"

#include "flagorder/errors.hpp"

namespace flagorder {

SkewElement divided_difference(std::size_t a, std::size_t b, const FlagData& data) {
  const VarList& vars = data.vars();
  const std::size_t n = vars.size();
  if (a >= n || b >= n || a == b) throw InvalidGeneratorError("variable index out of range");
  const Automorphism t = Automorphism::transposition(n, a, b);
  if (!data.in_group(t)) {
    throw InvalidGeneratorError("transposition (" + vars[a] + " " + vars[b] + ") is not in W");
  }
  const MultiPoly diff = MultiPoly::variable(vars, b) - MultiPoly::variable(vars, a);
  const RatFunc c(MultiPoly::constant(vars, 1), diff);
  return SkewElement::term(c, t) - SkewElement::scalar(c);
}

SkewElement demazure(std::size_t i, const FlagData& data) {
  if (i < 1 || i >= data.nvars()) {
    throw InvalidGeneratorError("demazure index " + std::to_string(i) + " out of range");
  }
  return divided_difference(i - 1, i, data);
}

SkewElement symmetrizer(const FlagData& data) {
  const auto& group = data.group();
  const RatFunc c = RatFunc::constant(data.vars(), Rat(1, static_cast<long>(group.size())));
  SkewElement e(data.vars());
  for (const auto& w : group) e += SkewElement::term(c, w);
  return e;
}

RatFunc reynolds(const RatFunc& a, const FlagData& data) {
  return evaluate(symmetrizer(data), a);
}

SkewElement spherical_project(const SkewElement& x, const FlagData& data) {
  const SkewElement e = symmetrizer(data);
  return e * x * e;
}

MembershipVerdict check_spherical(const SkewElement& x, const FlagData& data, int degree_bound) {
  if (degree_bound < 1) throw Error("degree bound must be at least 1");
  const SkewElement y = spherical_project(x, data);
  const SkewElement e = symmetrizer(data);
  const VarList& vars = data.vars();
  MembershipVerdict v;
  v.mode = MembershipMode::degree_bounded;
  v.degree_bound = degree_bound;
  for (const auto& exps : monomials_up_to(vars.size(), degree_bound)) {
    const MultiPoly m = MultiPoly::monomial(vars, exps);
    const RatFunc img = evaluate(y, evaluate(e, RatFunc(m)));
    bool ok = img.is_polynomial();
    for (const auto& g : data.w_gens()) {
      if (!ok) break;
      ok = g.apply(img) == img;
    }
    if (!ok) {
      v.status = MemberStatus::non_member;
      v.witness = m;
      return v;
    }
  }
  v.status = MemberStatus::member_up_to_degree;
  return v;
}

}  // namespace flagorder
