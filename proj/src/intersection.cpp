#include "flagorder/intersection.hpp"

#include "flagorder/echelon.hpp"
#include "flagorder/errors.hpp"

namespace flagorder {

namespace {

HypothesisCheck check_decomposition(const Morphism& m, const IdealReducer& red, int degree_bound) {
  HypothesisCheck h{"decomposition", true, {}};
  const VarList& src = m.source.vars();
  const VarList& tgt = m.target.vars();
  PolyEchelon ech;
  for (const auto& e : monomials_up_to(src.size(), degree_bound)) {
    const MultiPoly image = MultiPoly::monomial(src, e).substitute(m.phi, tgt);
    if (!ech.insert(red.remainder(image))) {
      h.pass = false;
      h.witnesses.push_back("phi(" + monomial_to_string(src, e) + ") is not independent of I");
    }
  }
  for (const auto& e : monomials_up_to(tgt.size(), degree_bound)) {
    const MultiPoly t = MultiPoly::monomial(tgt, e);
    if (!ech.reduce(red.remainder(t)).is_zero()) {
      h.pass = false;
      h.witnesses.push_back(t.to_string() + " is not in phi(L1) + I");
    }
  }
  return h;
}

HypothesisCheck check_ideal_invariance(const Morphism& m, const IdealSpec& ideal) {
  HypothesisCheck h{"ideal_invariance", true, {}};
  std::vector<Automorphism> gens = m.psi_w;
  gens.insert(gens.end(), m.psi_m.begin(), m.psi_m.end());
  for (const auto& g : gens) {
    for (const auto& a : ideal.generators) {
      if (!(g.apply(a) == a)) {
        h.pass = false;
        h.witnesses.push_back(g.to_string(m.target.vars()) + " maps " + a.to_string() + " to " +
                              g.apply(a).to_string());
      }
    }
  }
  return h;
}

HypothesisCheck check_compatibility(const Morphism& m) {
  HypothesisCheck h{"compatibility", true, {}};
  const MorphismReport rep =
      check_morphism(m.source, m.target, m.phi, m.psi_w, m.psi_m, std::nullopt);
  h.pass = rep.pass;
  h.witnesses = rep.violations;
  return h;
}

}  // namespace

IntersectionReport check_intersection(const Morphism& m, const IdealSpec& ideal,
                                      const std::vector<SkewElement>& samples, int degree_bound) {
  ideal.validate();
  require_same_vars(ideal.vars(), m.target.vars());
  const IdealReducer red(ideal);
  IntersectionReport r;
  r.degree_bound = degree_bound;
  r.hypotheses.push_back(check_decomposition(m, red, degree_bound));
  r.hypotheses.push_back(check_ideal_invariance(m, ideal));
  r.hypotheses.push_back(check_compatibility(m));
  for (const auto& h : r.hypotheses) r.pass = r.pass && h.pass;

  for (const auto& x : samples) {
    SampleOutcome s;
    s.element = x.to_string();
    const MembershipVerdict a = member_standard(x, m.source, degree_bound);
    const MembershipVerdict b = member_standard(apply_morphism(m, x), m.target, degree_bound);
    s.source_member = a.holds();
    s.target_member = b.holds();
    if (a.witness) s.witness = a.witness->to_string();
    else if (b.witness) s.witness = b.witness->to_string();
    if (s.source_member != s.target_member) {
      r.counterexamples.push_back(s.element);
      r.pass = false;
    }
    r.samples.push_back(std::move(s));
  }
  return r;
}

QuotientEmbeddingReport check_quotient_embedding(const Morphism& m, const IdealSpec& ideal,
                                                 const std::vector<SkewElement>& samples,
                                                 int degree_bound) {
  ideal.validate();
  const IdealReducer red(ideal);
  QuotientEmbeddingReport r;
  r.degree_bound = degree_bound;
  const VarList& src = m.source.vars();
  const VarList& tgt = m.target.vars();

  std::vector<SkewElement> members;
  std::vector<SkewElement> images;
  for (const auto& x : samples) {
    if (!member_standard(x, m.source, degree_bound).holds()) continue;
    const SkewElement y = apply_morphism(m, x);
    if (!member_fixes_ideal(y, ideal, m.target, degree_bound).holds()) {
      r.not_fixing.push_back(x.to_string());
      continue;
    }
    for (const auto& e : monomials_up_to(src.size(), degree_bound)) {
      const RatFunc a(MultiPoly::monomial(src, e));
      const RatFunc lhs = evaluate(y, apply_phi(m, a));
      const RatFunc rhs = apply_phi(m, evaluate(x, a));
      const RatFunc d = lhs - rhs;
      if (!d.is_polynomial() || !red.contains(d.as_polynomial())) {
        r.action_mismatch.push_back(x.to_string() + " at " + monomial_to_string(src, e));
        break;
      }
    }
    members.push_back(x);
    images.push_back(y);
  }

  // Class of Phi(X) in the quotient, read off from its action on L2 / I.
  std::vector<std::vector<MultiPoly>> signatures;
  for (const auto& y : images) {
    std::vector<MultiPoly> sig;
    for (const auto& e : monomials_up_to(tgt.size(), degree_bound)) {
      const RatFunc v = evaluate(y, RatFunc(MultiPoly::monomial(tgt, e)));
      sig.push_back(v.is_polynomial() ? red.remainder(v.as_polynomial()) : v.num());
    }
    signatures.push_back(std::move(sig));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const bool same_source = members[i] == members[j];
      const bool same_class = signatures[i] == signatures[j];
      if (same_source != same_class) {
        r.class_mismatch.push_back(members[i].to_string() + " vs " + members[j].to_string());
      }
    }
    if (i + 1 < members.size()) {
      const QuotientVerdict q =
          quotient_class_eq(images[i], images[i + 1], ideal, m.target, degree_bound);
      const bool eq = q.status != ClassEquality::not_equal;
      if (eq != (signatures[i] == signatures[i + 1])) {
        r.class_mismatch.push_back("quotient_class_eq disagrees on " + members[i].to_string() +
                                   " vs " + members[i + 1].to_string());
      }
    }
  }
  r.pass = r.not_fixing.empty() && r.action_mismatch.empty() && r.class_mismatch.empty();
  return r;
}

}  // namespace flagorder
