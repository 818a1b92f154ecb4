#include "flagorder/skew.hpp"

#include <set>

#include "flagorder/errors.hpp"

namespace flagorder {

SkewElement SkewElement::one(VarList vars) {
  const std::size_t n = vars.size();
  return term(RatFunc::constant(vars, 1), Automorphism::identity(n));
}

SkewElement SkewElement::scalar(const RatFunc& f) {
  return term(f, Automorphism::identity(f.vars().size()));
}

SkewElement SkewElement::term(const RatFunc& f, const Automorphism& w) {
  if (w.size() != f.vars().size()) throw AlignmentError("automorphism arity does not match");
  SkewElement x(f.vars());
  x.add_term(w, f);
  return x;
}

SkewElement SkewElement::group_element(VarList vars, const Automorphism& w) {
  return term(RatFunc::constant(vars, 1), w);
}

bool SkewElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity());
}

RatFunc SkewElement::coefficient(const Automorphism& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc(vars_) : it->second;
}

void SkewElement::add_term(const Automorphism& w, const RatFunc& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkewElement SkewElement::operator-() const {
  SkewElement r = *this;
  for (auto& [w, f] : r.terms_) f = -f;
  return r;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [w, f] : o.terms_) add_term(w, f);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [w, f] : o.terms_) add_term(w, -f);
  return *this;
}

SkewElement operator*(const SkewElement& x, const SkewElement& y) {
  require_same_vars(x.vars_, y.vars_);
  SkewElement r(x.vars_);
  for (const auto& [v, f] : x.terms_) {
    for (const auto& [w, g] : y.terms_) {
      r.add_term(v.compose(w), f * v.apply(g));
    }
  }
  return r;
}

SkewElement operator*(const RatFunc& f, const SkewElement& x) {
  require_same_vars(f.vars(), x.vars_);
  SkewElement r(x.vars_);
  for (const auto& [w, g] : x.terms_) r.add_term(w, f * g);
  return r;
}

std::string SkewElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, f] : terms_) {
    if (!first) out += " + ";
    first = false;
    const std::string a = w.to_string(vars_);
    if (f == RatFunc::constant(vars_, 1)) {
      out += a;
    } else {
      out += "(" + f.to_string() + ")*" + a;
    }
  }
  return out;
}

std::vector<Automorphism> support(const SkewElement& x) {
  std::vector<Automorphism> out;
  out.reserve(x.terms().size());
  for (const auto& [w, f] : x.terms()) out.push_back(w);
  return out;
}

RatFunc evaluate(const SkewElement& x, const RatFunc& a) {
  require_same_vars(x.vars(), a.vars());
  RatFunc sum(x.vars());
  for (const auto& [w, f] : x.terms()) sum += f * w.apply(a);
  return sum;
}

RatFunc coevaluate(const SkewElement& x, const RatFunc& a) {
  require_same_vars(x.vars(), a.vars());
  RatFunc sum(x.vars());
  for (const auto& [w, f] : x.terms()) {
    const Automorphism inv = w.inverse();
    sum += inv.apply(f) * inv.apply(a);
  }
  return sum;
}

std::map<Automorphism, RatFunc> to_right_coefficients(const SkewElement& x) {
  std::map<Automorphism, RatFunc> out;
  for (const auto& [w, f] : x.terms()) out.emplace(w, w.inverse().apply(f));
  return out;
}

SkewElement from_right_coefficients(const VarList& vars,
                                    const std::map<Automorphism, RatFunc>& alphas) {
  SkewElement r(vars);
  for (const auto& [w, alpha] : alphas) r += SkewElement::term(w.apply(alpha), w);
  return r;
}

SkewElement formal_transpose(const SkewElement& x) {
  SkewElement r(x.vars());
  for (const auto& [w, alpha] : to_right_coefficients(x)) r += SkewElement::term(alpha, w.inverse());
  return r;
}

SkewElement embed(const SkewElement& x, const VarList& superset) {
  SkewElement r(superset);
  for (const auto& [w, f] : x.terms()) {
    r += SkewElement::term(f.embed(superset), extend_automorphism(w, x.vars(), superset));
  }
  return r;
}

GenerationReport supports_generate_monoid(const std::vector<SkewElement>& elems,
                                          const FlagData& data, int word_len) {
  if (word_len < 1) throw Error("word length must be at least 1");
  data.require_semidirect();
  GenerationReport r;
  r.word_len = word_len;
  std::set<Automorphism> letters;
  for (const auto& x : elems) {
    require_same_vars(x.vars(), data.vars());
    for (const auto& [w, f] : x.terms()) {
      Automorphism mu = w.shift_part();
      if (!mu.is_identity()) letters.insert(std::move(mu));
    }
  }
  const auto targets = bounded_words(data.nvars(), data.monoid_letters(), word_len);
  const auto reach_vec = bounded_words(data.nvars(), {letters.begin(), letters.end()}, word_len);
  const std::set<Automorphism> reach(reach_vec.begin(), reach_vec.end());
  for (const auto& t : targets) {
    if (!reach.count(t)) r.missing.push_back(t);
  }
  r.pass = r.missing.empty();
  return r;
}

}  // namespace flagorder
