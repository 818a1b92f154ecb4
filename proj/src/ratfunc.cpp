#include "flagorder/ratfunc.hpp"

#include "flagorder/errors.hpp"
#include "flagorder/gcd.hpp"

namespace flagorder {

namespace {

MultiPoly quotient(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_constant()) return p * (1 / q.leading_coeff());
  auto r = divide_exact(p, q);
  if (!r) throw Error("internal: expected exact division failed");
  return *r;
}

}  // namespace

RatFunc::RatFunc(VarList vars) : num_(vars), den_(MultiPoly::constant(vars, 1)) {}

RatFunc::RatFunc(MultiPoly p) : num_(std::move(p)) {
  den_ = MultiPoly::constant(num_.vars(), 1);
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_vars(num_.vars(), den_.vars());
  if (den_.is_zero()) throw ZeroDivisorError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.vars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = quotient(num_, g);
      den_ = quotient(den_, g);
    }
  }
  normalize_leading();
}

RatFunc RatFunc::constant(VarList vars, const Rat& c) {
  return RatFunc(MultiPoly::constant(std::move(vars), c));
}

RatFunc RatFunc::from_coprime(MultiPoly num, MultiPoly den) {
  RatFunc f;
  require_same_vars(num.vars(), den.vars());
  if (den.is_zero()) throw ZeroDivisorError("rational function with zero denominator");
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  if (f.num_.is_zero()) f.den_ = MultiPoly::constant(f.num_.vars(), 1);
  f.normalize_leading();
  return f;
}

void RatFunc::normalize_leading() {
  const Rat lc = den_.leading_coeff();
  if (lc != 1) {
    const Rat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

MultiPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw DomainError("rational function is not a polynomial");
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDivisorError("inverse of the zero rational function");
  return from_coprime(den_, num_);
}

namespace {

// Henrici: with g = gcd(d1, d2), the sum n1*(d2/g) + n2*(d1/g) over
// d1*(d2/g) can only share factors with g.
RatFunc add_impl(const RatFunc& f, const RatFunc& g, bool subtract) {
  require_same_vars(f.vars(), g.vars());
  const MultiPoly& gn = g.num();
  if (f.is_zero()) return subtract ? -g : g;
  if (g.is_zero()) return f;
  if (f.den() == g.den()) {
    MultiPoly n = subtract ? f.num() - gn : f.num() + gn;
    return RatFunc(std::move(n), f.den());
  }
  if (f.den().is_constant() && g.den().is_constant()) {
    MultiPoly n = subtract ? f.num() - gn : f.num() + gn;
    return RatFunc::from_coprime(std::move(n), MultiPoly::constant(f.vars(), 1));
  }
  const MultiPoly gg = poly_gcd(f.den(), g.den());
  const MultiPoly d1 = quotient(f.den(), gg);
  const MultiPoly d2 = quotient(g.den(), gg);
  MultiPoly n = subtract ? f.num() * d2 - gn * d1 : f.num() * d2 + gn * d1;
  MultiPoly d = f.den() * d2;
  if (n.is_zero()) return RatFunc(f.vars());
  if (!gg.is_constant()) {
    MultiPoly h = poly_gcd(n, gg);
    if (!h.is_constant()) {
      n = quotient(n, h);
      d = quotient(d, h);
    }
  }
  return RatFunc::from_coprime(std::move(n), std::move(d));
}

}  // namespace

RatFunc operator+(const RatFunc& f, const RatFunc& g) { return add_impl(f, g, false); }
RatFunc operator-(const RatFunc& f, const RatFunc& g) { return add_impl(f, g, true); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  require_same_vars(f.vars(), g.vars());
  if (f.is_zero() || g.is_zero()) return RatFunc(f.vars());
  if (f.is_polynomial() && g.is_polynomial()) {
    return RatFunc::from_coprime(f.num() * g.num(), MultiPoly::constant(f.vars(), 1));
  }
  // gcd(n1, d2) and gcd(n2, d1) are the only possible cancellations.
  MultiPoly n1 = f.num();
  MultiPoly d1 = f.den();
  MultiPoly n2 = g.num();
  MultiPoly d2 = g.den();
  if (!d2.is_constant() && !n1.is_constant()) {
    MultiPoly h = poly_gcd(n1, d2);
    if (!h.is_constant()) {
      n1 = quotient(n1, h);
      d2 = quotient(d2, h);
    }
  }
  if (!d1.is_constant() && !n2.is_constant()) {
    MultiPoly h = poly_gcd(n2, d1);
    if (!h.is_constant()) {
      n2 = quotient(n2, h);
      d1 = quotient(d1, h);
    }
  }
  return RatFunc::from_coprime(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) throw ZeroDivisorError("division by the zero rational function");
  return f * g.inverse();
}

RatFunc RatFunc::substitute(const std::vector<MultiPoly>& images, const VarList& target) const {
  MultiPoly n = num_.substitute(images, target);
  MultiPoly d = den_.substitute(images, target);
  if (d.is_zero()) throw ZeroDivisorError("substitution sends the denominator to zero");
  return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::embed(const VarList& superset) const {
  return from_coprime(num_.embed(superset), den_.embed(superset));
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool ratfunc_eq(const RatFunc& f, const RatFunc& g) {
  require_same_vars(f.vars(), g.vars());
  return f.num() * g.den() == g.num() * f.den();
}

RatFunc canonicalize(const RatFunc& f) { return RatFunc(f.num(), f.den()); }

}  // namespace flagorder
