#include <doctest.h>

#include "flagorder/errors.hpp"
#include "flagorder/gcd.hpp"
#include "support.hpp"

using namespace flagorder;
using testing_support::eval_at;
using testing_support::Random;
using testing_support::xs;

namespace {

MultiPoly P(const std::string& s, const VarList& v) { return parse_poly(s, v); }

}  // namespace

TEST_CASE("rationals normalize") {
  CHECK(make_rat(-3, 6) == make_rat(-1, 2));
  CHECK(parse_rat("-3/6") == make_rat(-1, 2));
  CHECK(to_string(make_rat(4, 2)) == "2");
  CHECK(is_integer(make_rat(4, 2)));
}

TEST_CASE("polynomial arithmetic examples") {
  const VarList v = xs(2);
  const MultiPoly x1 = MultiPoly::variable(v, 0);
  const MultiPoly x2 = MultiPoly::variable(v, 1);
  CHECK((x1 + (-x1)).is_zero());
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  const MultiPoly p = P("3*x1^2*x2 - 1/2", v);
  CHECK(p * MultiPoly::constant(v, 1) == p);
  CHECK(p.size() == 2);
}

TEST_CASE("grlex order puts the first variable highest") {
  const VarList v = xs(2);
  CHECK(P("x1 + x2^2", v).leading_term().exps == Exponents{0, 2});
  CHECK(P("x2^2 + x1*x2", v).leading_term().exps == Exponents{1, 1});
  CHECK(P("x1 + x2", v).leading_term().exps == Exponents{1, 0});
}

TEST_CASE("ring axioms agree with point evaluation") {
  Random rnd(11);
  const VarList v = xs(3);
  for (int k = 0; k < 100; ++k) {
    const MultiPoly a = rnd.poly(v), b = rnd.poly(v), c = rnd.poly(v);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const auto pt = rnd.point(3);
    CHECK(eval_at(a * b + c, pt) == eval_at(a, pt) * eval_at(b, pt) + eval_at(c, pt));
  }
}

TEST_CASE("exact division") {
  const VarList v = xs(2);
  const auto q = divide_exact(P("x1^2 - x2^2", v), P("x1 - x2", v));
  REQUIRE(q);
  CHECK(*q == P("x1 + x2", v));
  CHECK_FALSE(divide_exact(P("x1^2 + x2", v), P("x1 - x2", v)));
}

TEST_CASE("monomials up to a degree") {
  // C(n + d, d) monomials in n variables of degree <= d.
  CHECK(monomials_up_to(2, 3).size() == 10);
  CHECK(monomials_up_to(3, 2).size() == 10);
  CHECK(monomials_up_to(4, 0).size() == 1);
}

TEST_CASE("gcd examples") {
  const VarList v = xs(2);
  CHECK(poly_gcd(P("x1^2 - x2^2", v), P("x1 - x2", v)) == P("x1 - x2", v));
  CHECK(poly_gcd(P("x1*x2", v), P("x1 + x2", v)) == P("1", v));
  CHECK(poly_gcd(P("2*x1 + 4*x2", v), MultiPoly::constant(v, 0)) == P("x1 + 2*x2", v));
  CHECK_THROWS_AS(poly_gcd(MultiPoly::constant(v, 0), MultiPoly::constant(v, 0)), UndefinedGcdError);
}

TEST_CASE("gcd properties on random products") {
  Random rnd(7);
  const VarList v = xs(3);
  for (int k = 0; k < 60; ++k) {
    const MultiPoly c = rnd.nonzero_poly(v, 2, 2);
    const MultiPoly a = rnd.nonzero_poly(v, 3, 2) * c;
    const MultiPoly b = rnd.nonzero_poly(v, 3, 2) * c;
    const MultiPoly g = poly_gcd(a, b);
    REQUIRE(divide_exact(a, g));
    REQUIRE(divide_exact(b, g));
    CHECK(divide_exact(g, c.monic()));
    const MultiPoly h = poly_gcd(*divide_exact(a, g), *divide_exact(b, g));
    CHECK(h.is_constant());
  }
}

TEST_CASE("rational function examples") {
  const VarList v = xs(2);
  const RatFunc f = parse_ratfunc("1/(x2-x1)", v);
  CHECK((f + (-f)).is_zero());
  const VarList x({"x"});
  CHECK(parse_ratfunc("1/x", x) * parse_ratfunc("x^2", x) == parse_ratfunc("x", x));
  CHECK(parse_ratfunc("(x1+x2)/x1", v).inverse() == parse_ratfunc("x1/(x1+x2)", v));
  CHECK(ratfunc_eq(parse_ratfunc("(x1^2-x2^2)/(x1-x2)", v), parse_ratfunc("x1+x2", v)));
  CHECK_FALSE(ratfunc_eq(parse_ratfunc("1/x1", v), parse_ratfunc("1/x2", v)));
  const RatFunc g = parse_ratfunc("(x1+1)/(x2-3)", v);
  CHECK(ratfunc_eq(g, g));
  CHECK_THROWS_AS(RatFunc(P("1", v), MultiPoly::constant(v, 0)), ZeroDivisorError);
}

TEST_CASE("canonical form: coprime, monic denominator, idempotent") {
  Random rnd(3);
  const VarList v = xs(3);
  for (int k = 0; k < 60; ++k) {
    const RatFunc f(rnd.poly(v), rnd.nonzero_poly(v));
    if (f.is_zero()) continue;
    CHECK(f.den().leading_coeff() == 1);
    CHECK(poly_gcd(f.num(), f.den()).is_constant());
    CHECK(canonicalize(f) == f);
  }
}

TEST_CASE("structural equality matches cross-multiplication on 200 pairs") {
  Random rnd(19);
  const VarList v = xs(2);
  for (int k = 0; k < 200; ++k) {
    const MultiPoly a = rnd.poly(v), b = rnd.nonzero_poly(v);
    const RatFunc f(a, b);
    // Half the pairs are the same function written with a common factor.
    const RatFunc g = k % 2 == 0 ? RatFunc(a * rnd.nonzero_poly(v), b * rnd.nonzero_poly(v))
                                 : [&] {
                                     const MultiPoly c = rnd.nonzero_poly(v);
                                     return RatFunc(a * c, b * c);
                                   }();
    CHECK(ratfunc_eq(f, g) == (f == g));
    if (k % 2 == 1) CHECK(f == g);
  }
}

TEST_CASE("field axioms") {
  Random rnd(5);
  const VarList v = xs(2);
  const RatFunc one = RatFunc::constant(v, 1);
  for (int k = 0; k < 40; ++k) {
    const RatFunc f(rnd.nonzero_poly(v), rnd.nonzero_poly(v));
    const RatFunc g(rnd.poly(v), rnd.nonzero_poly(v));
    const RatFunc h(rnd.poly(v), rnd.nonzero_poly(v));
    CHECK(f * f.inverse() == one);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g) + h == f + (g + h));
    CHECK(g / f * f == g);
    const auto pt = rnd.point(2);
    if (eval_at(f.den(), pt) != 0 && eval_at(g.den(), pt) != 0) {
      CHECK(eval_at(f * g, pt) == eval_at(f, pt) * eval_at(g, pt));
    }
  }
}

TEST_CASE("denominator split") {
  const VarList v = xs(3);
  const DenominatorSplit s = split_denominator(P("(x1-x2)*(x1-x3)", v));
  CHECK(s.squarefree);
  MultiPoly prod = MultiPoly::constant(v, 1);
  for (const auto& f : s.factors) prod *= f.factor;
  CHECK(prod == P("(x1-x2)*(x1-x3)", v).monic());
  CHECK_FALSE(split_denominator(P("(x1-x2)^2", v)).squarefree);
  const DenominatorSplit lin = split_denominator(P("x2 - x1", v));
  REQUIRE(lin.factors.size() == 1);
  CHECK(lin.factors[0].certified_prime);
}
