#include <doctest.h>

#include "flagorder/errors.hpp"
#include "flagorder/operators.hpp"
#include "flagorder/scenarios.hpp"
#include "support.hpp"

using namespace flagorder;
using testing_support::xs;

TEST_CASE("parser examples") {
  const FlagData d = symmetric_data(xs(2), 2);
  CHECK(parse_skew("(1/(x2-x1))*(perm(1 2) - id)", d.vars()) == demazure(1, d));
  const MultiPoly p = parse_poly("x1^2*x2 - 1/2", d.vars());
  CHECK(p.size() == 2);
  const VarList v = xs(3);
  const Automorphism a = parse_automorphism("perm(1 2 3)*shift(x1:-1)", v);
  CHECK(a == parse_automorphism("perm(1 2 3)", v).compose(Automorphism::shift(3, 0, -1)));
  CHECK(a.apply(parse_poly("x1", v)) == parse_automorphism("perm(1 2 3)", v).apply(parse_poly("x1 - 1", v)));
}

TEST_CASE("slash and star share a level, left to right") {
  const VarList v = xs(2);
  CHECK(parse_skew("1/(x2-x1)*(perm(1 2)-id)", v) == parse_skew("(1/(x2-x1))*(perm(1 2)-id)", v));
  CHECK(parse_ratfunc("x1/x2*x1", v) == parse_ratfunc("x1^2/x2", v));
  CHECK(parse_ratfunc("x1 - x2/2", v) == parse_ratfunc("x1 - (1/2)*x2", v));
  CHECK(parse_ratfunc("-x1^2", v) == parse_ratfunc("-(x1^2)", v));
  CHECK(parse_skew("perm(1 2)/x1", v) == parse_skew("perm(1 2)*(1/x1)", v));
  CHECK(parse_skew("perm(1 2)/x1", v) == parse_skew("(1/x2)*perm(1 2)", v));
}

TEST_CASE("parse errors carry positions") {
  const VarList v = xs(2);
  try {
    parse("x1 + y", v);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse("perm(1 1)", v), ParseError);
  CHECK_THROWS_AS(parse("perm(1 3)", v), ParseError);
  CHECK_THROWS_AS(parse("perm()", v), ParseError);
  CHECK_THROWS_AS(parse("x1 +", v), ParseError);
  CHECK_THROWS_AS(parse("(x1", v), ParseError);
  CHECK_THROWS_AS(parse("", v), ParseError);
  CHECK_THROWS_AS(parse("x1^-1", v), ParseError);
  CHECK_THROWS_AS(parse_skew("x1/perm(1 2)", v), Error);
  CHECK_THROWS_AS(parse_skew("x1/(x1-x1)", v), Error);
  CHECK_THROWS_AS(parse_vars("x1,id"), ParseError);
  try {
    parse("x1 +\n  $", v);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("pretty printing round-trips") {
  const VarList v({"x1", "x2", "x3", "y"});
  const std::vector<std::string> corpus = {
      "x1",
      "3*x1^2*x2 - 1/2",
      "(x1^2-x2^2)/(x1-x2)",
      "1/(x2-x1)*(perm(1 2)-id)",
      "(1/(x2-x1))*(perm(1 2) - id)",
      "perm(1 2 3)*shift(x1:-1)",
      "sign(y)*x1 - -x2",
      "-(x1 - x2) - x3",
      "x1 - (x2 - x3)",
      "x1/(x2/x3)",
      "(x1/x2)/x3",
      "x1/x2*x3",
      "(x1 + x2)^3",
      "-x1^2",
      "(-x1)^2",
      "shift(x2:1/2)*perm(2 3) + 4*id",
      "((((x1))))",
      "2/3*x1*sign(x1)*shift(y:-7)",
      "x1 + x2 + x3 - y*x1*x2",
      "(x1 - 1)^2*(perm(1 3) + perm(1 2 3))",
  };
  for (const auto& s : corpus) {
    const Ast a = parse(s, v);
    const std::string p = pretty(a);
    CAPTURE(s);
    CAPTURE(p);
    CHECK(parse(p, v) == a);
    CHECK(pretty(parse(p, v)) == p);
  }
}

TEST_CASE("element printing reparses") {
  const FlagData d = symmetric_data(xs(3), 3);
  const VarList& v = d.vars();
  for (const auto& x : {demazure(1, d) * demazure(2, d), symmetrizer(d),
                        parse_skew("x1*shift(x2:-1) - 1/3*perm(1 3)", v)}) {
    CHECK(parse_skew(x.to_string(), v) == x);
  }
}

TEST_CASE("lists") {
  const VarList v = xs(3);
  CHECK(split_top_level("perm(1 2), perm(2 3)").size() == 2);
  CHECK(split_top_level("").empty());
  CHECK(parse_automorphism_list("perm(1 2),perm(2 3)", v).size() == 2);
  CHECK(parse_poly_list("x1+x2, x3", v).size() == 2);
  CHECK(parse_vars("a,b, c").names() == std::vector<std::string>{"a", "b", "c"});
}
