#include <doctest.h>

#include "flagorder/errors.hpp"
#include "flagorder/membership.hpp"
#include "flagorder/operators.hpp"
#include "flagorder/scenarios.hpp"
#include "support.hpp"

using namespace flagorder;
using testing_support::Random;
using testing_support::xs;

namespace {

SkewElement S(const std::string& s, const VarList& v) { return parse_skew(s, v); }
RatFunc R(const std::string& s, const VarList& v) { return parse_ratfunc(s, v); }
MultiPoly P(const std::string& s, const VarList& v) { return parse_poly(s, v); }

FlagData sym(int n) { return symmetric_data(xs(n), n); }

}  // namespace

TEST_CASE("membership examples") {
  const FlagData d = sym(2);
  const VarList& v = d.vars();
  const MembershipVerdict a = member_standard(S("(1/(x2-x1))*(perm(1 2) - id)", v), d, 6);
  CHECK(a.status == MemberStatus::member);
  CHECK(a.mode == MembershipMode::exact_squarefree);

  const MembershipVerdict b = member_standard(S("(1/x1)*id", v), d, 6);
  CHECK(b.status == MemberStatus::non_member);
  REQUIRE(b.witness);
  CHECK(*b.witness == P("1", v));

  const VarList x({"x"});
  const FlagData sign(x, {Automorphism::sign_flip(1, 0)}, {});
  const MembershipVerdict c = member_standard(S("(1/x)*(sign(x) - id)", x), sign, 6);
  CHECK(c.status == MemberStatus::member);
  CHECK(c.mode == MembershipMode::exact_squarefree);
  // Parity check behind the verdict: ((-x)^k - x^k) / x is a polynomial.
  for (unsigned k = 0; k < 9; ++k) {
    CHECK(evaluate(S("(1/x)*(sign(x) - id)", x), RatFunc(P("x", x).pow(k))).is_polynomial());
  }
}

TEST_CASE("support outside the group is a domain error") {
  const FlagData d = sym(2);
  CHECK_THROWS_AS(member_standard(S("shift(x1:-1)", d.vars()), d, 4), DomainError);
  const FlagData d3 = sym(3);
  CHECK_NOTHROW(member_standard(S("perm(1 3)", d3.vars()), d3, 4));
}

TEST_CASE("nilHecke relations for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const FlagData d = sym(n);
    const SkewElement zero(d.vars());
    std::vector<SkewElement> ds;
    for (int i = 1; i < n; ++i) ds.push_back(demazure(static_cast<std::size_t>(i), d));
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(ds[i] * ds[i] == zero);
      const MembershipVerdict v = member_standard(ds[i], d, 6);
      CHECK(v.status == MemberStatus::member);
      CHECK(v.mode == MembershipMode::exact_squarefree);
      for (std::size_t j = i + 2; j < ds.size(); ++j) CHECK(ds[i] * ds[j] == ds[j] * ds[i]);
    }
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
      CHECK(ds[i] * ds[i + 1] * ds[i] == ds[i + 1] * ds[i] * ds[i + 1]);
    }
  }
}

TEST_CASE("Demazure operator values and twisted Leibniz rule") {
  const FlagData d = sym(3);
  const VarList& v = d.vars();
  const SkewElement d1 = demazure(1, d);
  CHECK(d1 == S("(1/(x2-x1))*(perm(1 2) - id)", v));
  CHECK(evaluate(d1, R("x1", v)) == R("1", v));
  CHECK_THROWS_AS(demazure(3, d), InvalidGeneratorError);
  Random rnd(31);
  const Automorphism s = Automorphism::transposition(3, 0, 1);
  for (int k = 0; k < 40; ++k) {
    const RatFunc f(rnd.poly(v)), g(rnd.poly(v));
    CHECK(evaluate(d1, f * g) == evaluate(d1, f) * g + s.apply(f) * evaluate(d1, g));
    CHECK(evaluate(d1, f).is_polynomial());
  }
}

TEST_CASE("divided differences need a transposition in W") {
  const VarList v = xs(3);
  const FlagData a3(v, {parse_automorphism("perm(1 2 3)", v)}, {});
  CHECK_THROWS_AS(divided_difference(0, 1, a3), InvalidGeneratorError);
}

namespace {

std::vector<SkewElement> oracle_corpus(const FlagData& d, Random& rnd) {
  const VarList& v = d.vars();
  std::vector<SkewElement> c;
  const SkewElement d1 = demazure(1, d), d2 = demazure(2, d);
  c.push_back(d1);
  c.push_back(d2);
  c.push_back(d1 * d2);
  c.push_back(d2 * d1);
  c.push_back(d1 * d2 * d1);
  for (const auto& w : d.group()) c.push_back(SkewElement::group_element(v, w));
  c.push_back(S("x1*x2*perm(1 2)", v));
  c.push_back(S("(x1+x3)*perm(1 2 3)", v));
  c.push_back(S("x3^2", v) * d1);
  c.push_back(d2 * S("x1 - x2", v));
  c.push_back(S("(1/(x3-x1))*(perm(1 3) - id)", v));
  // Randomized non-members: a Demazure-type denominator with a numerator
  // that does not vanish on the diagonal.
  for (int k = 0; k < 10; ++k) {
    const int i = rnd.integer(1, 3), j = i % 3 + 1;
    const std::string den = "(x" + std::to_string(j) + "-x" + std::to_string(i) + ")";
    const std::string perm = "perm(" + std::to_string(std::min(i, j)) + " " + std::to_string(std::max(i, j)) + ")";
    const int c0 = rnd.integer(1, 4);
    c.push_back(S("(" + std::to_string(c0) + "/" + den + ")*" + perm + " + x1*id", v));
  }
  return c;
}

}  // namespace

TEST_CASE("exact and bounded verdicts never conflict") {
  Random rnd(37);
  const FlagData d = sym(3);
  for (const auto& x : oracle_corpus(d, rnd)) {
    const MembershipVerdict ex = member_standard(x, d, 6);
    for (int bound = 1; bound <= 8; ++bound) {
      const MembershipVerdict bd = member_standard(x, d, bound, ModeRequest::bounded);
      CHECK(bd.mode == MembershipMode::degree_bounded);
      if (ex.status == MemberStatus::member) {
        CHECK(bd.status != MemberStatus::non_member);
      }
      if (bd.status == MemberStatus::non_member) {
        CHECK(ex.status == MemberStatus::non_member);
      }
      if (ex.status == MemberStatus::non_member && ex.witness && ex.witness->total_degree() <= bound) {
        CHECK(bd.status == MemberStatus::non_member);
      }
    }
    if (ex.status == MemberStatus::non_member) {
      REQUIRE(ex.witness);
      CHECK_FALSE(evaluate(x, RatFunc(*ex.witness)).is_polynomial());
    }
  }
}

TEST_CASE("products of members are members") {
  Random rnd(41);
  const FlagData d = sym(3);
  std::vector<SkewElement> members;
  for (const auto& x : oracle_corpus(d, rnd)) {
    if (member_standard(x, d, 6).holds()) members.push_back(x);
  }
  REQUIRE(members.size() >= 10);
  for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
    CHECK(member_standard(members[i] * members[i + 1], d, 4).holds());
  }
}

TEST_CASE("spherical subalgebra") {
  const FlagData d = sym(3);
  const VarList& v = d.vars();
  const SkewElement e = symmetrizer(d);
  for (const auto& x : {S("x1*id", v), demazure(1, d), S("x1*x2*perm(1 2)", v)}) {
    const SkewElement y = spherical_project(x, d);
    CHECK(e * y * e == y);
  }
  const MembershipVerdict s = check_spherical(S("x1*id", v), d, 4);
  CHECK(s.status == MemberStatus::member_up_to_degree);
  CHECK(check_spherical(S("(1/x1)*id", v), d, 4).status == MemberStatus::non_member);
}

TEST_CASE("fixing an ideal") {
  const VarList v = xs(4);
  const FlagData d = sym(4);
  const IdealSpec i{{P("x2+x1", v), P("x4+x3", v)}};
  CHECK(member_fixes_ideal(S("perm(1 2)", v), i, d, 6).status == MemberStatus::member_up_to_degree);
  CHECK(member_fixes_ideal(S("id", v), i, d, 6).status == MemberStatus::member);
  const MembershipVerdict bad = member_fixes_ideal(S("perm(2 3)", v), i, d, 6);
  CHECK(bad.status == MemberStatus::non_member);

  const VarList w = xs(1);
  const FlagData shifts(w, {}, {Automorphism::shift(1, 0, -1)});
  const MembershipVerdict s = member_fixes_ideal(S("shift(x1:-1)", w), IdealSpec{{P("x1", w)}}, shifts, 6);
  CHECK(s.status == MemberStatus::non_member);
  REQUIRE(s.witness);
  CHECK(*s.witness == P("x1", w));
}

TEST_CASE("mapping into an ideal") {
  const VarList v3 = xs(3);
  const FlagData d3 = sym(3);
  const IdealSpec sum{{P("x2+x1", v3)}};
  CHECK(member_into_ideal(S("(x2+x1)*id", v3), sum, d3, 6).status == MemberStatus::member);
  const IdealSpec i{{P("x2", v3), P("x3", v3)}};
  CHECK(member_into_ideal(S("perm(2 3) - id", v3), i, d3, 6).status == MemberStatus::member_up_to_degree);
  const MembershipVerdict n = member_into_ideal(S("id", v3), IdealSpec{{P("x1", v3)}}, d3, 6);
  CHECK(n.status == MemberStatus::non_member);
  REQUIRE(n.witness);
  CHECK(*n.witness == P("1", v3));
}

TEST_CASE("I F is a two-sided ideal of F[I]") {
  const VarList v = xs(3);
  const FlagData d = sym(3);
  const IdealSpec i{{P("x2", v), P("x3", v)}};
  const std::vector<SkewElement> fixing = {S("perm(2 3)", v), S("x1*id", v), S("x2*perm(2 3) + x1^2*id", v)};
  const std::vector<SkewElement> inside = {S("x2*id", v), S("x3*perm(2 3)", v), S("(x2+x3)*id", v)};
  for (const auto& x : fixing) {
    REQUIRE(member_fixes_ideal(x, i, d, 4).holds());
    for (const auto& y : inside) {
      REQUIRE(member_into_ideal(y, i, d, 4).holds());
      CHECK(member_into_ideal(x * y, i, d, 4).holds());
      CHECK(member_into_ideal(y * x, i, d, 4).holds());
    }
  }
}

TEST_CASE("quotient class equality") {
  const VarList v = xs(3);
  const FlagData d = sym(3);
  const IdealSpec i{{P("x2", v), P("x3", v)}};
  CHECK(quotient_class_eq(S("perm(2 3)", v), S("id", v), i, d, 6).status == ClassEquality::equal_up_to_degree);
  const QuotientVerdict q = quotient_class_eq(S("x1*id", v), S("x2*id", v), i, d, 6);
  CHECK(q.status == ClassEquality::not_equal);
  REQUIRE(q.witness);
  CHECK(*q.witness == P("1", v));
  CHECK(quotient_class_eq(S("perm(2 3)", v), S("perm(2 3)", v), i, d, 6).status == ClassEquality::equal);
  CHECK_THROWS_AS(quotient_class_eq(S("perm(1 2)", v), S("id", v), i, d, 6), DomainError);
}
