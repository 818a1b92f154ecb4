#include <doctest.h>

#include "flagorder/errors.hpp"
#include "support.hpp"

using namespace flagorder;
using testing_support::eval_at;
using testing_support::pull_point;
using testing_support::Random;
using testing_support::xs;

namespace {

MultiPoly P(const std::string& s, const VarList& v) { return parse_poly(s, v); }

}  // namespace

TEST_CASE("action examples") {
  const VarList x({"x"});
  CHECK(Automorphism::shift(1, 0, -1).apply(P("x^2", x)) == P("x^2 - 2*x + 1", x));
  CHECK(Automorphism::sign_flip(1, 0).apply(P("x^3 + x", x)) == P("-x^3 - x", x));
  const VarList v = xs(2);
  const MultiPoly f = P("x1^2*x2 - 3", v);
  CHECK(Automorphism::identity(2).apply(f) == f);
}

TEST_CASE("composition examples") {
  const VarList v = xs(2);
  const Automorphism s = Automorphism::transposition(2, 0, 1);
  const Automorphism t = Automorphism::shift(2, 0, -1);
  CHECK(s.compose(s).is_identity());
  const VarList x({"x"});
  CHECK(Automorphism::shift(1, 0, -1).compose(Automorphism::shift(1, 0, -1)) == Automorphism::shift(1, 0, -2));
  // compose applies its argument first: (s o t)(f) = s(t(f)).
  const Automorphism st = s.compose(t);
  CHECK(st.apply(P("x1", v)) == P("x2 - 1", v));
  CHECK(st.apply(P("x2", v)) == P("x1", v));
  const Automorphism ts = t.compose(s);
  CHECK(ts.apply(P("x1", v)) == P("x2", v));
  CHECK(ts.apply(P("x2", v)) == P("x1 - 1", v));
}

TEST_CASE("inverse examples") {
  const VarList v = xs(3);
  CHECK(Automorphism::shift(1, 0, -1).inverse() == Automorphism::shift(1, 0, 1));
  CHECK(parse_automorphism("perm(1 2 3)", v).inverse() == parse_automorphism("perm(1 3 2)", v));
  CHECK(Automorphism::sign_flip(1, 0).inverse() == Automorphism::sign_flip(1, 0));
}

TEST_CASE("homomorphism, composition and inverse on random data") {
  Random rnd(23);
  const VarList v = xs(3);
  for (int k = 0; k < 100; ++k) {
    const Automorphism a = rnd.affine(3), b = rnd.affine(3);
    const MultiPoly f = rnd.poly(v), g = rnd.poly(v);
    CHECK(a.apply(f * g) == a.apply(f) * a.apply(g));
    CHECK(a.apply(f + g) == a.apply(f) + a.apply(g));
    CHECK(a.compose(b).apply(f) == a.apply(b.apply(f)));
    CHECK(a.compose(a.inverse()).is_identity());
    CHECK(a.signed_part().compose(a.shift_part()) == a);
    // Independent oracle: w(f)(p) = f(q) with q pulled back through w.
    const auto pt = rnd.point(3);
    CHECK(eval_at(a.apply(f), pt) == eval_at(f, pull_point(a, pt)));
  }
}

TEST_CASE("faithfulness: distinct automorphisms act differently on variables") {
  Random rnd(29);
  const VarList v = xs(3);
  for (int k = 0; k < 50; ++k) {
    const Automorphism a = rnd.affine(3), b = rnd.affine(3);
    bool same = true;
    for (std::size_t i = 0; i < 3; ++i) same = same && a.image_of_variable(i, v) == b.image_of_variable(i, v);
    CHECK(same == (a == b));
  }
}

TEST_CASE("group enumeration") {
  const VarList v = xs(4);
  const auto s2 = enumerate_group(2, {Automorphism::transposition(2, 0, 1)});
  CHECK(s2.size() == 2);
  const auto s3 = enumerate_group(3, {Automorphism::transposition(3, 0, 1), Automorphism::transposition(3, 1, 2)});
  CHECK(s3.size() == 6);
  for (const auto& a : s3) {
    for (const auto& b : s3) CHECK(std::find(s3.begin(), s3.end(), a.compose(b)) != s3.end());
  }
  const auto s4 = enumerate_group(4, parse_automorphism_list("perm(1 2),perm(2 3),perm(3 4)", v));
  CHECK(s4.size() == 24);
  CHECK_THROWS_AS(enumerate_group(1, {Automorphism::shift(1, 0, -1)}, 100), GroupTooLargeError);
}

TEST_CASE("separation axiom") {
  // GT data n = 2: W = S_2 on x21, x22; M generated by delta^{11}.
  const VarList gt({"x11", "x21", "x22"});
  const FlagData good(gt, {Automorphism::transposition(3, 1, 2)}, {Automorphism::shift(3, 0, -1)});
  CHECK(check_separation(good, 3).pass);

  const VarList x({"x"});
  const Automorphism tau = Automorphism::sign_flip(1, 0);
  const FlagData bad(x, {tau}, {tau});
  const AxiomReport r = check_separation(bad, 3);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front() == tau);

  CHECK(check_separation(FlagData(xs(2), {Automorphism::transposition(2, 0, 1)}, {}), 3).pass);
}

TEST_CASE("invariance axiom") {
  const VarList gt3({"x11", "x21", "x22", "x31", "x32", "x33"});
  std::vector<Automorphism> w = parse_automorphism_list("perm(2 3),perm(4 5),perm(5 6)", gt3);
  std::vector<Automorphism> m;
  for (std::size_t i = 0; i < 3; ++i) m.push_back(Automorphism::shift(6, i, -1));
  CHECK(check_invariance(FlagData(gt3, w, m), 3).pass);

  const VarList v = xs(2);
  const Automorphism s = Automorphism::transposition(2, 0, 1);
  const Automorphism d = Automorphism::shift(2, 0, -1);
  const AxiomReport r = check_invariance(FlagData(v, {s}, {d}), 3);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front() == s.compose(d).compose(s));

  CHECK(check_invariance(FlagData(v, {}, {d}), 3).pass);
}

TEST_CASE("lattice coordinates of M") {
  const VarList v = xs(2);
  const FlagData d(v, {}, {Automorphism::shift(2, 0, -1), Automorphism::shift(2, 1, -1)});
  const auto c = d.m_coordinates(Automorphism(std::vector<std::size_t>{0, 1}, {1, 1}, {make_rat(2), make_rat(-3)}));
  REQUIRE(c);
  CHECK((*c)[0] == -2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(d.m_coordinates(Automorphism::shift(2, 0, make_rat(1, 2))));
  const FlagData mon(v, {}, {Automorphism::shift(2, 0, -1)}, false);
  CHECK(mon.m_coordinates(Automorphism::shift(2, 0, -2)));
  CHECK_FALSE(mon.m_coordinates(Automorphism::shift(2, 0, 1)));
}
