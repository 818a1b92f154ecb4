#pragma once

// Shared fixtures for the unit tests: seeded random elements and a
// point-evaluation oracle that shares no code with substitution.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "flagorder/automorphism.hpp"
#include "flagorder/flag_data.hpp"
#include "flagorder/parser.hpp"
#include "flagorder/poly.hpp"
#include "flagorder/ratfunc.hpp"
#include "flagorder/skew.hpp"

namespace testing_support {

using namespace flagorder;

inline VarList xs(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarList(names);
}

inline Rat eval_at(const MultiPoly& p, const std::vector<Rat>& point) {
  Rat total = 0;
  for (const auto& t : p.terms()) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      for (int k = 0; k < t.exps[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

inline Rat eval_at(const RatFunc& f, const std::vector<Rat>& point) {
  return eval_at(f.num(), point) / eval_at(f.den(), point);
}

/// The point q with a(q) = w(a)(p): q_i = s_i p_{sigma(i)} + t_i.
inline std::vector<Rat> pull_point(const Automorphism& w, const std::vector<Rat>& p) {
  std::vector<Rat> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = w.signs()[i] * p[w.perm()[i]] + w.shifts()[i];
  return q;
}

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rat rational(int range = 5) {
    const int den = integer(1, 3);
    return make_rat(integer(-range, range), den);
  }

  MultiPoly poly(const VarList& vars, int max_terms = 3, int max_deg = 2) {
    MultiPoly p = MultiPoly::constant(vars, 0);
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      Exponents e(vars.size(), 0);
      int budget = integer(0, max_deg);
      while (budget-- > 0) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(vars.size()) - 1))];
      p += MultiPoly::monomial(vars, e, rational());
    }
    return p;
  }

  MultiPoly nonzero_poly(const VarList& vars, int max_terms = 3, int max_deg = 2) {
    for (;;) {
      MultiPoly p = poly(vars, max_terms, max_deg);
      if (!p.is_zero()) return p;
    }
  }

  /// Permutation of the variables times an integer shift vector.
  Automorphism affine(std::size_t n, int shift_range = 1) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen_);
    std::vector<Rat> shifts(n);
    for (auto& t : shifts) t = integer(-shift_range, shift_range);
    return Automorphism(perm, std::vector<int>(n, 1), shifts);
  }

  /// Element with up to `max_terms` terms and denominators that are products
  /// of differences x_i - x_j + c.
  SkewElement skew(const VarList& vars, int max_terms = 2) {
    SkewElement x(vars);
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      MultiPoly den = MultiPoly::constant(vars, 1);
      if (vars.size() >= 2 && integer(0, 1) == 1) {
        const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(vars.size()) - 1));
        const auto j = (i + 1) % vars.size();
        den = MultiPoly::variable(vars, i) - MultiPoly::variable(vars, j) +
              MultiPoly::constant(vars, integer(0, 2));
      }
      x += SkewElement::term(RatFunc(poly(vars, 2, 1), den), affine(vars.size()));
    }
    return x;
  }

  std::vector<Rat> point(std::size_t n) {
    std::vector<Rat> p(n);
    for (auto& v : p) v = make_rat(integer(-40, 40), integer(1, 7));
    return p;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace testing_support
