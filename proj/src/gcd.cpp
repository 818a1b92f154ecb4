#include "flagorder/gcd.hpp"

#include <algorithm>

#include "flagorder/errors.hpp"

namespace flagorder {

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.vars(), 1); }

MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw Error("internal: expected exact division failed");
  return *r;
}

// gcd of a single-term polynomial with an arbitrary one: the largest
// monomial dividing every term of the other.
MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& other) {
  Exponents e = mono.leading_term().exps;
  for (const auto& t : other.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::min(e[k], t.exps[k]);
  }
  return MultiPoly::monomial(mono.vars(), std::move(e));
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

MultiPoly content_rec(const MultiPoly& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  MultiPoly g(p.vars());
  // Smallest coefficients first keeps the intermediate gcds cheap.
  std::sort(coeffs.begin(), coeffs.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.size() < b.size(); });
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g.integer_primitive();
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t var) {
  MultiPoly c = content_rec(p, var);
  if (c.is_constant()) return p.integer_primitive();
  return exact_quotient(p, c).integer_primitive();
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return q.integer_primitive();
  if (q.is_zero()) return p.integer_primitive();
  if (p.is_constant() || q.is_constant()) return one_like(p);
  if (p.is_monomial()) return monomial_gcd(p, q);
  if (q.is_monomial()) return monomial_gcd(q, p);
  if (p.integer_primitive() == q.integer_primitive()) return p.integer_primitive();

  const auto up = p.used_variables();
  const auto uq = q.used_variables();
  // A variable present in only one argument: the gcd divides that
  // argument's content in it.
  for (std::size_t v = 0; v < up.size(); ++v) {
    if (up[v] && !uq[v]) return gcd_rec(content_rec(p, v), q);
    if (uq[v] && !up[v]) return gcd_rec(p, content_rec(q, v));
  }
  std::size_t var = up.size();
  for (std::size_t v = up.size(); v-- > 0;) {
    if (up[v]) {
      var = v;
      break;
    }
  }

  const MultiPoly cp = content_rec(p, var);
  const MultiPoly cq = content_rec(q, var);
  const MultiPoly c = gcd_rec(cp, cq);
  MultiPoly a = cp.is_constant() ? p.integer_primitive() : exact_quotient(p, cp).integer_primitive();
  MultiPoly b = cq.is_constant() ? q.integer_primitive() : exact_quotient(q, cq).integer_primitive();
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

  MultiPoly g(p.vars());
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = one_like(p);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, var);
  }
  return (c * g).integer_primitive();
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  if (db <= 0) throw Error("pseudo_remainder: divisor must involve the variable");
  const auto bc = b.coefficients_in(var);
  const MultiPoly& lcb = bc.back();
  MultiPoly r = a;
  Exponents unit(a.nvars(), 0);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    const MultiPoly lcr = r.coefficients_in(var).back();
    Exponents shift = unit;
    shift[var] = dr - db;
    r = r * lcb - lcr * MultiPoly::monomial(a.vars(), shift) * b;
  }
  return r;
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p.vars(), q.vars());
  if (p.is_zero() && q.is_zero()) throw UndefinedGcdError("gcd(0, 0) is undefined");
  return gcd_rec(p, q).monic();
}

MultiPoly poly_lcm(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.vars());
  MultiPoly g = poly_gcd(p, q);
  return (exact_quotient(p, g) * q).monic();
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return content_rec(p, var).monic();
}

namespace {

void split_into(const MultiPoly& p, DenominatorSplit& out) {
  if (p.is_constant()) return;
  const auto used = p.used_variables();
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) continue;
    MultiPoly c = content_rec(p, v);
    if (!c.is_constant()) {
      split_into(c, out);
      split_into(exact_quotient(p, c), out);
      return;
    }
  }
  // Primitive in every variable it uses: each irreducible factor involves
  // every such variable, so a nontrivial gcd with a partial derivative means
  // a repeated factor.
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) continue;
    MultiPoly g = gcd_rec(p, p.derivative(v));
    if (!g.is_constant()) {
      out.squarefree = false;
      return;
    }
  }
  out.factors.push_back(DenominatorFactor{p.monic(), p.total_degree() == 1});
}

}  // namespace

DenominatorSplit split_denominator(const MultiPoly& d) {
  if (d.is_zero()) throw ZeroDivisorError("zero denominator");
  DenominatorSplit out;
  split_into(d, out);
  if (!out.squarefree) {
    out.factors.clear();
    return out;
  }
  // Content splitting yields pieces that multiply to d; a repeated piece
  // means d was not squarefree.
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    for (std::size_t j = i + 1; j < out.factors.size(); ++j) {
      if (!gcd_rec(out.factors[i].factor, out.factors[j].factor).is_constant()) {
        out.squarefree = false;
        out.factors.clear();
        return out;
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const DenominatorFactor& a, const DenominatorFactor& b) {
              return poly_less(a.factor, b.factor);
            });
  return out;
}

}  // namespace flagorder
