#include "flagorder/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "flagorder/errors.hpp"

namespace flagorder {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool grlex_greater(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

// Merges two sorted term lists, `sign` applied to the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rat c = sign < 0 ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void require_same_vars(const VarList& a, const VarList& b) {
  if (!(a == b)) {
    throw AlignmentError("variable lists differ: [" + a.to_string() + "] vs [" + b.to_string() +
                         "]");
  }
}

MultiPoly MultiPoly::constant(VarList vars, const Rat& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{Exponents(p.nvars(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::size_t index) {
  if (index >= vars.size()) throw Error("variable index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

MultiPoly MultiPoly::variable(VarList vars, std::string_view name) {
  auto idx = vars.index_of(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx);
}

MultiPoly MultiPoly::monomial(VarList vars, Exponents exps, const Rat& c) {
  if (exps.size() != vars.size()) throw AlignmentError("exponent vector has wrong length");
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{std::move(exps), c});
  return p;
}

MultiPoly MultiPoly::from_terms(VarList vars, std::vector<Term> terms) {
  MultiPoly p(std::move(vars));
  for (const auto& t : terms) {
    if (t.exps.size() != p.nvars()) throw AlignmentError("exponent vector has wrong length");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && flagorder::total_degree(terms_[0].exps) == 0);
}

Rat MultiPoly::constant_term() const {
  if (!terms_.empty() && flagorder::total_degree(terms_.back().exps) == 0) {
    return terms_.back().coeff;
  }
  return 0;
}

Rat MultiPoly::coefficient(const Exponents& e) const {
  for (const auto& t : terms_) {
    if (t.exps == e) return t.coeff;
  }
  return 0;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : flagorder::total_degree(terms_.front().exps);
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

std::vector<bool> MultiPoly::used_variables() const {
  std::vector<bool> used(nvars(), false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] > 0) used[i] = true;
    }
  }
  return used;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(vars_, o.vars_);
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(vars_, o.vars_);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a.vars_, b.vars_);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars_);
  if (b.is_constant()) return a * b.leading_coeff();
  if (a.is_constant()) return b * a.leading_coeff();
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  const std::size_t n = a.nvars();
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = s.exps[k] + t.exps[k];
      prods.push_back(Term{std::move(e), s.coeff * t.coeff});
    }
  }
  return MultiPoly::from_terms(a.vars_, std::move(prods));
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term d = t;
    d.coeff *= t.exps[var];
    d.exps[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading_coeff();
  return *this * inv;
}

MultiPoly MultiPoly::integer_primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  return *this * scale;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const VarList& target) const {
  if (images.size() != nvars()) throw AlignmentError("substitution needs one image per variable");
  for (const auto& im : images) require_same_vars(im.vars(), target);
  MultiPoly result(target);
  // powers[i][k] = images[i]^k, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(nvars());
  for (const auto& t : terms_) {
    MultiPoly prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i) {
      const int e = t.exps[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      prod = prod * pw[e];
    }
    result += prod;
  }
  return result;
}

MultiPoly MultiPoly::embed(const VarList& superset) const {
  std::vector<std::size_t> pos(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto idx = superset.index_of(vars_[i]);
    if (!idx) throw AlignmentError("variable '" + vars_[i] + "' missing from target list");
    pos[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(superset.size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) e[pos[i]] = t.exps[i];
    out.push_back(Term{std::move(e), t.coeff});
  }
  return from_terms(superset, std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : d + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.exps[var] = 0;
    buckets[t.exps[var]].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(vars_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(VarList vars, std::size_t var,
                                       const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term c = t;
      c.exps[var] += static_cast<int>(k);
      out.push_back(std::move(c));
    }
  }
  return from_terms(std::move(vars), std::move(out));
}

std::string monomial_to_string(const VarList& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_monomial = flagorder::total_degree(t.exps) == 0;
    if (unit_monomial) {
      out += flagorder::to_string(c);
    } else {
      if (c != 1) out += flagorder::to_string(c) + '*';
      out += monomial_to_string(vars_, t.exps);
    }
  }
  return out;
}

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ta[i].exps != tb[i].exps) return grlex_greater(tb[i].exps, ta[i].exps);
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p.vars(), q.vars());
  if (q.is_zero()) throw ZeroDivisorError("division by the zero polynomial");
  if (p.is_zero()) return MultiPoly(p.vars());
  if (q.is_constant()) return p * (1 / q.leading_coeff());
  const std::size_t n = p.nvars();
  const Term& lq = q.leading_term();
  // Single-divisor division: if q | p then LT(q) divides the leading term of
  // every intermediate remainder, so the first failure is final.
  std::map<Exponents, Rat, GrlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.exps, t.coeff);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto lead = rem.begin();
    Exponents shift(n);
    for (std::size_t k = 0; k < n; ++k) {
      shift[k] = lead->first[k] - lq.exps[k];
      if (shift[k] < 0) return std::nullopt;
    }
    if (total_degree(lead->first) < q.total_degree()) return std::nullopt;
    Rat c = lead->second / lq.coeff;
    for (const auto& t : q.terms()) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = t.exps[k] + shift[k];
      auto [it, inserted] = rem.emplace(std::move(e), Rat(0));
      it->second -= c * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back(Term{std::move(shift), std::move(c)});
  }
  return MultiPoly::from_terms(p.vars(), std::move(quot));
}

namespace {

void fill_monomials(std::size_t var, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    fill_monomials(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_up_to(std::size_t nvars, int max_degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  for (int d = 0; d <= max_degree; ++d) fill_monomials(0, d, cur, out);
  return out;
}

}  // namespace flagorder
