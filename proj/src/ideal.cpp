#include "flagorder/ideal.hpp"

#include <algorithm>
#include <map>

#include "flagorder/errors.hpp"

namespace flagorder {

void IdealSpec::validate() const {
  if (generators.empty()) throw DomainError("ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_zero()) throw DomainError("ideal generator is zero");
    require_same_vars(g.vars(), generators.front().vars());
  }
}

std::string IdealSpec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i].to_string();
  }
  return out + ")";
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > 0 && b[k] > 0) return false;
  }
  return true;
}

// Reduced row echelon form of affine-linear polynomials. Columns are the
// variables in order followed by the constant, matching grlex.
std::vector<MultiPoly> row_reduce_linear(const std::vector<MultiPoly>& gens) {
  const VarList& vars = gens.front().vars();
  const std::size_t n = vars.size();
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : gens) {
    std::vector<Rat> row(n + 1, Rat(0));
    for (const auto& t : g.terms()) {
      std::size_t col = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (t.exps[k] == 1) col = k;
      }
      row[col] = t.coeff;
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col <= n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Rat inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (std::size_t c = 0; c <= n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  std::vector<MultiPoly> out;
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c] == 0) continue;
      Exponents e(n, 0);
      e[c] = 1;
      terms.push_back(Term{std::move(e), rows[r][c]});
    }
    if (rows[r][n] != 0) terms.push_back(Term{Exponents(n, 0), rows[r][n]});
    out.push_back(MultiPoly::from_terms(vars, std::move(terms)));
  }
  return out;
}

}  // namespace

IdealReducer::IdealReducer(const IdealSpec& ideal) {
  ideal.validate();
  const auto& gens = ideal.generators;
  const bool linear = std::all_of(gens.begin(), gens.end(),
                                  [](const MultiPoly& g) { return g.total_degree() <= 1; });
  if (linear) {
    basis_ = row_reduce_linear(gens);
    exact_ = true;
    return;
  }
  basis_.clear();
  for (const auto& g : gens) basis_.push_back(g.monic());
  const bool monomial = std::all_of(gens.begin(), gens.end(),
                                    [](const MultiPoly& g) { return g.is_monomial(); });
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (!coprime(basis_[i].leading_term().exps, basis_[j].leading_term().exps)) {
        pairwise_coprime = false;
      }
    }
  }
  exact_ = monomial || pairwise_coprime;
}

MultiPoly IdealReducer::remainder(const MultiPoly& p) const {
  if (!basis_.empty()) require_same_vars(p.vars(), basis_.front().vars());
  struct Greater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
  };
  std::map<Exponents, Rat, Greater> work;
  for (const auto& t : p.terms()) work.emplace(t.exps, t.coeff);
  std::vector<Term> rem;
  const std::size_t n = p.nvars();
  while (!work.empty()) {
    auto lead = work.begin();
    const MultiPoly* div = nullptr;
    for (const auto& g : basis_) {
      if (divides(g.leading_term().exps, lead->first)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      rem.push_back(Term{lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const Term& lt = div->leading_term();
    Exponents shift(n);
    for (std::size_t k = 0; k < n; ++k) shift[k] = lead->first[k] - lt.exps[k];
    const Rat c = lead->second / lt.coeff;
    for (const auto& t : div->terms()) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = t.exps[k] + shift[k];
      auto [it, inserted] = work.emplace(std::move(e), Rat(0));
      it->second -= c * t.coeff;
      if (it->second == 0) work.erase(it);
    }
  }
  return MultiPoly::from_terms(p.vars(), std::move(rem));
}

}  // namespace flagorder
