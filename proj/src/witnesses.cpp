#include "flagorder/witnesses.hpp"

#include "flagorder/errors.hpp"

namespace flagorder {

namespace {

std::size_t rank_of(RatMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const RatFunc inv = a[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const RatFunc f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

RatMatrix minor_of(const RatMatrix& a, std::size_t skip_r, std::size_t skip_c) {
  RatMatrix m;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == skip_r) continue;
    std::vector<RatFunc> row;
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (c != skip_c) row.push_back(a[r][c]);
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

RatFunc determinant(const RatMatrix& in) {
  if (in.empty()) throw DomainError("determinant of an empty matrix");
  const VarList vars = in.front().front().vars();
  RatMatrix a = in;
  const std::size_t n = a.size();
  RatFunc det = RatFunc::constant(vars, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return RatFunc(vars);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const RatFunc inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const RatFunc f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RatMatrix adjugate(const RatMatrix& a) {
  const std::size_t n = a.size();
  const VarList vars = a.front().front().vars();
  RatMatrix adj(n, std::vector<RatFunc>(n, RatFunc(vars)));
  if (n == 1) {
    adj[0][0] = RatFunc::constant(vars, 1);
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      RatFunc cof = determinant(minor_of(a, r, c));
      if ((r + c) % 2 == 1) cof = -cof;
      adj[c][r] = cof;
    }
  }
  return adj;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const VarList vars = a.front().front().vars();
  RatMatrix out(a.size(), std::vector<RatFunc>(b.front().size(), RatFunc(vars)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

DetWitnesses find_det_witnesses(const std::vector<SkewElement>& elems,
                                const std::vector<MultiPoly>& candidates) {
  if (elems.empty()) throw DomainError("no elements given");
  const VarList& vars = elems.front().vars();
  const std::size_t n = elems.size();
  DetWitnesses out;
  RatMatrix cols;  // one row per accepted witness: (X_i(a))_i
  for (const auto& a : candidates) {
    require_same_vars(a.vars(), vars);
    std::vector<RatFunc> col;
    for (const auto& x : elems) col.push_back(evaluate(x, RatFunc(a)));
    cols.push_back(col);
    if (rank_of(cols) < cols.size()) {
      cols.pop_back();
      continue;
    }
    out.witnesses.push_back(a);
    if (cols.size() == n) break;
  }
  if (out.witnesses.size() < n) {
    throw WitnessesNotFoundError("only " + std::to_string(out.witnesses.size()) + " of " +
                                 std::to_string(n) +
                                 " independent witnesses found; the elements may be dependent");
  }
  out.matrix.assign(n, std::vector<RatFunc>(n, RatFunc(vars)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.matrix[i][j] = cols[j][i];
  }
  out.det = determinant(out.matrix);
  const RatMatrix prod = mat_mul(adjugate(out.matrix), out.matrix);
  out.adjugate_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc expect = i == j ? out.det : RatFunc(vars);
      out.adjugate_ok = out.adjugate_ok && prod[i][j] == expect;
    }
  }
  return out;
}

DetWitnesses find_det_witnesses(const std::vector<SkewElement>& elems, const FlagData& data,
                                int max_degree) {
  std::vector<MultiPoly> candidates;
  for (const auto& e : monomials_up_to(data.nvars(), max_degree)) {
    candidates.push_back(MultiPoly::monomial(data.vars(), e));
  }
  return find_det_witnesses(elems, candidates);
}

}  // namespace flagorder
