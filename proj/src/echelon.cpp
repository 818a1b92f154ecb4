#include "flagorder/echelon.hpp"

namespace flagorder {

MultiPoly PolyEchelon::reduce(const MultiPoly& p) const {
  MultiPoly r = p;
  bool changed = true;
  while (changed && !r.is_zero()) {
    changed = false;
    for (const auto& t : r.terms()) {
      auto it = rows_.find(t.exps);
      if (it == rows_.end()) continue;
      r -= it->second * t.coeff;
      changed = true;
      break;
    }
  }
  return r;
}

bool PolyEchelon::insert(const MultiPoly& p) {
  MultiPoly r = reduce(p);
  if (r.is_zero()) return false;
  r = r.monic();
  rows_.emplace(r.leading_term().exps, std::move(r));
  return true;
}

}  // namespace flagorder
