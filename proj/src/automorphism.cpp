#include "flagorder/automorphism.hpp"

#include <algorithm>

#include "flagorder/errors.hpp"

namespace flagorder {

Automorphism::Automorphism(std::vector<std::size_t> perm, std::vector<int> signs,
                           std::vector<Rat> shifts)
    : perm_(std::move(perm)), signs_(std::move(signs)), shifts_(std::move(shifts)) {
  const std::size_t n = perm_.size();
  if (signs_.size() != n || shifts_.size() != n) {
    throw AlignmentError("automorphism components have different lengths");
  }
  std::vector<bool> hit(n, false);
  for (auto p : perm_) {
    if (p >= n || hit[p]) throw InvalidGeneratorError("permutation is not a bijection");
    hit[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidGeneratorError("sign must be +1 or -1");
  }
}

Automorphism Automorphism::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return Automorphism(std::move(p), std::vector<int>(n, 1), std::vector<Rat>(n, Rat(0)));
}

Automorphism Automorphism::permutation(std::vector<std::size_t> images) {
  const std::size_t n = images.size();
  return Automorphism(std::move(images), std::vector<int>(n, 1), std::vector<Rat>(n, Rat(0)));
}

Automorphism Automorphism::cycle(std::size_t n, const std::vector<std::size_t>& entries) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<bool> seen(n, false);
  for (auto e : entries) {
    if (e >= n) throw InvalidGeneratorError("cycle entry out of range");
    if (seen[e]) throw InvalidGeneratorError("cycle has a repeated entry");
    seen[e] = true;
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    p[entries[k]] = entries[(k + 1) % entries.size()];
  }
  return permutation(std::move(p));
}

Automorphism Automorphism::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j) throw InvalidGeneratorError("transposition needs two distinct indices");
  return cycle(n, {i, j});
}

Automorphism Automorphism::sign_flip(std::size_t n, std::size_t i) {
  Automorphism a = identity(n);
  if (i >= n) throw InvalidGeneratorError("sign flip index out of range");
  a.signs_[i] = -1;
  return a;
}

Automorphism Automorphism::shift(std::size_t n, std::size_t i, const Rat& t) {
  Automorphism a = identity(n);
  if (i >= n) throw InvalidGeneratorError("shift index out of range");
  a.shifts_[i] = t;
  return a;
}

bool Automorphism::is_identity() const { return is_pure_shift() && is_signed_permutation(); }

bool Automorphism::is_signed_permutation() const {
  return std::all_of(shifts_.begin(), shifts_.end(), [](const Rat& t) { return t == 0; });
}

bool Automorphism::is_pure_shift() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

Automorphism Automorphism::compose(const Automorphism& w) const {
  if (w.size() != size()) throw AlignmentError("composing automorphisms of different arity");
  const std::size_t n = size();
  Automorphism r;
  r.perm_.resize(n);
  r.signs_.resize(n);
  r.shifts_.resize(n);
  // v(w(x_i)) = v(s^w_i x_{sw(i)} + t^w_i) = s^w_i (s^v_j x_{sv(j)} + t^v_j) + t^w_i, j = sw(i).
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = w.perm_[i];
    r.perm_[i] = perm_[j];
    r.signs_[i] = w.signs_[i] * signs_[j];
    r.shifts_[i] = w.signs_[i] * shifts_[j] + w.shifts_[i];
  }
  return r;
}

Automorphism Automorphism::inverse() const {
  const std::size_t n = size();
  Automorphism r;
  r.perm_.resize(n);
  r.signs_.resize(n);
  r.shifts_.resize(n);
  // x_j = s_i^{-1}(a(x_i) - t_i) with j = perm(i).
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = perm_[i];
    r.perm_[j] = i;
    r.signs_[j] = signs_[i];
    r.shifts_[j] = -signs_[i] * shifts_[i];
  }
  return r;
}

Automorphism Automorphism::signed_part() const {
  Automorphism r = *this;
  for (auto& t : r.shifts_) t = 0;
  return r;
}

Automorphism Automorphism::shift_part() const {
  Automorphism r = identity(size());
  r.shifts_ = shifts_;
  return r;
}

MultiPoly Automorphism::image_of_variable(std::size_t i, const VarList& vars) const {
  MultiPoly x = MultiPoly::variable(vars, perm_[i]) * Rat(signs_[i]);
  return x + MultiPoly::constant(vars, shifts_[i]);
}

MultiPoly Automorphism::apply(const MultiPoly& p) const {
  if (p.nvars() != size()) throw AlignmentError("automorphism arity does not match polynomial");
  if (is_identity() || p.is_constant()) return p;
  if (is_signed_permutation()) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Exponents e(size(), 0);
      int sign = 1;
      for (std::size_t i = 0; i < size(); ++i) {
        e[perm_[i]] += t.exps[i];
        if (signs_[i] < 0 && (t.exps[i] & 1)) sign = -sign;
      }
      out.push_back(Term{std::move(e), sign > 0 ? t.coeff : Rat(-t.coeff)});
    }
    return MultiPoly::from_terms(p.vars(), std::move(out));
  }
  std::vector<MultiPoly> images;
  images.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) images.push_back(image_of_variable(i, p.vars()));
  return p.substitute(images, p.vars());
}

RatFunc Automorphism::apply(const RatFunc& f) const {
  if (is_identity()) return f;
  return RatFunc::from_coprime(apply(f.num()), apply(f.den()));
}

std::string Automorphism::to_string(const VarList& vars) const {
  if (vars.size() != size()) throw AlignmentError("automorphism arity does not match variables");
  std::vector<std::string> atoms;
  std::vector<bool> done(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (done[i] || perm_[i] == i) continue;
    std::string c = "perm(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) c += ' ';
      c += std::to_string(j + 1);
      first = false;
      j = perm_[j];
    }
    atoms.push_back(c + ")");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (signs_[i] < 0) atoms.push_back("sign(" + vars[i] + ")");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (shifts_[i] != 0) atoms.push_back("shift(" + vars[i] + ":" + flagorder::to_string(shifts_[i]) + ")");
  }
  if (atoms.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) out += '*';
    out += atoms[k];
  }
  return out;
}

bool operator<(const Automorphism& a, const Automorphism& b) {
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
  if (a.signs_ != b.signs_) return a.signs_ < b.signs_;
  for (std::size_t i = 0; i < a.shifts_.size() && i < b.shifts_.size(); ++i) {
    if (a.shifts_[i] != b.shifts_[i]) return a.shifts_[i] < b.shifts_[i];
  }
  return a.shifts_.size() < b.shifts_.size();
}

Automorphism extend_automorphism(const Automorphism& a, const VarList& from, const VarList& to) {
  if (a.size() != from.size()) throw AlignmentError("automorphism arity does not match variables");
  std::vector<std::size_t> pos(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto idx = to.index_of(from[i]);
    if (!idx) throw AlignmentError("variable '" + from[i] + "' missing from target list");
    pos[i] = *idx;
  }
  Automorphism r = Automorphism::identity(to.size());
  std::vector<std::size_t> perm = r.perm();
  std::vector<int> signs = r.signs();
  std::vector<Rat> shifts = r.shifts();
  for (std::size_t i = 0; i < from.size(); ++i) {
    perm[pos[i]] = pos[a.perm()[i]];
    signs[pos[i]] = a.signs()[i];
    shifts[pos[i]] = a.shifts()[i];
  }
  return Automorphism(std::move(perm), std::move(signs), std::move(shifts));
}

}  // namespace flagorder
