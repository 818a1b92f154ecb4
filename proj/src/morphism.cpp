#include "flagorder/morphism.hpp"

#include <set>

#include "flagorder/echelon.hpp"
#include "flagorder/errors.hpp"
#include "flagorder/operators.hpp"

namespace flagorder {

namespace {

std::string label_of(const FlagData& data, bool is_w, std::size_t j) {
  const auto& labels = is_w ? data.w_labels : data.m_labels;
  if (j < labels.size() && !labels[j].empty()) return labels[j];
  return (is_w ? data.w_gens()[j] : data.m_gens()[j]).to_string(data.vars());
}

Automorphism power(const Automorphism& a, const Integer& k) {
  Automorphism base = k < 0 ? a.inverse() : a;
  Integer e = abs(k);
  Automorphism r = Automorphism::identity(a.size());
  while (e > 0) {
    if (e.get_ui() & 1U) r = r.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return r;
}

std::map<Automorphism, Automorphism> enumerate_graph(const FlagData& source,
                                                     const std::vector<Automorphism>& psi_w,
                                                     std::size_t target_n,
                                                     std::vector<std::string>& violations) {
  std::map<Automorphism, Automorphism> images;
  std::vector<Automorphism> queue{Automorphism::identity(source.nvars())};
  images.emplace(queue.front(), Automorphism::identity(target_n));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Automorphism x = queue[head];
    const Automorphism img = images.at(x);
    for (std::size_t j = 0; j < source.w_gens().size(); ++j) {
      Automorphism y = source.w_gens()[j].compose(x);
      Automorphism y_img = psi_w[j].compose(img);
      auto [it, inserted] = images.emplace(y, y_img);
      if (inserted) {
        queue.push_back(std::move(y));
        if (queue.size() > kDefaultGroupCap) throw GroupTooLargeError("source W exceeds cap");
      } else if (!(it->second == y_img)) {
        violations.push_back("psi is not a homomorphism on W: two words for " +
                             y.to_string(source.vars()) + " have different images");
        return images;
      }
    }
  }
  return images;
}

std::vector<MultiPoly> products_up_to(const std::vector<MultiPoly>& gens, int degree,
                                      const std::vector<std::string>& names,
                                      std::vector<std::string>& labels) {
  std::vector<MultiPoly> out;
  const VarList& vars = gens.front().vars();
  for (const auto& e : monomials_up_to(gens.size(), degree)) {
    MultiPoly p = MultiPoly::constant(vars, 1);
    std::string label;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (e[k] == 0) continue;
      p *= gens[k].pow(static_cast<unsigned>(e[k]));
      if (!label.empty()) label += "*";
      label += names[k];
      if (e[k] > 1) label += "^" + std::to_string(e[k]);
    }
    out.push_back(std::move(p));
    labels.push_back(label.empty() ? "1" : label);
  }
  return out;
}

}  // namespace

MorphismReport check_morphism(const FlagData& source, const FlagData& target,
                              const std::vector<MultiPoly>& phi,
                              const std::vector<Automorphism>& psi_w,
                              const std::vector<Automorphism>& psi_m,
                              const std::optional<std::vector<MultiPoly>>& complement,
                              int complement_degree) {
  MorphismReport r;
  const VarList& src = source.vars();
  const VarList& tgt = target.vars();
  if (phi.size() != src.size()) throw AlignmentError("phi needs one image per source variable");
  if (psi_w.size() != source.w_gens().size() || psi_m.size() != source.m_gens().size()) {
    throw AlignmentError("psi needs one image per source generator");
  }
  for (const auto& p : phi) require_same_vars(p.vars(), tgt);
  for (const auto& a : psi_w) {
    if (a.size() != tgt.size()) throw AlignmentError("psi image acts on the wrong variables");
  }
  for (const auto& a : psi_m) {
    if (a.size() != tgt.size()) throw AlignmentError("psi image acts on the wrong variables");
  }

  // phi(w(x_i)) = psi(w)(phi(x_i)) on generators.
  auto compat = [&](const Automorphism& g, const Automorphism& img, const std::string& label) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      const MultiPoly lhs = g.image_of_variable(i, src).substitute(phi, tgt);
      const MultiPoly rhs = img.apply(phi[i]);
      if (!(lhs == rhs)) {
        r.violations.push_back("compatibility fails at (" + label + ", " + src[i] +
                               "): phi(w(a)) = " + lhs.to_string() +
                               " but psi(w)(phi(a)) = " + rhs.to_string());
      }
    }
  };
  for (std::size_t j = 0; j < psi_w.size(); ++j) compat(source.w_gens()[j], psi_w[j], label_of(source, true, j));
  for (std::size_t j = 0; j < psi_m.size(); ++j) compat(source.m_gens()[j], psi_m[j], label_of(source, false, j));

  enumerate_graph(source, psi_w, tgt.size(), r.violations);

  if (source.m_commutes()) {
    for (std::size_t i = 0; i < psi_m.size(); ++i) {
      for (std::size_t j = i + 1; j < psi_m.size(); ++j) {
        if (!(psi_m[i].compose(psi_m[j]) == psi_m[j].compose(psi_m[i]))) {
          r.violations.push_back("images of " + label_of(source, false, i) + " and " +
                                 label_of(source, false, j) + " do not commute");
        }
      }
    }
  }
  if (source.is_semidirect()) {
    for (std::size_t a = 0; a < psi_w.size(); ++a) {
      const Automorphism& g = source.w_gens()[a];
      for (std::size_t b = 0; b < psi_m.size(); ++b) {
        const Automorphism c = g.compose(source.m_gens()[b]).compose(g.inverse());
        const auto coords = source.m_coordinates(c);
        if (!coords || coords->empty()) {
          r.note = "conjugation relations not checked: W does not normalize M in coordinates";
          continue;
        }
        Automorphism expected = Automorphism::identity(tgt.size());
        for (std::size_t k = 0; k < coords->size(); ++k) {
          expected = expected.compose(power(psi_m[k], (*coords)[k]));
        }
        const Automorphism actual = psi_w[a].compose(psi_m[b]).compose(psi_w[a].inverse());
        if (!(expected == actual)) {
          r.violations.push_back("psi breaks the relation " + label_of(source, true, a) + " * " +
                                 label_of(source, false, b) + " * " + label_of(source, true, a) +
                                 "^-1 = " + c.to_string(src));
        }
      }
    }
  }

  if (complement) {
    r.complement_degree = complement_degree;
    std::vector<MultiPoly> gens = phi;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < src.size(); ++i) names.push_back("phi(" + src[i] + ")");
    for (std::size_t k = 0; k < complement->size(); ++k) {
      require_same_vars((*complement)[k].vars(), tgt);
      gens.push_back((*complement)[k]);
      names.push_back("u" + std::to_string(k + 1));
    }
    std::vector<std::string> labels;
    const auto prods = products_up_to(gens, complement_degree, names, labels);
    PolyEchelon ech;
    for (std::size_t k = 0; k < prods.size(); ++k) {
      if (!ech.insert(prods[k])) r.dependent.push_back(labels[k]);
    }
    bool linear = gens.size() == tgt.size();
    for (const auto& g : gens) linear = linear && g.total_degree() <= 1;
    bool spans = true;
    if (linear) {
      for (std::size_t i = 0; i < tgt.size(); ++i) {
        spans = spans && ech.reduce(MultiPoly::variable(tgt, i)).is_zero();
      }
    } else {
      spans = gens.size() == tgt.size();
      if (r.note.empty()) r.note = "complement spanning checked by generator count only";
    }
    r.complement_ok = r.dependent.empty() && spans;
    if (!*r.complement_ok) {
      r.violations.push_back(r.dependent.empty()
                                 ? "phi(L1) and U do not generate the target"
                                 : "phi(L1) and U are dependent at degree " +
                                       std::to_string(complement_degree));
    }
  }
  r.pass = r.violations.empty();
  return r;
}

Morphism build_morphism(const FlagData& source, const FlagData& target,
                        std::vector<MultiPoly> phi, std::vector<Automorphism> psi_w,
                        std::vector<Automorphism> psi_m,
                        std::optional<std::vector<MultiPoly>> complement, int complement_degree) {
  const MorphismReport rep =
      check_morphism(source, target, phi, psi_w, psi_m, complement, complement_degree);
  if (!rep.pass) {
    std::string msg = "invalid morphism";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw CompatibilityError(msg);
  }
  Morphism m{source, target, std::move(phi), std::move(psi_w), std::move(psi_m),
             std::move(complement), {}};
  std::vector<std::string> unused;
  m.w_images = enumerate_graph(source, m.psi_w, target.nvars(), unused);
  return m;
}

RatFunc apply_phi(const Morphism& m, const RatFunc& f) {
  require_same_vars(f.vars(), m.source.vars());
  return f.substitute(m.phi, m.target.vars());
}

Automorphism apply_psi(const Morphism& m, const Automorphism& w) {
  const FlagData& s = m.source;
  if (s.is_semidirect()) {
    auto it = m.w_images.find(w.signed_part());
    const auto coords = s.m_coordinates(w.shift_part());
    if (it != m.w_images.end() && coords && (!coords->empty() || s.m_gens().empty() ||
                                             w.shift_part().is_identity())) {
      Automorphism r = it->second;
      for (std::size_t k = 0; k < coords->size(); ++k) r = r.compose(power(m.psi_m[k], (*coords)[k]));
      return r;
    }
    if (it == m.w_images.end() || !coords) {
      throw DomainError(w.to_string(s.vars()) + " is outside the group generated by the source data");
    }
  }
  // Generic path: search words in the generators together with their images.
  std::vector<std::pair<Automorphism, Automorphism>> letters;
  for (std::size_t j = 0; j < s.w_gens().size(); ++j) letters.emplace_back(s.w_gens()[j], m.psi_w[j]);
  for (std::size_t j = 0; j < s.m_gens().size(); ++j) {
    letters.emplace_back(s.m_gens()[j], m.psi_m[j]);
    if (s.m_is_group()) letters.emplace_back(s.m_gens()[j].inverse(), m.psi_m[j].inverse());
  }
  std::map<Automorphism, Automorphism> seen;
  std::vector<Automorphism> layer{Automorphism::identity(s.nvars())};
  seen.emplace(layer.front(), Automorphism::identity(m.target.nvars()));
  for (int len = 0; len <= 8; ++len) {
    if (auto it = seen.find(w); it != seen.end()) return it->second;
    std::vector<Automorphism> next;
    for (const auto& x : layer) {
      const Automorphism img = seen.at(x);
      for (const auto& [g, gi] : letters) {
        Automorphism y = x.compose(g);
        if (seen.emplace(y, img.compose(gi)).second) next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  throw DomainError(w.to_string(s.vars()) + " is outside the group generated by the source data");
}

SkewElement apply_morphism(const Morphism& m, const SkewElement& x) {
  require_same_vars(x.vars(), m.source.vars());
  SkewElement r(m.target.vars());
  for (const auto& [w, f] : x.terms()) r += SkewElement::term(apply_phi(m, f), apply_psi(m, w));
  return r;
}

MembershipVerdict check_restriction(const Morphism& m, const SkewElement& x, int degree_bound) {
  MembershipVerdict src = member_standard(x, m.source, degree_bound);
  if (!src.holds()) {
    src.note = "element is not in the source standard flag order";
    return src;
  }
  MembershipVerdict v = member_standard(apply_morphism(m, x), m.target, degree_bound);
  if (!v.holds()) {
    v.note = "image leaves the target standard flag order; the complement hypothesis is invalid";
  } else if (!m.complement) {
    v.note = "no complement given; the restriction is not guaranteed";
  }
  return v;
}

DirectProductReport check_direct_product(const Morphism& m, const std::vector<Automorphism>& h_gens) {
  DirectProductReport r;
  const VarList& tgt = m.target.vars();
  for (const auto& h : h_gens) {
    if (h.size() != tgt.size()) throw AlignmentError("H generator acts on the wrong variables");
  }
  std::vector<Automorphism> psi_gens = m.psi_w;
  psi_gens.insert(psi_gens.end(), m.psi_m.begin(), m.psi_m.end());
  for (const auto& g : psi_gens) {
    for (const auto& h : h_gens) {
      if (!(g.compose(h) == h.compose(g))) {
        r.violations.push_back("(" + g.to_string(tgt) + ", " + h.to_string(tgt) + ") do not commute");
      }
    }
  }
  std::vector<Automorphism> h_finite;
  std::vector<Automorphism> h_shifts;
  for (const auto& h : h_gens) (h.is_signed_permutation() ? h_finite : h_shifts).push_back(h);
  const auto h_group = enumerate_group(tgt.size(), h_finite);
  const std::set<Automorphism> h_set(h_group.begin(), h_group.end());
  for (const auto& [w, img] : m.w_images) {
    if (!img.is_identity() && h_set.count(img)) {
      r.violations.push_back("psi(W1) and H share " + img.to_string(tgt));
    }
  }
  for (const auto& h : h_gens) {
    for (std::size_t i = 0; i < m.phi.size(); ++i) {
      if (!(h.apply(m.phi[i]) == m.phi[i])) {
        r.violations.push_back(h.to_string(tgt) + " moves phi(" + m.source.vars()[i] + ")");
      }
    }
  }
  if (m.complement) {
    for (const auto& g : psi_gens) {
      for (const auto& u : *m.complement) {
        if (!(g.apply(u) == u)) {
          r.violations.push_back(g.to_string(tgt) + " moves the complement generator " + u.to_string());
        }
      }
    }
  }
  // psi(W1^) and H^ generate W2^.
  std::vector<Automorphism> finite_letters = m.psi_w;
  finite_letters.insert(finite_letters.end(), h_finite.begin(), h_finite.end());
  const auto joint = enumerate_group(tgt.size(), finite_letters);
  const std::set<Automorphism> joint_set(joint.begin(), joint.end());
  for (const auto& g : m.target.w_gens()) {
    if (!joint_set.count(g)) {
      r.violations.push_back(g.to_string(tgt) + " is not generated by psi(W1) and H");
    }
  }
  std::vector<Automorphism> shift_letters = m.psi_m;
  shift_letters.insert(shift_letters.end(), h_shifts.begin(), h_shifts.end());
  bool shifts_pure = true;
  for (const auto& s : shift_letters) shifts_pure = shifts_pure && s.is_pure_shift();
  if (shifts_pure && m.target.is_semidirect()) {
    const FlagData lattice(tgt, {}, shift_letters, m.target.m_is_group());
    for (const auto& g : m.target.m_gens()) {
      if (!lattice.m_coordinates(g)) {
        r.violations.push_back(g.to_string(tgt) + " is not generated by psi(M1) and H");
      }
    }
  }
  r.pass = r.violations.empty();
  return r;
}

SphericalRestriction spherical_restriction(const Morphism& m, const SkewElement& x,
                                           const std::vector<Automorphism>& h_gens) {
  const DirectProductReport rep = check_direct_product(m, h_gens);
  if (!rep.pass) {
    std::string msg = "target group is not a direct product";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw DirectProductError(msg);
  }
  std::vector<Automorphism> h_finite;
  for (const auto& h : h_gens) {
    if (h.is_signed_permutation()) h_finite.push_back(h);
  }
  const FlagData h_data(m.target.vars(), h_finite, {});
  SphericalRestriction out;
  out.image = spherical_project(apply_morphism(m, x), m.target);
  out.expected = apply_morphism(m, spherical_project(x, m.source)) * symmetrizer(h_data);
  out.identity_holds = out.image == out.expected;
  return out;
}

}  // namespace flagorder
