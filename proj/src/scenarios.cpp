#include "flagorder/scenarios.hpp"

#include <set>
#include <sstream>

#include "flagorder/errors.hpp"
#include "flagorder/intersection.hpp"
#include "flagorder/operators.hpp"
#include "flagorder/parser.hpp"

namespace flagorder {

namespace {

SkewElement scalar(const MultiPoly& p) { return SkewElement::scalar(RatFunc(p)); }

SkewElement element(const VarList& vars, const Automorphism& a) {
  return SkewElement::group_element(vars, a);
}

Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::partial || b == Status::partial) return Status::partial;
  return Status::pass;
}

VarList numbered_vars(const std::string& stem, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return VarList(std::move(names));
}

MultiPoly var(const VarList& vars, const std::string& name) { return MultiPoly::variable(vars, name); }

std::vector<SkewElement> dedupe(std::vector<SkewElement> xs, std::size_t limit) {
  std::vector<SkewElement> out;
  std::set<std::string> seen;
  for (auto& x : xs) {
    if (out.size() == limit) break;
    if (seen.insert(x.to_string()).second) out.push_back(std::move(x));
  }
  return out;
}

// Round-robin over several kinds of elements so small limits still mix them.
std::vector<SkewElement> interleave(const std::vector<std::vector<SkewElement>>& kinds) {
  std::vector<SkewElement> out;
  for (std::size_t k = 0;; ++k) {
    bool any = false;
    for (const auto& kind : kinds) {
      if (k < kind.size()) {
        out.push_back(kind[k]);
        any = true;
      }
    }
    if (!any) return out;
  }
}

int require_n(const std::string& name, std::optional<int> n, int fallback, int lo, int hi) {
  const int v = n.value_or(fallback);
  if (v < lo) throw DomainError(name + " needs n >= " + std::to_string(lo));
  if (v > hi) {
    throw GroupTooLargeError(name + "(" + std::to_string(v) + ") is too large; n <= " +
                             std::to_string(hi));
  }
  return v;
}

// ---------------------------------------------------------------- builders

ScenarioBundle klein4_s4() {
  ScenarioBundle b;
  b.name = "klein4_s4";
  const VarList src({"x", "y"});
  const VarList tgt = numbered_vars("x", 4);
  b.source = FlagData(src, {Automorphism::sign_flip(2, 0), Automorphism::sign_flip(2, 1)}, {});
  b.source.w_labels = {"tau_x", "tau_y"};
  b.target = symmetric_data(tgt, 4);
  const MultiPoly x1 = var(tgt, "x1"), x2 = var(tgt, "x2"), x3 = var(tgt, "x3"), x4 = var(tgt, "x4");
  b.morphism = build_morphism(b.source, *b.target, {x2 - x1, x4 - x3},
                              {Automorphism::transposition(4, 0, 1), Automorphism::transposition(4, 2, 3)},
                              {}, std::vector<MultiPoly>{x1 + x2, x3 + x4});
  b.ideal = IdealSpec{{x2 + x1, x4 + x3}};

  const SkewElement dx = parse_skew("1/x*(sign(x) - id)", src);
  const SkewElement dy = parse_skew("1/y*(sign(y) - id)", src);
  b.elements["generators"] = {dx, dy};
  const SkewElement x = scalar(var(src, "x"));
  const SkewElement y = scalar(var(src, "y"));
  const SkewElement tx = element(src, b.source.w_gens()[0]);
  const SkewElement ty = element(src, b.source.w_gens()[1]);
  b.elements["samples"] = {
      dx, dy, x, y, tx, ty, dx * dy, x * dx, dx * x, tx * ty, x * x, dx * ty, x + y, dy * y,
      parse_skew("1/x*id", src), parse_skew("1/y*sign(x)", src),
      parse_skew("1/(x+y)*(sign(x) - id)", src), parse_skew("1/x*(sign(x) + id)", src),
      parse_skew("1/(x*y)*(sign(x)*sign(y) - id)", src), parse_skew("1/x*sign(x)", src)};
  b.expected = {
      {"d_x in F_L1", dx, false, true},
      {"d_y in F_L1", dy, false, true},
      {"(1/x) id not in F_L1", parse_skew("1/x*id", src), false, false},
      {"d_1 in F_L2", parse_skew("1/(x2-x1)*(perm(1 2) - id)", tgt), true, true},
      {"d_3 in F_L2", parse_skew("1/(x4-x3)*(perm(3 4) - id)", tgt), true, true},
  };
  return b;
}

ScenarioBundle nilhecke(int n) {
  ScenarioBundle b;
  b.name = "nilhecke";
  b.n = n;
  const VarList vars = numbered_vars("x", n);
  b.source = symmetric_data(vars, n);
  std::vector<SkewElement> gens;
  for (int i = 1; i < n; ++i) gens.push_back(demazure(static_cast<std::size_t>(i), b.source));
  b.elements["demazure"] = gens;
  for (const auto& d : gens) b.expected.push_back({"d in F_L: " + d.to_string(), d, false, true});
  b.expected.push_back({"(1/x1) id not in F_L", parse_skew("1/x1*id", vars), false, false});
  if (n >= 2) {
    b.expected.push_back({"x1 d_1 in F_L", scalar(var(vars, "x1")) * gens[0], false, true});
    b.expected.push_back(
        {"(1/(x2-x1)) (12) not in F_L", parse_skew("1/(x2-x1)*perm(1 2)", vars), false, false});
  }
  return b;
}

ScenarioBundle alt_nilhecke(int n) {
  ScenarioBundle b;
  b.name = "alt_nilhecke";
  b.n = n;
  const VarList vars = numbered_vars("x", n);
  std::vector<Automorphism> cycles;
  std::vector<std::string> labels;
  for (int i = 0; i + 2 < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    cycles.push_back(Automorphism::cycle(static_cast<std::size_t>(n), {k, k + 1, k + 2}));
    labels.push_back(cycles.back().to_string(vars));
  }
  b.source = FlagData(vars, cycles, {});
  b.source.w_labels = labels;
  b.target = symmetric_data(vars, n);
  std::vector<MultiPoly> phi;
  for (int i = 0; i < n; ++i) phi.push_back(MultiPoly::variable(vars, static_cast<std::size_t>(i)));
  b.morphism = build_morphism(b.source, *b.target, phi, cycles, {}, std::vector<MultiPoly>{});
  const SkewElement c = element(vars, cycles[0]);
  const SkewElement x1 = scalar(var(vars, "x1"));
  const SkewElement x2 = scalar(var(vars, "x2"));
  b.elements["samples"] = {x1, c, x2 * c, c * c, (x1 + x2) * c * c, x1 * c - c * x1};
  if (n >= 4) b.elements["samples"].push_back(element(vars, cycles[1]) * x1);
  b.elements["non_members"] = {parse_skew("1/(x2-x1)*(perm(1 2 3) - id)", vars),
                               parse_skew("1/x1*id", vars)};
  for (const auto& s : b.elements["samples"]) b.expected.push_back({"member " + s.to_string(), s, false, true});
  for (const auto& s : b.elements["non_members"]) {
    b.expected.push_back({"non-member " + s.to_string(), s, false, false});
  }
  return b;
}

std::vector<SkewElement> gt_samples(const FlagData& d, int n) {
  const VarList& vars = d.vars();
  std::vector<SkewElement> polys;
  std::vector<SkewElement> group;
  std::vector<SkewElement> shifts;
  std::vector<SkewElement> divided;
  std::vector<SkewElement> products;
  for (std::size_t i = 0; i < vars.size(); ++i) polys.push_back(scalar(MultiPoly::variable(vars, i)));
  for (const auto& w : d.w_gens()) group.push_back(element(vars, w));
  for (const auto& m : d.m_gens()) {
    shifts.push_back(element(vars, m));
    shifts.push_back(element(vars, m.inverse()));
  }
  for (const auto& w : d.w_gens()) {
    std::size_t a = 0;
    while (w.perm()[a] == a) ++a;
    divided.push_back(divided_difference(a, w.perm()[a], d));
  }
  for (std::size_t k = 0; k < shifts.size() && k < 4; ++k) {
    if (!divided.empty()) products.push_back(shifts[k] * divided[k % divided.size()]);
    products.push_back(polys[k % polys.size()] * shifts[k]);
  }
  std::vector<SkewElement> all = interleave({divided, shifts, products, group, polys});
  if (n == 1) {
    const MultiPoly x = MultiPoly::variable(vars, 0);
    for (unsigned k = 2; k < 12; ++k) all.push_back(scalar(x.pow(k) + MultiPoly::constant(vars, k)));
  }
  return dedupe(std::move(all), 10);
}

ScenarioBundle gt_chain(int n) {
  ScenarioBundle b;
  b.name = "gt_chain";
  b.n = n;
  b.source = gt_data(n);
  b.target = gt_data(n + 1);
  const VarList& src = b.source.vars();
  const VarList& tgt = b.target->vars();
  std::vector<MultiPoly> phi;
  for (const auto& name : src.names()) phi.push_back(var(tgt, name));
  std::vector<Automorphism> psi_w;
  std::vector<Automorphism> psi_m;
  for (const auto& g : b.source.w_gens()) psi_w.push_back(extend_automorphism(g, src, tgt));
  for (const auto& g : b.source.m_gens()) psi_m.push_back(extend_automorphism(g, src, tgt));
  std::vector<MultiPoly> complement;
  for (int i = 1; i <= n + 1; ++i) complement.push_back(var(tgt, "x" + std::to_string(n + 1) + std::to_string(i)));
  b.morphism = build_morphism(b.source, *b.target, phi, psi_w, psi_m, complement);
  // H: permutations of the new row and the new shifts delta^{n,i}.
  const std::size_t tn = tgt.size();
  for (int i = 1; i <= n; ++i) {
    const auto a = *tgt.index_of("x" + std::to_string(n + 1) + std::to_string(i));
    b.h_gens.push_back(Automorphism::transposition(tn, a, a + 1));
  }
  for (int i = 1; i <= n; ++i) {
    const auto a = *tgt.index_of("x" + std::to_string(n) + std::to_string(i));
    b.h_gens.push_back(Automorphism::shift(tn, a, -1));
  }
  b.elements["samples"] = gt_samples(b.source, n);
  for (const auto& s : b.elements["samples"]) b.expected.push_back({"member " + s.to_string(), s, false, true});
  return b;
}

FlagData weyl_data(const VarList& vars) {
  std::vector<Automorphism> shifts;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    shifts.push_back(Automorphism::shift(vars.size(), i, -1));
    labels.push_back("sigma_" + vars[i]);
  }
  FlagData d(vars, {}, shifts, true);
  d.m_labels = labels;
  return d;
}

std::vector<SkewElement> weyl_generators(const FlagData& d) {
  std::vector<SkewElement> out;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    out.push_back(scalar(MultiPoly::variable(d.vars(), i)));
    out.push_back(element(d.vars(), d.m_gens()[i]));
    out.push_back(element(d.vars(), d.m_gens()[i].inverse()));
  }
  return out;
}

ScenarioBundle weyl(int n) {
  ScenarioBundle b;
  b.name = "weyl";
  b.n = n;
  const VarList vars = numbered_vars("x", n);
  b.source = weyl_data(vars);
  b.elements["generators"] = weyl_generators(b.source);
  for (const auto& g : b.elements["generators"]) b.expected.push_back({"member " + g.to_string(), g, false, true});
  b.expected.push_back({"(1/x1) sigma not in F_L", parse_skew("1/x1*shift(x1:-1)", vars), false, false});
  if (n >= 2) {
    std::vector<std::string> rest(vars.names().begin() + 1, vars.names().end());
    b.tensor = make_tensor_data(weyl_data(VarList({vars[0]})), weyl_data(VarList(rest)));
    b.elements["left"] = weyl_generators(b.tensor->left);
    b.elements["right"] = weyl_generators(b.tensor->right);
  }
  return b;
}

std::vector<SkewElement> end_generators(const FlagData& d) {
  std::vector<SkewElement> out;
  for (std::size_t i = 0; i < d.nvars(); ++i) out.push_back(scalar(MultiPoly::variable(d.vars(), i)));
  for (const auto& w : d.w_gens()) out.push_back(element(d.vars(), w));
  for (std::size_t i = 1; i < d.nvars(); ++i) out.push_back(demazure(i, d));
  return out;
}

ScenarioBundle endgamma(int n) {
  ScenarioBundle b;
  b.name = "endgamma";
  b.n = n;
  const VarList vars = numbered_vars("x", n);
  b.source = symmetric_data(vars, n);
  b.elements["generators"] = end_generators(b.source);
  for (const auto& g : b.elements["generators"]) b.expected.push_back({"member " + g.to_string(), g, false, true});
  b.tensor = make_tensor_data(b.source, symmetric_data(numbered_vars("y", n), n));
  b.elements["left"] = end_generators(b.tensor->left);
  b.elements["right"] = end_generators(b.tensor->right);
  return b;
}

ScenarioBundle counterexample_23() {
  ScenarioBundle b;
  b.name = "counterexample_23";
  const VarList src({"x1"});
  const VarList tgt = numbered_vars("x", 3);
  b.source = FlagData(src, {}, {});
  b.target = symmetric_data(tgt, 3);
  b.morphism = build_morphism(b.source, *b.target, {var(tgt, "x1")}, {}, {},
                              std::vector<MultiPoly>{var(tgt, "x2"), var(tgt, "x3")});
  b.ideal = IdealSpec{{var(tgt, "x2"), var(tgt, "x3")}};
  b.elements["probe"] = {parse_skew("perm(2 3)", tgt), SkewElement::one(tgt)};
  b.elements["samples"] = {scalar(var(src, "x1")), SkewElement::one(src),
                           scalar(var(src, "x1").pow(2)), parse_skew("1/x1*id", src)};
  b.expected = {{"(23) in F_L2", b.elements["probe"][0], true, true}};
  return b;
}

// ------------------------------------------------------------------ runners

void run_expectations(Report& r, const ScenarioBundle& b, int bound) {
  if (b.expected.empty()) return;
  std::vector<std::string> wrong;
  Status st = Status::pass;
  for (const auto& e : b.expected) {
    const FlagData& d = e.on_target ? *b.target : b.source;
    const MembershipVerdict v = member_standard(e.element, d, bound);
    if (v.holds() != e.member) {
      wrong.push_back(e.label + " (got " + to_string(v.status) + ")");
    } else if (v.status == MemberStatus::member_up_to_degree) {
      st = combine(st, Status::partial);
    }
  }
  r.add_check("expected_verdicts", wrong.empty() ? st : Status::fail,
              std::to_string(b.expected.size()) + " elements", wrong);
}

void run_samples(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  if (o.samples.empty()) return;
  std::vector<std::string> wrong;
  Status st = Status::pass;
  for (const auto& s : o.samples) {
    const SkewElement x = parse_skew(s.expr, b.source.vars());
    const MembershipVerdict v = member_standard(x, b.source, o.degree_bound);
    if (v.holds() != s.member) {
      std::string w = "line " + std::to_string(s.line) + ": " + s.expr + " expected " +
                      (s.member ? "member" : "non_member") + ", got " + to_string(v.status);
      if (v.witness) w += " (witness " + v.witness->to_string() + ")";
      wrong.push_back(std::move(w));
    } else if (v.status == MemberStatus::member_up_to_degree) {
      st = combine(st, Status::partial);
    }
  }
  r.add_check("sample_file", wrong.empty() ? st : Status::fail,
              std::to_string(o.samples.size()) + " expressions from " + o.samples_source, wrong);
}

void add_verdict_check(Report& r, const std::string& name, const MembershipVerdict& v,
                       const std::string& detail) {
  std::vector<std::string> w;
  if (v.witness) w.push_back(v.witness->to_string());
  r.add_check(name, status_of(v), detail + (v.note.empty() ? "" : "; " + v.note), w);
}

void run_klein(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const Morphism& m = *b.morphism;
  const MorphismReport mr = check_morphism(m.source, m.target, m.phi, m.psi_w, m.psi_m, m.complement);
  r.add_check("morphism", mr.pass, "compatibility, relations and complement decomposition", mr.violations);

  const VarList& tgt = m.target.vars();
  const SkewElement img_x = apply_morphism(m, b.elements.at("generators")[0]);
  const SkewElement img_y = apply_morphism(m, b.elements.at("generators")[1]);
  const SkewElement want_x = parse_skew("1/(x2-x1)*(perm(1 2) - id)", tgt);
  const SkewElement want_y = parse_skew("1/(x4-x3)*(perm(3 4) - id)", tgt);
  r.add_check("image_d_x", img_x == want_x, img_x.to_string());
  r.add_check("image_d_y", img_y == want_y, img_y.to_string());
  r.data["images"] = {{"d_x", img_x.to_string()}, {"d_y", img_y.to_string()}};

  Status st = Status::pass;
  std::vector<std::string> w;
  for (const auto& g : b.elements.at("generators")) {
    const MembershipVerdict v = check_restriction(m, g, o.degree_bound);
    st = combine(st, status_of(v));
    if (v.witness) w.push_back(g.to_string() + " at " + v.witness->to_string());
  }
  r.add_check("restriction", st, "images of the generators lie in F_L2", w);

  const auto& samples = b.elements.at("samples");
  const IntersectionReport ir = check_intersection(m, *b.ideal, samples, o.degree_bound);
  for (const auto& h : ir.hypotheses) r.add_check("hypothesis_" + h.name, h.pass, "", h.witnesses);
  std::size_t members = 0;
  for (const auto& s : ir.samples) members += s.source_member ? 1 : 0;
  r.add_check("intersection", ir.counterexamples.empty() ? Status::partial : Status::fail,
              std::to_string(ir.samples.size()) + " samples (" + std::to_string(members) +
                  " members), X in F_L1 iff Phi(X) in F_L2 up to the degree bound",
              ir.counterexamples);

  const QuotientEmbeddingReport qr = check_quotient_embedding(m, *b.ideal, samples, o.degree_bound);
  std::vector<std::string> qw = qr.not_fixing;
  qw.insert(qw.end(), qr.action_mismatch.begin(), qr.action_mismatch.end());
  qw.insert(qw.end(), qr.class_mismatch.begin(), qr.class_mismatch.end());
  r.add_check("quotient_embedding", qr.pass ? Status::partial : Status::fail,
              "eta well defined and injective on the member samples", qw);
}

void run_nilhecke(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const FlagData& d = b.source;
  const auto& ds = b.elements.at("demazure");
  const SkewElement zero(d.vars());
  std::vector<std::string> w;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!(ds[i] * ds[i] == zero)) w.push_back("d_" + std::to_string(i + 1) + "^2");
  }
  r.add_check("nil_relations", w.empty(), "d_i^2 = 0", w);
  w.clear();
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    if (!(ds[i] * ds[i + 1] * ds[i] == ds[i + 1] * ds[i] * ds[i + 1])) {
      w.push_back("d_" + std::to_string(i + 1) + " d_" + std::to_string(i + 2));
    }
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 2; j < ds.size(); ++j) {
      if (!(ds[i] * ds[j] == ds[j] * ds[i])) {
        w.push_back("d_" + std::to_string(i + 1) + " d_" + std::to_string(j + 1) + " commute");
      }
    }
  }
  r.add_check("braid_relations", w.empty(), "braid and distant commutation relations", w);
  w.clear();
  bool all_exact = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const MembershipVerdict v = member_standard(ds[i], d, o.degree_bound);
    if (v.status != MemberStatus::member || v.mode != MembershipMode::exact_squarefree) {
      all_exact = false;
      w.push_back("d_" + std::to_string(i + 1) + ": " + to_string(v.status));
    }
  }
  r.add_check("demazure_membership", all_exact, "every d_i is an exact member", w);

  w.clear();
  const VarList& vars = d.vars();
  std::vector<MultiPoly> fs;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const MultiPoly x = MultiPoly::variable(vars, i);
    fs.push_back(x);
    fs.push_back(x.pow(2) + MultiPoly::constant(vars, 1));
  }
  if (vars.size() >= 2) fs.push_back(MultiPoly::variable(vars, 0) * MultiPoly::variable(vars, 1).pow(2));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Automorphism s = Automorphism::transposition(vars.size(), i, i + 1);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        const RatFunc lhs = evaluate(ds[i], RatFunc(f * g));
        const RatFunc rhs = evaluate(ds[i], RatFunc(f)) * RatFunc(g) +
                            RatFunc(s.apply(f)) * evaluate(ds[i], RatFunc(g));
        if (!(lhs == rhs)) w.push_back("d_" + std::to_string(i + 1) + " on " + f.to_string() + ", " + g.to_string());
      }
    }
  }
  r.add_check("twisted_leibniz", w.empty(), "d(fg) = d(f) g + s(f) d(g)", w);

  const SkewElement e = symmetrizer(d);
  r.add_check("symmetrizer_idempotent", e * e == e, "e^2 = e with #W = " + std::to_string(d.group().size()));
  if (!ds.empty()) {
    r.add_check("spherical_demazure", spherical_project(ds[0], d) == zero, "e d_1 e = 0");
  }
  const SkewElement x1 = SkewElement::scalar(RatFunc(MultiPoly::variable(vars, 0)));
  add_verdict_check(r, "spherical_x1", check_spherical(x1, d, o.degree_bound),
                    "e x1 e maps invariants to invariants");

  Status st = Status::pass;
  w.clear();
  for (const auto& a : ds) {
    for (const auto& c : ds) {
      const MembershipVerdict v = member_standard(a * c, d, o.degree_bound);
      st = combine(st, status_of(v));
      if (v.witness) w.push_back((a * c).to_string());
    }
    const MembershipVerdict v = member_standard(x1 * a, d, o.degree_bound);
    st = combine(st, status_of(v));
  }
  r.add_check("product_closure", st, "products of generators stay in F_L", w);
}

void run_alt(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const Morphism& m = *b.morphism;
  const MorphismReport mr = check_morphism(m.source, m.target, m.phi, m.psi_w, m.psi_m, m.complement);
  r.add_check("morphism", mr.pass, "phi = identity, psi: A_n -> S_n", mr.violations);
  Status st = Status::pass;
  std::vector<std::string> w;
  for (const auto& s : b.elements.at("samples")) {
    const MembershipVerdict v = check_restriction(m, s, o.degree_bound);
    st = combine(st, status_of(v));
    if (v.witness) w.push_back(s.to_string());
  }
  r.add_check("restriction", st, "images of members lie in the S_n standard flag order", w);
  w.clear();
  for (const auto& s : b.elements.at("non_members")) {
    const bool src = member_standard(s, m.source, o.degree_bound).holds();
    const bool tgt = member_standard(apply_morphism(m, s), m.target, o.degree_bound).holds();
    if (src || tgt) w.push_back(s.to_string());
  }
  r.add_check("non_members", w.empty(), "non-members stay non-members under Phi", w);
}

void run_gt(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const int len = std::min(3, o.word_len);
  const AxiomReport sep = check_separation(b.source, len);
  std::vector<std::string> w;
  for (const auto& a : sep.witnesses) w.push_back(a.to_string(b.source.vars()));
  r.add_check("separation", sep.pass ? Status::partial : Status::fail,
              "word length " + std::to_string(len) + ", " + std::to_string(sep.checked) + " words", w);
  const AxiomReport inv = check_invariance(b.source, o.word_len);
  w.clear();
  for (const auto& a : inv.witnesses) w.push_back(a.to_string(b.source.vars()));
  r.add_check("invariance", inv.pass ? Status::partial : Status::fail,
              "word length " + std::to_string(o.word_len) + ", " + std::to_string(inv.checked) + " conjugates", w);

  const Morphism& m = *b.morphism;
  const MorphismReport mr = check_morphism(m.source, m.target, m.phi, m.psi_w, m.psi_m, m.complement);
  r.add_check("morphism", mr.pass, "Phi_n: F_L" + std::to_string(b.n) + " -> F_L" + std::to_string(b.n + 1),
              mr.violations);

  Status st = Status::pass;
  w.clear();
  const auto& samples = b.elements.at("samples");
  for (const auto& s : samples) {
    const MembershipVerdict v = check_restriction(m, s, o.degree_bound);
    st = combine(st, status_of(v));
    if (v.witness) w.push_back(s.to_string() + " at " + v.witness->to_string());
  }
  r.add_check("restriction", st, std::to_string(samples.size()) + " sampled members mapped into F_L" +
                                     std::to_string(b.n + 1), w);

  const DirectProductReport dp = check_direct_product(m, b.h_gens);
  Check& c = r.add_check("direct_product_hypothesis", dp.pass ? Status::pass : Status::fail,
                         dp.pass ? "W2^ = psi(W1^) x H^ holds"
                                 : "W2^ = psi(W1^) x H^ fails; spherical restriction does not apply",
                         dp.violations);
  c.informational = true;
  r.data["direct_product_hypothesis"] = dp.pass ? "holds" : "fails";
}

void run_weyl(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const FlagData& d = b.source;
  const VarList& vars = d.vars();
  std::vector<std::string> w;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const SkewElement s = element(vars, d.m_gens()[i]);
    const SkewElement si = element(vars, d.m_gens()[i].inverse());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const MultiPoly xj = MultiPoly::variable(vars, j);
      const MultiPoly shifted = i == j ? xj - MultiPoly::constant(vars, 1) : xj;
      if (!(s * scalar(xj) == scalar(shifted) * s)) w.push_back("sigma_" + vars[i] + " " + vars[j]);
      if (!(s * element(vars, d.m_gens()[j]) == element(vars, d.m_gens()[j]) * s)) {
        w.push_back("sigma_" + vars[i] + " sigma_" + vars[j]);
      }
    }
    if (!(s * si == SkewElement::one(vars))) w.push_back("sigma_" + vars[i] + " inverse");
  }
  r.add_check("relations", w.empty(), "sigma x = (x - 1) sigma and commutation", w);

  const AxiomReport sep = check_separation(d, std::min(3, o.word_len));
  const AxiomReport inv = check_invariance(d, o.word_len);
  r.add_check("axioms", sep.pass && inv.pass ? Status::partial : Status::fail,
              "separation and invariance up to the word length");

  std::vector<SkewElement> supports;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const SkewElement x = scalar(MultiPoly::variable(vars, i));
    supports.push_back(x * element(vars, d.m_gens()[i]));
    supports.push_back(x * element(vars, d.m_gens()[i].inverse()));
  }
  const GenerationReport gen = supports_generate_monoid(supports, d, std::min(3, o.word_len));
  r.add_check("monoid_generation", gen.pass ? Status::partial : Status::fail,
              "supports of x sigma and x sigma^-1 generate M");

  if (b.tensor) {
    const TensorData& t = *b.tensor;
    const PrincipalTensorReport pt = check_principal_tensor(t, b.elements.at("left"), b.elements.at("right"),
                                                            o.degree_bound, 3);
    for (const auto& c : pt.checks) {
      Check& added = r.add_check("tensor_" + c.name, c.pass ? Status::pass : Status::fail, c.detail, c.witnesses);
      added.informational = !c.machine_checked;
    }
    r.add_check("tensor_joint_data", t.joint.m_gens() == d.m_gens(),
                "A_1 (x) A_" + std::to_string(b.n - 1) + " has the data of A_" + std::to_string(b.n));
    r.data["tensor_products_checked"] = pt.products_checked;
  }
}

void run_endgamma(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const FlagData& d = b.source;
  std::vector<SkewElement> group;
  for (const auto& w : d.group()) group.push_back(element(d.vars(), w));
  const DetWitnesses dw = find_det_witnesses(group, d, o.degree_bound);
  r.add_check("det_witnesses", !dw.det.is_zero() && dw.adjugate_ok, "det = " + dw.det.to_string());

  const TensorData& t = *b.tensor;
  const int len = b.n <= 2 ? 3 : 2;
  const PrincipalTensorReport pt =
      check_principal_tensor(t, b.elements.at("left"), b.elements.at("right"), o.degree_bound, len);
  for (const auto& c : pt.checks) {
    Check& added = r.add_check("tensor_" + c.name, c.pass ? Status::pass : Status::fail, c.detail, c.witnesses);
    added.informational = !c.machine_checked;
  }
  const SkewElement e1 = embed_left(t, symmetrizer(t.left));
  const SkewElement e2 = embed_right(t, symmetrizer(t.right));
  const SkewElement e = symmetrizer(t.joint);
  r.add_check("symmetrizer_factors", e == e1 * e2 && e == e2 * e1, "e = e1 e2 = e2 e1");

  if (group.size() * group.size() <= 4) {
    std::vector<SkewElement> g2;
    for (const auto& w : t.right.group()) g2.push_back(element(t.right.vars(), w));
    const TensorWitnesses tw = find_tensor_witnesses(t, group, g2, o.degree_bound);
    std::vector<std::string> ws;
    for (const auto& a : tw.joint.witnesses) ws.push_back(a.to_string());
    r.add_check("tensor_witnesses", tw.det_factors && tw.joint.adjugate_ok,
                "simple-tensor witnesses, det = " + tw.joint.det.to_string());
    r.data["tensor_witnesses"] = ws;
  }
}

void run_counterexample(Report& r, const ScenarioBundle& b, const ScenarioOptions& o) {
  const Morphism& m = *b.morphism;
  const IntersectionReport ir = check_intersection(m, *b.ideal, b.elements.at("samples"), o.degree_bound);
  for (const auto& h : ir.hypotheses) r.add_check("hypothesis_" + h.name, h.pass, "", h.witnesses);
  r.add_check("intersection", ir.counterexamples.empty() ? Status::partial : Status::fail,
              "X in F_L1 iff Phi(X) in F_L2 on the samples", ir.counterexamples);

  const SkewElement& t23 = b.elements.at("probe")[0];
  const SkewElement& one = b.elements.at("probe")[1];
  const MembershipVerdict fixes = member_fixes_ideal(t23, *b.ideal, m.target, o.degree_bound);
  add_verdict_check(r, "fixes_ideal_23", fixes, "(23) lies in F_L2[I]");

  const int top = std::max(8, o.degree_bound);
  nlohmann::json per_bound = nlohmann::json::object();
  std::string last;
  for (int d = 1; d <= top; ++d) {
    const QuotientVerdict q = quotient_class_eq(t23, one, *b.ideal, m.target, d);
    last = to_string(q.status);
    per_bound[std::to_string(d)] = last;
  }
  r.data["quotient_class_eq_23_id"] = per_bound;
  const bool equal = last != "not_equal";
  Check& c = r.add_check(
      "quotient_class_23", equal ? Status::partial : Status::pass,
      equal ? "computed: equal_up_to_degree at every bound up to " + std::to_string(top) +
                  "; (23) and id act identically on L2 / I, so the claim that the class of (23) "
                  "lies outside the image of eta is not confirmed by this test (open question, "
                  "not asserted)"
            : "computed: classes differ, consistent with the claim");
  c.informational = true;
  r.notes.push_back(
      "open question: the strictness of F_L1 in F_L2[I] / I F_L2 for I = (x2, x3) is not settled by "
      "this computation");
}

}  // namespace

VarList gt_vars(int n) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= j; ++i) names.push_back("x" + std::to_string(j) + std::to_string(i));
  }
  return VarList(std::move(names));
}

FlagData gt_data(int n) {
  const VarList vars = gt_vars(n);
  const std::size_t nv = vars.size();
  std::vector<Automorphism> w;
  std::vector<std::string> wl;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      const auto a = *vars.index_of("x" + std::to_string(j) + std::to_string(i));
      w.push_back(Automorphism::transposition(nv, a, a + 1));
      wl.push_back(w.back().to_string(vars));
    }
  }
  std::vector<Automorphism> m;
  std::vector<std::string> ml;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i <= j; ++i) {
      const auto a = *vars.index_of("x" + std::to_string(j) + std::to_string(i));
      m.push_back(Automorphism::shift(nv, a, -1));
      ml.push_back("delta" + std::to_string(j) + std::to_string(i));
    }
  }
  FlagData d(vars, std::move(w), std::move(m), true);
  d.w_labels = std::move(wl);
  d.m_labels = std::move(ml);
  return d;
}

FlagData symmetric_data(const VarList& vars, int n) {
  std::vector<Automorphism> w;
  std::vector<std::string> labels;
  for (int i = 0; i + 1 < n; ++i) {
    w.push_back(Automorphism::transposition(vars.size(), static_cast<std::size_t>(i),
                                            static_cast<std::size_t>(i + 1)));
    labels.push_back(w.back().to_string(vars));
  }
  FlagData d(vars, std::move(w), {});
  d.w_labels = std::move(labels);
  return d;
}

std::vector<std::string> scenario_names() {
  return {"klein4_s4", "nilhecke", "alt_nilhecke", "gt_chain", "weyl", "endgamma", "counterexample_23"};
}

std::pair<std::string, std::optional<int>> split_scenario_name(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {text, std::nullopt};
  if (text.back() != ')') throw DomainError("malformed scenario name '" + text + "'");
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  try {
    std::size_t used = 0;
    const int n = std::stoi(inner, &used);
    if (used != inner.size()) throw DomainError("");
    return {text.substr(0, open), n};
  } catch (const std::exception&) {
    throw DomainError("malformed scenario parameter in '" + text + "'");
  }
}

ScenarioBundle make_scenario(const std::string& name, std::optional<int> n) {
  if (name == "klein4_s4") return klein4_s4();
  if (name == "nilhecke") return nilhecke(require_n(name, n, 3, 1, 4));
  if (name == "alt_nilhecke") return alt_nilhecke(require_n(name, n, 3, 3, 4));
  if (name == "gt_chain") return gt_chain(require_n(name, n, 2, 1, 3));
  if (name == "weyl") return weyl(require_n(name, n, 2, 1, 4));
  if (name == "endgamma") return endgamma(require_n(name, n, 2, 1, 3));
  if (name == "counterexample_23") return counterexample_23();
  throw DomainError("unknown scenario '" + name + "'");
}

std::vector<SampleLine> parse_sample_file(const std::string& text) {
  std::vector<SampleLine> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<verdict>: <expression>'", lineno, 1);
    std::string verdict = line.substr(0, colon);
    verdict.erase(0, verdict.find_first_not_of(" \t"));
    verdict.erase(verdict.find_last_not_of(" \t") + 1);
    SampleLine s;
    s.line = lineno;
    if (verdict == "member") {
      s.member = true;
    } else if (verdict == "non_member") {
      s.member = false;
    } else {
      throw ParseError("unknown verdict '" + verdict + "'", lineno, 1);
    }
    s.expr = line.substr(colon + 1);
    out.push_back(std::move(s));
  }
  return out;
}

Report run_scenario(const ScenarioBundle& b, const ScenarioOptions& o) {
  Report r;
  r.command = "scenario " + b.name + (b.n > 0 ? "(" + std::to_string(b.n) + ")" : "");
  r.degree_bound = o.degree_bound;
  r.word_len = o.word_len;
  r.data["scenario"] = b.name;
  if (b.n > 0) r.data["n"] = b.n;
  if (b.name == "klein4_s4") run_klein(r, b, o);
  else if (b.name == "nilhecke") run_nilhecke(r, b, o);
  else if (b.name == "alt_nilhecke") run_alt(r, b, o);
  else if (b.name == "gt_chain") run_gt(r, b, o);
  else if (b.name == "weyl") run_weyl(r, b, o);
  else if (b.name == "endgamma") run_endgamma(r, b, o);
  else if (b.name == "counterexample_23") run_counterexample(r, b, o);
  run_expectations(r, b, o.degree_bound);
  run_samples(r, b, o);
  r.finalize();
  return r;
}

}  // namespace flagorder
