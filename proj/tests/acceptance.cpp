// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time budget.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagorder/cli.hpp"
#include "flagorder/errors.hpp"
#include "flagorder/intersection.hpp"
#include "flagorder/morphism.hpp"
#include "flagorder/operators.hpp"
#include "flagorder/parser.hpp"
#include "flagorder/scenarios.hpp"
#include "flagorder/tensor.hpp"

using namespace flagorder;

namespace {

const std::string kDir = SCENARIO_DIR;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

VarList numbered(const std::string& stem, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return VarList(names);
}

SkewElement S(const std::string& s, const VarList& v) { return parse_skew(s, v); }

// ---------------------------------------------------------------------------

Outcome nilhecke_relations() {
  Outcome o;
  const FlagData d = symmetric_data(numbered("x", 4), 4);
  const SkewElement zero(d.vars());
  std::vector<SkewElement> ds;
  for (std::size_t i = 1; i <= 3; ++i) ds.push_back(demazure(i, d));
  for (std::size_t i = 0; i < 3; ++i) {
    o.require(ds[i] * ds[i] == zero, "d_" + std::to_string(i + 1) + "^2 = 0");
    const MembershipVerdict v = member_standard(ds[i], d, 6);
    o.require(v.status == MemberStatus::member && v.mode == MembershipMode::exact_squarefree,
              "d_" + std::to_string(i + 1) + " exact member");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    o.require(ds[i] * ds[i + 1] * ds[i] == ds[i + 1] * ds[i] * ds[i + 1], "braid relation " + std::to_string(i + 1));
  }
  o.note("3 generators, 2 braid relations, exact mode");
  return o;
}

Outcome klein_images() {
  Outcome o;
  const ScenarioBundle b = make_scenario("klein4_s4");
  const Morphism& m = *b.morphism;
  const MorphismReport r = check_morphism(m.source, m.target, m.phi, m.psi_w, m.psi_m, m.complement);
  o.require(r.pass && r.complement_ok.value_or(false), "build_morphism validates");
  const VarList& t = m.target.vars();
  const VarList& s = m.source.vars();
  const SkewElement gx = S("1/x*(sign(x) - id)", s);
  const SkewElement gy = S("1/y*(sign(y) - id)", s);
  o.require(apply_morphism(m, gx) == S("1/(x2-x1)*(perm(1 2) - id)", t), "image of d_x");
  o.require(apply_morphism(m, gy) == S("1/(x4-x3)*(perm(3 4) - id)", t), "image of d_y");
  for (const auto& g : {gx, gy}) o.require(check_restriction(m, g, 6).holds(), "restriction of " + g.to_string());
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const FlagData d = symmetric_data(numbered("x", 3), 3);
  const VarList& v = d.vars();
  std::vector<SkewElement> corpus;
  std::vector<SkewElement> ds = {demazure(1, d), demazure(2, d)};
  corpus.insert(corpus.end(), ds.begin(), ds.end());
  corpus.push_back(ds[0] * ds[1]);
  corpus.push_back(ds[1] * ds[0]);
  corpus.push_back(ds[0] * ds[1] * ds[0]);
  for (const auto& w : d.group()) corpus.push_back(SkewElement::group_element(v, w));
  for (const auto& f : {"x1", "x2^2 - x3", "x1*x2*x3 + 1", "3/2*x3"}) {
    corpus.push_back(S(f, v) * ds[0]);
    corpus.push_back(ds[1] * S(f, v));
  }
  corpus.push_back(S("(x1 + x2)*perm(1 2 3)", v));
  const std::size_t members_declared = corpus.size();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 2), coef(1, 9);
  const char* pairs[3][2] = {{"(x2-x1)", "perm(1 2)"}, {"(x3-x2)", "perm(2 3)"}, {"(x3-x1)", "perm(1 3)"}};
  for (int k = 0; k < 10; ++k) {
    const auto& p = pairs[pick(rng)];
    const std::string c = std::to_string(coef(rng));
    corpus.push_back(S("(" + c + "/" + p[0] + ")*" + p[1] + " + x" + std::to_string(pick(rng) + 1) + "*id", v));
  }
  int conflicts = 0;
  int witnesses = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SkewElement& x = corpus[i];
    const MembershipVerdict ex = member_standard(x, d, 8);
    if (i < members_declared) o.require(ex.holds(), "declared member " + x.to_string());
    if (i >= members_declared) o.require(ex.status == MemberStatus::non_member, "declared non-member " + x.to_string());
    for (int bound : {2, 4, 6, 8}) {
      const MembershipVerdict bd = member_standard(x, d, bound, ModeRequest::bounded);
      const bool conflict = (ex.status == MemberStatus::member && bd.status == MemberStatus::non_member) ||
                            (ex.status == MemberStatus::non_member && ex.witness &&
                             ex.witness->total_degree() <= bound && bd.status != MemberStatus::non_member) ||
                            (bd.status == MemberStatus::non_member && ex.status != MemberStatus::non_member);
      if (conflict) ++conflicts;
    }
    if (ex.status == MemberStatus::non_member) {
      o.require(ex.witness.has_value(), "witness present for " + x.to_string());
      if (ex.witness && !evaluate(x, RatFunc(*ex.witness)).is_polynomial()) ++witnesses;
    }
  }
  o.require(corpus.size() >= 30, "corpus has at least 30 elements");
  o.require(conflicts == 0, "no exact/bounded conflicts");
  o.require(witnesses == 10, "10 non-member witnesses re-verified");
  o.note(std::to_string(corpus.size()) + " elements, " + std::to_string(conflicts) + " conflicts, " +
         std::to_string(witnesses) + " witnesses re-verified");
  return o;
}

Outcome action_coherence() {
  Outcome o;
  const VarList v = numbered("x", 3);
  std::vector<Automorphism> shifts;
  for (std::size_t i = 0; i < 3; ++i) shifts.push_back(Automorphism::shift(3, i, -1));
  const FlagData d(v, parse_automorphism_list("perm(1 2),perm(2 3)", v), shifts);
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> small(-2, 2), idx(0, 2);
  const auto& group = d.group();
  std::uniform_int_distribution<std::size_t> gpick(0, group.size() - 1);
  auto random_poly = [&] {
    MultiPoly p = MultiPoly::constant(v, small(rng));
    for (int k = 0; k < 2; ++k) {
      Exponents e(3, 0);
      e[static_cast<std::size_t>(idx(rng))] += 1;
      e[static_cast<std::size_t>(idx(rng))] += k;
      p += MultiPoly::monomial(v, e, small(rng));
    }
    return p;
  };
  auto random_element = [&] {
    SkewElement x(v);
    for (int k = 0; k < 2; ++k) {
      std::vector<Rat> t(3);
      for (auto& c : t) c = small(rng);
      const Automorphism w = group[gpick(rng)].compose(Automorphism({0, 1, 2}, {1, 1, 1}, t));
      const std::size_t i = static_cast<std::size_t>(idx(rng));
      const MultiPoly den = MultiPoly::variable(v, i) - MultiPoly::variable(v, (i + 1) % 3) +
                            MultiPoly::constant(v, small(rng));
      x += SkewElement::term(RatFunc(random_poly(), den), w);
    }
    return x;
  };
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const SkewElement x = random_element(), y = random_element(), z = random_element();
    const RatFunc a(random_poly());
    o.require(evaluate(x * y, a) == evaluate(x, evaluate(y, a)), "action property, triple " + std::to_string(k));
    o.require((x * y) * z == x * (y * z), "associativity, triple " + std::to_string(k));
    ++checked;
  }
  o.note(std::to_string(checked) + " triples over S3 x| Z^3");
  return o;
}

Outcome split_intersection() {
  Outcome o;
  const ScenarioBundle b = make_scenario("klein4_s4");
  const auto& samples = b.elements.at("samples");
  o.require(samples.size() == 20, "20 samples");
  const IntersectionReport r = check_intersection(*b.morphism, *b.ideal, samples, 6);
  for (const auto& h : r.hypotheses) o.require(h.pass, "hypothesis " + h.name);
  o.require(r.counterexamples.empty(), "biconditional on every sample");
  int members = 0;
  for (const auto& s : r.samples) members += s.source_member ? 1 : 0;
  const QuotientEmbeddingReport q = check_quotient_embedding(*b.morphism, *b.ideal, samples, 6);
  o.require(q.pass, "eta well defined on the samples");
  o.note(std::to_string(r.samples.size()) + " samples, " + std::to_string(members) + " members");
  return o;
}

Outcome counterexample_probe() {
  Outcome o;
  ScenarioOptions opts;
  opts.degree_bound = 8;
  const Report r = run_scenario(make_scenario("counterexample_23"), opts);
  const auto& per_bound = r.data.at("quotient_class_eq_23_id");
  o.require(per_bound.size() == 8, "verdicts for bounds 1..8 computed");
  bool flagged = false;
  for (const auto& c : r.checks) {
    if (c.name == "quotient_class_23") flagged = c.informational && c.detail.find("open question") != std::string::npos;
  }
  o.require(flagged, "discrepancy flagged as an open question");
  if (!per_bound.empty()) o.note("computed quotient_class_eq((23), id) at bound 8: " + per_bound.at("8").get<std::string>());
  return o;
}

void tensor_factor_checks(Outcome& o, const std::string& label, const TensorData& t,
                          const std::vector<SkewElement>& g1, const std::vector<SkewElement>& g2) {
  std::mt19937 rng(label.size());
  std::uniform_int_distribution<std::size_t> p1(0, g1.size() - 1), p2(0, g2.size() - 1);
  int multiplicative = 0;
  for (int k = 0; k < 20; ++k) {
    const SkewElement& a = g1[p1(rng)];
    const SkewElement& b = g1[p1(rng)];
    const SkewElement& c = g2[p2(rng)];
    const SkewElement& d = g2[p2(rng)];
    if (tensor_embed(t, a * b, c * d) == tensor_embed(t, a, c) * tensor_embed(t, b, d)) ++multiplicative;
    o.require(member_standard(tensor_embed(t, a, c), t.joint, 6).holds(), label + ": embedded member");
  }
  o.require(multiplicative == 20, label + ": multiplicative on 20 pairs");
  const SkewElement e = symmetrizer(t.joint);
  const SkewElement e1 = embed_left(t, symmetrizer(t.left));
  const SkewElement e2 = embed_right(t, symmetrizer(t.right));
  o.require(e == e1 * e2 && e == e2 * e1, label + ": e = e1 e2 = e2 e1");
}

Outcome tensor_chain() {
  Outcome o;
  const TensorData nil = make_tensor_data(symmetric_data(VarList({"x1", "x2"}), 2),
                                          symmetric_data(VarList({"y1", "y2"}), 2));
  const VarList& l = nil.left.vars();
  const VarList& r = nil.right.vars();
  tensor_factor_checks(o, "nilHecke", nil, {demazure(1, nil.left), S("x1", l), S("perm(1 2)", l), S("x2^2", l)},
                       {demazure(1, nil.right), S("y2", r), S("perm(1 2)", r), S("y1 + 1", r)});

  const TensorData weyl = make_tensor_data(FlagData(VarList({"x"}), {}, {Automorphism::shift(1, 0, -1)}),
                                           FlagData(VarList({"y"}), {}, {Automorphism::shift(1, 0, -1)}));
  const VarList& wl = weyl.left.vars();
  const VarList& wr = weyl.right.vars();
  tensor_factor_checks(o, "Weyl", weyl, {S("x", wl), S("shift(x:-1)", wl), S("shift(x:1)", wl), S("x*shift(x:-1)", wl)},
                       {S("y", wr), S("shift(y:-1)", wr), S("shift(y:1)", wr), S("y^2*shift(y:1)", wr)});

  const TensorWitnesses tw = find_tensor_witnesses(nil, {S("id", l), S("perm(1 2)", l)},
                                                   {S("id", r), S("perm(1 2)", r)}, 2);
  o.require(tw.joint.witnesses.size() == 4, "4 simple-tensor witnesses");
  o.require(tw.joint.adjugate_ok, "A' A = det Id");
  o.require(!tw.joint.det.is_zero(), "det nonzero");
  o.note("det = " + tw.joint.det.to_string());
  return o;
}

Outcome gt_chain() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const ScenarioBundle b = make_scenario("gt_chain", n);
    const std::string tag = "gt_chain(" + std::to_string(n) + ")";
    o.require(check_separation(b.source, 3).pass, tag + " separation");
    o.require(check_invariance(b.source, 4).pass, tag + " invariance");
    const Morphism& m = *b.morphism;
    o.require(check_morphism(m.source, m.target, m.phi, m.psi_w, m.psi_m, m.complement).pass, tag + " Phi validates");
    const auto& samples = b.elements.at("samples");
    o.require(samples.size() == 10, tag + " has 10 samples");
    for (const auto& x : samples) {
      o.require(member_standard(x, m.source, 4).holds(), tag + " sample is a member");
      o.require(check_restriction(m, x, 4).holds(), tag + " image is a member");
    }
    const DirectProductReport dp = check_direct_product(m, b.h_gens);
    o.note(tag + " direct-product hypothesis: " + (dp.pass ? "holds" : "fails"));
  }
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string manifest = kDir + "/manifest.json";
  const std::vector<std::string> all = {"scenario", "run", "all", "--manifest", manifest, "--json"};
  const CliResult a = run_cli(all);
  const CliResult b = run_cli(all);
  o.require(a.out == b.out && !a.out.empty(), "byte-identical JSON across two runs");
  o.require(a.exit_code == 0, "bundle run exits 0");
  std::ifstream in(manifest);
  const nlohmann::json j = nlohmann::json::parse(in);
  int scenarios = 0;
  for (const auto& s : j.at("scenarios")) {
    std::string name = s.at("name").get<std::string>();
    if (s.contains("params")) name += "(" + std::to_string(s["params"]["n"].get<int>()) + ")";
    std::vector<std::string> argv = {"scenario", "run", name};
    if (s.contains("samples")) {
      argv.push_back("--samples");
      argv.push_back(kDir + "/" + s["samples"].get<std::string>());
    }
    o.require(run_cli(argv).exit_code == 0, name + " exits 0");
    ++scenarios;
  }
  int fixtures = 0;
  for (const auto& f : j.at("fixtures")) {
    std::vector<std::string> argv;
    for (const auto& x : f.at("argv")) {
      std::string s = x.get<std::string>();
      const auto pos = s.find("{dir}");
      if (pos != std::string::npos) s.replace(pos, 5, kDir);
      argv.push_back(s);
    }
    o.require(run_cli(argv).exit_code == 1, "fixture " + f.at("name").get<std::string>() + " exits 1");
    ++fixtures;
  }
  o.note(std::to_string(scenarios) + " scenarios, " + std::to_string(fixtures) + " broken fixtures");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "nilHecke relations", 5, nilhecke_relations},
      {2, "Klein four into S4", 10, klein_images},
      {3, "exact and bounded oracles agree", 60, oracle_agreement},
      {4, "action and ring coherence", 30, action_coherence},
      {5, "split intersection", 60, split_intersection},
      {6, "counterexample probe (reported only)", 60, counterexample_probe},
      {7, "tensor chain", 30, tensor_chain},
      {8, "Gelfand-Tsetlin chain", 120, gt_chain},
      {9, "CLI determinism and exit codes", 300, cli_determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.notes.push_back("over the time budget");
    }
    all = all && o.pass;
    std::ostringstream line;
    line << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << std::fixed
         << std::setprecision(2) << secs << " s, budget " << c.budget_s << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
