#include "flagorder/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagorder/errors.hpp"
#include "flagorder/intersection.hpp"
#include "flagorder/operators.hpp"
#include "flagorder/parser.hpp"
#include "flagorder/report.hpp"
#include "flagorder/scenarios.hpp"

#ifndef FLAGORDER_SCENARIO_DIR
#define FLAGORDER_SCENARIO_DIR ""
#endif

namespace flagorder {

namespace {

namespace fs = std::filesystem;

constexpr const char* kGrammarHelp =
    "Expressions:\n"
    "  polynomials   3*x1^2*x2 - 1/2, (x1^2-x2^2)/(x1-x2)\n"
    "  automorphisms id, perm(1 2 3) (one-based cycle), sign(x1), shift(x1:-1)\n"
    "  skew elements (1/(x2-x1))*(perm(1 2) - id)\n"
    "Precedence, loosest first: + and -, then * and / (same level, left to\n"
    "right, so 1/(x2-x1)*(...) means (1/(x2-x1))*(...)), then unary -, then ^.\n"
    "A divisor must be a nonzero rational function. Lists are comma separated;\n"
    "element lists for tensor and witnesses use ';'.\n"
    "Exit codes: 0 pass or partial, 1 fail, 2 usage error.";

struct Common {
  std::string vars;
  std::string group;
  std::string monoid;
  bool m_monoid = false;
  int degree_bound = kDefaultDegreeBound;
  int word_len = 4;
  bool json = false;
  std::string mode = "exact";
  bool timing = false;
};

struct Second {
  std::string vars;
  std::string group;
  std::string monoid;
};

void add_common(CLI::App* app, Common& c, bool data = true) {
  if (data) {
    app->add_option("--vars", c.vars, "Variables, e.g. x1,x2,x3")->required();
    app->add_option("--group", c.group, "Generators of W, comma separated");
    app->add_option("--monoid", c.monoid, "Generators of M, comma separated");
    app->add_flag("--m-monoid", c.m_monoid, "Treat M as a monoid (no inverses)");
  }
  app->add_option("--degree-bound", c.degree_bound, "Monomial degree bound for bounded checks")
      ->check(CLI::Range(0, 64));
  app->add_option("--word-len", c.word_len, "Word length for bounded group checks")->check(CLI::Range(0, 12));
  app->add_flag("--json", c.json, "Print a JSON report");
  app->add_option("--mode", c.mode, "Membership mode")->check(CLI::IsMember({"exact", "bounded"}));
  app->add_flag("--timing", c.timing, "Include timing_ms in the report");
}

void add_second(CLI::App* app, Second& s, bool required) {
  auto* v = app->add_option("--vars2", s.vars, "Second variable list");
  if (required) v->required();
  app->add_option("--group2", s.group, "Second W generators");
  app->add_option("--monoid2", s.monoid, "Second M generators");
}

FlagData build_data(const std::string& vars, const std::string& group, const std::string& monoid,
                    bool m_monoid) {
  const VarList v = parse_vars(vars);
  FlagData d(v, parse_automorphism_list(group, v), parse_automorphism_list(monoid, v), !m_monoid);
  d.w_labels.clear();
  for (const auto& g : d.w_gens()) d.w_labels.push_back(g.to_string(v));
  d.m_labels.clear();
  for (const auto& g : d.m_gens()) d.m_labels.push_back(g.to_string(v));
  return d;
}

FlagData build_data(const Common& c) { return build_data(c.vars, c.group, c.monoid, c.m_monoid); }

ModeRequest mode_of(const Common& c) { return c.mode == "bounded" ? ModeRequest::bounded : ModeRequest::exact; }

std::vector<SkewElement> parse_elements(const std::string& text, const VarList& vars) {
  std::vector<SkewElement> out;
  for (const auto& part : split_top_level(text, ';')) out.push_back(parse_skew(part, vars));
  return out;
}

void apply_verdict(Report& r, const MembershipVerdict& v) {
  r.mode = to_string(v.mode);
  r.data["verdict"] = verdict_to_json(v);
  std::vector<std::string> w;
  if (v.witness) w.push_back(v.witness->to_string());
  r.add_check(r.command, status_of(v), v.note, w);
  if (!v.note.empty()) r.notes.push_back(v.note);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw DomainError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::optional<fs::path> find_manifest(const std::string& given) {
  if (!given.empty()) {
    if (!fs::exists(given)) throw DomainError("manifest " + given + " not found");
    return fs::path(given);
  }
  const fs::path local = fs::path("scenarios") / "manifest.json";
  if (fs::exists(local)) return local;
  const std::string dir = FLAGORDER_SCENARIO_DIR;
  if (!dir.empty() && fs::exists(fs::path(dir) / "manifest.json")) return fs::path(dir) / "manifest.json";
  return std::nullopt;
}

struct ManifestEntry {
  std::string name;
  std::optional<int> n;
  std::string samples;
  std::string expect = "pass";
};

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  const nlohmann::json j = nlohmann::json::parse(read_file(path));
  std::vector<ManifestEntry> out;
  for (const auto& s : j.at("scenarios")) {
    ManifestEntry e;
    e.name = s.at("name").get<std::string>();
    if (s.contains("params") && s["params"].contains("n")) e.n = s["params"]["n"].get<int>();
    if (s.contains("samples")) e.samples = s["samples"].get<std::string>();
    if (s.contains("expect")) e.expect = s["expect"].get<std::string>();
    out.push_back(std::move(e));
  }
  return out;
}

Report scenario_report(const std::string& name, std::optional<int> n, const std::string& samples,
                       const Common& c) {
  ScenarioOptions o;
  o.degree_bound = c.degree_bound;
  o.word_len = c.word_len;
  if (!samples.empty()) {
    o.samples = parse_sample_file(read_file(samples));
    o.samples_source = fs::path(samples).filename().string();
  }
  return run_scenario(make_scenario(name, n), o);
}

class Cli {
 public:
  CliResult run(std::vector<std::string> args);

 private:
  Report dispatch();
  Report cmd_eval();
  Report cmd_mul();
  Report cmd_member();
  Report cmd_demazure();
  Report cmd_spherical();
  Report cmd_ideal_member();
  Report cmd_morphism();
  Report cmd_tensor();
  Report cmd_witnesses();
  Report cmd_axioms();
  Report cmd_scenario();
  Report base(const std::string& command) const {
    Report r;
    r.command = command;
    r.degree_bound = c_.degree_bound;
    return r;
  }

  CLI::App app_{"Skew monoid rings, flag orders and Galois orders", "flagorder"};
  Common c_;
  Second s_;
  std::string elem_, elem2_, arg_, ideal_, kind_ = "fixes", compare_;
  std::string phi_, psi_, psi_m_, complement_, gens_, gens2_, elems_, candidates_;
  std::string scenario_name_, manifest_, samples_;
  std::optional<int> n_;
  bool co_ = false;
  std::size_t index_ = 1;
  int max_degree_ = -1;
  CLI::App* eval_ = nullptr;
  CLI::App* mul_ = nullptr;
  CLI::App* member_ = nullptr;
  CLI::App* demazure_ = nullptr;
  CLI::App* spherical_ = nullptr;
  CLI::App* ideal_member_ = nullptr;
  CLI::App* morphism_check_ = nullptr;
  CLI::App* morphism_apply_ = nullptr;
  CLI::App* tensor_check_ = nullptr;
  CLI::App* witnesses_ = nullptr;
  CLI::App* axioms_ = nullptr;
  CLI::App* scenario_run_ = nullptr;
  CLI::App* scenario_list_ = nullptr;
};

CliResult Cli::run(std::vector<std::string> args) {
  app_.footer(kGrammarHelp);
  app_.require_subcommand(1);

  eval_ = app_.add_subcommand("eval", "Evaluate X(a), or the co-evaluation with --co");
  add_common(eval_, c_);
  eval_->add_option("--elem", elem_, "Skew element X")->required();
  eval_->add_option("--arg", arg_, "Rational function a")->required();
  eval_->add_flag("--co", co_, "Use right coefficients");

  mul_ = app_.add_subcommand("mul", "Multiply two skew elements");
  add_common(mul_, c_);
  mul_->add_option("--elem", elem_, "Left factor")->required();
  mul_->add_option("--elem2", elem2_, "Right factor")->required();

  member_ = app_.add_subcommand("member", "Membership in the standard flag order");
  add_common(member_, c_);
  member_->add_option("--elem", elem_, "Skew element")->required();

  demazure_ = app_.add_subcommand("demazure", "Demazure operator d_i (one-based)");
  add_common(demazure_, c_);
  demazure_->add_option("--index", index_, "i in 1..n-1")->required();
  demazure_->add_option("--arg", arg_, "Optional argument to apply d_i to");

  spherical_ = app_.add_subcommand("spherical", "Check e X e on invariants");
  add_common(spherical_, c_);
  spherical_->add_option("--elem", elem_, "Skew element")->required();

  ideal_member_ = app_.add_subcommand("ideal-member", "Membership in F[I], F(I), or equality mod I F");
  add_common(ideal_member_, c_);
  ideal_member_->add_option("--elem", elem_, "Skew element")->required();
  ideal_member_->add_option("--ideal", ideal_, "Ideal generators, comma separated")->required();
  ideal_member_->add_option("--kind", kind_, "fixes: X(I) in I; into: X(L) in I")
      ->check(CLI::IsMember({"fixes", "into"}));
  ideal_member_->add_option("--compare", compare_, "Compare classes of --elem and this element");

  auto* morphism = app_.add_subcommand("morphism", "Morphisms of flag-order data");
  morphism->require_subcommand(1);
  for (auto** sub : {&morphism_check_, &morphism_apply_}) {
    const bool check = sub == &morphism_check_;
    *sub = morphism->add_subcommand(check ? "check" : "apply",
                                    check ? "Validate (phi, psi)" : "Apply Phi to an element");
    add_common(*sub, c_);
    add_second(*sub, s_, true);
    (*sub)->add_option("--phi", phi_, "Images of the source variables")->required();
    (*sub)->add_option("--psi", psi_, "Images of the W generators");
    (*sub)->add_option("--psi-m", psi_m_, "Images of the M generators");
    (*sub)->add_option("--complement", complement_, "Generators of U");
    auto* e = (*sub)->add_option("--elem", elem_, "Source element");
    if (!check) e->required();
  }

  auto* tensor = app_.add_subcommand("tensor", "Tensor products of flag orders");
  tensor->require_subcommand(1);
  tensor_check_ = tensor->add_subcommand("check", "Check the principal tensor conditions");
  add_common(tensor_check_, c_);
  add_second(tensor_check_, s_, true);
  tensor_check_->add_option("--gens", gens_, "Generators of the first factor, ';' separated")->required();
  tensor_check_->add_option("--gens2", gens2_, "Generators of the second factor, ';' separated")->required();

  witnesses_ = app_.add_subcommand("witnesses", "Find a_1..a_n with det(X_i(a_j)) != 0");
  add_common(witnesses_, c_);
  witnesses_->add_option("--elems", elems_, "Elements, ';' separated")->required();
  witnesses_->add_option("--max-degree", max_degree_, "Monomial candidate degree (default: degree bound)");
  witnesses_->add_option("--candidates", candidates_, "Explicit candidates, comma separated");

  axioms_ = app_.add_subcommand("axioms", "Separation and invariance up to the word length");
  add_common(axioms_, c_);

  auto* scenario = app_.add_subcommand("scenario", "Worked examples");
  scenario->require_subcommand(1);
  scenario_run_ = scenario->add_subcommand("run", "Run a scenario, or 'all' from the manifest");
  add_common(scenario_run_, c_, false);
  scenario_run_->add_option("name", scenario_name_, "Scenario name, e.g. nilhecke(3), or all")->required();
  scenario_run_->add_option("--n", n_, "Scenario size parameter");
  scenario_run_->add_option("--manifest", manifest_, "Manifest path");
  scenario_run_->add_option("--samples", samples_, "Sample file: lines 'member: X' or 'non_member: X'");
  scenario_list_ = scenario->add_subcommand("list", "List scenario names");
  add_common(scenario_list_, c_, false);

  CliResult res;
  std::ostringstream out;
  std::ostringstream err;
  std::reverse(args.begin(), args.end());
  try {
    app_.parse(args);
  } catch (const CLI::ParseError& e) {
    res.exit_code = app_.exit(e, out, err) == 0 ? 0 : 2;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Report r = dispatch();
    if (c_.timing) {
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    res.out = emit_report(r, c_.json ? ReportFormat::json : ReportFormat::text);
    res.exit_code = exit_code(r);
  } catch (const ParseError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  }
  return res;
}

Report Cli::dispatch() {
  if (eval_->parsed()) return cmd_eval();
  if (mul_->parsed()) return cmd_mul();
  if (member_->parsed()) return cmd_member();
  if (demazure_->parsed()) return cmd_demazure();
  if (spherical_->parsed()) return cmd_spherical();
  if (ideal_member_->parsed()) return cmd_ideal_member();
  if (morphism_check_->parsed() || morphism_apply_->parsed()) return cmd_morphism();
  if (tensor_check_->parsed()) return cmd_tensor();
  if (witnesses_->parsed()) return cmd_witnesses();
  if (axioms_->parsed()) return cmd_axioms();
  return cmd_scenario();
}

Report Cli::cmd_eval() {
  const FlagData d = build_data(c_);
  Report r = base(co_ ? "coeval" : "eval");
  r.degree_bound.reset();
  const SkewElement x = parse_skew(elem_, d.vars());
  const RatFunc a = parse_ratfunc(arg_, d.vars());
  const RatFunc v = co_ ? coevaluate(x, a) : evaluate(x, a);
  r.data["result"] = v.to_string();
  r.data["polynomial"] = v.is_polynomial();
  r.add_check("evaluate", Status::pass, v.to_string());
  r.finalize();
  return r;
}

Report Cli::cmd_mul() {
  const FlagData d = build_data(c_);
  Report r = base("mul");
  r.degree_bound.reset();
  const SkewElement p = parse_skew(elem_, d.vars()) * parse_skew(elem2_, d.vars());
  r.data["result"] = p.to_string();
  r.add_check("multiply", Status::pass, p.to_string());
  r.finalize();
  return r;
}

Report Cli::cmd_member() {
  const FlagData d = build_data(c_);
  Report r = base("member");
  const SkewElement x = parse_skew(elem_, d.vars());
  apply_verdict(r, member_standard(x, d, c_.degree_bound, mode_of(c_)));
  r.finalize();
  return r;
}

Report Cli::cmd_demazure() {
  const FlagData d = build_data(c_);
  Report r = base("demazure");
  const SkewElement x = demazure(index_, d);
  r.data["element"] = x.to_string();
  if (!arg_.empty()) r.data["result"] = evaluate(x, parse_ratfunc(arg_, d.vars())).to_string();
  apply_verdict(r, member_standard(x, d, c_.degree_bound, mode_of(c_)));
  r.finalize();
  return r;
}

Report Cli::cmd_spherical() {
  const FlagData d = build_data(c_);
  Report r = base("spherical");
  const SkewElement x = parse_skew(elem_, d.vars());
  r.data["projection"] = spherical_project(x, d).to_string();
  apply_verdict(r, check_spherical(x, d, c_.degree_bound));
  r.mode = "degree_bounded";
  r.finalize();
  return r;
}

Report Cli::cmd_ideal_member() {
  const FlagData d = build_data(c_);
  Report r = base("ideal-member");
  const SkewElement x = parse_skew(elem_, d.vars());
  const IdealSpec ideal{parse_poly_list(ideal_, d.vars())};
  r.data["ideal"] = ideal.to_string();
  if (!compare_.empty()) {
    const SkewElement y = parse_skew(compare_, d.vars());
    const QuotientVerdict q = quotient_class_eq(x, y, ideal, d, c_.degree_bound);
    r.data["class_equality"] = to_string(q.status);
    std::vector<std::string> w;
    if (q.witness) w.push_back(q.witness->to_string());
    const Status st = q.status == ClassEquality::equal            ? Status::pass
                      : q.status == ClassEquality::not_equal       ? Status::fail
                                                                   : Status::partial;
    r.mode = q.status == ClassEquality::equal_up_to_degree ? "degree_bounded" : "exact";
    r.add_check("class_equality", st, q.note, w);
  } else if (kind_ == "into") {
    apply_verdict(r, member_into_ideal(x, ideal, d, c_.degree_bound));
  } else {
    apply_verdict(r, member_fixes_ideal(x, ideal, d, c_.degree_bound));
  }
  r.finalize();
  return r;
}

Report Cli::cmd_morphism() {
  const FlagData src = build_data(c_);
  const FlagData tgt = build_data(s_.vars, s_.group, s_.monoid, c_.m_monoid);
  const bool check = morphism_check_->parsed();
  Report r = base(check ? "morphism check" : "morphism apply");
  const std::vector<MultiPoly> phi = parse_poly_list(phi_, tgt.vars());
  const std::vector<Automorphism> psi_w = parse_automorphism_list(psi_, tgt.vars());
  const std::vector<Automorphism> psi_m = parse_automorphism_list(psi_m_, tgt.vars());
  std::optional<std::vector<MultiPoly>> complement;
  if (!complement_.empty()) complement = parse_poly_list(complement_, tgt.vars());
  const MorphismReport mr = check_morphism(src, tgt, phi, psi_w, psi_m, complement);
  r.add_check("morphism", mr.pass, "compatibility and relations", mr.violations);
  if (mr.complement_ok) {
    r.add_check("complement", *mr.complement_ok ? Status::pass : Status::fail,
                            mr.note.empty() ? "L2 = phi(L1) (x) U up to degree " +
                                                  std::to_string(mr.complement_degree)
                                            : mr.note,
                            mr.dependent);
  }
  if (mr.pass && !elem_.empty()) {
    const Morphism m = build_morphism(src, tgt, phi, psi_w, psi_m, complement);
    const SkewElement x = parse_skew(elem_, src.vars());
    const SkewElement y = apply_morphism(m, x);
    r.data["image"] = y.to_string();
    const MembershipVerdict v = check_restriction(m, x, c_.degree_bound);
    r.data["verdict"] = verdict_to_json(v);
    r.mode = to_string(v.mode);
    std::vector<std::string> w;
    if (v.witness) w.push_back(v.witness->to_string());
    r.add_check("restriction", status_of(v), v.note, w);
  }
  r.finalize();
  return r;
}

Report Cli::cmd_tensor() {
  const FlagData left = build_data(c_);
  const FlagData right = build_data(s_.vars, s_.group, s_.monoid, c_.m_monoid);
  Report r = base("tensor check");
  r.word_len = c_.word_len;
  const TensorData t = make_tensor_data(left, right);
  const PrincipalTensorReport pt = check_principal_tensor(
      t, parse_elements(gens_, left.vars()), parse_elements(gens2_, right.vars()), c_.degree_bound, c_.word_len);
  for (const auto& ch : pt.checks) {
    Check& added = r.add_check(ch.name, ch.pass ? Status::pass : Status::fail, ch.detail, ch.witnesses);
    added.informational = !ch.machine_checked;
  }
  r.data["products_checked"] = pt.products_checked;
  r.finalize();
  if (r.status == Status::pass) r.status = Status::partial;
  return r;
}

Report Cli::cmd_witnesses() {
  const FlagData d = build_data(c_);
  Report r = base("witnesses");
  const std::vector<SkewElement> elems = parse_elements(elems_, d.vars());
  const DetWitnesses w = candidates_.empty()
                             ? find_det_witnesses(elems, d, max_degree_ < 0 ? c_.degree_bound : max_degree_)
                             : find_det_witnesses(elems, parse_poly_list(candidates_, d.vars()));
  std::vector<std::string> ws;
  for (const auto& a : w.witnesses) ws.push_back(a.to_string());
  r.data["witnesses"] = ws;
  r.data["det"] = w.det.to_string();
  r.add_check("det_nonzero", !w.det.is_zero(), "det = " + w.det.to_string());
  r.add_check("adjugate", w.adjugate_ok, "A' A = det Id");
  r.finalize();
  return r;
}

Report Cli::cmd_axioms() {
  const FlagData d = build_data(c_);
  Report r = base("axioms");
  r.degree_bound.reset();
  r.word_len = c_.word_len;
  r.mode = "word_bounded";
  for (const auto& [name, rep] : {std::pair{"separation", check_separation(d, c_.word_len)},
                                  std::pair{"invariance", check_invariance(d, c_.word_len)}}) {
    std::vector<std::string> w;
    for (const auto& a : rep.witnesses) w.push_back(a.to_string(d.vars()));
    r.add_check(name, rep.pass ? Status::partial : Status::fail,
                rep.detail + (rep.detail.empty() ? "" : "; ") + std::to_string(rep.checked) + " checked", w);
  }
  r.finalize();
  return r;
}

Report Cli::cmd_scenario() {
  if (scenario_list_->parsed()) {
    Report r = base("scenario list");
    r.degree_bound.reset();
    r.data["scenarios"] = scenario_names();
    r.finalize();
    return r;
  }
  if (scenario_name_ != "all") {
    auto [name, n] = split_scenario_name(scenario_name_);
    if (n_) n = n_;
    return scenario_report(name, n, samples_, c_);
  }

  Report r = base("scenario run all");
  r.word_len = c_.word_len;
  std::vector<ManifestEntry> entries;
  fs::path dir;
  if (const auto path = find_manifest(manifest_)) {
    entries = read_manifest(*path);
    dir = path->parent_path();
  } else {
    for (const auto& name : scenario_names()) entries.push_back({name, std::nullopt, {}, "pass"});
    r.notes.push_back("no manifest found; running every scenario with default parameters");
  }
  nlohmann::json nested = nlohmann::json::array();
  for (const auto& e : entries) {
    const std::string samples = e.samples.empty() ? std::string() : (dir / e.samples).string();
    const Report sub = scenario_report(e.name, e.n, samples, c_);
    nested.push_back(report_to_json(sub));
    const bool ok = (sub.status != Status::fail) == (e.expect != "fail");
    r.add_check(sub.command, ok ? sub.status == Status::partial ? Status::partial : Status::pass : Status::fail,
                "expected " + e.expect + ", got " + to_string(sub.status), ok ? std::vector<std::string>{} : sub.witnesses);
  }
  r.data["scenarios"] = nested;
  r.finalize();
  return r;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Cli cli;
  return cli.run(args);
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CliResult r = run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace flagorder
