#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagorder/flag_data.hpp"
#include "flagorder/ideal.hpp"
#include "flagorder/morphism.hpp"
#include "flagorder/report.hpp"
#include "flagorder/tensor.hpp"

namespace flagorder {

/// An element together with the verdict the scenario expects for it.
struct Expectation {
  std::string label;
  SkewElement element;
  /// Tested over the target data instead of the source.
  bool on_target = false;
  bool member = true;
};

/// Everything a worked example needs: data, morphisms, generators and the
/// expected-verdict table.
struct ScenarioBundle {
  std::string name;
  int n = 0;
  FlagData source;
  std::optional<FlagData> target;
  std::optional<Morphism> morphism;
  std::optional<IdealSpec> ideal;
  /// Generators of the complement group H^ for spherical restriction.
  std::vector<Automorphism> h_gens;
  std::optional<TensorData> tensor;
  /// Named element lists, e.g. "generators", "samples", "left", "right".
  std::map<std::string, std::vector<SkewElement>> elements;
  std::vector<Expectation> expected;
};

/// Names accepted by make_scenario, without parameters.
std::vector<std::string> scenario_names();

/// Splits "nilhecke(3)" into ("nilhecke", 3); plain names give nullopt.
std::pair<std::string, std::optional<int>> split_scenario_name(const std::string& text);

/// Builds a scenario; `n` defaults per scenario when absent. Throws
/// DomainError for unknown names and GroupTooLargeError when n is too large.
ScenarioBundle make_scenario(const std::string& name, std::optional<int> n = std::nullopt);

/// One line of a sample file: "member: <expr>" or "non_member: <expr>".
struct SampleLine {
  bool member = true;
  std::string expr;
  int line = 0;
};

/// Reads sample lines; '#' starts a comment. Throws ParseError on a
/// malformed line.
std::vector<SampleLine> parse_sample_file(const std::string& text);

struct ScenarioOptions {
  int degree_bound = kDefaultDegreeBound;
  int word_len = 4;
  std::vector<SampleLine> samples;
  std::string samples_source;
};

Report run_scenario(const ScenarioBundle& bundle, const ScenarioOptions& options);

/// Gelfand-Tsetlin variables x_ji, 1 <= i <= j <= n, row by row.
VarList gt_vars(int n);
/// (L_n, S_1 x ... x S_n, Z^{n(n-1)/2}) with delta^{ji} = shift(x_ji:-1).
FlagData gt_data(int n);
/// S_n acting on the first n variables by adjacent transpositions.
FlagData symmetric_data(const VarList& vars, int n);

}  // namespace flagorder
