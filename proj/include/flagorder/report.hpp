#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagorder/membership.hpp"

namespace flagorder {

enum class Status { pass, fail, partial };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  std::vector<std::string> witnesses;
  /// Reported but never turns the overall status to fail.
  bool informational = false;
};

/// Outcome of one CLI command or scenario.
///
/// A fail report always carries a witness and a partial report states its
/// degree bound; finalize() enforces both.
struct Report {
  std::string command;
  Status status = Status::pass;
  std::string mode;
  std::optional<int> degree_bound;
  std::optional<int> word_len;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::vector<Check> checks;
  /// Command-specific payload (results, verdict objects, nested reports).
  nlohmann::json data = nlohmann::json::object();
  std::optional<double> timing_ms;

  Check& add_check(std::string name, Status status, std::string detail = {},
                   std::vector<std::string> witnesses = {});
  Check& add_check(std::string name, bool pass, std::string detail = {},
                   std::vector<std::string> witnesses = {});
  /// Folds check outcomes into status and witnesses.
  void finalize();
};

enum class ReportFormat { text, json };

nlohmann::json report_to_json(const Report& r);
/// JSON is compact with sorted keys, so equal reports give identical bytes.
std::string emit_report(const Report& r, ReportFormat format);

/// 0 for pass and partial, 1 for fail.
int exit_code(const Report& r);

/// JSON verdict object {status, mode, degree_bound, witness}.
nlohmann::json verdict_to_json(const MembershipVerdict& v);
Status status_of(const MembershipVerdict& v);

}  // namespace flagorder
