#include "flagorder/report.hpp"

#include <sstream>

namespace flagorder {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::partial: return "partial";
  }
  return "?";
}

Check& Report::add_check(std::string name, Status st, std::string detail,
                         std::vector<std::string> wits) {
  checks.push_back(Check{std::move(name), st, std::move(detail), std::move(wits), false});
  return checks.back();
}

Check& Report::add_check(std::string name, bool pass, std::string detail,
                         std::vector<std::string> wits) {
  return add_check(std::move(name), pass ? Status::pass : Status::fail, std::move(detail),
                   std::move(wits));
}

void Report::finalize() {
  for (const auto& c : checks) {
    if (c.informational) continue;
    if (c.status == Status::fail) {
      status = Status::fail;
      if (c.witnesses.empty()) {
        witnesses.push_back(c.name);
      } else {
        for (const auto& w : c.witnesses) witnesses.push_back(c.name + ": " + w);
      }
    } else if (c.status == Status::partial && status == Status::pass) {
      status = Status::partial;
    }
  }
  if (status == Status::fail && witnesses.empty()) witnesses.push_back(command);
  if (status == Status::partial && !degree_bound && !word_len) {
    notes.push_back("bound not recorded");
  }
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["status"] = to_string(r.status);
  if (!r.mode.empty()) j["mode"] = r.mode;
  if (r.degree_bound) j["degree_bound"] = *r.degree_bound;
  if (r.word_len) j["word_len"] = *r.word_len;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["detail"] = c.detail;
    cj["witnesses"] = c.witnesses;
    cj["informational"] = c.informational;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["data"] = r.data;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

namespace {

void text_value(std::ostringstream& out, const std::string& indent, const std::string& key,
                const nlohmann::json& v) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, sub] : v.items()) text_value(out, indent + "  ", k, sub);
  } else if (v.is_array()) {
    out << indent << key << ":";
    if (v.empty()) out << " []";
    out << "\n";
    for (const auto& e : v) {
      if (e.is_string()) {
        out << indent << "  - " << e.get<std::string>() << "\n";
      } else if (e.is_object() && e.contains("command")) {
        out << indent << "  - " << e["command"].get<std::string>() << ": "
            << e["status"].get<std::string>() << "\n";
      } else {
        out << indent << "  - " << e.dump() << "\n";
      }
    }
  } else if (v.is_string()) {
    out << indent << key << ": " << v.get<std::string>() << "\n";
  } else {
    out << indent << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump() + "\n";
  std::ostringstream out;
  out << r.command << ": " << to_string(r.status) << "\n";
  if (!r.mode.empty()) out << "  mode: " << r.mode << "\n";
  if (r.degree_bound) out << "  degree bound: " << *r.degree_bound << "\n";
  if (r.word_len) out << "  word length: " << *r.word_len << "\n";
  for (const auto& [k, v] : r.data.items()) text_value(out, "  ", k, v);
  for (const auto& c : r.checks) {
    out << "  [" << to_string(c.status) << (c.informational ? ", info" : "") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    for (const auto& w : c.witnesses) out << "      witness: " << w << "\n";
  }
  for (const auto& w : r.witnesses) out << "  witness: " << w << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (r.timing_ms) out << "  time: " << *r.timing_ms << " ms\n";
  return out.str();
}

int exit_code(const Report& r) { return r.status == Status::fail ? 1 : 0; }

nlohmann::json verdict_to_json(const MembershipVerdict& v) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["mode"] = to_string(v.mode);
  j["degree_bound"] = v.degree_bound;
  j["witness"] = v.witness ? nlohmann::json(v.witness->to_string()) : nlohmann::json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Status status_of(const MembershipVerdict& v) {
  switch (v.status) {
    case MemberStatus::member: return Status::pass;
    case MemberStatus::member_up_to_degree: return Status::partial;
    case MemberStatus::non_member: return Status::fail;
  }
  return Status::fail;
}

}  // namespace flagorder
