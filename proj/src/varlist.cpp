#include "flagorder/varlist.hpp"

#include <set>

#include "flagorder/errors.hpp"

namespace flagorder {

VarList::VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarList::VarList(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw AlignmentError("duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

bool VarList::is_subset_of(const VarList& other) const {
  for (const auto& n : *names_) {
    if (!other.index_of(n)) return false;
  }
  return true;
}

std::string VarList::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if (i) out += ',';
    out += (*names_)[i];
  }
  return out;
}

VarList concat(const VarList& a, const VarList& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  return VarList(std::move(names));
}

}  // namespace flagorder
