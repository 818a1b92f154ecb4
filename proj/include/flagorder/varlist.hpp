#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagorder {

/// Ordered list of distinct variable names. Declaration order fixes the
/// monomial order: the first variable is the most significant.
///
/// Copies share storage, so equality between copies of one list is a pointer
/// comparison.
class VarList {
 public:
  VarList();
  explicit VarList(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// True if every name of this list also occurs in `other`.
  bool is_subset_of(const VarList& other) const;

  /// Comma-separated, as accepted by `--vars`.
  std::string to_string() const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Concatenation; throws AlignmentError on a repeated name.
VarList concat(const VarList& a, const VarList& b);

}  // namespace flagorder
