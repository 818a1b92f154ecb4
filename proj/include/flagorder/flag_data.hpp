#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagorder/automorphism.hpp"

namespace flagorder {

inline constexpr std::size_t kDefaultGroupCap = 1000;

/// Closure of `gens` under composition and inverse on n variables, in BFS
/// order starting from the identity. Throws GroupTooLargeError once more than
/// `cap` elements are found.
std::vector<Automorphism> enumerate_group(std::size_t n, const std::vector<Automorphism>& gens,
                                          std::size_t cap = kDefaultGroupCap);

/// Elements expressible as products of at most `max_len` letters, BFS order,
/// identity first.
std::vector<Automorphism> bounded_words(std::size_t n, const std::vector<Automorphism>& letters,
                                        int max_len);

/// Data (Lambda, W, M) of a flag order: Lambda = Q[vars], W generated by
/// `w_gens` (finite), M generated by `m_gens`. When `m_is_group` is set the
/// inverses of the M generators count as letters too.
class FlagData {
 public:
  FlagData();
  FlagData(VarList vars, std::vector<Automorphism> w_gens, std::vector<Automorphism> m_gens,
           bool m_is_group = true);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Automorphism>& w_gens() const { return w_gens_; }
  const std::vector<Automorphism>& m_gens() const { return m_gens_; }
  bool m_is_group() const { return m_is_group_; }

  std::vector<std::string> w_labels;
  std::vector<std::string> m_labels;

  /// M generators followed by their inverses when M is a group.
  std::vector<Automorphism> monoid_letters() const;
  /// W generators followed by the monoid letters.
  std::vector<Automorphism> hat_generators() const;

  /// Enumerated W, cached after the first call.
  const std::vector<Automorphism>& group() const;
  bool in_group(const Automorphism& a) const;

  /// W generated by signed permutations and M by pure shifts, i.e. the
  /// factorization a = w o mu of a support element is meaningful.
  bool is_semidirect() const;
  /// M generators pairwise commute.
  bool m_commutes() const;

  /// Throws DomainError unless is_semidirect().
  void require_semidirect() const;

  /// Integer exponents k with mu = prod m_gens[j]^k[j], for a pure shift mu;
  /// nullopt if none exists (or, for a monoid, none with k >= 0). Requires
  /// semidirect data.
  std::optional<std::vector<Integer>> m_coordinates(const Automorphism& mu) const;
  /// a lies in W^ = W x| M. Exact for semidirect data, otherwise searched
  /// among words of at most `fallback_len` generators.
  bool in_hat(const Automorphism& a, int fallback_len = 8) const;

 private:
  struct Cache;

  VarList vars_;
  std::vector<Automorphism> w_gens_;
  std::vector<Automorphism> m_gens_;
  bool m_is_group_ = true;
  std::shared_ptr<Cache> cache_;
};

struct AxiomReport {
  bool pass = true;
  int word_len = 0;
  std::size_t checked = 0;
  std::vector<Automorphism> witnesses;
  std::string detail;
};

/// (MM^{-1}) meets W only in the identity, checked over products of at most
/// `word_len` M-letters and their inverses.
AxiomReport check_separation(const FlagData& data, int word_len);

/// g mu g^{-1} lies in M for every g in W and every M-word mu of length at
/// most `word_len`; membership is searched among M-words of the same bound.
AxiomReport check_invariance(const FlagData& data, int word_len);

}  // namespace flagorder
