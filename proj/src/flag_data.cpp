#include "flagorder/flag_data.hpp"

#include <mutex>
#include <optional>
#include <set>

#include "flagorder/errors.hpp"

namespace flagorder {

std::vector<Automorphism> enumerate_group(std::size_t n, const std::vector<Automorphism>& gens,
                                          std::size_t cap) {
  if (cap < 1) throw Error("enumerate_group: cap must be at least 1");
  std::vector<Automorphism> letters;
  for (const auto& g : gens) {
    if (g.size() != n) throw AlignmentError("generator arity does not match");
    letters.push_back(g);
  }
  for (const auto& g : gens) letters.push_back(g.inverse());

  std::vector<Automorphism> out{Automorphism::identity(n)};
  std::set<Automorphism> seen(out.begin(), out.end());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : letters) {
      Automorphism y = g.compose(out[head]);
      if (seen.insert(y).second) {
        out.push_back(std::move(y));
        if (out.size() > cap) {
          throw GroupTooLargeError("group exceeds cap of " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  return out;
}

std::vector<Automorphism> bounded_words(std::size_t n, const std::vector<Automorphism>& letters,
                                        int max_len) {
  std::vector<Automorphism> out{Automorphism::identity(n)};
  std::set<Automorphism> seen(out.begin(), out.end());
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (const auto& g : letters) {
        Automorphism y = out[k].compose(g);
        if (seen.insert(y).second) out.push_back(std::move(y));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

struct FlagData::Cache {
  std::once_flag once;
  std::vector<Automorphism> group;
  std::set<Automorphism> lookup;
};

FlagData::FlagData() : cache_(std::make_shared<Cache>()) {}

FlagData::FlagData(VarList vars, std::vector<Automorphism> w_gens, std::vector<Automorphism> m_gens,
                   bool m_is_group)
    : vars_(std::move(vars)),
      w_gens_(std::move(w_gens)),
      m_gens_(std::move(m_gens)),
      m_is_group_(m_is_group),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : w_gens_) {
    if (g.size() != vars_.size()) throw AlignmentError("W generator acts on the wrong number of variables");
  }
  for (const auto& g : m_gens_) {
    if (g.size() != vars_.size()) throw AlignmentError("M generator acts on the wrong number of variables");
  }
}

std::vector<Automorphism> FlagData::monoid_letters() const {
  std::vector<Automorphism> out = m_gens_;
  if (m_is_group_) {
    for (const auto& g : m_gens_) out.push_back(g.inverse());
  }
  return out;
}

std::vector<Automorphism> FlagData::hat_generators() const {
  std::vector<Automorphism> out = w_gens_;
  for (auto& g : monoid_letters()) out.push_back(std::move(g));
  return out;
}

const std::vector<Automorphism>& FlagData::group() const {
  std::call_once(cache_->once, [this] {
    cache_->group = enumerate_group(vars_.size(), w_gens_);
    cache_->lookup = std::set<Automorphism>(cache_->group.begin(), cache_->group.end());
  });
  return cache_->group;
}

bool FlagData::in_group(const Automorphism& a) const {
  group();
  return cache_->lookup.count(a) > 0;
}

bool FlagData::is_semidirect() const {
  for (const auto& g : w_gens_) {
    if (!g.is_signed_permutation()) return false;
  }
  for (const auto& g : m_gens_) {
    if (!g.is_pure_shift()) return false;
  }
  return true;
}

bool FlagData::m_commutes() const {
  for (std::size_t i = 0; i < m_gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < m_gens_.size(); ++j) {
      if (!(m_gens_[i].compose(m_gens_[j]) == m_gens_[j].compose(m_gens_[i]))) return false;
    }
  }
  return true;
}

void FlagData::require_semidirect() const {
  if (!is_semidirect()) {
    throw DomainError("flag data must have W of signed permutations and M of pure shifts");
  }
}

std::optional<std::vector<Integer>> FlagData::m_coordinates(const Automorphism& mu) const {
  require_semidirect();
  if (!mu.is_pure_shift() || mu.size() != nvars()) return std::nullopt;
  const std::size_t n = nvars();
  const std::size_t k = m_gens_.size();
  // Augmented system [v_1 .. v_k | t], one row per variable.
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = m_gens_[j].shifts()[i];
    rows[i][k] = mu.shifts()[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = 0; j <= k; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (rows[i][k] != 0) return std::nullopt;
  }
  if (pivots.size() < k) {
    // Dependent generators: coordinates are not unique, search words instead.
    const auto words = bounded_words(n, monoid_letters(), 8);
    for (const auto& w : words) {
      if (w == mu) return std::vector<Integer>{};
    }
    return std::nullopt;
  }
  std::vector<Integer> out(k);
  for (std::size_t i = 0; i < r; ++i) {
    const Rat& v = rows[i][k];
    if (v.get_den() != 1) return std::nullopt;
    if (!m_is_group_ && v < 0) return std::nullopt;
    out[pivots[i]] = v.get_num();
  }
  return out;
}

bool FlagData::in_hat(const Automorphism& a, int fallback_len) const {
  if (a.size() != nvars()) return false;
  if (is_semidirect()) {
    return in_group(a.signed_part()) && m_coordinates(a.shift_part()).has_value();
  }
  for (const auto& w : bounded_words(nvars(), hat_generators(), fallback_len)) {
    if (w == a) return true;
  }
  return false;
}

AxiomReport check_separation(const FlagData& data, int word_len) {
  if (word_len < 1) throw Error("word length must be at least 1");
  AxiomReport r;
  r.word_len = word_len;
  std::vector<Automorphism> letters = data.m_gens();
  for (const auto& g : data.m_gens()) letters.push_back(g.inverse());
  const auto words = bounded_words(data.nvars(), letters, word_len);
  for (const auto& w : words) {
    ++r.checked;
    if (!w.is_identity() && data.in_group(w)) r.witnesses.push_back(w);
  }
  r.pass = r.witnesses.empty();
  if (!r.pass) r.detail = "nontrivial element of M M^-1 lies in W";
  return r;
}

AxiomReport check_invariance(const FlagData& data, int word_len) {
  if (word_len < 1) throw Error("word length must be at least 1");
  AxiomReport r;
  r.word_len = word_len;
  const auto words = bounded_words(data.nvars(), data.monoid_letters(), word_len);
  const std::set<Automorphism> in_m(words.begin(), words.end());
  std::set<Automorphism> reported;
  for (const auto& g : data.group()) {
    const Automorphism g_inv = g.inverse();
    for (const auto& mu : words) {
      ++r.checked;
      Automorphism c = g.compose(mu).compose(g_inv);
      if (!in_m.count(c) && reported.insert(c).second) r.witnesses.push_back(std::move(c));
    }
  }
  r.pass = r.witnesses.empty();
  if (!r.pass) r.detail = "conjugate of an M-word by W is not an M-word within the bound";
  return r;
}

}  // namespace flagorder
