#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tspread/error.hpp"

namespace tspread {

/// Polynomial ring K[x_1, ..., x_n] together with the spread parameter t.
struct Ambient {
  int n = 1;
  int t = 1;

  static Ambient make(int n, int t) {
    if (n < 1) throw DomainError("ambient: n must be >= 1, got " + std::to_string(n));
    if (t < 1) throw DomainError("ambient: t must be >= 1, got " + std::to_string(t));
    return Ambient{n, t};
  }

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// A squarefree monomial x_{i_1} x_{i_2} ... x_{i_d}, stored as its
/// strictly increasing support. The empty support is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> indices) : Monomial(std::vector<int>(indices)) {}
  explicit Monomial(std::vector<int> indices) : idx_(std::move(indices)) {
    for (std::size_t j = 0; j < idx_.size(); ++j) {
      if (idx_[j] < 1) throw DomainError("monomial: index " + std::to_string(idx_[j]) + " is < 1");
      if (j > 0 && idx_[j] <= idx_[j - 1])
        throw DomainError("monomial: indices must be strictly increasing");
    }
  }

  int degree() const { return static_cast<int>(idx_.size()); }
  bool is_one() const { return idx_.empty(); }
  // max(1) = min(1) = 0
  int max() const { return idx_.empty() ? 0 : idx_.back(); }
  int min() const { return idx_.empty() ? 0 : idx_.front(); }

  std::span<const int> indices() const { return idx_; }
  const std::vector<int>& vec() const { return idx_; }
  /// 1-based access matching i_1, ..., i_d.
  int index(int j) const { return idx_.at(static_cast<std::size_t>(j - 1)); }

  bool contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

  /// u / x_{max(u)}
  Monomial without_max() const {
    if (idx_.empty()) throw DomainError("monomial: 1 has no maximal variable");
    return Monomial(std::vector<int>(idx_.begin(), idx_.end() - 1), Unchecked{});
  }

  /// Multiplication by x_i for i not in the support.
  Monomial times(int i) const {
    if (contains(i)) throw DomainError("monomial: x_" + std::to_string(i) + " already divides the monomial");
    std::vector<int> out;
    out.reserve(idx_.size() + 1);
    auto pos = std::lower_bound(idx_.begin(), idx_.end(), i);
    out.insert(out.end(), idx_.begin(), pos);
    out.push_back(i);
    out.insert(out.end(), pos, idx_.end());
    return Monomial(std::move(out), Unchecked{});
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Container order only: lexicographic on supports. On equal degrees this
  /// is exactly the reverse of >_slex, so ascending containers list
  /// monomials slex-descending.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.idx_ <=> b.idx_;
  }

  struct Unchecked {};
  Monomial(std::vector<int> indices, Unchecked) : idx_(std::move(indices)) {}

 private:
  std::vector<int> idx_;
};

/// Gap_t(u) with the width of every j-gap: position j in [1, d-1] maps to
/// i_{j+1} - i_j - t whenever that is positive.
struct GapProfile {
  std::map<int, int> widths;

  bool empty() const { return widths.empty(); }
  int total_width() const {
    int s = 0;
    for (const auto& [pos, w] : widths) s += w;
    return s;
  }
  /// max Gap_t(u); requires a non-empty profile.
  int last_position() const {
    if (widths.empty()) throw DomainError("gap profile: Gap_t(u) is empty");
    return widths.rbegin()->first;
  }
  friend bool operator==(const GapProfile&, const GapProfile&) = default;
};

inline void require_in_ambient(const Monomial& m, const Ambient& amb) {
  if (!m.is_one() && m.max() > amb.n)
    throw DomainError("monomial: index " + std::to_string(m.max()) + " exceeds n = " + std::to_string(amb.n));
}

inline bool spread_at_least(std::span<const int> idx, int t) {
  for (std::size_t j = 1; j < idx.size(); ++j)
    if (idx[j] - idx[j - 1] < t) return false;
  return true;
}

inline bool is_tspread(const Monomial& m, const Ambient& amb) {
  require_in_ambient(m, amb);
  return spread_at_least(m.indices(), amb.t);
}

inline void require_tspread(const Monomial& m, const Ambient& amb, const char* op) {
  if (!is_tspread(m, amb))
    throw DomainError(std::string(op) + ": monomial is not " + std::to_string(amb.t) + "-spread");
}

/// Squarefree lexicographic comparison; `greater` means u >_slex v.
inline std::strong_ordering slex_cmp(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree())
    throw DomainError("slex_cmp: degrees differ (" + std::to_string(u.degree()) + " vs " +
                      std::to_string(v.degree()) + ")");
  // The first differing position with the smaller index wins.
  return v.vec() <=> u.vec();
}

inline bool slex_greater(const Monomial& u, const Monomial& v) { return slex_cmp(u, v) > 0; }

inline GapProfile gap_profile(const Monomial& u, int t) {
  if (u.is_one()) throw DomainError("gap_profile: the monomial 1 has no gaps");
  if (!spread_at_least(u.indices(), t))
    throw DomainError("gap_profile: monomial is not " + std::to_string(t) + "-spread");
  GapProfile g;
  for (int j = 1; j < u.degree(); ++j) {
    int width = u.index(j + 1) - u.index(j) - t;
    if (width > 0) g.widths.emplace(j, width);
  }
  return g;
}

/// x_i (u / x_j) when it is t-spread, nothing otherwise.
inline std::optional<Monomial> borel_move(const Monomial& u, int i, int j, const Ambient& amb) {
  require_in_ambient(u, amb);
  if (!u.contains(j)) throw DomainError("borel_move: x_" + std::to_string(j) + " does not divide u");
  if (i < 1 || i >= j) throw DomainError("borel_move: need 1 <= i < j");
  if (u.contains(i)) return std::nullopt;
  std::vector<int> out;
  out.reserve(u.vec().size());
  for (int x : u.vec())
    if (x != j) out.push_back(x);
  out.insert(std::lower_bound(out.begin(), out.end(), i), i);
  if (!spread_at_least(out, amb.t)) return std::nullopt;
  return Monomial(std::move(out), Monomial::Unchecked{});
}

/// Comma separated support, e.g. "4,9,13,16". The monomial 1 is "".
inline std::string to_text(const Monomial& m) {
  std::string out;
  for (std::size_t j = 0; j < m.vec().size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(m.vec()[j]);
  }
  return out;
}

/// x_1*x_4*x_7 for computer algebra systems; the monomial 1 is "1".
inline std::string to_m2(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t j = 0; j < m.vec().size(); ++j) {
    if (j > 0) out += '*';
    out += "x_" + std::to_string(m.vec()[j]);
  }
  return out;
}

inline Monomial parse_monomial(std::string_view text) {
  std::vector<int> idx;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw DomainError("monomial text: empty index in '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw DomainError("monomial text: '" + token + "' is not an integer");
    idx.push_back(v);
    token.clear();
  };
  bool any = false;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    any = true;
    if (c == ',') flush();
    else token.push_back(c);
  }
  if (any) flush();
  return Monomial(std::move(idx));
}

}  // namespace tspread
