#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/count.hpp"

namespace tspread {

/// A t-spread strongly stable ideal, held as its minimal generators G(I)_l
/// per degree. Only non-empty degrees are stored.
class TIdeal {
 public:
  /// Validates minimality (no generator lies in the shadow of the lower
  /// degree component) and strong stability of every component [I_j]_t.
  static TIdeal make(const Ambient& amb, std::map<int, MonomialSet> gens) {
    TIdeal I(amb, std::move(gens));
    I.validate();
    return I;
  }

  /// The ideal B_t(gens) generated by Borel generators of any degrees.
  static TIdeal from_borel_generators(const Ambient& amb, const std::vector<Monomial>& gens);

  const Ambient& ambient() const { return amb_; }
  const std::map<int, MonomialSet>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  /// G(I)_l, empty when I has no generator of degree l.
  MonomialSet generators_in(int l) const {
    auto it = gens_.find(l);
    return it == gens_.end() ? MonomialSet(amb_, l) : it->second;
  }

  std::size_t generator_count() const {
    std::size_t c = 0;
    for (const auto& [l, g] : gens_) c += g.size();
    return c;
  }

  int initial_degree() const { return gens_.empty() ? 0 : gens_.begin()->first; }
  int top_degree() const { return gens_.empty() ? 0 : gens_.rbegin()->first; }

  /// [I_j]_t for every j from the initial degree up to `up_to`.
  std::map<int, MonomialSet> components(int up_to) const {
    std::map<int, MonomialSet> out;
    if (gens_.empty()) return out;
    std::optional<MonomialSet> prev;
    for (int j = initial_degree(); j <= up_to; ++j) {
      MonomialSet cur = prev ? shadow(*prev) : MonomialSet(amb_, j);
      if (auto it = gens_.find(j); it != gens_.end()) cur = cur.set_union(it->second);
      out.emplace(j, cur);
      prev = std::move(cur);
    }
    return out;
  }

  friend bool operator==(const TIdeal&, const TIdeal&) = default;

  struct Trusted {};
  TIdeal(const Ambient& amb, std::map<int, MonomialSet> gens, Trusted) : TIdeal(amb, std::move(gens)) {}

 private:
  TIdeal(const Ambient& amb, std::map<int, MonomialSet> gens) : amb_(amb) {
    for (auto& [l, g] : gens) {
      if (g.degree() != l) throw DomainError("ideal: generator set filed under the wrong degree");
      if (!(g.ambient() == amb)) throw DomainError("ideal: generator set has a different ambient");
      if (!g.empty()) gens_.emplace(l, std::move(g));
    }
  }

  void validate() const {
    if (gens_.empty()) return;
    std::optional<MonomialSet> prev;
    for (int j = initial_degree(); j <= top_degree(); ++j) {
      MonomialSet lower = prev ? shadow(*prev) : MonomialSet(amb_, j);
      MonomialSet cur = lower;
      if (auto it = gens_.find(j); it != gens_.end()) {
        for (const Monomial& u : it->second)
          if (lower.contains(u))
            throw DomainError("ideal: generator " + to_text(u) + " is not minimal");
        cur = cur.set_union(it->second);
      }
      if (!is_strongly_stable(cur))
        throw DomainError("ideal: component of degree " + std::to_string(j) + " is not t-spread strongly stable");
      prev = std::move(cur);
    }
  }

  Ambient amb_;
  std::map<int, MonomialSet> gens_;
};

/// G(I)_j = [I_j]_t \ Shad_t([I_{j-1}]_t) over consecutive degrees. Each
/// component must be strongly stable and contain the shadow of the one
/// below it.
inline TIdeal minimalize(const Ambient& amb, const std::map<int, MonomialSet>& components) {
  std::map<int, MonomialSet> gens;
  const MonomialSet* prev = nullptr;
  int prev_degree = 0;
  for (const auto& [j, comp] : components) {
    if (comp.degree() != j || !(comp.ambient() == amb))
      throw DomainError("minimalize: component filed under the wrong degree or ambient");
    if (prev != nullptr && j != prev_degree + 1) throw DomainError("minimalize: component degrees are not consecutive");
    if (!is_strongly_stable(comp))
      throw DomainError("minimalize: component of degree " + std::to_string(j) + " is not t-spread strongly stable");
    if (prev == nullptr) {
      gens.emplace(j, comp);
    } else {
      MonomialSet lower = shadow(*prev);
      if (!comp.includes(lower))
        throw DomainError("minimalize: component of degree " + std::to_string(j) +
                          " does not contain the shadow of degree " + std::to_string(prev_degree));
      gens.emplace(j, comp.set_difference(lower));
    }
    prev = &comp;
    prev_degree = j;
  }
  return TIdeal(amb, std::move(gens), TIdeal::Trusted{});
}

inline TIdeal TIdeal::from_borel_generators(const Ambient& amb, const std::vector<Monomial>& gens) {
  std::map<int, std::vector<Monomial>> by_degree;
  for (const Monomial& u : gens) {
    if (u.is_one()) throw DomainError("ideal: the unit ideal is not supported");
    require_tspread(u, amb, "ideal");
    by_degree[u.degree()].push_back(u);
  }
  if (by_degree.empty()) return TIdeal(amb, {}, Trusted{});
  std::map<int, MonomialSet> comps;
  std::optional<MonomialSet> prev;
  for (int j = by_degree.begin()->first; j <= by_degree.rbegin()->first; ++j) {
    MonomialSet cur = prev ? shadow(*prev) : MonomialSet(amb, j);
    if (auto it = by_degree.find(j); it != by_degree.end())
      cur = cur.set_union(borel_closure_degree(MonomialSet(amb, j, it->second)));
    comps.emplace(j, cur);
    prev = std::move(cur);
  }
  return minimalize(amb, comps);
}

/// beta_{k,k+l}(I) = sum over u in G(I)_l of binom(max(u) - t(l-1) - 1, k).
inline Count graded_betti(const TIdeal& I, int k, int l) {
  if (k < 0) return 0;
  auto it = I.generators().find(l);
  if (it == I.generators().end()) return 0;
  const int t = I.ambient().t;
  Count sum = 0;
  for (const Monomial& u : it->second) sum = checked_add(sum, binom(u.max() - t * (l - 1) - 1, k));
  return sum;
}

/// Non-zero beta_{k,k+l}(I), keyed by (k, l).
struct BettiTable {
  std::map<std::pair<int, int>, Count> entries;

  Count at(int k, int l) const {
    auto it = entries.find({k, l});
    return it == entries.end() ? Count{0} : it->second;
  }
  bool empty() const { return entries.empty(); }
  int min_degree() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, v] : entries)
      if (first || key.second < m) m = key.second, first = false;
    return m;
  }
  int max_degree() const {
    int m = 0;
    for (const auto& [key, v] : entries) m = std::max(m, key.second);
    return m;
  }
  int max_homological() const {
    int m = 0;
    for (const auto& [key, v] : entries) m = std::max(m, key.first);
    return m;
  }
  Count total(int k) const {
    Count s = 0;
    for (const auto& [key, v] : entries)
      if (key.first == k) s = checked_add(s, v);
    return s;
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline BettiTable betti_table(const TIdeal& I) {
  BettiTable table;
  const int t = I.ambient().t;
  for (const auto& [l, gens] : I.generators()) {
    int kmax = 0;
    for (const Monomial& u : gens) kmax = std::max(kmax, u.max() - t * (l - 1) - 1);
    for (int k = 0; k <= kmax; ++k) {
      Count b = graded_betti(I, k, l);
      if (b != 0) table.entries.emplace(std::pair{k, l}, b);
    }
  }
  return table;
}

/// Text layout: a header of homological indices, a "Tot" row, then one row
/// per degree from the initial to the top degree, with "-" for zero.
/// Columns are right-aligned and separated by one space.
inline std::string render_table(const BettiTable& table) {
  if (table.empty()) return "(zero ideal)\n";
  const int kmax = table.max_homological();
  const int lmin = table.min_degree();
  const int lmax = table.max_degree();
  std::vector<std::string> labels{"", "Tot:"};
  for (int l = lmin; l <= lmax; ++l) labels.push_back(std::to_string(l) + ":");
  std::vector<std::vector<std::string>> cols;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<std::string> col{std::to_string(k), to_string(table.total(k))};
    for (int l = lmin; l <= lmax; ++l) {
      Count v = table.at(k, l);
      col.push_back(v == 0 ? "-" : to_string(v));
    }
    cols.push_back(std::move(col));
  }
  auto width_of = [](const std::vector<std::string>& c) {
    std::size_t w = 0;
    for (const auto& s : c) w = std::max(w, s.size());
    return w;
  };
  std::ostringstream os;
  const std::size_t label_w = width_of(labels);
  for (std::size_t row = 0; row < labels.size(); ++row) {
    os << std::string(label_w - labels[row].size(), ' ') << labels[row];
    for (const auto& col : cols) {
      os << ' ' << std::string(width_of(col) - col[row].size(), ' ') << col[row];
    }
    os << '\n';
  }
  return os.str();
}

/// Extremality of beta_{k,k+l}(I) through the generators' maximal indices:
/// k + t(l-1) + 1 = max{max(u) : u in G(I)_l} and max(u) < k + t(j-1) + 1
/// for every generator u of degree j > l.
inline bool is_extremal(const TIdeal& I, int k, int l) {
  if (k < 0) return false;
  const int t = I.ambient().t;
  auto it = I.generators().find(l);
  if (it == I.generators().end() || it->second.empty()) return false;
  int top = 0;
  for (const Monomial& u : it->second) top = std::max(top, u.max());
  if (top != corner_top(k, l, t)) return false;
  for (auto jt = std::next(it); jt != I.generators().end(); ++jt) {
    const int j = jt->first;
    for (const Monomial& u : jt->second)
      if (u.max() >= corner_top(k, j, t)) return false;
  }
  return true;
}

/// |{u in G(I)_l : max(u) = k + t(l-1) + 1}| at a corner (k, l).
inline Count extremal_value(const TIdeal& I, int k, int l) {
  if (!is_extremal(I, k, l))
    throw DomainError("extremal_value: (" + std::to_string(k) + "," + std::to_string(l) + ") is not a corner");
  const int top = corner_top(k, l, I.ambient().t);
  Count c = 0;
  for (const Monomial& u : I.generators().at(l))
    if (u.max() == top) ++c;
  return c;
}

/// A corner (k, l) with its extremal Betti number, or a requested value.
struct Corner {
  int k = 0;
  int l = 0;
  Count a = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Corn(I) with a(I), ordered by increasing l (hence decreasing k).
struct CornerData {
  std::vector<Corner> corners;
  friend bool operator==(const CornerData&, const CornerData&) = default;
};

inline CornerData corner_sequence(const TIdeal& I) {
  CornerData out;
  const int t = I.ambient().t;
  for (const auto& [l, gens] : I.generators()) {
    int top = 0;
    for (const Monomial& u : gens) top = std::max(top, u.max());
    const int k = top - t * (l - 1) - 1;
    if (is_extremal(I, k, l)) out.corners.push_back(Corner{k, l, extremal_value(I, k, l)});
  }
  return out;
}

}  // namespace tspread
