#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tspread/enumeration.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// A duplicate-free set of t-spread monomials of one degree, kept
/// slex-descending.
class MonomialSet {
 public:
  MonomialSet(const Ambient& amb, int degree) : amb_(amb), degree_(degree) {
    if (degree < 0) throw DomainError("monomial set: negative degree");
  }
  MonomialSet(const Ambient& amb, int degree, std::vector<Monomial> elements) : MonomialSet(amb, degree) {
    for (const auto& m : elements) check(m);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elems_ = std::move(elements);
  }
  /// Infers the degree from the first element; an empty input needs an
  /// explicit degree.
  static MonomialSet from(const Ambient& amb, std::vector<Monomial> elements) {
    if (elements.empty()) throw DomainError("monomial set: cannot infer the degree of an empty set");
    int d = elements.front().degree();
    return MonomialSet(amb, d, std::move(elements));
  }

  const Ambient& ambient() const { return amb_; }
  int degree() const { return degree_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Monomial>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Monomial& m) const { return std::binary_search(elems_.begin(), elems_.end(), m); }

  /// Slex-greatest and slex-least elements.
  const Monomial& max() const {
    if (elems_.empty()) throw DomainError("monomial set: max of an empty set");
    return elems_.front();
  }
  const Monomial& min() const {
    if (elems_.empty()) throw DomainError("monomial set: min of an empty set");
    return elems_.back();
  }

  MonomialSet set_union(const MonomialSet& other) const {
    require_compatible(other);
    std::vector<Monomial> out;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(), std::back_inserter(out));
    return MonomialSet(amb_, degree_, std::move(out), Trusted{});
  }
  MonomialSet set_difference(const MonomialSet& other) const {
    require_compatible(other);
    std::vector<Monomial> out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
    return MonomialSet(amb_, degree_, std::move(out), Trusted{});
  }
  bool includes(const MonomialSet& other) const {
    require_compatible(other);
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
  }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

  // Elements already sorted, unique, t-spread and of the right degree.
  struct Trusted {};
  MonomialSet(const Ambient& amb, int degree, std::vector<Monomial> sorted, Trusted)
      : amb_(amb), degree_(degree), elems_(std::move(sorted)) {}

 private:
  void check(const Monomial& m) const {
    if (m.degree() != degree_)
      throw DomainError("monomial set: " + to_text(m) + " does not have degree " + std::to_string(degree_));
    require_tspread(m, amb_, "monomial set");
  }
  void require_compatible(const MonomialSet& other) const {
    if (!(amb_ == other.amb_) || degree_ != other.degree_)
      throw DomainError("monomial set: ambient or degree mismatch");
  }

  Ambient amb_;
  int degree_;
  std::vector<Monomial> elems_;
};

/// Shad_t(L): every t-spread x_i w with w in L and i <= n.
inline MonomialSet shadow(const MonomialSet& L) {
  const Ambient& amb = L.ambient();
  std::set<Monomial> out;
  for (const Monomial& w : L) {
    for (int i = 1; i <= amb.n; ++i) {
      if (w.contains(i)) continue;
      Monomial v = w.times(i);
      if (spread_at_least(v.indices(), amb.t)) out.insert(std::move(v));
    }
    require_cells(out.size(), "shadow");
  }
  return MonomialSet(amb, L.degree() + 1, std::vector<Monomial>(out.begin(), out.end()), MonomialSet::Trusted{});
}

inline MonomialSet shadow_power(MonomialSet L, int s) {
  if (s < 0) throw DomainError("shadow_power: negative exponent");
  for (int step = 0; step < s; ++step) L = shadow(L);
  return L;
}

/// B_t{gens}: the smallest t-spread strongly stable set of the same degree
/// containing gens. Worklist saturation under single Borel moves.
inline MonomialSet borel_closure_degree(const MonomialSet& gens) {
  const Ambient& amb = gens.ambient();
  std::set<Monomial> seen(gens.begin(), gens.end());
  std::vector<Monomial> work(gens.begin(), gens.end());
  while (!work.empty()) {
    Monomial u = std::move(work.back());
    work.pop_back();
    for (int j : u.vec()) {
      for (int i = 1; i < j; ++i) {
        auto v = borel_move(u, i, j, amb);
        if (v && seen.insert(*v).second) work.push_back(std::move(*v));
      }
    }
    require_cells(seen.size(), "borel_closure_degree");
  }
  return MonomialSet(amb, gens.degree(), std::vector<Monomial>(seen.begin(), seen.end()), MonomialSet::Trusted{});
}

/// Closed under every admissible x_i (u / x_j), i < j.
inline bool is_strongly_stable(const MonomialSet& L) {
  for (const Monomial& u : L)
    for (int j : u.vec())
      for (int i = 1; i < j; ++i) {
        auto v = borel_move(u, i, j, L.ambient());
        if (v && !L.contains(*v)) return false;
      }
  return true;
}

namespace detail {

// k with T inside A^t(k, l) when T has a single common max; otherwise the
// largest such k over T. Used to check k1 > k2.
inline int corner_k_of(const MonomialSet& T) {
  int best = -1;
  for (const Monomial& u : T) best = std::max(best, u.max() - T.ambient().t * (T.degree() - 1) - 1);
  return best;
}

inline void require_bshad_params(const MonomialSet& T, int k2, int l2, const char* op) {
  const Ambient& amb = T.ambient();
  if (T.degree() >= l2)
    throw DomainError(std::string(op) + ": need l1 < l2 (l1 = " + std::to_string(T.degree()) +
                      ", l2 = " + std::to_string(l2) + ")");
  if (k2 < 0) throw DomainError(std::string(op) + ": need k2 >= 0");
  if (corner_top(k2, l2, amb.t) > amb.n)
    throw DomainError(std::string(op) + ": k2 + t(l2-1) + 1 exceeds n");
  if (!T.empty() && corner_k_of(T) <= k2)
    throw DomainError(std::string(op) + ": need k1 > k2 (k1 = " + std::to_string(corner_k_of(T)) +
                      ", k2 = " + std::to_string(k2) + ")");
}

}  // namespace detail

/// BShad_t(T)_{(k2,l2)}: the elements of Shad_t^{l2-l1}(B_t{T}) whose
/// maximal index is at most k2 + t(l2 - 1) + 1.
inline MonomialSet bshad(const MonomialSet& T, int k2, int l2) {
  detail::require_bshad_params(T, k2, l2, "bshad");
  const int bound = corner_top(k2, l2, T.ambient().t);
  MonomialSet lifted = shadow_power(borel_closure_degree(T), l2 - T.degree());
  std::vector<Monomial> kept;
  for (const Monomial& v : lifted)
    if (v.max() <= bound) kept.push_back(v);
  return MonomialSet(T.ambient(), l2, std::move(kept), MonomialSet::Trusted{});
}

/// min BShad_t(u)_{(k2,l2)} in closed form. The result keeps the prefix
/// i_1 ... i_{l1-2-m} of u and then runs tight up to k2 + t(l2-1) + 1,
/// where m >= -1 is the least value for which that junction is t-spread.
/// When no junction with a non-empty prefix works, the whole monomial is
/// replaced and the result is min A^t(k2, l2).
inline Monomial min_bshad_single(const Monomial& u, int k2, int l2, const Ambient& amb) {
  require_tspread(u, amb, "min_bshad_single");
  if (u.is_one()) throw DomainError("min_bshad_single: u must have degree >= 1");
  const int t = amb.t;
  const int l1 = u.degree();
  const int k1 = u.max() - t * (l1 - 1) - 1;
  if (l1 >= l2) throw DomainError("min_bshad_single: need l1 < l2");
  if (k1 <= k2) throw DomainError("min_bshad_single: need k1 > k2");
  if (k2 < 0) throw DomainError("min_bshad_single: need k2 >= 0");
  if (corner_top(k2, l2, t) > amb.n) throw DomainError("min_bshad_single: k2 + t(l2-1) + 1 exceeds n");

  // m = min{ j >= -1 : k2 + t*l1 + 1 - i_{l1-2-j} >= (j+3) t }, scanning
  // prefixes of length l1-1 down to 1. A prefix of length 0 has no
  // junction to check.
  int m = l1 - 2;
  for (int j = -1; j <= l1 - 3; ++j) {
    if (k2 + t * l1 + 1 - u.index(l1 - 2 - j) >= (j + 3) * t) {
      m = j;
      break;
    }
  }
  std::vector<int> idx(u.vec().begin(), u.vec().begin() + (l1 - 2 - m));
  for (int nu = l1 - m - 1; nu <= l2; ++nu) idx.push_back(corner_top(k2, nu, t));
  Monomial v(std::move(idx), Monomial::Unchecked{});
  if (!spread_at_least(v.indices(), t))
    throw InfeasibleShadowError("min_bshad_single: no t-spread minimum for " + to_text(u));
  return v;
}

/// min BShad_t(T)_{(k2,l2)} = min BShad_t(min T)_{(k2,l2)} for T inside one
/// A^t(k1, l1).
inline Monomial min_bshad_set(const MonomialSet& T, int k2, int l2) {
  if (T.empty()) throw DomainError("min_bshad_set: T is empty");
  const int top = T.max().max();
  for (const Monomial& u : T)
    if (u.max() != top) throw DomainError("min_bshad_set: T must lie in a single A^t(k1, l1)");
  detail::require_bshad_params(T, k2, l2, "min_bshad_set");
  return min_bshad_single(T.min(), k2, l2, T.ambient());
}

/// Whether w lies in BShad_t({u})_{(k2,l2)}, given B_t{u} already computed:
/// w is in the iterated shadow iff some deg(u)-subset of w lies in B_t{u}.
inline bool in_bshad_of_closure(const Monomial& w, const MonomialSet& closure_of_u, int k2, int l2) {
  const Ambient& amb = closure_of_u.ambient();
  const int l1 = closure_of_u.degree();
  if (w.degree() != l2 || w.max() > corner_top(k2, l2, amb.t)) return false;
  if (!spread_at_least(w.indices(), amb.t) || w.max() > amb.n) return false;
  // Walk the l1-subsets of w's support.
  std::vector<int> pick(static_cast<std::size_t>(l1));
  for (int j = 0; j < l1; ++j) pick[j] = j;
  const auto& sup = w.vec();
  while (true) {
    std::vector<int> sub;
    sub.reserve(pick.size());
    for (int p : pick) sub.push_back(sup[static_cast<std::size_t>(p)]);
    if (closure_of_u.contains(Monomial(std::move(sub), Monomial::Unchecked{}))) return true;
    int j = l1 - 1;
    while (j >= 0 && pick[j] == l2 - l1 + j) --j;
    if (j < 0) return false;
    ++pick[j];
    for (int s = j + 1; s < l1; ++s) pick[s] = pick[s - 1] + 1;
  }
}

}  // namespace tspread
