#pragma once

// Brute-force reference implementations. Everything here is definitional
// (subset enumeration, naive fixpoints, full table scans) and deliberately
// shares no code with the closed forms it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tspread::oracle {

using Support = std::vector<int>;
// Kept lexicographically ascending, which is slex-descending.
using Family = std::vector<Support>;

inline bool spread_ok(const Support& u, int t) {
  for (std::size_t j = 1; j < u.size(); ++j)
    if (u[j] - u[j - 1] < t) return false;
  return true;
}

inline int top_of(int k, int l, int t) { return k + t * (l - 1) + 1; }

inline long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  std::vector<long long> row(static_cast<std::size_t>(b + 1), 0);
  row[0] = 1;
  for (long long i = 1; i <= a; ++i)
    for (long long j = std::min(i, b); j >= 1; --j) row[j] += row[j - 1];
  return row[b];
}

/// Every d-subset of [1, n] with spread >= t, by bitmask.
inline Family enumerate_M(int n, int d, int t) {
  if (n > 30) throw std::invalid_argument("oracle: n > 30");
  Family out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    Support u;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) u.push_back(i + 1);
    if (spread_ok(u, t)) out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Family enumerate_A(int n, int t, int k, int l) {
  Family out;
  const int top = top_of(k, l, t);
  for (auto& u : enumerate_M(n, l, t))
    if (!u.empty() && u.back() == top) out.push_back(std::move(u));
  return out;
}

/// 1-based position of u in A^t(k, l) listed slex-descending; 0 if absent.
inline long long rank(const Support& u, int n, int t, int k, int l) {
  Family a = enumerate_A(n, t, k, l);
  auto it = std::find(a.begin(), a.end(), u);
  return it == a.end() ? 0 : static_cast<long long>(it - a.begin()) + 1;
}

inline std::optional<Support> successor(const Support& u, int n, int t, int k, int l) {
  Family a = enumerate_A(n, t, k, l);
  auto it = std::find(a.begin(), a.end(), u);
  if (it == a.end() || std::next(it) == a.end()) return std::nullopt;
  return *std::next(it);
}

/// Naive fixpoint: sweep every element and every move until nothing changes.
inline Family closure(const Family& gens, int t) {
  std::set<Support> cur(gens.begin(), gens.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Support> fresh;
    for (const Support& u : cur) {
      for (std::size_t pos = 0; pos < u.size(); ++pos) {
        for (int i = 1; i < u[pos]; ++i) {
          if (std::find(u.begin(), u.end(), i) != u.end()) continue;
          Support v = u;
          v[pos] = i;
          std::sort(v.begin(), v.end());
          if (spread_ok(v, t) && !cur.count(v)) fresh.push_back(std::move(v));
        }
      }
    }
    for (auto& v : fresh) changed |= cur.insert(std::move(v)).second;
  }
  return Family(cur.begin(), cur.end());
}

inline Family shadow(const Family& L, int n, int t) {
  std::set<Support> out;
  for (const Support& u : L)
    for (int i = 1; i <= n; ++i) {
      if (std::find(u.begin(), u.end(), i) != u.end()) continue;
      Support v = u;
      v.push_back(i);
      std::sort(v.begin(), v.end());
      if (spread_ok(v, t)) out.insert(std::move(v));
    }
  return Family(out.begin(), out.end());
}

inline Family bshad(const Family& T, int n, int t, int k2, int l2) {
  if (T.empty()) return {};
  Family cur = closure(T, t);
  for (int d = static_cast<int>(T.front().size()); d < l2; ++d) cur = shadow(cur, n, t);
  Family out;
  for (auto& v : cur)
    if (v.back() <= top_of(k2, l2, t)) out.push_back(std::move(v));
  return out;
}

/// Slex-least element of a non-empty family.
inline Support min_slex(const Family& f) {
  if (f.empty()) throw std::invalid_argument("oracle: min of an empty family");
  return *std::max_element(f.begin(), f.end());
}

inline Support min_bshad(const Family& T, int n, int t, int k2, int l2) { return min_slex(bshad(T, n, t, k2, l2)); }

inline bool is_strongly_stable(const Family& L, int t) {
  Family c = closure(L, t);
  Family sorted = L;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return c == sorted;
}

/// Degree components [I_j]_t of B_t(gens) from the lowest generator degree
/// up to `up_to`.
inline std::map<int, Family> components(const Family& gens, int n, int t, int up_to) {
  std::map<int, Family> by_degree;
  for (const auto& g : gens) by_degree[static_cast<int>(g.size())].push_back(g);
  std::map<int, Family> out;
  if (by_degree.empty()) return out;
  Family prev;
  for (int j = by_degree.begin()->first; j <= up_to; ++j) {
    std::set<Support> cur;
    for (auto& v : shadow(prev, n, t)) cur.insert(v);
    if (by_degree.count(j))
      for (auto& v : closure(by_degree[j], t)) cur.insert(v);
    prev.assign(cur.begin(), cur.end());
    out[j] = prev;
  }
  return out;
}

/// Minimal generators by divisibility: a member of [I_j]_t is minimal when
/// no member of any lower component divides it.
inline std::map<int, Family> minimal_generators(const std::map<int, Family>& comps) {
  std::map<int, Family> out;
  for (const auto& [j, comp] : comps) {
    for (const Support& u : comp) {
      bool minimal = true;
      for (const auto& [i, lower] : comps) {
        if (i >= j) break;
        for (const Support& v : lower)
          if (std::includes(u.begin(), u.end(), v.begin(), v.end())) {
            minimal = false;
            break;
          }
        if (!minimal) break;
      }
      if (minimal) out[j].push_back(u);
    }
  }
  return out;
}

/// beta_{k,k+l} for every k from 0 to n and every generator degree l.
inline std::map<std::pair<int, int>, long long> betti(const std::map<int, Family>& gens, int n, int t) {
  std::map<std::pair<int, int>, long long> table;
  for (const auto& [l, g] : gens)
    for (int k = 0; k <= n; ++k) {
      long long s = 0;
      for (const Support& u : g) s += binom(u.back() - t * (l - 1) - 1, k);
      if (s != 0) table[{k, l}] = s;
    }
  return table;
}

/// Extremal in the table-scan sense: non-zero, and every beta_{i,i+j} with
/// i >= k, j >= l, (i, j) != (k, l) vanishes.
inline bool is_extremal(const std::map<std::pair<int, int>, long long>& table, int k, int l) {
  auto it = table.find({k, l});
  if (it == table.end() || it->second == 0) return false;
  for (const auto& [key, v] : table) {
    if (key == std::pair{k, l} || v == 0) continue;
    if (key.first >= k && key.second >= l) return false;
  }
  return true;
}

/// Calls visit(mask, size) once for every order ideal Y of A (closed under
/// single Borel moves that stay inside A), as a bitmask over A's slex-
/// descending listing. A may hold at most 64 elements.
template <class Visit>
void for_each_order_ideal(const Family& a, int t, Visit&& visit) {
  if (a.size() > 64) throw std::invalid_argument("oracle: set too large for order-ideal enumeration");
  const std::size_t N = a.size();
  // needs[x]: elements one Borel move above x inside A.
  std::vector<std::uint64_t> needs(N, 0);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      if (x == y) continue;
      Support dx, dy;
      std::set_difference(a[x].begin(), a[x].end(), a[y].begin(), a[y].end(), std::back_inserter(dx));
      std::set_difference(a[y].begin(), a[y].end(), a[x].begin(), a[x].end(), std::back_inserter(dy));
      if (dx.size() == 1 && dy.size() == 1 && dy[0] < dx[0] && spread_ok(a[y], t)) needs[x] |= std::uint64_t{1} << y;
    }
  // Depth-first in listing order; everything x needs comes earlier.
  std::uint64_t Y = 0;
  auto step = [&](auto&& self, std::size_t x, std::size_t size) -> void {
    if (x == N) {
      visit(Y, size);
      return;
    }
    self(self, x + 1, size);
    if ((needs[x] & ~Y) == 0) {
      Y |= std::uint64_t{1} << x;
      self(self, x + 1, size + 1);
      Y &= ~(std::uint64_t{1} << x);
    }
  };
  step(step, 0, 0);
}

/// sizes[a] is true when A^t(k,l) has an order ideal with a elements.
inline std::vector<bool> order_ideal_sizes(int n, int t, int k, int l) {
  Family a = enumerate_A(n, t, k, l);
  std::vector<bool> sizes(a.size() + 1, false);
  for_each_order_ideal(a, t, [&](std::uint64_t, std::size_t size) { sizes[size] = true; });
  return sizes;
}

/// Two-degree realizability at micro scale. For corners (k1,l1) < (k2,l2),
/// best_free[a] is the largest |A^t(k2,l2) \ Shad^{l2-l1}(B_t{Y})| over all
/// order ideals Y of A^t(k1,l1) with |Y| = a, or -1 when no such Y exists.
///
/// Any degree-l1 component with the right corner meets A^t(k1,l1) in such a
/// Y and contains B_t{Y}, so using B_t{Y} maximizes the free room in degree
/// l2. The degree-l2 part may then add any up-closed block of free elements
/// of A^t(k2,l2), and those come in every size from 0 to the free count.
/// Hence (a1, a2) is realizable iff best_free[a1] >= a2.
struct TwoDegreeTable {
  std::vector<long long> best_free;
  long long a1_card = 0;
  long long a2_card = 0;
};

inline TwoDegreeTable two_degree_table(int n, int t, int k1, int l1, int k2, int l2) {
  Family a1 = enumerate_A(n, t, k1, l1);
  Family a2 = enumerate_A(n, t, k2, l2);
  const std::size_t N = a1.size();
  if (N > 64) throw std::invalid_argument("oracle: A^t(k1,l1) too large for the micro check");

  // shadowed_by[w]: the y in A^t(k1,l1) whose lifted closure contains w.
  std::vector<std::uint64_t> shadowed_by(a2.size(), 0);
  for (std::size_t y = 0; y < N; ++y) {
    Family lifted = closure({a1[y]}, t);
    for (int d = l1; d < l2; ++d) lifted = shadow(lifted, n, t);
    for (std::size_t w = 0; w < a2.size(); ++w)
      if (std::binary_search(lifted.begin(), lifted.end(), a2[w])) shadowed_by[w] |= std::uint64_t{1} << y;
  }

  TwoDegreeTable out;
  out.a1_card = static_cast<long long>(N);
  out.a2_card = static_cast<long long>(a2.size());
  out.best_free.assign(N + 1, -1);
  for_each_order_ideal(a1, t, [&](std::uint64_t Y, std::size_t size) {
    long long free = 0;
    for (auto m : shadowed_by)
      if ((m & Y) == 0) ++free;
    out.best_free[size] = std::max(out.best_free[size], free);
  });
  return out;
}

}  // namespace tspread::oracle
