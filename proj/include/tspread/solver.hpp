#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspread/betti.hpp"
#include "tspread/borel.hpp"
#include "tspread/enumeration.hpp"

namespace tspread {

/// Requested corners (k_i, l_i) with values a_i, i = 1..r, in an ambient.
struct CornerSpec {
  Ambient amb;
  std::vector<Corner> corners;
};

enum class Verdict { feasible, infeasible };

inline const char* to_string(Verdict v) { return v == Verdict::feasible ? "feasible" : "infeasible"; }

/// Everything computed for one corner while deciding and building.
struct CornerAudit {
  Corner corner;
  // Feasibility chain, computed from the last corner back to the first.
  std::optional<Monomial> v;              // v_i
  std::optional<Monomial> w;              // w_i, with A_i = [w_i, v_i] of size a_i
  std::optional<SlexSegment> segment;     // A_i
  std::optional<Count> n;                 // n_i = |{u in A^t(k_i,l_i) : u >= v_i}|
  // Construction, computed from the first corner forward.
  std::optional<Monomial> bshad_min;      // min BShad_t([I_{l_{i-1}}]_t)_{(k_i,l_i)}, i >= 2
  std::optional<Monomial> u_first;        // u_{i,1}
  std::optional<Count> p;                 // p_i = |{v in A^t(k_i,l_i) : v > u_{i,1}}|
  std::optional<Count> bound;             // n_i - p_i, clamped at 0
  std::vector<Monomial> chosen;           // u_{i,1}, ..., u_{i,a_i}
};

struct SolveReport {
  Verdict verdict = Verdict::infeasible;
  std::vector<CornerAudit> audit;
  std::optional<TIdeal> ideal;
  std::optional<int> failure_corner;  // 1-based
  std::optional<Count> failure_bound;
  std::string failure_reason;
  std::vector<std::string> notes;
};

/// Floor division for a positive divisor; floor(-1/3) = -1.
constexpr long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// The unique (d, k) with n = d + k t, 1 <= d <= t.
inline std::pair<int, int> decompose_n(int n, int t) {
  if (t < 1) throw DomainError("decompose_n: need t >= 1");
  if (n <= t) throw DomainError("decompose_n: need n > t (n = " + std::to_string(n) + ", t = " + std::to_string(t) + ")");
  const int d = (n - 1) % t + 1;
  return {d, (n - d) / t};
}

/// Largest admissible initial degree l_1 for (n, t): k + floor((d-2)/t) + 1.
inline int max_initial_degree(int n, int t) {
  auto [d, k] = decompose_n(n, t);
  return static_cast<int>(k + floor_div(d - 2, t) + 1);
}

/// Largest admissible top degree l_r for a given l_1.
inline int max_top_degree(int n, int t, int l1) {
  auto [d, k] = decompose_n(n, t);
  return static_cast<int>(l1 == 2 ? k + floor_div(d - 3, t) + 1 : k + floor_div(d - 2, t) + 1);
}

/// Maximal number of corners of an ideal with initial degree l_1:
/// k + floor((d-3)/t) when l_1 = 2, k + floor((d-2)/t) - (l_1 - 2) otherwise.
inline int max_corners(int n, int t, int l1) {
  auto [d, k] = decompose_n(n, t);
  if (l1 < 2 || l1 > max_initial_degree(n, t))
    throw DomainError("max_corners: l1 = " + std::to_string(l1) + " outside [2, " +
                      std::to_string(max_initial_degree(n, t)) + "]");
  if (l1 == 2) return static_cast<int>(k + floor_div(d - 3, t));
  return static_cast<int>(k + floor_div(d - 2, t) - (l1 - 2));
}

/// Structural hypotheses of the characterization; empty when all hold.
inline std::vector<std::string> validate_spec(const CornerSpec& spec) {
  std::vector<std::string> bad;
  const int n = spec.amb.n;
  const int t = spec.amb.t;
  const auto& cs = spec.corners;
  auto pos = [](std::size_t i) { return "corner " + std::to_string(i + 1); };
  if (n < 1 || t < 1) {
    bad.push_back("ambient: need n >= 1 and t >= 1");
    return bad;
  }
  if (cs.empty()) bad.push_back("need at least one corner");
  if (n <= t) {
    bad.push_back("need n > t to write n = d + k t");
    return bad;
  }
  auto [d, k] = decompose_n(n, t);
  if (k < 3)
    bad.push_back("n = " + std::to_string(d) + " + " + std::to_string(k) + "*" + std::to_string(t) + " needs k >= 3");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].a < 1) bad.push_back(pos(i) + ": value a must be >= 1");
    if (cs[i].k < 1) bad.push_back(pos(i) + ": k must be >= 1");
    if (cs[i].l < 1) bad.push_back(pos(i) + ": l must be >= 1");
    if (corner_top(cs[i].k, cs[i].l, t) > n)
      bad.push_back(pos(i) + ": k + t(l-1) + 1 = " + std::to_string(corner_top(cs[i].k, cs[i].l, t)) +
                    " exceeds n = " + std::to_string(n));
    if (i > 0 && cs[i].k >= cs[i - 1].k) bad.push_back(pos(i) + ": k must be strictly decreasing");
    if (i > 0 && cs[i].l <= cs[i - 1].l) bad.push_back(pos(i) + ": l must be strictly increasing");
  }
  if (cs.empty()) return bad;
  if (cs.front().k > n - t - 1)
    bad.push_back("k_1 = " + std::to_string(cs.front().k) + " exceeds n - t - 1 = " + std::to_string(n - t - 1));
  const int l1 = cs.front().l;
  if (l1 < 2) {
    bad.push_back("l_1 must be >= 2");
  } else if (l1 > max_initial_degree(n, t)) {
    bad.push_back("l_1 = " + std::to_string(l1) + " exceeds " + std::to_string(max_initial_degree(n, t)));
  } else {
    const int rmax = max_corners(n, t, l1);
    if (static_cast<int>(cs.size()) > rmax)
      bad.push_back("r = " + std::to_string(cs.size()) + " exceeds the maximal corner count " + std::to_string(rmax));
    const int ltop = max_top_degree(n, t, l1);
    if (cs.back().l > ltop)
      bad.push_back("l_r = " + std::to_string(cs.back().l) + " exceeds " + std::to_string(ltop));
  }
  return bad;
}

namespace detail {

inline void require_valid(const CornerSpec& spec, const char* op) {
  auto bad = validate_spec(spec);
  if (bad.empty()) return;
  std::string msg = std::string(op) + ": invalid corner specification";
  for (const auto& b : bad) msg += "; " + b;
  throw DomainError(msg);
}

inline SolveReport fail(SolveReport report, std::size_t i, Count bound, std::string reason) {
  report.verdict = Verdict::infeasible;
  report.failure_corner = static_cast<int>(i + 1);
  report.failure_bound = bound;
  report.failure_reason = std::move(reason);
  return report;
}

// Whether `target` lies outside BShad_t(u)_{(k2,l2)}. The closed-form
// minimum settles every target below it; the rest is a membership test in
// the shadow of B_t{u}.
inline bool escapes_bshad(const Monomial& target, const Monomial& u, int k2, int l2, const Ambient& amb) {
  Monomial lowest = min_bshad_single(u, k2, l2, amb);
  if (slex_cmp(target, lowest) < 0) return true;
  MonomialSet closure = borel_closure_degree(MonomialSet(amb, u.degree(), {u}));
  return !in_bshad_of_closure(target, closure, k2, l2);
}

}  // namespace detail

/// Decides the bounds a_i <= n_i: v_r = min A^t(k_r,l_r), and for i < r,
/// v_i is the least u of A^t(k_i,l_i) whose Borel t-shadow at the next
/// corner misses max A_{i+1}. A_i = [w_i, v_i] is the segment of a_i
/// elements ending at v_i. The ideal is not built here.
inline SolveReport feasibility_chain(const CornerSpec& spec) {
  detail::require_valid(spec, "feasibility_chain");
  const Ambient& amb = spec.amb;
  const auto& cs = spec.corners;
  const std::size_t r = cs.size();
  SolveReport report;
  report.audit.resize(r);
  for (std::size_t i = 0; i < r; ++i) report.audit[i].corner = cs[i];
  if (amb.t == 1) report.notes.push_back("bounds per t>=2 theorem");

  for (std::size_t step = 0; step < r; ++step) {
    const std::size_t i = r - 1 - step;
    auto& au = report.audit[i];
    const int k = cs[i].k;
    const int l = cs[i].l;
    if (i == r - 1) {
      au.v = min_of_A(k, l, amb);
    } else {
      const Monomial& target = *report.audit[i + 1].w;
      const int k2 = cs[i + 1].k;
      const int l2 = cs[i + 1].l;
      // Scan A^t(k, l) slex-ascending from its minimum.
      auto members = enumerate_A(k, l, amb);
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (detail::escapes_bshad(target, *it, k2, l2, amb)) {
          au.v = *it;
          break;
        }
      }
      if (!au.v) {
        au.n = 0;
        return detail::fail(std::move(report), i, 0,
                            "every element of A^t(k,l) has max A_" + std::to_string(i + 2) +
                                " in its Borel t-shadow");
      }
    }
    au.n = rank_in_A(*au.v, k, l, amb);
    if (cs[i].a > *au.n)
      return detail::fail(std::move(report), i, *au.n, "a_" + std::to_string(i + 1) + " exceeds n_" + std::to_string(i + 1));
    au.w = unrank_in_A(*au.n - cs[i].a + 1, k, l, amb);
    au.segment = SlexSegment{k, l, amb, *au.w, *au.v};
  }
  report.verdict = Verdict::feasible;
  return report;
}

/// Runs the chain and, when it passes, builds the ideal degree by degree:
/// G(I)_{l_1} = B_t{first a_1 elements of A^t(k_1,l_1)} and, for i >= 2,
/// G(I)_{l_i} = B_t{u_{i,1..a_i}} minus the shadow of [I_{l_{i-1}}]_t, where
/// u_{i,1..a_i} are the first a_i elements of A^t(k_i,l_i) outside
/// BShad_t([I_{l_{i-1}}]_t)_{(k_i,l_i)}, subject to a_i <= n_i - p_i.
inline SolveReport construct_ideal(const CornerSpec& spec) {
  SolveReport report = feasibility_chain(spec);
  if (report.verdict == Verdict::infeasible) return report;
  const Ambient& amb = spec.amb;
  const auto& cs = spec.corners;
  std::map<int, MonomialSet> comps;

  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto& au = report.audit[i];
    const int k = cs[i].k;
    const int l = cs[i].l;
    auto members = enumerate_A(k, l, amb);
    std::optional<MonomialSet> lower;
    if (i > 0) {
      MonomialSet cur = comps.at(cs[i - 1].l);
      for (int j = cs[i - 1].l + 1; j < l; ++j) {
        cur = shadow(cur);
        comps.emplace(j, cur);
      }
      lower = shadow(cur);
      const int top = corner_top(k, l, amb.t);
      for (auto it = lower->elements().rbegin(); it != lower->elements().rend(); ++it)
        if (it->max() <= top) {
          au.bshad_min = *it;
          break;
        }
    }
    for (const Monomial& u : members) {
      if (lower && lower->contains(u)) continue;
      au.chosen.push_back(u);
      if (static_cast<Count>(au.chosen.size()) == cs[i].a) break;
    }
    if (au.chosen.empty()) {
      au.bound = 0;
      report.ideal.reset();
      return detail::fail(std::move(report), i, 0, "A^t(k,l) lies inside the Borel t-shadow of the lower degree");
    }
    au.u_first = au.chosen.front();
    au.p = rank_in_A(*au.u_first, k, l, amb) - 1;
    au.bound = *au.p <= *au.n ? *au.n - *au.p : Count{0};
    if (cs[i].a > *au.bound) {
      au.chosen.clear();
      return detail::fail(std::move(report), i, *au.bound,
                          "a_" + std::to_string(i + 1) + " exceeds n_" + std::to_string(i + 1) + " - p_" +
                              std::to_string(i + 1));
    }
    MonomialSet block = borel_closure_degree(MonomialSet(amb, l, au.chosen));
    comps.insert_or_assign(l, lower ? block.set_union(*lower) : block);
  }

  TIdeal ideal = minimalize(amb, comps);
  CornerData realized = corner_sequence(ideal);
  if (realized.corners != cs)
    throw std::logic_error("construct_ideal: the constructed ideal does not realize the requested corners");
  report.ideal = std::move(ideal);
  report.verdict = Verdict::feasible;
  return report;
}

}  // namespace tspread
