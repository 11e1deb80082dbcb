#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tspread/betti.hpp"
#include "tspread/borel.hpp"
#include "tspread/enumeration.hpp"
#include "tspread/oracle/oracle.hpp"

namespace tspread::oracle {

/// Cartesian ranges of the sweep. The caps bound how many generators or
/// ideals are drawn per (n, t, degree) for the checks whose oracle is a
/// naive fixpoint; draws are evenly strided, so the sweep is deterministic.
struct SweepConfig {
  int n_max = 10;
  int t_min = 1;
  int t_max = 3;
  int d_max = 5;
  std::size_t closure_cap = 24;
  std::size_t bshad_cap = 24;
  std::size_t ideal_cap = 24;

  static SweepConfig quick() { return {}; }
  static SweepConfig full() { return {14, 1, 4, 7, 40, 40, 40}; }
};

struct CheckResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> examples;  // first few mismatches
};

struct SweepResult {
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (c.failed != 0) return false;
    return true;
  }
};

namespace detail {

inline Monomial to_monomial(const Support& s) { return Monomial(s); }

inline std::string show(const Support& s) {
  std::string out = "[";
  for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
  return out + "]";
}

inline Family to_family(const std::vector<Monomial>& ms) {
  Family f;
  for (const auto& m : ms) f.push_back(m.vec());
  return f;
}

template <class T>
std::vector<T> strided(const std::vector<T>& all, std::size_t cap) {
  if (all.size() <= cap) return all;
  std::vector<T> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(all[i * all.size() / cap]);
  return out;
}

struct Recorder {
  std::map<std::string, CheckResult> by_name;
  std::vector<std::string> order;

  void record(const std::string& name, bool ok, const std::function<std::string()>& what) {
    auto [it, fresh] = by_name.try_emplace(name);
    if (fresh) {
      it->second.name = name;
      order.push_back(name);
    }
    if (ok) {
      ++it->second.passed;
    } else {
      ++it->second.failed;
      if (it->second.examples.size() < 5) it->second.examples.push_back(what());
    }
  }
  // Exceptions from the implementation count as mismatches.
  template <class F>
  void check(const std::string& name, F&& body, const std::function<std::string()>& what) {
    bool ok = false;
    std::string err;
    try {
      ok = body();
    } catch (const std::exception& e) {
      err = std::string(" threw: ") + e.what();
    }
    record(name, ok, [&] { return what() + err; });
  }
};

inline std::string where(int n, int t) { return "n=" + std::to_string(n) + " t=" + std::to_string(t); }

}  // namespace detail

inline SweepResult run_sweep(const SweepConfig& cfg) {
  using namespace detail;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec;

  for (int t = cfg.t_min; t <= cfg.t_max; ++t) {
    for (int n = 1; n <= cfg.n_max; ++n) {
      const Ambient amb{n, t};
      std::map<int, Family> M;
      for (int d = 0; d <= cfg.d_max; ++d) {
        M[d] = enumerate_M(n, d, t);
        const Family& om = M[d];
        rec.check("card_M", [&] { return card_M(n, d, t) == om.size(); },
                  [&] { return where(n, t) + " d=" + std::to_string(d); });
        rec.check("enumerate_M", [&] { return to_family(tspread::enumerate_M(n, d, t)) == om; },
                  [&] { return where(n, t) + " d=" + std::to_string(d); });
      }

      // A^t(k, l), rank, unrank and successor on every element.
      for (int l = 1; l <= cfg.d_max; ++l) {
        for (int k = 0; corner_top(k, l, t) <= n; ++k) {
          Family oa = oracle::enumerate_A(n, t, k, l);
          const std::string at = where(n, t) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
          rec.check("card_A", [&] { return card_A(k, l) == oa.size(); }, [&] { return at; });
          rec.check("enumerate_A", [&] { return to_family(tspread::enumerate_A(k, l, amb)) == oa; },
                    [&] { return at; });
          for (std::size_t pos = 0; pos < oa.size(); ++pos) {
            const Monomial u = to_monomial(oa[pos]);
            rec.check("rank_in_A", [&] { return rank_in_A(u, k, l, amb) == pos + 1; },
                      [&] { return at + " u=" + show(oa[pos]); });
            rec.check("unrank_in_A", [&] { return unrank_in_A(pos + 1, k, l, amb) == u; },
                      [&] { return at + " rank=" + std::to_string(pos + 1); });
            rec.check(
                "successor_in_A",
                [&] {
                  auto s = successor_in_A(u, k, l, amb);
                  if (pos + 1 == oa.size()) return !s.has_value();
                  return s.has_value() && s->vec() == oa[pos + 1];
                },
                [&] { return at + " u=" + show(oa[pos]); });
          }
        }
      }

      // Closure, shadow and strong stability on sampled generators and pairs.
      for (int d = 1; d <= cfg.d_max; ++d) {
        const Family gens = strided(M[d], cfg.closure_cap);
        std::vector<Family> inputs;
        for (const auto& g : gens) inputs.push_back({g});
        for (std::size_t i = 0; i + 1 < gens.size(); i += 2) inputs.push_back({gens[i], gens[gens.size() - 1 - i]});
        for (const Family& in : inputs) {
          const std::string at = where(n, t) + " gens=" + show(in.front()) + (in.size() > 1 ? "+" + show(in.back()) : "");
          Family oc = closure(in, t);
          std::vector<Monomial> ms;
          for (const auto& s : in) ms.push_back(to_monomial(s));
          const MonomialSet set(amb, d, ms);
          rec.check("borel_closure_degree", [&] { return to_family(borel_closure_degree(set).elements()) == oc; },
                    [&] { return at; });
          rec.check("is_strongly_stable",
                    [&] {
                      return is_strongly_stable(MonomialSet(amb, d, ms)) == oracle::is_strongly_stable(in, t) &&
                             is_strongly_stable(borel_closure_degree(set));
                    },
                    [&] { return at; });
          if (d < cfg.d_max)
            rec.check("shadow", [&] { return to_family(tspread::shadow(set).elements()) == oracle::shadow(in, n, t); },
                      [&] { return at; });
        }
      }

      // Minimum of the Borel t-shadow of one generator, for every admissible
      // (k2, l2); the oracle lifts the closure once per (u, l2).
      for (int l1 = 1; l1 < cfg.d_max; ++l1) {
        for (const Support& u : strided(M[l1], cfg.bshad_cap)) {
          const int k1 = u.back() - t * (l1 - 1) - 1;
          Family lifted = closure({u}, t);
          for (int l2 = l1 + 1; l2 <= cfg.d_max; ++l2) {
            lifted = oracle::shadow(lifted, n, t);
            for (int k2 = 0; k2 < k1 && corner_top(k2, l2, t) <= n; ++k2) {
              Family kept;
              for (const auto& v : lifted)
                if (v.back() <= corner_top(k2, l2, t)) kept.push_back(v);
              const std::string at = where(n, t) + " u=" + show(u) + " k2=" + std::to_string(k2) +
                                     " l2=" + std::to_string(l2);
              rec.check("min_bshad_single",
                        [&] { return !kept.empty() && min_bshad_single(to_monomial(u), k2, l2, amb).vec() == min_slex(kept); },
                        [&] { return at; });
              const Monomial w = to_monomial(min_slex(kept));
              rec.check("bshad_membership",
                        [&] {
                          MonomialSet cl = borel_closure_degree(MonomialSet(amb, l1, {to_monomial(u)}));
                          return in_bshad_of_closure(w, cl, k2, l2) &&
                                 (kept.size() == 1 || in_bshad_of_closure(to_monomial(kept.front()), cl, k2, l2));
                        },
                        [&] { return at; });
            }
          }
        }
      }

      // min BShad of sets inside one A^t(k1, l1): top and bottom segments.
      for (int l1 = 1; l1 < cfg.d_max; ++l1) {
        for (int k1 = 1; corner_top(k1, l1, t) <= n; ++k1) {
          Family oa = oracle::enumerate_A(n, t, k1, l1);
          std::vector<Family> sets;
          for (std::size_t s = 1; s <= std::min<std::size_t>(3, oa.size()); ++s) {
            sets.emplace_back(oa.begin(), oa.begin() + static_cast<long>(s));
            sets.emplace_back(oa.end() - static_cast<long>(s), oa.end());
          }
          for (const Family& T : sets) {
            for (int l2 = l1 + 1; l2 <= cfg.d_max; ++l2) {
              for (int k2 = 0; k2 < k1 && corner_top(k2, l2, t) <= n; ++k2) {
                const std::string at = where(n, t) + " T=" + show(T.front()) + ".." + show(T.back()) +
                                       " k2=" + std::to_string(k2) + " l2=" + std::to_string(l2);
                std::vector<Monomial> ms;
                for (const auto& s : T) ms.push_back(to_monomial(s));
                const MonomialSet set(amb, l1, ms);
                Family ob = oracle::bshad(T, n, t, k2, l2);
                rec.check("min_bshad_set", [&] { return min_bshad_set(set, k2, l2).vec() == min_slex(ob); },
                          [&] { return at; });
                rec.check("bshad", [&] { return to_family(tspread::bshad(set, k2, l2).elements()) == ob; },
                          [&] { return at; });
              }
            }
          }
        }
      }

      // Extremality: the generator-maxima test against a full table scan, on
      // ideals with one, two or three Borel generators.
      std::vector<Family> ideals;
      for (int d1 = 1; d1 <= cfg.d_max; ++d1) {
        Family g1 = strided(M[d1], cfg.ideal_cap);
        for (std::size_t i = 0; i < g1.size(); ++i) {
          ideals.push_back({g1[i]});
          for (int d2 = d1 + 1; d2 <= cfg.d_max; ++d2) {
            const Family& m2 = M[d2];
            if (m2.empty()) continue;
            const Support& v = m2[(i * 7 + static_cast<std::size_t>(d2)) % m2.size()];
            ideals.push_back({g1[i], v});
            for (int d3 = d2 + 1; d3 <= cfg.d_max && i % 3 == 0; ++d3) {
              const Family& m3 = M[d3];
              if (!m3.empty()) ideals.push_back({g1[i], v, m3[(i * 5 + static_cast<std::size_t>(d3)) % m3.size()]});
            }
          }
        }
      }
      ideals = strided(ideals, cfg.ideal_cap * static_cast<std::size_t>(cfg.d_max));
      for (const Family& gens : ideals) {
        std::string at = where(n, t) + " gens=";
        for (const auto& g : gens) at += show(g);
        int top_deg = 0;
        for (const auto& g : gens) top_deg = std::max(top_deg, static_cast<int>(g.size()));
        auto ogens = minimal_generators(components(gens, n, t, top_deg));
        auto otable = oracle::betti(ogens, n, t);
        std::vector<Monomial> ms;
        for (const auto& g : gens) ms.push_back(to_monomial(g));
        std::optional<TIdeal> ideal;
        rec.check(
            "minimal_generators",
            [&] {
              ideal = TIdeal::from_borel_generators(amb, ms);
              std::map<int, Family> mine;
              for (const auto& [l, g] : ideal->generators()) mine[l] = to_family(g.elements());
              return mine == ogens;
            },
            [&] { return at; });
        if (!ideal) continue;
        rec.check(
            "graded_betti",
            [&] {
              BettiTable bt = betti_table(*ideal);
              std::map<std::pair<int, int>, long long> mine;
              for (const auto& [key, v] : bt.entries) mine[key] = static_cast<long long>(v);
              return mine == otable;
            },
            [&] { return at; });
        for (int l = 1; l <= cfg.d_max; ++l)
          for (int k = 0; k <= n; ++k)
            rec.check("is_extremal", [&] { return is_extremal(*ideal, k, l) == oracle::is_extremal(otable, k, l); },
                      [&] { return at + " cell=(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
      }
    }
  }

  SweepResult out;
  for (const auto& name : rec.order) out.checks.push_back(rec.by_name[name]);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace tspread::oracle
