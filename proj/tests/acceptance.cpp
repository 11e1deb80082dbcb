// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tspread/io.hpp"
#include "tspread/oracle/sweep.hpp"
#include "tspread/tspread.hpp"

using namespace tspread;
namespace o = tspread::oracle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string data(const std::string& name) { return std::string(TSPREAD_DATA_DIR) + "/" + name; }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// 1. The worked n = 25 spec: verdict, the 23 listed generators, n_i and p_i.
Outcome worked_solve() {
  Outcome out;
  auto start = Clock::now();
  CornerSpec spec = io::spec_from_json(io::read_json_file(data("n25_spec.json")));
  SolveReport r = construct_ideal(spec);
  const double took = seconds_since(start);
  out.require(r.verdict == Verdict::feasible && r.ideal.has_value(), "verdict is not feasible");
  if (!out.ok) return out;
  TIdeal listed = io::ideal_from_json(io::read_json_file(data("n25_ideal.json")));
  out.require(listed.generator_count() == 23, "listed ideal does not have 23 generators");
  out.require(*r.ideal == listed, "constructed generators differ from the listed 23");
  const std::vector<Count> n{2, 37, 61, 84}, p{0, 36, 58, 82};
  for (std::size_t i = 0; i < 4; ++i) {
    out.require(r.audit[i].n == n[i], "n_" + std::to_string(i + 1) + " mismatch");
    out.require(r.audit[i].p == p[i], "p_" + std::to_string(i + 1) + " mismatch");
  }
  out.require(took < 5.0, "took " + std::to_string(took) + " s");
  if (out.ok) out.detail = "23 generators, n=(2,37,61,84), p=(0,36,58,82), " + std::to_string(took) + " s";
  return out;
}

// 2. Betti table of the listed ideal, entry by entry and as rendered text.
Outcome worked_betti() {
  Outcome out;
  TIdeal I = io::ideal_from_json(io::read_json_file(data("n25_ideal.json")));
  BettiTable bt = betti_table(I);
  const std::vector<Count> tot{23, 77, 117, 100, 51, 15, 2};
  const std::map<int, std::vector<Count>> rows{{2, {13, 42, 70, 70, 42, 14, 2}}, {3, {0, 0, 0, 0, 0, 0, 0}},
                                               {4, {4, 14, 20, 15, 6, 1, 0}},     {5, {4, 15, 21, 13, 3, 0, 0}},
                                               {6, {0, 0, 0, 0, 0, 0, 0}},       {7, {2, 6, 6, 2, 0, 0, 0}}};
  out.require(bt.max_homological() == 6 && bt.min_degree() == 2 && bt.max_degree() == 7, "table shape");
  for (int k = 0; k < 7; ++k) out.require(bt.total(k) == tot[k], "Tot column " + std::to_string(k));
  for (const auto& [l, row] : rows)
    for (int k = 0; k < 7; ++k)
      out.require(bt.at(k, l) == row[k], "entry (" + std::to_string(k) + "," + std::to_string(l) + ")");
  std::ifstream golden(std::string(TSPREAD_GOLDEN_DIR) + "/n25_betti_table.txt");
  std::stringstream ss;
  ss << golden.rdbuf();
  out.require(render_table(bt) == ss.str(), "rendered table differs from the golden file");
  if (out.ok) out.detail = "42 cells and Tot row exact; golden text identical";
  return out;
}

// 3. Infeasible n = 13 spec and its relaxed variant.
Outcome small_infeasible() {
  Outcome out;
  SolveReport bad = construct_ideal(io::spec_from_json(io::read_json_file(data("n13_spec.json"))));
  out.require(bad.verdict == Verdict::infeasible, "(3,10) is not infeasible");
  out.require(bad.failure_corner == 1, "failure is not at the (5,2) corner");
  out.require(bad.failure_bound == Count{1}, "reported bound is not 1");
  SolveReport good = construct_ideal(io::spec_from_json(io::read_json_file(data("n13_relaxed_spec.json"))));
  out.require(good.verdict == Verdict::feasible && good.ideal.has_value(), "(1,10) is not feasible");
  if (good.ideal)
    out.require(corner_sequence(*good.ideal).corners == std::vector<Corner>{{5, 2, 1}, {3, 4, 10}},
                "(1,10) ideal has other corner values");
  if (out.ok) out.detail = "(3,10) fails at corner (5,2) with bound 1; (1,10) realized";
  return out;
}

// 4. Rank 73 and the full segment listing.
Outcome rank_fixture() {
  Outcome out;
  const Ambient amb{16, 3};
  Monomial u{4, 9, 13, 16};
  out.require(rank_in_A(u, 6, 4, amb) == 73, "rank is not 73");
  std::vector<Monomial> expected;
  std::ifstream in(data("a3_6_4_segment.txt"));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) expected.push_back(parse_monomial(line));
  out.require(expected.size() == 73, "fixture does not hold 73 monomials");
  auto seg = SlexSegment::make(6, 4, amb, max_of_A(6, 4, amb), u);
  out.require(segment_card(seg) == 73, "segment_card is not 73");
  out.require(segment_members(seg) == expected, "segment members differ from the listing");
  if (out.ok) out.detail = "rank 73; 73 members match the listing in order";
  return out;
}

// 5. Closed forms against oracles over the full cartesian sweep.
Outcome oracle_sweep() {
  Outcome out;
  o::SweepResult quick = o::run_sweep(o::SweepConfig::quick());
  out.require(quick.ok(), "quick suite has mismatches");
  out.require(quick.seconds < 30.0, "quick suite took " + std::to_string(quick.seconds) + " s");
  o::SweepResult full = o::run_sweep(o::SweepConfig::full());
  std::uint64_t instances = 0;
  for (const auto& c : full.checks) {
    instances += c.passed + c.failed;
    out.require(c.failed == 0, c.name + ": " + std::to_string(c.failed) + " mismatches" +
                                   (c.examples.empty() ? "" : " (" + c.examples.front() + ")"));
  }
  out.require(full.seconds < 600.0, "full suite took " + std::to_string(full.seconds) + " s");
  if (out.ok) {
    std::ostringstream os;
    os << full.checks.size() << " operations, " << instances << " instances; full " << static_cast<int>(full.seconds)
       << " s, quick " << static_cast<int>(quick.seconds) << " s";
    out.detail = os.str();
  }
  return out;
}

// 6. Solver verdicts against exhaustive enumeration, n <= 12, t = 2, r <= 2.
Outcome micro_soundness() {
  Outcome out;
  const int t = 2;
  std::uint64_t specs = 0, feasible = 0;
  for (int n = 3; n <= 12; ++n) {
    const Ambient amb{n, t};
    for (int l1 = 2; l1 <= 7; ++l1)
      for (int k1 = 1; corner_top(k1, l1, t) <= n; ++k1) {
        CornerSpec one{amb, {{k1, l1, 1}}};
        if (validate_spec(one).empty()) {
          auto sizes = o::order_ideal_sizes(n, t, k1, l1);
          for (Count a1 = 1; a1 <= card_A(k1, l1) + 1; ++a1) {
            one.corners[0].a = a1;
            SolveReport r = construct_ideal(one);
            const bool brute = a1 < sizes.size() && sizes[static_cast<std::size_t>(a1)];
            ++specs;
            if (r.verdict == Verdict::feasible) {
              ++feasible;
              out.require(corner_sequence(*r.ideal).corners == one.corners, "round trip, r=1");
            }
            out.require((r.verdict == Verdict::feasible) == brute,
                        "r=1 verdict vs enumeration at n=" + std::to_string(n));
          }
        }
        for (int l2 = l1 + 1; l2 <= 7; ++l2)
          for (int k2 = 1; k2 < k1 && corner_top(k2, l2, t) <= n; ++k2) {
            CornerSpec two{amb, {{k1, l1, 1}, {k2, l2, 1}}};
            if (!validate_spec(two).empty()) continue;
            auto table = o::two_degree_table(n, t, k1, l1, k2, l2);
            for (long long a1 = 1; a1 <= table.a1_card; ++a1)
              for (long long a2 = 1; a2 <= table.a2_card; ++a2) {
                two.corners[0].a = static_cast<Count>(a1);
                two.corners[1].a = static_cast<Count>(a2);
                SolveReport r = construct_ideal(two);
                const bool brute = table.best_free[static_cast<std::size_t>(a1)] >= a2;
                ++specs;
                const std::string at = "n=" + std::to_string(n) + " (" + std::to_string(k1) + "," +
                                       std::to_string(l1) + "," + std::to_string(a1) + ")(" + std::to_string(k2) +
                                       "," + std::to_string(l2) + "," + std::to_string(a2) + ")";
                if (r.verdict == Verdict::feasible) {
                  ++feasible;
                  out.require(corner_sequence(*r.ideal).corners == two.corners, "round trip " + at);
                  out.require(brute, "enumeration finds no realization for feasible " + at);
                } else {
                  out.require(!brute, "enumeration realizes infeasible " + at);
                }
              }
          }
      }
  }
  if (out.ok)
    out.detail = std::to_string(specs) + " specs, " + std::to_string(feasible) + " feasible, all verdicts confirmed";
  return out;
}

// 7. Decomposition by minimum and t-independence of |A^t(k,l)|.
Outcome identities() {
  Outcome out;
  // Pascal's triangle as an independent source of binomials.
  std::vector<std::vector<Count>> pascal(64, std::vector<Count>(64, 0));
  for (int a = 0; a < 64; ++a) {
    pascal[a][0] = 1;
    for (int b = 1; b <= a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
  }
  int identities_checked = 0;
  for (int k = 0; k <= 30; ++k)
    for (int l = 2; l <= 30; ++l) {
      Count sum = 0;
      for (const auto& [i, b] : decompose_by_min(k, l)) {
        out.require(b == pascal[k + l - 1 - i][l - 2], "b_i mismatch");
        sum += b;
      }
      out.require(sum == pascal[k + l - 1][l - 1] && card_A(k, l) == sum,
                  "decomposition at k=" + std::to_string(k) + " l=" + std::to_string(l));
      ++identities_checked;
    }
  int cards_checked = 0;
  for (int k = 0; k <= 8; ++k)
    for (int l = 1; l <= 6; ++l) {
      std::vector<std::size_t> sizes;
      for (int t = 1; t <= 3; ++t) {
        const int n = corner_top(k, l, t);
        sizes.push_back(tspread::enumerate_A(k, l, Ambient{n, t}).size());
        if (n <= 20) out.require(o::enumerate_A(n, t, k, l).size() == sizes.back(), "oracle enumeration");
      }
      out.require(sizes[0] == sizes[1] && sizes[1] == sizes[2] && card_A(k, l) == sizes[0],
                  "card_A depends on t at k=" + std::to_string(k) + " l=" + std::to_string(l));
      ++cards_checked;
    }
  if (out.ok)
    out.detail = std::to_string(identities_checked) + " decompositions exact; " + std::to_string(cards_checked) +
                 " (k,l) cardinalities equal for t=1,2,3";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked n=25 spec solves to the listed ideal", worked_solve},
      {2, "worked n=25 Betti table", worked_betti},
      {3, "n=13 infeasible spec and feasible relaxation", small_infeasible},
      {4, "rank fixture and segment listing", rank_fixture},
      {5, "closed forms match oracles on the full sweep", oracle_sweep},
      {6, "micro-scale soundness and completeness", micro_soundness},
      {7, "decomposition and cardinality identities", identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome res;
    auto start = Clock::now();
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("exception: ") + e.what();
    }
    const double took = seconds_since(start);
    std::cout << (res.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << res.detail
              << " [" << static_cast<int>(took * 1000) / 1000.0 << " s]" << std::endl;
    failures += !res.ok;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
