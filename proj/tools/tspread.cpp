#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tspread/oracle/sweep.hpp"
#include "tspread/tspread.hpp"

namespace {

using namespace tspread;
using io::json;

struct AmbientFlags {
  int n = 0;
  int t = 0;
  void add(CLI::App* cmd) {
    cmd->add_option("--n", n, "number of variables")->required();
    cmd->add_option("--t", t, "spread parameter")->required();
  }
  Ambient get() const { return Ambient::make(n, t); }
};

// Accepts "4,9,13,16" as well as "[4,9,13,16]".
Monomial parse_arg(std::string text) {
  std::erase_if(text, [](char c) { return c == '[' || c == ']'; });
  return parse_monomial(text);
}

void print_monomials(const std::vector<Monomial>& ms, const std::string& format) {
  if (format == "json") {
    std::cout << io::to_json(ms).dump() << '\n';
    return;
  }
  for (const auto& m : ms) std::cout << (format == "m2" ? to_m2(m) : to_text(m)) << '\n';
}

// Generators from --gens file.json and/or repeated --gen flags, all of one degree.
struct GenFlags {
  std::string file;
  std::vector<std::string> inline_gens;
  void add(CLI::App* cmd) {
    cmd->add_option("--gens", file, "JSON file holding an array of index arrays");
    cmd->add_option("--gen", inline_gens, "one generator, e.g. 4,9,13 (repeatable)");
  }
  MonomialSet get(const Ambient& amb) const {
    std::vector<Monomial> ms;
    if (!file.empty()) ms = io::monomials_from_json(io::read_json_file(file));
    for (const auto& g : inline_gens) ms.push_back(parse_arg(g));
    if (ms.empty()) throw DomainError("no generators given (use --gens or --gen)");
    for (const auto& m : ms)
      if (m.degree() != ms.front().degree()) throw DomainError("generators must share one degree");
    return MonomialSet::from(amb, std::move(ms));
  }
};

const std::vector<std::string> kListFormats{"text", "json", "m2"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-spread strongly stable ideals: enumeration, shadows, Betti numbers, corner realizability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tspread 1.0");

  AmbientFlags amb_flags;
  std::string format = "text";
  int d = 0;
  std::optional<int> k_opt, l_opt;
  int k = 0, l = 0, k2 = 0, l2 = 0, s = 1, l1 = 2;
  std::string monomial_text, ideal_path, spec_path, report_path, emit_path, suite = "quick";
  std::optional<std::string> unrank_text;
  GenFlags gen_flags;

  auto* enumerate = app.add_subcommand("enumerate", "list M_{n,d,t} or A^t(k,l), slex-descending");
  amb_flags.add(enumerate);
  enumerate->add_option("--d", d, "degree");
  enumerate->add_option("--k", k_opt, "restrict to A^t(k,l)");
  enumerate->add_option("--l", l_opt, "restrict to A^t(k,l)");
  enumerate->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* rank = app.add_subcommand("rank", "position of a monomial in A^t(k,l), counted from the slex maximum");
  AmbientFlags rank_amb;
  rank_amb.add(rank);
  rank->add_option("--k", k)->required();
  rank->add_option("--l", l)->required();
  auto* rank_mono = rank->add_option("--monomial", monomial_text, "e.g. 4,9,13,16");
  auto* rank_unrank = rank->add_option("--unrank", unrank_text, "inverse: print the monomial of this rank");
  rank_mono->excludes(rank_unrank);
  rank->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* successor = app.add_subcommand("successor", "next monomial of A^t(k,l) in slex-descending order");
  AmbientFlags succ_amb;
  succ_amb.add(successor);
  successor->add_option("--k", k)->required();
  successor->add_option("--l", l)->required();
  successor->add_option("--monomial", monomial_text)->required();
  successor->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* closure = app.add_subcommand("closure", "Borel closure B_t{gens} in the generators' degree");
  AmbientFlags clo_amb;
  clo_amb.add(closure);
  GenFlags clo_gens;
  clo_gens.add(closure);
  closure->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* shadow_cmd = app.add_subcommand("shadow", "iterated t-shadow Shad_t^s(gens)");
  AmbientFlags sh_amb;
  sh_amb.add(shadow_cmd);
  GenFlags sh_gens;
  sh_gens.add(shadow_cmd);
  shadow_cmd->add_option("--s", s, "number of shadow steps")->check(CLI::NonNegativeNumber);
  shadow_cmd->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* bshad_cmd = app.add_subcommand("bshad", "Borel t-shadow BShad_t(gens)_{(k2,l2)}");
  AmbientFlags bs_amb;
  bs_amb.add(bshad_cmd);
  GenFlags bs_gens;
  bs_gens.add(bshad_cmd);
  bshad_cmd->add_option("--k2", k2)->required();
  bshad_cmd->add_option("--l2", l2)->required();
  bshad_cmd->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* minb = app.add_subcommand("min-bshad", "slex minimum of BShad_t(gens)_{(k2,l2)} in closed form");
  AmbientFlags mb_amb;
  mb_amb.add(minb);
  GenFlags mb_gens;
  mb_gens.add(minb);
  minb->add_option("--k2", k2)->required();
  minb->add_option("--l2", l2)->required();
  minb->add_option("--format", format)->check(CLI::IsMember(kListFormats));

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of an ideal");
  betti->add_option("--ideal", ideal_path, "ideal JSON")->required();
  betti->add_option("--format", format)->check(CLI::IsMember({"table", "json", "m2", "text"}));

  auto* corners = app.add_subcommand("corners", "corner sequence and extremal values of an ideal");
  corners->add_option("--ideal", ideal_path, "ideal JSON")->required();
  corners->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* solve = app.add_subcommand("solve", "decide and realize prescribed corners and values");
  solve->add_option("--spec", spec_path, "spec JSON")->required();
  solve->add_option("--report", report_path, "write the report JSON here");
  solve->add_option("--emit-ideal", emit_path, "write the constructed ideal JSON here");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "compare closed forms with brute-force oracles");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));

  auto* maxc = app.add_subcommand("max-corners", "largest possible number of corners");
  AmbientFlags mc_amb;
  mc_amb.add(maxc);
  maxc->add_option("--l1", l1, "initial degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*enumerate) {
      const Ambient amb = amb_flags.get();
      if (k_opt.has_value() != l_opt.has_value()) throw DomainError("enumerate: --k and --l go together");
      if (k_opt) {
        if (enumerate->count("--d") && d != *l_opt) throw DomainError("enumerate: --d must equal --l when given");
        print_monomials(enumerate_A(*k_opt, *l_opt, amb), format);
      } else {
        if (!enumerate->count("--d")) throw DomainError("enumerate: --d is required without --k/--l");
        print_monomials(tspread::enumerate_M(amb.n, d, amb.t), format);
      }
    } else if (*rank) {
      const Ambient amb = rank_amb.get();
      if (unrank_text) {
        Count r = io::count_from_json(json(*unrank_text));
        print_monomials({unrank_in_A(r, k, l, amb)}, format);
      } else {
        if (monomial_text.empty()) throw DomainError("rank: --monomial or --unrank is required");
        Count r = rank_in_A(parse_arg(monomial_text), k, l, amb);
        std::cout << (format == "json" ? io::count_json(r).dump() : to_string(r)) << '\n';
      }
    } else if (*successor) {
      const Ambient amb = succ_amb.get();
      auto next = successor_in_A(parse_arg(monomial_text), k, l, amb);
      if (format == "json")
        std::cout << (next ? io::to_json(*next) : json(nullptr)).dump() << '\n';
      else
        std::cout << (next ? (format == "m2" ? to_m2(*next) : to_text(*next)) : std::string("none")) << '\n';
    } else if (*closure) {
      const Ambient amb = clo_amb.get();
      print_monomials(borel_closure_degree(clo_gens.get(amb)).elements(), format);
    } else if (*shadow_cmd) {
      const Ambient amb = sh_amb.get();
      print_monomials(shadow_power(sh_gens.get(amb), s).elements(), format);
    } else if (*bshad_cmd) {
      const Ambient amb = bs_amb.get();
      print_monomials(tspread::bshad(bs_gens.get(amb), k2, l2).elements(), format);
    } else if (*minb) {
      const Ambient amb = mb_amb.get();
      MonomialSet T = mb_gens.get(amb);
      print_monomials({T.size() == 1 ? min_bshad_single(T.max(), k2, l2, amb) : min_bshad_set(T, k2, l2)}, format);
    } else if (*betti) {
      TIdeal I = io::ideal_from_json(io::read_json_file(ideal_path));
      if (format == "json")
        std::cout << io::to_json(betti_table(I)).dump() << '\n';
      else if (format == "m2")
        std::cout << io::to_m2(I) << '\n';
      else
        std::cout << render_table(betti_table(I));
    } else if (*corners) {
      TIdeal I = io::ideal_from_json(io::read_json_file(ideal_path));
      CornerData cd = corner_sequence(I);
      if (format == "json") {
        std::cout << io::to_json(cd).dump() << '\n';
      } else {
        for (const auto& c : cd.corners) std::cout << c.k << ' ' << c.l << ' ' << to_string(c.a) << '\n';
      }
    } else if (*solve) {
      CornerSpec spec = io::spec_from_json(io::read_json_file(spec_path));
      auto violations = validate_spec(spec);
      if (!violations.empty()) {
        std::cerr << "error: invalid corner specification\n";
        for (const auto& v : violations) std::cerr << "  " << v << '\n';
        return 1;
      }
      SolveReport report = construct_ideal(spec);
      json rj = io::to_json(report);
      if (!report_path.empty()) io::write_json_file(report_path, rj);
      if (!emit_path.empty() && report.ideal) io::write_json_file(emit_path, io::to_json(*report.ideal));
      if (format == "json") {
        std::cout << rj.dump() << '\n';
      } else {
        std::cout << "verdict: " << to_string(report.verdict) << '\n';
        for (std::size_t i = 0; i < report.audit.size(); ++i) {
          const auto& a = report.audit[i];
          auto c = [](const std::optional<Count>& x) { return x ? to_string(*x) : std::string("-"); };
          auto m = [](const std::optional<Monomial>& x) { return x ? to_text(*x) : std::string("-"); };
          std::cout << "corner " << i + 1 << " (k=" << a.corner.k << ", l=" << a.corner.l
                    << ", a=" << to_string(a.corner.a) << "): v=" << m(a.v) << " w=" << m(a.w) << " n=" << c(a.n)
                    << " u1=" << m(a.u_first) << " p=" << c(a.p) << " bound=" << c(a.bound) << '\n';
        }
        if (report.failure_corner)
          std::cout << "failure: corner " << *report.failure_corner << ", bound "
                    << (report.failure_bound ? to_string(*report.failure_bound) : "-") << " (" << report.failure_reason
                    << ")\n";
        if (report.ideal) std::cout << "generators: " << report.ideal->generator_count() << '\n';
        for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
      }
      return report.verdict == Verdict::feasible ? 0 : 2;
    } else if (*verify) {
      auto cfg = suite == "full" ? oracle::SweepConfig::full() : oracle::SweepConfig::quick();
      auto result = oracle::run_sweep(cfg);
      std::uint64_t pass = 0, fail = 0;
      for (const auto& c : result.checks) {
        std::cout << (c.failed ? "FAIL " : "ok   ") << c.name << ": " << c.passed << " passed, " << c.failed
                  << " failed\n";
        for (const auto& e : c.examples) std::cout << "       " << e << '\n';
        pass += c.passed;
        fail += c.failed;
      }
      std::cout << "suite " << suite << ": " << pass << " passed, " << fail << " failed\n";
      return fail == 0 ? 0 : 1;
    } else if (*maxc) {
      Ambient amb = mc_amb.get();
      std::cout << max_corners(amb.n, amb.t, l1) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
