#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tspread/betti.hpp"
#include "tspread/solver.hpp"

namespace tspread::io {

using nlohmann::json;

// Counts are JSON numbers when they fit in 64 bits, decimal strings otherwise.
inline json count_json(Count c) {
  if (fits_u64(c)) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

inline Count count_from_json(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0) throw DomainError("json: negative count");
    return static_cast<Count>(v);
  }
  if (j.is_string()) {
    Count c = 0;
    const auto s = j.get<std::string>();
    if (s.empty()) throw DomainError("json: empty count string");
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw DomainError("json: count '" + s + "' is not a decimal integer");
      c = checked_add(checked_mul(c, 10), static_cast<Count>(ch - '0'));
    }
    return c;
  }
  throw DomainError("json: expected a count");
}

inline json to_json(const Monomial& m) { return m.vec(); }

inline Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("json: a monomial is an array of indices");
  std::vector<int> idx;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("json: monomial indices must be integers");
    idx.push_back(x.get<int>());
  }
  return Monomial(std::move(idx));
}

inline json to_json(const std::vector<Monomial>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

inline json to_json(const MonomialSet& s) { return to_json(s.elements()); }

inline std::vector<Monomial> monomials_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array of monomials");
  std::vector<Monomial> out;
  for (const auto& x : j) out.push_back(monomial_from_json(x));
  return out;
}

inline json to_json(const TIdeal& I) {
  json gens = json::object();
  for (const auto& [l, g] : I.generators()) gens[std::to_string(l)] = to_json(g);
  return json{{"n", I.ambient().n}, {"t", I.ambient().t}, {"generators", gens}};
}

inline Ambient ambient_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("t")) throw DomainError("json: missing \"n\" or \"t\"");
  return Ambient::make(j.at("n").get<int>(), j.at("t").get<int>());
}

/// {"n":25,"t":3,"generators":{"2":[[1,4],...],...}}; the listed monomials
/// must be exactly the minimal generators.
inline TIdeal ideal_from_json(const json& j) {
  Ambient amb = ambient_from_json(j);
  if (!j.contains("generators") || !j.at("generators").is_object())
    throw DomainError("json: ideal needs a \"generators\" object keyed by degree");
  std::map<int, MonomialSet> gens;
  for (const auto& [key, val] : j.at("generators").items()) {
    int l = 0;
    try {
      std::size_t used = 0;
      l = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError("json: generator degree '" + key + "' is not an integer");
    }
    gens.emplace(l, MonomialSet(amb, l, monomials_from_json(val)));
  }
  return TIdeal::make(amb, std::move(gens));
}

inline json to_json(const CornerSpec& spec) {
  json cs = json::array();
  for (const auto& c : spec.corners) cs.push_back(json{{"k", c.k}, {"l", c.l}, {"a", count_json(c.a)}});
  return json{{"n", spec.amb.n}, {"t", spec.amb.t}, {"corners", cs}};
}

/// Only the ambient's shape is checked here; validate_spec judges the rest.
inline CornerSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("t")) throw DomainError("json: spec needs \"n\" and \"t\"");
  CornerSpec spec{Ambient{j.at("n").get<int>(), j.at("t").get<int>()}, {}};
  if (!j.contains("corners") || !j.at("corners").is_array()) throw DomainError("json: spec needs a \"corners\" array");
  for (const auto& c : j.at("corners")) {
    if (!c.is_object() || !c.contains("k") || !c.contains("l") || !c.contains("a"))
      throw DomainError("json: each corner needs \"k\", \"l\" and \"a\"");
    spec.corners.push_back(Corner{c.at("k").get<int>(), c.at("l").get<int>(), count_from_json(c.at("a"))});
  }
  return spec;
}

inline json to_json(const CornerData& cd) {
  json cs = json::array();
  for (const auto& c : cd.corners) cs.push_back(json{{"k", c.k}, {"l", c.l}, {"a", count_json(c.a)}});
  return cs;
}

/// {"entries":[{"k":0,"l":2,"value":6},...],"total":[...]} with entries
/// ordered by degree, then homological index.
inline json to_json(const BettiTable& table) {
  std::vector<std::pair<std::pair<int, int>, Count>> rows(table.entries.begin(), table.entries.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::pair{a.first.second, a.first.first} < std::pair{b.first.second, b.first.first};
  });
  json entries = json::array();
  for (const auto& [key, v] : rows) entries.push_back(json{{"k", key.first}, {"l", key.second}, {"value", count_json(v)}});
  json totals = json::array();
  if (!table.empty())
    for (int k = 0; k <= table.max_homological(); ++k) totals.push_back(count_json(table.total(k)));
  return json{{"entries", entries}, {"total", totals}};
}

inline json to_json(const SlexSegment& seg) {
  return json{{"k", seg.k}, {"l", seg.l}, {"first", to_json(seg.first)}, {"last", to_json(seg.last)}};
}

inline json to_json(const SolveReport& r) {
  json audit = json::array();
  for (const auto& a : r.audit) {
    json row{{"k", a.corner.k}, {"l", a.corner.l}, {"a", count_json(a.corner.a)}};
    auto opt_m = [&](const char* key, const std::optional<Monomial>& m) { row[key] = m ? to_json(*m) : json(nullptr); };
    auto opt_c = [&](const char* key, const std::optional<Count>& c) { row[key] = c ? count_json(*c) : json(nullptr); };
    opt_m("v", a.v);
    opt_m("w", a.w);
    row["segment"] = a.segment ? to_json(*a.segment) : json(nullptr);
    opt_c("n", a.n);
    opt_m("bshad_min", a.bshad_min);
    opt_m("u1", a.u_first);
    opt_c("p", a.p);
    opt_c("bound", a.bound);
    row["chosen"] = to_json(a.chosen);
    audit.push_back(std::move(row));
  }
  json out{{"verdict", to_string(r.verdict)}, {"audit", audit}, {"notes", r.notes}};
  out["ideal"] = r.ideal ? to_json(*r.ideal) : json(nullptr);
  if (r.failure_corner) {
    out["failure"] = json{{"corner", *r.failure_corner},
                          {"bound", r.failure_bound ? count_json(*r.failure_bound) : json(nullptr)},
                          {"reason", r.failure_reason}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

/// "x_1*x_4, x_1*x_5, ..." over all generators, degree by degree.
inline std::string to_m2(const TIdeal& I) {
  std::string out;
  for (const auto& [l, g] : I.generators())
    for (const auto& m : g) {
      if (!out.empty()) out += ", ";
      out += to_m2(m);
    }
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace tspread::io
