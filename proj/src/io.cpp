#include "gsp4/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gsp4 {

namespace {

void require_keys(const Json& j, const std::set<std::string>& keys, const std::string& what) {
  if (!j.is_object()) throw FormatError(what + ": expected a JSON object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw FormatError(what + ": unknown key '" + k + "'");
  for (const auto& k : keys)
    if (!j.contains(k)) throw FormatError(what + ": missing key '" + k + "'");
}

std::int64_t get_int(const Json& j, const std::string& key, const std::string& what) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw FormatError(what + ": '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

Json expansion_to_json(const SiegelExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [q, v] : e.coeffs()) {
    if (v.is_zero()) continue;
    coeffs.push_back({{"m", q.m}, {"r", q.r}, {"n", q.n}, {"vec", v.coeffs()}});
  }
  return {{"p", e.ctx().p()},
          {"mod_exp", e.ctx().m()},
          {"weight", {e.weight().j, e.weight().k}},
          {"precision", e.precision()},
          {"coeffs", coeffs}};
}

SiegelExpansion expansion_from_json(const Json& j) {
  const std::string what = "expansion file";
  require_keys(j, {"p", "mod_exp", "weight", "precision", "coeffs"}, what);
  const auto& w = j.at("weight");
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
    throw FormatError(what + ": 'weight' must be [j, k]");
  if (!j.at("coeffs").is_array()) throw FormatError(what + ": 'coeffs' must be an array");
  try {
    const ScalarCtx ctx(get_int(j, "p", what), static_cast<int>(get_int(j, "mod_exp", what)));
    const Weight wt{w[0].get<int>(), w[1].get<int>()};
    SiegelExpansion e(ctx, wt, get_int(j, "precision", what));
    std::set<BQF> seen;
    for (const auto& c : j.at("coeffs")) {
      require_keys(c, {"m", "r", "n", "vec"}, what + " coefficient");
      const BQF q{get_int(c, "m", what), get_int(c, "r", what), get_int(c, "n", what)};
      if (!seen.insert(q).second)
        throw FormatError(what + ": duplicate key (" + std::to_string(q.m) + "," + std::to_string(q.r) +
                          "," + std::to_string(q.n) + ")");
      const auto& vec = c.at("vec");
      if (!vec.is_array()) throw FormatError(what + ": 'vec' must be an array");
      std::vector<std::int64_t> entries;
      for (const auto& x : vec) {
        if (!x.is_number_integer()) throw FormatError(what + ": 'vec' entries must be integers");
        entries.push_back(x.get<std::int64_t>());
      }
      if (static_cast<int>(entries.size()) != wt.degree() + 1)
        throw FormatError(what + ": 'vec' must have j - k + 1 entries");
      e.set(q, SymVector(ctx, entries));
    }
    return e;
  } catch (const std::invalid_argument& ex) {
    throw FormatError(what + ": " + ex.what());
  } catch (const PrecisionError& ex) {
    throw FormatError(what + ": " + ex.what());
  }
}

Json module_to_json(const GroupRingModule& m) {
  Json gens = Json::array();
  for (const auto& g : m.gens()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
    gens.push_back(rows);
  }
  return {{"p", m.p()}, {"N", m.N()}, {"q", m.q()}, {"dim", m.dim()}, {"gens", gens}};
}

GroupRingModule module_from_json(const Json& j) {
  const std::string what = "module description";
  require_keys(j, {"p", "N", "q", "dim", "gens"}, what);
  const auto p = get_int(j, "p", what);
  const auto dim = get_int(j, "dim", what);
  if (dim < 1) throw FormatError(what + ": 'dim' must be positive");
  if (!j.at("gens").is_array()) throw FormatError(what + ": 'gens' must be an array");
  std::vector<Matrix> gens;
  try {
    for (const auto& g : j.at("gens")) {
      if (!g.is_array() || static_cast<std::int64_t>(g.size()) != dim)
        throw FormatError(what + ": each generator must have dim rows");
      std::vector<std::int64_t> entries;
      for (const auto& row : g) {
        if (!row.is_array() || static_cast<std::int64_t>(row.size()) != dim)
          throw FormatError(what + ": each row must have dim entries");
        for (const auto& x : row) {
          if (!x.is_number_integer()) throw FormatError(what + ": entries must be integers");
          entries.push_back(x.get<std::int64_t>());
        }
      }
      gens.emplace_back(p, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim), entries);
    }
    return GroupRingModule(p, static_cast<int>(get_int(j, "N", what)), static_cast<int>(get_int(j, "q", what)),
                           std::move(gens));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(what + ": " + ex.what());
  }
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}};
    x["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
    x["precision"] = c.precision ? Json(*c.precision) : Json(nullptr);
    checks.push_back(x);
  }
  return {{"suite", r.suite},      {"p", r.p},
          {"trials", r.trials},    {"seed", r.seed},
          {"checks", checks},      {"status", r.all_passed() ? "pass" : "fail"}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw FormatError("'" + path + "': " + ex.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace gsp4
