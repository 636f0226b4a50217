// Command-line front end.  Exit status: 0 on success, 1 when a verification
// check fails, 2 on bad input, integrality or precision failures.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsp4/bqf.hpp"
#include "gsp4/campaigns.hpp"
#include "gsp4/commalg.hpp"
#include "gsp4/io.hpp"
#include "gsp4/operators.hpp"
#include "gsp4/tables.hpp"

using namespace gsp4;

namespace {

BQF parse_form(const std::string& text) {
  BQF q;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> q.m >> c1 >> q.r >> c2 >> q.n) || c1 != ',' || c2 != ',' || !is.eof())
    throw std::invalid_argument("form must look like m,r,n, got '" + text + "'");
  return q;
}

Json mat_json(const GL2Mat& g) { return Json::array({Json::array({g.a(), g.b()}), Json::array({g.c(), g.d()})}); }
Json form_json(const BQF& q) { return Json::array({q.m, q.r, q.n}); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

int cmd_apply(const std::string& op, const std::string& in, const std::string& out, std::int64_t cap) {
  const SiegelExpansion f = expansion_from_json(read_json_file(in));
  const OperatorExpr e = parse_expr(op, f.weight(), f.ctx());
  const SiegelExpansion r = evaluate_expr(e, f, cap);
  write_json_file(out, expansion_to_json(r));
  std::cout << "wrote " << out << ": weight " << to_string(r.weight()) << ", precision " << r.precision() << ", "
            << r.coeffs().size() << " nonzero coefficients\n";
  return 0;
}

int cmd_random(std::int64_t p, int mod_exp, const std::string& weight, std::int64_t B, std::uint64_t seed,
               bool equivariant, const std::string& out) {
  int j = 0, k = 0;
  char c = 0;
  std::istringstream is(weight);
  if (!(is >> j >> c >> k) || c != ',') throw std::invalid_argument("weight must look like j,k");
  const ScalarCtx ctx(p, mod_exp);
  const Weight w{j, k};
  SiegelExpansion f = equivariant ? materialize(EquivariantRandomExpansion(ctx, w, B, seed))
                                  : materialize(RandomExpansion(ctx, w, B, seed));
  write_json_file(out, expansion_to_json(f));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_canon(const std::string& in, const std::string& out) {
  write_json_file(out, expansion_to_json(expansion_from_json(read_json_file(in))));
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& out) {
  const Report rep = run_suite(suite, opt);
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail;
    if (c.counterexample) std::cout << " [counterexample: " << *c.counterexample << "]";
    std::cout << "\n";
  }
  if (!out.empty()) write_json_file(out, report_to_json(rep));
  std::cout << (rep.all_passed() ? "all checks passed" : "some checks failed") << "\n";
  return rep.all_passed() ? 0 : 1;
}

int cmd_bqf(const std::string& form, std::int64_t p, const std::string& action, bool json) {
  const BQF q = parse_form(form);
  Json j;
  std::ostringstream text;
  if (action == "reduce") {
    const Reduction r = reduce_form(q);
    j = {{"form", form_json(q)}, {"reduced", form_json(r.reduced)}, {"transform", mat_json(r.transform)}};
    text << to_string(r.reduced) << "\n";
  } else if (action == "neighbors") {
    const auto cls = classify_form(q, p);
    Json list = Json::array();
    text << "F(" << to_string(q) << ") at p=" << p << ", D=" << cls.discriminant << ":\n";
    for (const auto& n : neighbors(q, p)) {
      list.push_back({{"form", form_json(n.form)}, {"witness", mat_json(n.mat)}});
      text << "  " << to_string(n.form) << "  M=" << n.mat << "\n";
    }
    j = {{"form", form_json(q)}, {"p", p}, {"discriminant", cls.discriminant}, {"neighbors", list}};
    if (cls.legendre()) j["legendre"] = *cls.legendre();
  } else if (action == "orbit") {
    const OrbitCycle oc = orbit_cycle(q, p);
    std::int64_t ps = 1;
    for (int i = 0; i < oc.length; ++i) ps *= p;
    const bool ok = congruence(oc.forward, q) == q.scaled(ps) && congruence(oc.backward, q) == q.scaled(ps) &&
                    oc.forward.det() == ps && oc.backward.det() == ps;
    Json classes = Json::array();
    for (const auto& c : oc.classes) classes.push_back(form_json(c));
    j = {{"form", form_json(q)}, {"p", p},           {"s", oc.length}, {"A", mat_json(oc.forward)},
         {"B", mat_json(oc.backward)}, {"classes", classes}, {"identity_ok", ok}};
    text << "s=" << oc.length << "\nA=" << oc.forward << "\nB=" << oc.backward << "\nA Q A^T = p^s Q: "
         << (ok ? "yes" : "NO") << "\n";
    if (!ok) {
      std::cout << (json ? j.dump(2) + "\n" : text.str());
      return 1;
    }
  } else {
    throw std::invalid_argument("unknown action '" + action + "' (neighbors, orbit, reduce)");
  }
  std::cout << (json ? j.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_module(const std::string& in, const std::string& action) {
  const GroupRingModule m = module_from_json(read_json_file(in));
  Json j{{"dim", m.dim()}};
  if (action == "tor" || action == "defect") {
    const TorDims t = tor_dims(m);
    const Defect d = defect_balanced(m);
    j["t0"] = t.t0;
    j["t1"] = t.t1;
    j["defect"] = d.d;
    j["balanced"] = d.balanced;
  } else if (action == "square") {
    const SquarePresentation sp = square_presentation(m);
    const PresentationCheck pc = check_presentation(m, sp);
    j["d"] = sp.d;
    j["relations"] = sp.relations;
    j["cokernel_dim"] = pc.cokernel_dim;
    j["verified"] = pc.ok() && pc.cokernel_dim == m.dim();
  } else if (action == "coinvariants") {
    const Coinvariants c = coinvariants(m);
    j["coinvariants_dim"] = c.dim;
    j["projection"] = matrix_json(c.projection);
  } else {
    throw std::invalid_argument("unknown action '" + action + "' (tor, defect, square, coinvariants)");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsp4: formal q-expansions, quadratic forms, weights and group-ring modules"};
  app.require_subcommand(1);

  std::string op, in, out;
  std::int64_t cap = kDefaultPrecisionCap;
  auto* apply = app.add_subcommand("apply", "apply an operator expression to an expansion file");
  apply->add_option("--op", op, "primitive name, T, T2, Q2 or an expression such as \"Z2 - U*Z\"")->required();
  apply->add_option("--in", in, "input expansion file")->required();
  apply->add_option("--out", out, "output expansion file")->required();
  apply->add_option("--cap", cap, "precision cap for V and V2");

  std::int64_t rp = 5, rB = 20;
  int rm = 1;
  std::uint64_t rseed = 1;
  std::string rweight = "2,2";
  bool requiv = false;
  auto* random = app.add_subcommand("random", "write a seeded random expansion file");
  random->add_option("--p", rp)->required();
  random->add_option("--mod-exp", rm);
  random->add_option("--weight", rweight, "j,k");
  random->add_option("--precision", rB);
  random->add_option("--seed", rseed);
  random->add_flag("--equivariant", requiv, "satisfy a(M.Q) = rho(M) a(Q)");
  random->add_option("--out", out)->required();

  auto* canon = app.add_subcommand("canon", "rewrite an expansion file in canonical form");
  canon->add_option("--in", in)->required();
  canon->add_option("--out", out)->required();

  std::string suite;
  SuiteOptions sopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--p", sopt.p);
  verify->add_option("--trials", sopt.trials);
  verify->add_option("--seed", sopt.seed);
  verify->add_option("--out", out, "write the JSON report here");

  std::string table, range = "0..8";
  std::int64_t tp = 11;
  auto* tables = app.add_subcommand("tables", "print weight tables as CSV");
  tables->add_option("--table", table)->required()->check(CLI::IsMember({"weights", "vanishing", "serre", "selmer"}));
  tables->add_option("--range", range, "lo..hi");
  tables->add_option("--p", tp);

  std::string form, action;
  std::int64_t bp = 5;
  bool bjson = false;
  auto* bqf = app.add_subcommand("bqf", "neighbours, orbit cycle or reduction of a form");
  bqf->add_option("--form", form, "m,r,n")->required();
  bqf->add_option("--p", bp);
  bqf->add_option("--action", action)->required();
  bqf->add_flag("--json", bjson);

  auto* module = app.add_subcommand("module", "Tor dimensions, defect, square presentation, coinvariants");
  module->add_option("--in", in, "module description JSON")->required();
  module->add_option("--action", action)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*apply) return cmd_apply(op, in, out, cap);
    if (*random) return cmd_random(rp, rm, rweight, rB, rseed, requiv, out);
    if (*canon) return cmd_canon(in, out);
    if (*verify) return cmd_verify(suite, sopt, out);
    if (*tables) {
      std::cout << make_table(table, parse_range(range), tp);
      return 0;
    }
    if (*bqf) return cmd_bqf(form, bp, action, bjson);
    if (*module) return cmd_module(in, action);
  } catch (const IntegralityError& e) {
    std::cerr << "integrality failure: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
