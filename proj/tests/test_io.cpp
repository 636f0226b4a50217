#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gsp4/io.hpp"

using namespace gsp4;

namespace {

Json small_file() {
  return Json::parse(R"({"p": 5, "mod_exp": 2, "weight": [3, 2], "precision": 4,
    "coeffs": [{"m": 1, "r": 0, "n": 1, "vec": [1, 2]}, {"m": 1, "r": 1, "n": 1, "vec": [3, -1]}]})");
}

}  // namespace

TEST_CASE("expansion round trip") {
  const ScalarCtx c(7, 2);
  const RandomExpansion src(c, {4, 2}, 20, 11);
  const SiegelExpansion e = materialize(src);
  const Json j = expansion_to_json(e);
  CHECK(expansion_from_json(j) == e);
  CHECK(expansion_to_json(expansion_from_json(j)) == j);
  // keys come out in ascending order
  BQF prev{-1, -1, -1};
  for (const auto& x : j["coeffs"]) {
    const BQF q{x["m"].get<std::int64_t>(), x["r"].get<std::int64_t>(), x["n"].get<std::int64_t>()};
    CHECK(prev < q);
    prev = q;
  }
}

TEST_CASE("entries are reduced on load") {
  const SiegelExpansion e = expansion_from_json(small_file());
  CHECK(e.coefficient(BQF{1, 1, 1})[1] == 24);
  CHECK(e.coefficient(BQF{1, 0, 1})[0] == 1);
}

TEST_CASE("malformed expansion files") {
  Json j = small_file();
  j["extra"] = 1;
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j.erase("precision");
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j["coeffs"].push_back(j["coeffs"][0]);
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j["coeffs"][0]["vec"] = {1, 2, 3};
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j["coeffs"][0]["vec"] = {1, "x"};
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j["p"] = 9;
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j["weight"] = {3};
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);

  j = small_file();
  j["coeffs"][0]["m"] = 7;  // outside the box of size 4
  CHECK_THROWS(expansion_from_json(j));

  j = small_file();
  j["coeffs"][0]["extra"] = 0;
  CHECK_THROWS_AS(expansion_from_json(j), FormatError);
}

TEST_CASE("module round trip") {
  const GroupRingModule m = quotient_module(3, 1, 2, {0, 1, 0, 0, 0, 0, 0, 0, 0});
  const GroupRingModule back = module_from_json(module_to_json(m));
  CHECK(back.p() == 3);
  CHECK(back.q() == 2);
  CHECK(back.dim() == m.dim());
  CHECK(back.gens() == m.gens());

  Json j = module_to_json(m);
  j["gens"][0][0] = {1};
  CHECK_THROWS_AS(module_from_json(j), FormatError);
  j = module_to_json(trivial_module(5, 1, 1, 2));
  j["gens"][0] = {{1, 1}, {1, 1}};  // not unipotent of the right order
  CHECK_THROWS_AS(module_from_json(j), FormatError);
  j = module_to_json(trivial_module(5, 1, 1, 2));
  j["dim"] = 0;
  CHECK_THROWS_AS(module_from_json(j), FormatError);
}

TEST_CASE("reports") {
  Report r{"forms", 5, 10, 1, {}};
  r.checks.push_back({"a", true, "ok", std::nullopt, 12});
  CHECK(report_to_json(r)["status"] == "pass");
  r.checks.push_back({"b", false, "bad", "Q=(1,0,1)", std::nullopt});
  const Json j = report_to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["checks"][1]["counterexample"] == "Q=(1,0,1)");
  CHECK(j["checks"][0]["counterexample"].is_null());
  CHECK(j["checks"][0]["precision"] == 12);
}

TEST_CASE("files") {
  const auto path = (std::filesystem::temp_directory_path() / "gsp4_io_test.json").string();
  const Json j = small_file();
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == j.dump(2) + "\n");
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(read_json_file(path), FormatError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file(path), FormatError);
}
