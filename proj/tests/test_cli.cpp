#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "colonlab/cli.hpp"
#include "colonlab/ideal.hpp"
#include "colonlab/parser.hpp"

using namespace colonlab;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "colonlab");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Result r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("json envelope") {
  const Json doc = run_json({"gb", "--field", "Q", "--vars", "x,y", "--gens", "x^2, x^2 + y^2"});
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "ring", "result", "timing_ms"});
  CHECK(doc["command"] == "gb");
  CHECK(doc["ring"]["field"] == "Q");
  CHECK(doc["ring"]["vars"] == Json::array({"x", "y"}));
  CHECK(doc["ring"]["order"] == "degrevlex");
  CHECK(doc["result"]["groebner_basis"] == Json::array({"x^2", "y^2"}));
  CHECK(doc["timing_ms"] == 0);
}

TEST_CASE("storch command reports the mismatch with the published series") {
  const Json doc = run_json({"storch"}, cli::kExitVerdictFailed);
  CHECK(doc["ring"]["field"] == "F2");
  CHECK(doc["result"]["hilbert"] == Json::array({1, 2, 1, 1, 1}));
  CHECK(doc["result"]["published_hilbert"] == Json::array({1, 2, 1, 1}));
  CHECK(doc["result"]["gorenstein"] == true);
  CHECK(doc["result"]["symmetric"] == false);
  CHECK(doc["result"]["ladder_holds"] == false);
  CHECK(doc["result"]["consistent"] == true);
  CHECK(doc["result"]["qualitative_counterexample"] == true);
  CHECK(doc["result"]["matches_published"] == false);
}

TEST_CASE("verifier exit codes") {
  const Json ladder = run_json({"ladder", "--field", "F32003", "--vars", "x,y", "--gens", "x^2,y^3"});
  CHECK(ladder["result"]["delta"] == 3);
  CHECK(ladder["result"]["holds"] == true);
  CHECK(run({"ladder", "--field", "Q", "--vars", "x,y", "--gens", "x^2+y^2"}).code == cli::kExitUsage);
  CHECK(run({"ladder", "--vars", "x,y", "--gens", "x^2, x*y"}).code == cli::kExitUsage);
  CHECK(run({"symmetry", "--vars", "x,y,z", "--gens", "x^3,y^3,z^2"}).code == cli::kExitOk);
  CHECK(run({"corollary", "--vars", "x", "--gens", "x^3"}).code == cli::kExitOk);
  CHECK(run({"equiv", "--vars", "x,y", "--gens", "x^2,y^2"}).code == cli::kExitOk);
  CHECK(run({"equiv", "--vars", "x,y", "--gens", "x^2,x*y,y^2"}).code == cli::kExitUsage);
  CHECK(run({"random-ci", "--seed", "4", "--count", "3"}).code == cli::kExitOk);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"gb", "--vars", "x,y"}).code == cli::kExitUsage);
  CHECK(run({"gb", "--field", "F4", "--vars", "x", "--gens", "x"}).code == cli::kExitUsage);
  const Result r = run({"gb", "--vars", "x,y", "--gens", "x + q"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("column") != std::string::npos);
  CHECK(run({"hilbert", "--vars", "x,y", "--gens", "x"}).code == cli::kExitUsage);
}

TEST_CASE("primitive commands") {
  const Json nf = run_json({"nf", "--field", "Q", "--vars", "x,y", "--gens", "x^2 - 1", "--poly", "x^2*y + y"});
  CHECK(nf["result"]["normal_form"] == "2*y");
  CHECK(nf["result"]["member"] == false);
  const Json colon = run_json({"colon", "--vars", "x,y", "--gens", "x^2,y^2"});
  CHECK(colon["result"]["colon"].size() == 3);
  const Json cap = run_json({"intersect", "--vars", "x,y", "--gens", "x", "--ideal2", "y"});
  CHECK(cap["result"]["intersection"] == Json::array({"x*y"}));
  const Json h = run_json({"hilbert", "--vars", "x,y", "--gens", "x^2,y^2"});
  CHECK(h["result"]["length"] == 4);
  CHECK(h["result"]["graded"] == Json::array({1, 2, 1}));
  const Json soc = run_json({"socle", "--vars", "x,y", "--gens", "x^2,x*y,y^2"});
  CHECK(soc["result"]["socle_dimension"] == 2);
  CHECK(soc["result"]["gorenstein"] == false);
}

TEST_CASE("input file mirrors flags") {
  const auto path = std::filesystem::temp_directory_path() / "colonlab_cli_test.in";
  {
    std::ofstream f(path);
    f << "# sample\nfield = Q\nvars = x,y\ngens = x^2 + y^2; x*y\n";
  }
  const Json from_file = run_json({"gb", "--in", path.string()});
  const Json from_flags = run_json({"gb", "--field", "Q", "--vars", "x,y", "--gens", "x^2 + y^2, x*y"});
  CHECK(from_file == from_flags);
  const Json override = run_json({"gb", "--in", path.string(), "--field", "F2"});
  CHECK(override["ring"]["field"] == "F2");
  {
    std::ofstream f(path);
    f << "colour = red\n";
  }
  CHECK(run({"gb", "--in", path.string()}).code == cli::kExitUsage);
  std::filesystem::remove(path);
  CHECK(run({"gb", "--in", path.string()}).code == cli::kExitUsage);
}

TEST_CASE("repeated invocations are byte identical") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"random-ci", "--seed", "17", "--count", "4", "--json"},
        std::vector<std::string>{"storch"},
        std::vector<std::string>{"equiv", "--vars", "x,y,z", "--gens", "x^2,y^2,z^2", "--ideal2", "x,y^2"}}) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("emitted generators re-parse to the same reduced basis") {
  const Json doc = run_json({"random-ci", "--seed", "99", "--count", "5"});
  for (const auto& inst : doc["result"]["instances"]) {
    std::vector<std::string> vars = inst["vars"];
    const auto ring = Ring::make(vars, Field::parse(doc["ring"]["field"].get<std::string>()));
    std::string joined;
    for (const auto& g : inst["generators"]) joined += (joined.empty() ? "" : ",") + g.get<std::string>();
    const Json gb = run_json({"gb", "--field", doc["ring"]["field"], "--vars",
                              vars.size() == 2 ? "x,y" : "x,y,z", "--gens", joined});
    std::string gb_joined;
    for (const auto& g : gb["result"]["groebner_basis"]) gb_joined += (gb_joined.empty() ? "" : ",") + g.get<std::string>();
    const Ideal original(ring, parse_polynomial_list(joined, ring));
    const Ideal reparsed(ring, parse_polynomial_list(gb_joined, ring));
    CHECK(original.groebner_basis() == reparsed.groebner_basis());
  }
}
