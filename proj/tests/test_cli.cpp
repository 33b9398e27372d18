#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "kappa/cli.hpp"
#include "kappa/problem_file.hpp"

using namespace kappa;
using kappa::io::Json;
using kappa::testing::fixture_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result on_fixture(const std::string& command, const std::string& name,
                  std::vector<std::string> extra = {}) {
  std::vector<std::string> args{command, fixture_path(name)};
  args.insert(args.end(), extra.begin(), extra.end());
  return run(args);
}

struct ScopedEnv {
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }
  const char* name_;
};

}  // namespace

TEST_CASE("utility") {
  const auto quake = on_fixture("utility", "earthquake.json");
  CHECK(quake.code == cli::kSuccess);
  CHECK(quake.out == "(1, 0)  u = -1\n");

  CHECK(on_fixture("utility", "two_level.json").out == "(0, 0)  u = 0\n");
  CHECK(on_fixture("utility", "leaf_best.json").out == "(0, inf)  u = +inf\n");

  const auto j = Json::parse(on_fixture("utility", "earthquake.json", {"--json"}).out);
  CHECK(j["command"] == "utility");
  CHECK(io::utility_value_from_json(j["utility"]) == UtilityValue::make(1, 0));
  CHECK(io::ext_int_from_json(j["scalar"]) == ExtInt(-1));
  CHECK(io::simple_lottery_from_json(j["standard_equivalent"]).to_string() == "q0:1 q12:0");
}

TEST_CASE("reduce") {
  const auto fig = on_fixture("reduce", "two_level.json");
  CHECK(fig.code == cli::kSuccess);
  CHECK(fig.out == "o1:4 o2:0 o3:0\n");

  const auto file = kappa::testing::load_fixture("depth3.json");
  CHECK(on_fixture("reduce", "depth3.json").out == reduce(*file.lottery).to_string() + "\n");
  CHECK(on_fixture("reduce", "depth3.json").out == "o1:4 o2:1 o3:0 o4:3\n");

  const auto j = Json::parse(on_fixture("reduce", "depth3.json", {"--json"}).out);
  CHECK(j["depth"] == 3);
  CHECK(io::simple_lottery_from_json(j["lottery"]) == reduce(*file.lottery));
}

TEST_CASE("validate") {
  const auto ok = on_fixture("validate", "earthquake.json");
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out == "ok: prizes assessment lottery decision\n");

  const auto bad = on_fixture("validate", "not_normalized.json");
  CHECK(bad.code == cli::kValidationFailure);
  CHECK(bad.out.find("NotNormalized") != std::string::npos);
  CHECK(bad.out.find("[lottery]") != std::string::npos);

  const auto assessment = on_fixture("utility", "bad_assessment.json");
  CHECK(assessment.code == cli::kValidationFailure);
  CHECK(assessment.err.find("o1 must map to (0,inf)") != std::string::npos);

  const auto j = Json::parse(on_fixture("validate", "not_normalized.json", {"--json"}).out);
  CHECK(j["ok"] == false);
  CHECK(j["diagnostics"][0]["code"] == "NotNormalized");
  CHECK(j["diagnostics"][0]["section"] == "lottery");
}

TEST_CASE("parse failures") {
  const auto syntax = on_fixture("validate", "syntax_error.json");
  CHECK(syntax.code == cli::kParseFailure);
  CHECK(syntax.err.find("line 3") != std::string::npos);

  const auto j = Json::parse(on_fixture("reduce", "syntax_error.json", {"--json"}).out);
  CHECK(j["ok"] == false);
  CHECK(j["parse_error"]["where"].get<std::string>().rfind("line 3", 0) == 0);

  CHECK(run({"reduce", fixture_path("no_such_file.json")}).code == cli::kParseFailure);
  CHECK(run({}).code == cli::kParseFailure);
  CHECK(run({"frobnicate"}).code == cli::kParseFailure);
  CHECK(run({"reduce"}).code == cli::kParseFailure);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("missing sections") {
  const auto r = on_fixture("rank", "two_level.json");
  CHECK(r.code == cli::kValidationFailure);
  CHECK(r.err.find("needs section 'decision'") != std::string::npos);
  CHECK(on_fixture("bridge", "earthquake.json").code == cli::kValidationFailure);
  CHECK(on_fixture("utility", "bridge_certain.json").code == cli::kValidationFailure);
}

TEST_CASE("rank") {
  const auto ab = on_fixture("rank", "witness_ab.json");
  CHECK(ab.code == cli::kSuccess);
  CHECK(ab.out ==
        "qualitative expected utility:\n"
        "  1. A (0, 5)  u = 5\n"
        "  2. B (0, 1)  u = 1\n"
        "maximin:\n"
        "  1. B  worst = o2\n"
        "  2. A  worst = o3\n"
        "disagreement: qualitative picks A, maximin picks B\n");

  const auto tie = on_fixture("rank", "tie.json");
  CHECK(tie.out.find("  1. second (1, 0)  u = -1\n  2. first (1, 0)  u = -1\n") !=
        std::string::npos);
  CHECK(tie.out.find("no disagreement") != std::string::npos);

  CHECK(on_fixture("rank", "earthquake.json").out.find("  1. build (1, 0)  u = -1\n") !=
        std::string::npos);

  const auto j = Json::parse(on_fixture("rank", "witness_ab.json", {"--json"}).out);
  CHECK(j["qualitative"][0]["act"] == "A");
  CHECK(j["qualitative"][0]["scalar"] == 5);
  CHECK(j["maximin"][0]["worst"] == "o2");
  CHECK(j["disagreement"] == true);
}

TEST_CASE("bridge") {
  const auto decades = on_fixture("bridge", "bridge_decades.json");
  CHECK(decades.code == cli::kSuccess);
  CHECK(decades.out ==
        "spohnian: (0,1,2)\n"
        "eu = 0.945  (epsilon = 10)\n"
        "kappa(eu) = 0\n"
        "qualitative eu = 0\n"
        "gap = 0  (bound 2)\n");

  const auto certain = on_fixture("bridge", "bridge_certain.json");
  CHECK(certain.out.rfind("spohnian: (0,inf)\n", 0) == 0);
  CHECK(certain.out.find("gap = 0") != std::string::npos);

  const auto mixed = Json::parse(on_fixture("bridge", "bridge_mixed.json", {"--json"}).out);
  CHECK(mixed["within_bound"] == true);
  CHECK(std::abs(mixed["agreement"]["gap"].get<std::int64_t>()) <= mixed["bound"].get<std::int64_t>());
  CHECK(io::simple_lottery_from_json(mixed["spohnian"]).to_string() == "o1:1 o2:0 o3:2 o4:0 o5:0");
  CHECK(mixed["eu"].get<double>() == doctest::Approx(0.164521));

  const auto base2 = on_fixture("bridge", "bridge_decades.json", {"--epsilon", "2"});
  CHECK(base2.out.rfind("spohnian: (0,3,6)\n", 0) == 0);
  CHECK(base2.out.find("(epsilon = 2)") != std::string::npos);

  CHECK(on_fixture("bridge", "bridge_decades.json", {"--epsilon", "1"}).code ==
        cli::kValidationFailure);
}

TEST_CASE("search") {
  const auto found = run({"search"});
  CHECK(found.code == cli::kSuccess);
  std::vector<io::Diagnostic> diags;
  const auto witness = io::load_problem(io::parse_document(found.out), diags);
  CHECK(diags.empty());
  REQUIRE(witness.decision.has_value());
  CHECK(rules_disagree(*witness.decision));

  CHECK(run({"search", "--max-prizes", "2", "--max-delta", "0"}).out == "none\n");
  CHECK(Json::parse(run({"search", "--acts", "1", "--json"}).out)["witness"].is_null());

  {
    ScopedEnv env(cli::kSearchBoundEnv, "1");
    CHECK(run({"search"}).out == "none\n");
  }
  {
    ScopedEnv env(cli::kSearchBoundEnv, "lots");
    CHECK(run({"search"}).code == cli::kParseFailure);
  }
}
