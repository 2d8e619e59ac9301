#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ikit/spec_file.hpp"

using namespace ikit;
using nlohmann::json;

namespace {

const std::string kFixtures = IKIT_FIXTURES_DIR;
const std::string kCli = IKIT_CLI_PATH;

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string out;
  FILE* p = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p) return {-1, ""};
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string spec(const std::string& name) { return kFixtures + "/" + name + ".json"; }

json run_json(const std::string& args, int expected_code = 0) {
  CliRun r = run("--json " + args);
  EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
  return json::parse(r.out);
}

bool contains(const json& list, const std::string& s) {
  for (const auto& e : list)
    if (e.get<std::string>() == s) return true;
  return false;
}

}  // namespace

TEST(Cli, D8KingDegrees) {
  auto j = run_json("generators " + spec("d8"));
  EXPECT_EQ(j["command"], "generators");
  EXPECT_EQ(j["result"]["degrees"], json({2, 8}));
  EXPECT_EQ(j["result"]["termination_degree"], 9);
  EXPECT_EQ(j["result"]["generators"][0], "1/2*x^2 + 1/2*y^2");
}

TEST(Cli, MonicFlagRescalesOnlyTheOutput) {
  auto j = run_json("generators " + spec("d8") + " --monic");
  EXPECT_EQ(j["result"]["generators"][0], "x^2 + y^2");
  EXPECT_EQ(j["result"]["generators"][1], "x^8 + 28/9*x^6*y^2 + 70/9*x^4*y^4 + 28/9*x^2*y^6 + y^8");
}

TEST(Cli, LexOrderChangesTermOrder) {
  auto j = run_json("generators " + spec("c2-swap") + " --order lex");
  EXPECT_EQ(j["result"]["order"], "lex");
  EXPECT_EQ(j["result"]["degrees"], json({1, 2}));
}

TEST(Cli, KingVerify) {
  auto j = run_json("generators " + spec("s3-natural") + " --verify");
  const auto& v = j["result"]["verification"];
  EXPECT_TRUE(v["degree_bound_ok"]);
  EXPECT_TRUE(v["hilbert_monomials_ok"]);
  EXPECT_TRUE(v["subalgebra_ok"]);
}

TEST(Cli, GmDerksen) {
  auto j = run_json("generators " + spec("gm") + " --algorithm derksen --verify");
  EXPECT_EQ(j["result"]["generators"], json({"x1*x2"}));
  EXPECT_FALSE(j["result"]["minimal"]);
  EXPECT_TRUE(j["result"]["verification"]["invariance_ok"]);
  EXPECT_TRUE(j["result"]["verification"]["hilbert_ideal_ok"]);
}

TEST(Cli, ModularKingExitCode) {
  auto j = run_json("generators " + spec("modular"), 3);
  EXPECT_EQ(j["error"]["name"], "ModularCase");
}

TEST(Cli, CnScalarSeparating) {
  auto j = run_json("separating " + spec("cn-scalar-4"));
  for (const auto& d : j["result"]["degrees"]) EXPECT_LE(d.get<int>(), 4);
  auto r = run_json("separating " + spec("cn-scalar-5") + " --method reduce --verify-samples 30");
  EXPECT_EQ(r["result"]["noether_size"], 6);
  EXPECT_LE(r["result"]["size"].get<int>(), 5);
  EXPECT_TRUE(r["result"]["verification"]["passed"]);
}

TEST(Cli, C2SwapSampledVerification) {
  auto j = run_json("separating " + spec("c2-swap") + " --verify-samples 100");
  EXPECT_TRUE(j["result"]["verification"]["passed"]);
  EXPECT_EQ(j["result"]["verification"]["same_orbit_checked"], 100);
  EXPECT_EQ(j["result"]["verification"]["distinct_checked"], 100);
}

TEST(Cli, SeedIsEchoed) {
  auto j = run_json("separating " + spec("c2-swap") + " --verify-samples 5 --seed 42");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["result"]["verification"]["seed"], 42);
  auto p = run_json("analyze primary " + spec("c2-swap") + " --seed 9");
  EXPECT_EQ(p["seed"], 9);
}

TEST(Cli, Analyze) {
  auto c = run_json("analyze classify " + spec("d8"));
  EXPECT_TRUE(c["result"]["reflection_generated"]);
  auto m = run_json("analyze molien " + spec("d8") + " --degree 8");
  EXPECT_EQ(m["result"]["coefficients"][8], "2");
  auto p = run_json("analyze primary " + spec("d8"));
  EXPECT_EQ(p["result"]["invariants"].size(), 2u);
  EXPECT_TRUE(p["result"]["hsop_verified"]);
  auto b = run_json("analyze bounds " + spec("d8") + " --degrees 2,8");
  EXPECT_EQ(b["result"]["symonds"], 8);
  EXPECT_EQ(b["result"]["coarse"], 30);
  EXPECT_EQ(b["result"]["noether"], 16);
}

TEST(Cli, AlgebraicCommands) {
  auto f = run_json("field " + spec("gm"));
  EXPECT_EQ(f["result"]["generators"], json({"x1*x2"}));
  auto d = run_json("derksen-ideal " + spec("trivial-algebraic"));
  EXPECT_EQ(d["result"]["generators"], json({"y1 - x1", "y2 - x2"}));
  auto v = run_json("separating-variety " + spec("gm"));
  EXPECT_TRUE(contains(v["result"]["generators"], "x1*x2 - y1*y2"));
  auto s = run_json("separating-subalgebra " + spec("gm"));
  EXPECT_EQ(s["result"]["invariants"], json({"x1*x2"}));
}

TEST(Cli, Groebner) {
  auto j = run_json("groebner --vars x,y,z x^2-y x^3-z");
  EXPECT_EQ(j["result"]["basis"], json({"x^2 - y", "x*y - z", "y^2 - x*z"}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("generators").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("generators " + kFixtures + "/missing.json").code, 2);
  EXPECT_EQ(run("--cap 3 generators " + spec("d8")).code, 4);
  EXPECT_EQ(run("separating-subalgebra " + spec("sl2-binary-quadratic") + " --max-degree 1").code, 5);
  EXPECT_EQ(run("analyze molien " + spec("modular")).code, 6);
  EXPECT_EQ(run("field " + spec("d8")).code, 6);
  EXPECT_EQ(run("generators " + spec("gm")).code, 6);
  EXPECT_EQ(run("--help").code, 0);
  auto j = run_json("--cap 3 generators " + spec("d8"), 4);
  EXPECT_EQ(j["error"]["name"], "CapExceeded");
}

TEST(Cli, HumanSummary) {
  CliRun r = run("generators " + spec("d8"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2 generators (degrees 2, 8), termination degree 9"), std::string::npos);
}

// Every (golden file, arguments) pair below is compared byte for byte.
// IKIT_UPDATE_GOLDEN=1 rewrites the files instead.
TEST(Cli, GoldenFiles) {
  std::vector<std::pair<std::string, std::string>> cases;
  for (std::string n :
       {"d8", "c2-swap", "cn-scalar-3", "cn-scalar-4", "cn-scalar-5", "s3-natural", "pm-identity", "trivial"}) {
    cases.push_back({n + ".generators", "generators " + spec(n)});
    cases.push_back({n + ".separating", "separating " + spec(n) + " --verify-samples 50"});
    cases.push_back({n + ".molien", "analyze molien " + spec(n) + " --degree 12"});
    cases.push_back({n + ".classify", "analyze classify " + spec(n)});
    cases.push_back({n + ".primary", "analyze primary " + spec(n)});
  }
  cases.push_back({"modular.generators", "generators " + spec("modular")});
  cases.push_back({"cn-scalar-5.reduce", "separating " + spec("cn-scalar-5") + " --method reduce --verify-samples 50"});
  for (std::string n : {"gm", "sl2-binary-quadratic", "c2-swap-variety", "trivial-algebraic"}) {
    cases.push_back({n + ".generators", "generators " + spec(n) + " --algorithm derksen --verify"});
    cases.push_back({n + ".field", "field " + spec(n)});
    cases.push_back({n + ".derksen-ideal", "derksen-ideal " + spec(n)});
    cases.push_back({n + ".separating-variety", "separating-variety " + spec(n)});
  }
  const bool update = std::getenv("IKIT_UPDATE_GOLDEN") != nullptr;
  for (const auto& [name, args] : cases) {
    // Spec paths differ between checkouts; the digest covers contents only.
    std::string out = run("--json " + args).out;
    std::string path = kFixtures + "/golden/" + name + ".json";
    if (update) {
      std::ofstream(path, std::ios::binary) << out;
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in) << "missing golden file " << path;
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(out, want.str()) << name;
  }
}

TEST(SpecFile, ParsesFiniteAndAlgebraic) {
  auto d8 = load_group_spec(spec("d8"));
  ASSERT_TRUE(d8.is_finite());
  EXPECT_EQ(d8.name, "d8");
  EXPECT_EQ(d8.finite().close().order(), 16u);
  auto sl2 = load_group_spec(spec("sl2-binary-quadratic"));
  ASSERT_FALSE(sl2.is_finite());
  EXPECT_EQ(sl2.algebraic().y_names(), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_TRUE(sl2.algebraic().is_linear());
  EXPECT_THROW(d8.algebraic(), InvalidSpec);
}

TEST(SpecFile, MalformedInputIsAParseError) {
  const std::string field = R"("field": {"kind": "rationals"})";
  EXPECT_THROW(parse_group_spec("{"), ParseError);
  EXPECT_THROW(parse_group_spec("{}"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "finite_matrix", "field": {"kind": "reals"}, "variables": ["x"],
                                    "generators": [[["1"]]]})"),
               ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "finite_matrix", )" + field +
                                R"(, "variables": ["x", "y"], "generators": [[["1", "0"]]]})"),
               ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "finite_matrix", )" + field +
                                R"(, "variables": ["x"], "generators": [[["1 +"]]]})"),
               ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "other", )" + field + R"(, "variables": ["x"]})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "algebraic", )" + field +
                                R"(, "variables": ["x"], "group_vars": ["z"], "ideal": ["z - 1"]})"),
               ParseError);
}

TEST(SpecFile, ActionMatrixMatchesActionPolynomials) {
  const std::string head = R"({"kind": "algebraic", "field": {"kind": "rationals"}, "group_vars": ["z1", "z2"],
                               "variables": ["x1", "x2"], "ideal": ["z1*z2 - 1"], )";
  auto a = parse_group_spec(head + R"("action": ["z1*x1", "z2*x2"]})").algebraic();
  auto b = parse_group_spec(head + R"("action_matrix": [["z1", "0"], ["0", "z2"]]})").algebraic();
  ASSERT_EQ(a.action().size(), b.action().size());
  for (size_t i = 0; i < a.action().size(); ++i) EXPECT_EQ(a.action()[i], b.action()[i].in_ring(a.base_ring()));
}
