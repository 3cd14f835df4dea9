#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "ratdyn/cli/commands.hpp"
#include "ratdyn/cli/regression.hpp"
#include "ratdyn/cli/report.hpp"
#include "ratdyn/cli/system_file.hpp"
#include "ratdyn/cli/verify.hpp"
#include "ratdyn/error.hpp"

using namespace ratdyn;
using namespace ratdyn::testing;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

std::string systems(const std::string& file) { return (default_systems_dir() / file).string(); }

nlohmann::json run_json(const std::vector<std::string>& args, int expected_exit) {
  const CommandResult r = run_command(args);
  CHECK(r.exit_code == expected_exit);
  return nlohmann::json::parse(r.out);
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::structural;
}

// Random expression rendered with explicit parentheses together with its
// value built by field operations.
struct Expr {
  std::string text;
  RationalFunction value;
};

Expr random_expr(Rng& rng, int depth) {
  const std::size_t n = XYZ.size();
  if (depth == 0 || rng.uniform(0, 3) == 0) {
    if (rng.uniform(0, 1) == 0) {
      const auto v = static_cast<std::size_t>(rng.uniform(0, 2));
      return {XYZ[v], RationalFunction::variable(n, v)};
    }
    const long c = static_cast<long>(rng.uniform(0, 9));
    return {std::to_string(c), RationalFunction::constant(n, c)};
  }
  Expr a = random_expr(rng, depth - 1);
  switch (rng.uniform(0, 5)) {
    case 0: {
      Expr b = random_expr(rng, depth - 1);
      return {"(" + a.text + ") + (" + b.text + ")", a.value + b.value};
    }
    case 1: {
      Expr b = random_expr(rng, depth - 1);
      return {"(" + a.text + ") - (" + b.text + ")", a.value - b.value};
    }
    case 2: {
      Expr b = random_expr(rng, depth - 1);
      return {"(" + a.text + ")*(" + b.text + ")", a.value * b.value};
    }
    case 3: {
      Expr b = random_expr(rng, depth - 1);
      if (b.value.is_zero()) return a;
      return {"(" + a.text + ")/(" + b.text + ")", a.value / b.value};
    }
    case 4: {
      const auto e = static_cast<unsigned>(rng.uniform(0, 3));
      return {"(" + a.text + ")^" + std::to_string(e), a.value.pow(e)};
    }
    default:
      return {"-(" + a.text + ")", -a.value};
  }
}

}  // namespace

TEST_CASE("parse_expression examples") {
  CHECK(rf("x - y", XY) == RationalFunction(poly("x", XY) - poly("y", XY)));
  const auto mob = rf("(2*x+3)/(x+1)", X);
  CHECK(str(mob, X) == "(2*x + 3)/(x + 1)");
  CHECK(error_of([] { rf("x/(x - x)", X); }) == ErrorCode::division_by_zero);
  CHECK(error_of([] { rf("x + q", X); }) == ErrorCode::undeclared_identifier);
  CHECK(error_of([] { rf("x + ", X); }) == ErrorCode::parse);
  CHECK(error_of([] { rf("x^(1/2)", X); }) == ErrorCode::parse);
  CHECK(error_of([] { rf("x^y", XY); }) == ErrorCode::parse);
  CHECK(error_of([] { rf("x $ y", XY); }) == ErrorCode::parse);
}

TEST_CASE("operator precedence and associativity") {
  CHECK(rf("-x^2", X) == -rf("x*x", X));
  CHECK(rf("(-x)^2", X) == rf("x*x", X));
  CHECK(rf("2^3^2", X) == RationalFunction::constant(1, 512));
  CHECK(rf("x - y - 1", XY) == rf("(x - y) - 1", XY));
  CHECK(rf("x/y/2", XY) == rf("(x/y)/2", XY));
  CHECK(rf("x/y*2", XY) == rf("(x/y)*2", XY));
  CHECK(rf("1 + 2*3", X) == RationalFunction::constant(1, 7));
  CHECK(rf("2*-3", X) == RationalFunction::constant(1, -6));
  CHECK(rf("3/4", X) == RationalFunction::constant(1, Scalar(3, 4)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expression("x +\n  * y", XY, {3, 5});
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("parser matches expressions built by field operations") {
  Rng rng(3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Expr e;
    try {
      e = random_expr(rng, 4);
    } catch (const Error&) {
      continue;
    }
    CAPTURE(e.text);
    CHECK(rf(e.text, XYZ) == e.value);
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("round trip on the expression corpus") {
  std::ifstream in(systems("corpus/expressions.txt"));
  REQUIRE(in);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    CAPTURE(line);
    const auto f = rf(line, XYZ);
    const auto printed = str(f, XYZ);
    CHECK(rf(printed, XYZ) == f);
    CHECK(str(rf(printed, XYZ), XYZ) == printed);
    ++count;
  }
  CHECK(count >= 100);
}

TEST_CASE("system file text form") {
  const std::string text =
      "# comment; with a semicolon\n"
      "name demo;\n"
      "description \"a \\\"quoted\\\" map; with ;\";\n"
      "var x, y;\n"
      "y -> x;   # assignments in any order\n"
      "x -> (x +\n   1)/y;\n"
      "expect rank = 0;\n"
      "expect witness = \"x1 - x2\";\n";
  const SystemFile f = parse_system_text(text);
  CHECK(f.name == "demo");
  CHECK(f.description == "a \"quoted\" map; with ;");
  CHECK(f.variables == XY);
  CHECK(f.map == std::vector<std::string>{"(x +\n   1)/y", "x"});
  CHECK(f.map_origins[0].line == 6);
  CHECK(f.map_origins[0].column == 6);
  CHECK(f.expect == std::vector<std::pair<std::string, std::string>>{{"rank", "0"}, {"witness", "x1 - x2"}});
  const DynamicalSystem sys = to_dynamical_system(f);
  CHECK(sys.coord(0) == rf("(x + 1)/y", XY));
  CHECK(sys.coord(1) == rf("x", XY));

  // Formatting and reading back gives the same file.
  const SystemFile again = parse_system_text(format_system_text(f));
  CHECK(again.name == f.name);
  CHECK(again.description == f.description);
  CHECK(again.variables == f.variables);
  CHECK(again.expect == f.expect);
  CHECK(to_dynamical_system(again) == sys);
}

TEST_CASE("system file errors") {
  auto err = [](const std::string& text) {
    try {
      parse_system_text(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  CHECK(err("var x;\nx -> x + 1") == std::make_pair(2, 1));
  CHECK(err("var x;\ny -> x;") == std::make_pair(2, 1));
  CHECK(err("var x;\nx -> x;\nx -> 1;") == std::make_pair(3, 1));
  CHECK(err("var x, x;\nx -> x;") == std::make_pair(1, 1));
  CHECK(err("x -> x;") == std::make_pair(1, 1));
  CHECK(err("var x, y;\nx -> y;").first == 2);
  CHECK(err("var x;\nfoo bar;\nx -> x;") == std::make_pair(2, 1));
  CHECK(err("var x;\nx -> ;") == std::make_pair(2, 6));
  CHECK(err("var 1x;\nx -> x;") == std::make_pair(1, 5));

  // Errors inside expressions point into the file.
  const SystemFile f = parse_system_text("var x;\nx ->\n  x + z;");
  try {
    to_dynamical_system(f);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::undeclared_identifier);
    CHECK(e.line() == 3);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("system file JSON form") {
  const SystemFile j = parse_system_json(
      R"({"name": "double", "variables": ["x", "y"], "map": ["2*x", "2*y"], "expect": {"rank": "1"}})");
  const SystemFile t = parse_system_text("name double;\nvar x, y;\nx -> 2*x;\ny -> 2*y;\nexpect rank = 1;");
  CHECK(to_dynamical_system(j) == to_dynamical_system(t));
  CHECK(j.expect == t.expect);
  CHECK(error_of([] { parse_system_json(R"({"variables": ["x"], "map": []})"); }) == ErrorCode::parse);
  CHECK(error_of([] { parse_system_json(R"({"variables": ["x", "x"], "map": ["x", "x"]})"); }) == ErrorCode::parse);
  CHECK(error_of([] { parse_system_json(R"({"variables": ["x"], "map": "x"})"); }) == ErrorCode::parse);
  CHECK(error_of([] { parse_system_json("{\"variables\": [\"x\"],\n \"map\": [\"x\" }"); }) == ErrorCode::parse);
  CHECK(read_system_file(systems("double.json")).name == "double_json");
  CHECK(read_system_file(systems("identity.system")).name == "identity");
  CHECK(error_of([] { read_system_file("/nonexistent/file.system"); }) == ErrorCode::io);
}

TEST_CASE("verify_invariant examples") {
  const DynamicalSystem shift2(XY, {rf("x + 1", XY), rf("y + 1", XY)});
  CHECK(verify_invariant(shift2, rf("x - y", XY), VerifyMode::exact).verdict == VerifyVerdict::invariant);
  const DynamicalSystem doubling(X, {rf("2*x", X)});
  CHECK(verify_invariant(doubling, rf("x", X), VerifyMode::exact).verdict == VerifyVerdict::not_invariant);

  // Randomized mode refutes but never affirms.
  const auto r = verify_invariant(shift2, rf("x - y", XY), VerifyMode::randomized);
  CHECK(r.verdict == VerifyVerdict::not_refuted);
  CHECK(r.evaluated + r.skipped == kDefaultTrials);
  const auto bad = verify_invariant(doubling, rf("x", X), VerifyMode::randomized, 5, 9);
  CHECK(bad.verdict == VerifyVerdict::not_invariant);
  REQUIRE(bad.counterexample);
  CHECK(2 * (*bad.counterexample)[0] != (*bad.counterexample)[0]);
  CHECK(error_of([&] { verify_invariant(shift2, rf("x", XY), VerifyMode::randomized, 0); }) == ErrorCode::precondition);

  // Agreement with exact mode on random candidates f = p/q of low degree.
  Rng rng(5);
  const DynamicalSystem swap(XY, {rf("y", XY), rf("x", XY)});
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = random_polynomial(rng, 2, 2, 3);
    const Polynomial q = random_polynomial(rng, 2, 2, 3);
    if (q.is_zero()) continue;
    const RationalFunction f = ratfunc_normalize(p, q);
    const auto exact = verify_invariant(swap, f, VerifyMode::exact).verdict;
    const auto sampled = verify_invariant(swap, f, VerifyMode::randomized, 8, t).verdict;
    CHECK(sampled != VerifyVerdict::invariant);
    if (exact == VerifyVerdict::invariant) CHECK(sampled != VerifyVerdict::not_invariant);
    if (exact == VerifyVerdict::not_invariant) CHECK(sampled == VerifyVerdict::not_invariant);
  }
}

TEST_CASE("fingerprint depends on the normalized map only") {
  const DynamicalSystem a(XY, {rf("(x^2 - 1)/(x - 1)", XY), rf("2*y", XY)}, "a");
  const DynamicalSystem b(XY, {rf("x + 1", XY), rf("y + y", XY)}, "b");
  const DynamicalSystem c(XY, {rf("x + 2", XY), rf("2*y", XY)}, "a");
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK(fingerprint(a) != fingerprint(c));
  CHECK(fingerprint(a).size() == 16);
}

TEST_CASE("command examples") {
  const auto sq = run_json({"square", systems("shift.system")}, 0);
  CHECK(sq["result"]["witness"] == "x1 - x2");
  CHECK(sq["result"]["new_invariant_found"] == true);
  CHECK(sq["schema_version"] == kSchemaVersion);

  const auto deg = run_json({"degrees", "--n", "5", systems("identity.system")}, 0);
  CHECK(deg["result"]["degrees"] == nlohmann::json::array({1, 1, 1, 1, 1}));
  CHECK(deg["result"]["growth_class"] == "bounded");

  const auto ver = run_json({"verify", "--function", "x/y", systems("double.system")}, 0);
  CHECK(ver["result"]["verdict"] == "invariant");
  const auto neg = run_json({"verify", "--function", "x", systems("double.system")}, 1);
  CHECK(neg["result"]["verdict"] == "not-invariant");
  const auto rnd = run_json({"verify", "--mode", "randomized", "--function", "x/y", systems("double.system")}, 0);
  CHECK(rnd["result"]["verdict"] == "not-refuted");
  CHECK(rnd["result"]["label"] == "refutation-only");

  const auto it = run_json({"iterate", "--m", "2", systems("henon.system")}, 0);
  CHECK(it["result"]["map"][0] == "y^2 - x");
  const auto inv = run_json({"invariants", "--budget", "1,1,2,3", systems("double.system")}, 0);
  CHECK(inv["result"]["invariants"] == nlohmann::json::array({"x/y"}));
  CHECK(inv["budget"]["max_num_degree"] == 1);
  const auto cls = run_json({"classify", systems("mobius.system")}, 0);
  CHECK(cls["result"]["recognized_class"] == "mobius-product");
  CHECK(cls["result"]["verdict"] == "translational-proven");
  const auto chk = run_json({"check", systems("henon.system")}, 0);
  CHECK(chk["result"]["dominance"] == "dominant");
}

TEST_CASE("command errors and exit codes") {
  auto code = [](const nlohmann::json& doc) { return doc["error"]["code"].get<std::string>(); };
  CHECK(code(run_json({}, 2)) == "usage");
  CHECK(code(run_json({"frobnicate", "x"}, 2)) == "usage");
  CHECK(code(run_json({"degrees", systems("identity.system")}, 2)) == "usage");
  CHECK(code(run_json({"verify", "--mode", "sloppy", "--function", "x", systems("double.system")}, 2)) == "usage");
  CHECK(code(run_json({"invariants", "--budget", "1,2", systems("double.system")}, 2)) == "usage");
  CHECK(code(run_json({"--seed", "-4", "check", systems("double.system")}, 2)) == "usage");
  CHECK(code(run_json({"check", "/nonexistent.system"}, 2)) == "io");
  const auto undeclared = run_json({"verify", "--function", "x + w", systems("double.system")}, 2);
  CHECK(code(undeclared) == "undeclared_identifier");
  CHECK(undeclared["error"]["column"] == 5);

  const std::string dir = std::filesystem::temp_directory_path() / "ratdyn_cli_test";
  std::filesystem::create_directories(dir);
  const std::string bad = dir + "/bad.system";
  std::ofstream(bad) << "var x, y;\nx -> x + ;\ny -> y;\n";
  const auto parse = run_json({"check", bad}, 2);
  CHECK(code(parse) == "parse_error");
  CHECK(parse["error"]["line"] == 2);
  const std::string degenerate = dir + "/degenerate.system";
  std::ofstream(degenerate) << "var x, y;\nx -> x*y;\ny -> 2*x*y;\n";
  CHECK(run_json({"check", degenerate}, 1)["result"]["dominance"] == "not-dominant");
  CHECK(code(run_json({"invariants", degenerate}, 2)) == "precondition");
  CHECK(code(run_json({"square", degenerate}, 2)) == "precondition");

  const CommandResult help = run_command({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("selftest") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"square", systems("shear.system")},
           {"invariants", systems("swap.system")},
           {"verify", "--mode", "randomized", "--function", "x - y", systems("shift2.system")},
           {"classify", systems("monomial.system")}}) {
    auto a = nlohmann::json::parse(run_command(args).out);
    auto b = nlohmann::json::parse(run_command(args).out);
    REQUIRE(a.contains("timing"));
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
    auto quiet = args;
    quiet.insert(quiet.begin(), "--no-timing");
    CHECK(run_command(quiet).out == run_command(quiet).out);
  }
}

TEST_CASE("seed comes from the flag, then the environment") {
  const std::vector<std::string> args{"verify", "--mode", "randomized", "--function", "x", systems("double.system")};
  ::setenv("RATDYN_SEED", "77", 1);
  auto env = run_json(args, 1);
  CHECK(env["command"]["seed"] == 77);
  auto flag = args;
  flag.insert(flag.begin(), {"--seed", "5"});
  CHECK(run_json(flag, 1)["command"]["seed"] == 5);
  ::setenv("RATDYN_SEED", "not-a-number", 1);
  CHECK(run_json(args, 2)["error"]["code"] == "usage");
  ::unsetenv("RATDYN_SEED");
  CHECK(run_json(args, 1)["command"]["seed"] == kDefaultSeed);
}

TEST_CASE("pretty output is a table of the same document") {
  const CommandResult r = run_command({"--pretty", "--no-timing", "degrees", "--n", "3", systems("henon.system")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result.growth_class") != std::string::npos);
  CHECK(r.out.find("[2,4,8]") != std::string::npos);
}

TEST_CASE("bundled regression corpus") {
  const auto checks = run_regression_dir(default_systems_dir());
  std::size_t soundness = 0;
  for (const auto& c : checks) {
    CAPTURE(c.system);
    CAPTURE(c.key);
    CAPTURE(c.actual);
    CHECK(c.pass);
    if (c.key == "soundness") ++soundness;
  }
  CHECK(checks.size() > 50);
  CHECK(soundness > 10);
  // selftest exits 0 exactly when every check passes.
  CHECK(run_command({"selftest"}).exit_code == 0);
  const std::string dir = std::filesystem::temp_directory_path() / "ratdyn_selftest";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/wrong.system") << "var x;\nx -> x + 1;\nexpect rank = 1;\n";
  const auto failing = run_json({"selftest", "--dir", dir}, 1);
  CHECK(failing["result"]["failed"] == 1);
}
