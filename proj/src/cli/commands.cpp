#include "ratdyn/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "ratdyn/cli/regression.hpp"
#include "ratdyn/cli/report.hpp"
#include "ratdyn/cli/system_file.hpp"
#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/format.hpp"

namespace ratdyn {

namespace {

struct Settings {
  bool pretty = false;
  bool no_timing = false;
  int jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string file;
  unsigned m = 1;
  unsigned n = 6;
  std::string budget;
  unsigned window = 6;
  std::string function;
  std::string mode = "exact";
  unsigned trials = kDefaultTrials;
  std::string dir;
};

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || text.size() > 20 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::usage, "seed must be a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::usage, "seed out of range: '" + text + "'");
  }
}

Json error_object(std::string_view code, const std::string& message, std::optional<std::pair<int, int>> at = {}) {
  Json e{{"code", code}, {"message", message}};
  if (at) {
    e["line"] = at->first;
    e["column"] = at->second;
  }
  return e;
}

DynamicalSystem require_dominant(const DynamicalSystem& sys, std::uint64_t seed) {
  if (validate_dominant(sys, 4, seed) != Dominance::dominant) {
    throw Error(ErrorCode::precondition, "the map is not dominant");
  }
  return sys;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  const auto started = std::chrono::steady_clock::now();
  Settings s;
  CLI::App app{"Exact invariant search and translation evidence for rational self-maps of affine space", "ratdyn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", s.pretty, "Human-readable table instead of JSON");
  app.add_flag("--no-timing", s.no_timing, "Omit the timing field");
  app.add_option("--jobs", s.jobs, "Threads for parallel kernels (0 = all cores)")->check(CLI::NonNegativeNumber);
  std::string seed_text;
  app.add_option("--seed", seed_text, "Random seed (default: $RATDYN_SEED or 1729)");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", s.file, "System file")->required(); };
  auto* check = app.add_subcommand("check", "Validate a system file and test dominance");
  file_arg(check);
  auto* iter = app.add_subcommand("iterate", "Normalized m-th iterate");
  iter->add_option("--m", s.m, "Iterate exponent")->required();
  file_arg(iter);
  auto* degrees = app.add_subcommand("degrees", "Degree sequence and growth label");
  degrees->add_option("--n", s.n, "Window length")->required()->check(CLI::PositiveNumber);
  file_arg(degrees);
  auto* invariants = app.add_subcommand("invariants", "Invariant search and independence rank");
  invariants->add_option("--budget", s.budget, "num,den,depth,rank1 (default 3,3,2,3)");
  file_arg(invariants);
  auto* square = app.add_subcommand("square", "Compare invariants of the square with pulled-back ones");
  square->add_option("--budget", s.budget, "num,den,depth,rank1 (default 3,3,2,3)");
  file_arg(square);
  auto* classify = app.add_subcommand("classify", "Recognized class and translation verdict");
  classify->add_option("--window", s.window, "Degree window for growth evidence")->check(CLI::PositiveNumber);
  file_arg(classify);
  auto* verify = app.add_subcommand("verify", "Check that a function is invariant");
  verify->add_option("--function", s.function, "Rational expression over the system variables")->required();
  verify->add_option("--mode", s.mode, "exact or randomized (refutation-only)")
      ->check(CLI::IsMember({"exact", "randomized"}));
  verify->add_option("--trials", s.trials, "Random points in randomized mode")->check(CLI::PositiveNumber);
  file_arg(verify);
  auto* selftest = app.add_subcommand("selftest", "Run the expectations recorded in the bundled systems");
  selftest->add_option("--dir", s.dir, "Directory of system files");

  CommandResult result;
  Json command{{"args", args}};
  Json doc{{"schema_version", kSchemaVersion}};

  auto emit_error = [&](std::string_view code, const std::string& message, std::optional<std::pair<int, int>> at = {}) {
    doc["command"] = command;
    doc["error"] = error_object(code, message, at);
    result.out = doc.dump(2) + "\n";
    result.err = "ratdyn: " + message + "\n";
    result.exit_code = 2;
    return result;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    return emit_error(error_code_name(ErrorCode::usage), e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  command = Json{{"name", sub->get_name()}, {"args", args}};

  try {
    if (!seed_text.empty()) {
      s.seed = parse_seed(seed_text);
    } else if (const char* env = std::getenv("RATDYN_SEED"); env != nullptr && *env != '\0') {
      s.seed = parse_seed(env);
    }
    command["seed"] = s.seed;
    command["jobs"] = s.jobs;
    const SearchOptions options{s.jobs, s.seed};
    const SearchBudget budget = s.budget.empty() ? SearchBudget{} : parse_budget(s.budget);

    Json system = nullptr;
    Json budget_json = nullptr;
    Json body;
    bool negative = false;

    if (sub == selftest) {
      const auto dir = s.dir.empty() ? default_systems_dir() : std::filesystem::path(s.dir);
      const auto checks = run_regression_dir(dir, options);
      Json list = Json::array();
      std::size_t failed = 0;
      for (const auto& c : checks) {
        list.push_back(Json{{"system", c.system}, {"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        if (!c.pass) ++failed;
      }
      body = Json{{"passed", checks.size() - failed}, {"failed", failed}, {"checks", list}};
      negative = failed > 0;
    } else {
      const SystemFile file = read_system_file(s.file);
      const DynamicalSystem sys = to_dynamical_system(file);
      system = to_json(sys);
      if (sub == check) {
        const Dominance d = validate_dominant(sys, 4, s.seed);
        body = Json{{"dominance", to_string(d)}};
        negative = d != Dominance::dominant;
      } else if (sub == iter) {
        const DynamicalSystem it = iterate(sys, s.m);
        Json map = Json::array();
        for (const auto& c : it.coords()) map.push_back(to_string(c, it.variables()));
        body = Json{{"m", s.m}, {"map", map}};
      } else if (sub == degrees) {
        body = to_json(degree_sequence(sys, s.n));
      } else if (sub == invariants) {
        budget_json = to_json(budget);
        body = to_json(adim_lower_bound(require_dominant(sys, s.seed), budget, options));
      } else if (sub == square) {
        budget_json = to_json(budget);
        body = to_json(corollary_b_check(require_dominant(sys, s.seed), budget, options));
      } else if (sub == classify) {
        body = to_json(classify_system(require_dominant(sys, s.seed), s.window));
      } else if (sub == verify) {
        const RationalFunction f = parse_expression(s.function, sys.variables());
        const VerifyMode mode = verify_mode_from_string(s.mode);
        const VerifyResult v = verify_invariant(sys, f, mode, s.trials, s.seed);
        body = to_json(v, mode, s.trials, s.seed);
        body["function"] = to_string(f, sys.variables());
        negative = v.verdict == VerifyVerdict::not_invariant || v.verdict == VerifyVerdict::undefined_at_samples;
      }
    }

    doc["command"] = command;
    doc["system"] = system;
    doc["budget"] = budget_json;
    doc["result"] = body;
    if (!s.no_timing) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      doc["timing"] = Json{{"elapsed_ms", std::round(ms * 1000) / 1000}};
    }
    result.out = s.pretty ? render_pretty(doc) : doc.dump(2) + "\n";
    result.exit_code = negative ? 1 : 0;
    return result;
  } catch (const ParseError& e) {
    return emit_error(error_code_name(e.code()), e.what(), std::make_pair(e.line(), e.column()));
  } catch (const Error& e) {
    return emit_error(error_code_name(e.code()), e.what());
  }
}

}  // namespace ratdyn
