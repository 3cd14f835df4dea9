#include "ratdyn/cli/regression.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ratdyn/cli/verify.hpp"
#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/format.hpp"
#include "ratdyn/invsearch/corollary_b.hpp"
#include "ratdyn/translation/classify.hpp"

#ifndef RATDYN_SYSTEMS_DIR
#define RATDYN_SYSTEMS_DIR "systems"
#endif

namespace ratdyn {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::string join(const std::vector<long>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out;
}

const std::string* setting(const SystemFile& file, const std::string& key) {
  for (const auto& [k, v] : file.expect) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace

SearchBudget parse_budget(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 4) throw Error(ErrorCode::usage, "budget needs four comma-separated integers");
  unsigned v[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& p = parts[i];
    if (p.empty() || p.size() > 4 || !std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::usage, "bad budget entry '" + p + "'");
    }
    v[i] = static_cast<unsigned>(std::stoul(p));
  }
  return SearchBudget{v[0], v[1], v[2], v[3]};
}

std::vector<RegressionCheck> run_regression(const SystemFile& file, const SearchOptions& options) {
  std::vector<RegressionCheck> out;
  const DynamicalSystem sys = to_dynamical_system(file);
  const SearchBudget budget = setting(file, "budget") ? parse_budget(*setting(file, "budget")) : SearchBudget{};
  const unsigned window = setting(file, "window") ? static_cast<unsigned>(std::stoul(*setting(file, "window"))) : 6;

  std::optional<CorollaryBReport> corollary;
  std::optional<InvariantReport> base;
  std::optional<TranslationEvidence> evidence;
  auto need_base = [&]() -> const InvariantReport& {
    if (!base) base = adim_lower_bound(sys, budget, options);
    return *base;
  };
  auto need_corollary = [&]() -> const CorollaryBReport& {
    if (!corollary) {
      corollary = corollary_b_check(sys, budget, options);
      base = corollary->base;
    }
    return *corollary;
  };
  auto need_evidence = [&]() -> const TranslationEvidence& {
    if (!evidence) evidence = classify_system(sys, window);
    return *evidence;
  };

  for (const auto& [key, expected] : file.expect) {
    if (key == "budget" || key == "window") continue;
    std::string actual;
    bool pass = false;
    try {
      if (key == "dominance") {
        actual = to_string(validate_dominant(sys, 4, options.seed));
      } else if (key == "degrees") {
        std::vector<long> want;
        for (const auto& s : split_list(expected)) want.push_back(std::stol(s));
        const auto got = degree_sequence(sys, static_cast<unsigned>(want.size())).degrees;
        actual = join(got);
        pass = got == want;
      } else if (key == "growth") {
        actual = to_string(degree_sequence(sys, window).growth_class);
      } else if (key == "rank") {
        actual = std::to_string(need_base().independence_rank);
      } else if (key == "square_rank") {
        actual = std::to_string(need_corollary().square_rank);
      } else if (key == "witness") {
        const auto& c = need_corollary();
        actual = c.witness ? to_string(*c.witness, c.square.system.variables()) : "none";
        pass = c.witness && *c.witness == parse_expression(expected, c.square.system.variables());
      } else if (key == "class") {
        actual = to_string(need_evidence().recognized_class);
      } else if (key == "verdict") {
        actual = to_string(need_evidence().verdict);
      } else if (key == "invariant" || key == "not_invariant") {
        const auto f = parse_expression(expected, sys.variables());
        const auto v = verify_invariant(sys, f, VerifyMode::exact);
        actual = std::string(to_string(v.verdict)) + ": " + expected;
        pass = v.verdict == (key == "invariant" ? VerifyVerdict::invariant : VerifyVerdict::not_invariant);
      } else {
        actual = "unknown key";
      }
      if (key == "dominance" || key == "growth" || key == "rank" || key == "square_rank" || key == "class" ||
          key == "verdict") {
        pass = actual == expected;
      }
    } catch (const Error& e) {
      actual = std::string("error: ") + e.what();
      pass = false;
    }
    out.push_back({sys.name(), key, expected, actual, pass});
  }

  // Whatever was searched must verify exactly.
  std::vector<std::pair<const DynamicalSystem*, const std::vector<RationalFunction>*>> searched;
  if (base) searched.emplace_back(&sys, &base->invariants);
  if (corollary) searched.emplace_back(&corollary->square.system, &corollary->square.invariants);
  for (const auto& [s, fs] : searched) {
    for (const auto& f : *fs) {
      const auto v = verify_invariant(*s, f, VerifyMode::exact);
      out.push_back({sys.name(), "soundness", "invariant: " + to_string(f, s->variables()),
                     std::string(to_string(v.verdict)) + ": " + to_string(f, s->variables()),
                     v.verdict == VerifyVerdict::invariant});
    }
  }
  return out;
}

std::vector<RegressionCheck> run_regression_dir(const std::filesystem::path& dir, const SearchOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::io, "no such directory '" + dir.string() + "'");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".system" || ext == ".json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RegressionCheck> out;
  for (const auto& path : files) {
    try {
      for (auto& c : run_regression(read_system_file(path), options)) out.push_back(std::move(c));
    } catch (const Error& e) {
      out.push_back({path.stem().string(), "load", "ok", std::string("error: ") + e.what(), false});
    }
  }
  return out;
}

std::filesystem::path default_systems_dir() { return RATDYN_SYSTEMS_DIR; }

}  // namespace ratdyn
