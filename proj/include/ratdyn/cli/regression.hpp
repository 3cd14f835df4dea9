#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ratdyn/cli/system_file.hpp"
#include "ratdyn/invsearch/search_budget.hpp"

namespace ratdyn {

/// One `expect key = value` entry of a system file, evaluated.
///
/// Checks: dominance, degrees (a comma list; its length is the window),
/// growth, rank, square_rank, witness, class, verdict, invariant and
/// not_invariant (exact verification of an expression). Settings: budget
/// ("a,b,c,d") and window (for growth, class, verdict; default 6). Every
/// searched invariant is also verified exactly, under the key soundness.
struct RegressionCheck {
  std::string system;
  std::string key;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<RegressionCheck> run_regression(const SystemFile& file, const SearchOptions& options = {});

/// All *.system and *.json files of `dir` in name order.
std::vector<RegressionCheck> run_regression_dir(const std::filesystem::path& dir,
                                                const SearchOptions& options = {});

/// The systems/ directory of the source tree.
std::filesystem::path default_systems_dir();

/// "a,b,c,d" with non-negative integers.
SearchBudget parse_budget(const std::string& text);

}  // namespace ratdyn
