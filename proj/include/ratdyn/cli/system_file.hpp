#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratdyn/cli/parser.hpp"
#include "ratdyn/dynsys/dynamical_system.hpp"

namespace ratdyn {

/// A dynamical system as written by hand. Text form:
///
///   # comment
///   name shift;
///   description "translation by one";
///   var x;
///   x -> x + 1;
///   expect rank = 0;
///
/// JSON form: {"name": ..., "variables": [...], "map": [...],
/// "description": ..., "expect": {key: value, ...}}.
struct SystemFile {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> map;
  std::string description;
  std::vector<std::pair<std::string, std::string>> expect;
  /// Position of each map expression in the source (text form only).
  std::vector<SourceOrigin> map_origins;
};

/// Both parsers validate: unique identifiers, one expression per variable.
SystemFile parse_system_text(std::string_view text);
SystemFile parse_system_json(std::string_view text);

/// JSON when the first non-blank character is '{', text otherwise. A
/// missing name defaults to the file stem.
SystemFile read_system_file(const std::filesystem::path& path);

/// Parses the map expressions; errors point into the original source.
DynamicalSystem to_dynamical_system(const SystemFile& file);

std::string format_system_text(const SystemFile& file);

}  // namespace ratdyn
