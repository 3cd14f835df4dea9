#pragma once

#include <string>

#include "json.hpp"
#include "ratdyn/cli/verify.hpp"
#include "ratdyn/dynsys/degree_profile.hpp"
#include "ratdyn/invsearch/corollary_b.hpp"
#include "ratdyn/invsearch/invariant_search.hpp"
#include "ratdyn/translation/classify.hpp"

namespace ratdyn {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// FNV-1a (64 bit) over the variable names and printed normalized
/// coordinates, as 16 hex digits.
std::string fingerprint(const DynamicalSystem& sys);

Json to_json(const DynamicalSystem& sys);
Json to_json(const SearchBudget& budget);
Json to_json(const DegreeProfile& profile);
Json to_json(const InvariantReport& report);
Json to_json(const CorollaryBReport& report);
Json to_json(const TranslationEvidence& evidence);
Json to_json(const VerifyResult& result, VerifyMode mode, unsigned trials, std::uint64_t seed);

/// Two-column table of the leaves of a report, keyed by their JSON path.
std::string render_pretty(const Json& doc);

}  // namespace ratdyn
