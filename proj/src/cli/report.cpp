#include "ratdyn/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ratdyn/exactalg/format.hpp"

namespace ratdyn {

namespace {

Json functions(const std::vector<RationalFunction>& fs, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_string(f, names));
  return out;
}

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (node.is_array() && !node.empty() && std::any_of(node.begin(), node.end(), [](const Json& j) {
               return j.is_structured();
             })) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (node.is_string()) {
    rows.emplace_back(path, node.get<std::string>());
  } else {
    rows.emplace_back(path, node.dump());
  }
}

}  // namespace

std::string fingerprint(const DynamicalSystem& sys) {
  std::string text;
  for (const auto& v : sys.variables()) text += v + ",";
  text += "|";
  for (const auto& c : sys.coords()) text += to_string(c, sys.variables()) + ";";
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const DynamicalSystem& sys) {
  return Json{{"name", sys.name()},
              {"variables", sys.variables()},
              {"map", functions(sys.coords(), sys.variables())},
              {"fingerprint", fingerprint(sys)}};
}

Json to_json(const SearchBudget& b) {
  return Json{{"max_num_degree", b.max_num_degree},
              {"max_den_degree", b.max_den_degree},
              {"denominator_catalog_depth", b.denominator_catalog_depth},
              {"nullspace_rank1_limit", b.nullspace_rank1_limit}};
}

Json to_json(const DegreeProfile& p) {
  return Json{{"degrees", p.degrees}, {"growth_class", to_string(p.growth_class)}, {"fitted_rate", p.fitted_rate}};
}

Json to_json(const InvariantReport& r) {
  const auto& names = r.system.variables();
  return Json{{"invariants", functions(r.invariants, names)},
              {"independence_rank", r.independence_rank},
              {"verified", r.verified},
              {"reduction_generators", functions(r.reduction_generators, names)},
              {"bilinear_stage", to_string(r.bilinear)}};
}

Json to_json(const CorollaryBReport& r) {
  const auto& names = r.square.system.variables();
  return Json{{"base_rank", r.base_rank},
              {"pullback_rank", r.pullback_rank},
              {"square_rank", r.square_rank},
              {"new_invariant_found", r.new_invariant_found},
              {"witness", r.witness ? Json(to_string(*r.witness, names)) : Json(nullptr)},
              {"profile", r.profile ? to_json(*r.profile) : Json(nullptr)},
              {"base", to_json(r.base)},
              {"square", Json{{"variables", names}, {"report", to_json(r.square)}}}};
}

Json to_json(const TranslationEvidence& e) {
  return Json{{"recognized_class", to_string(e.recognized_class)},
              {"verdict", to_string(e.verdict)},
              {"profile", to_json(e.profile)}};
}

Json to_json(const VerifyResult& r, VerifyMode mode, unsigned trials, std::uint64_t seed) {
  Json out{{"mode", to_string(mode)}, {"verdict", to_string(r.verdict)}};
  if (mode == VerifyMode::randomized) {
    out["label"] = "refutation-only";
    out["trials"] = trials;
    out["seed"] = seed;
    out["evaluated"] = r.evaluated;
    out["skipped"] = r.skipped;
    if (r.counterexample) {
      Json point = Json::array();
      for (const auto& x : *r.counterexample) point.push_back(to_string(x));
      out["counterexample"] = point;
    }
  }
  return out;
}

std::string render_pretty(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

}  // namespace ratdyn
