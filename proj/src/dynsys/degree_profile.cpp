#include "ratdyn/dynsys/degree_profile.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ratdyn/error.hpp"

namespace ratdyn {

std::string_view to_string(GrowthClass g) noexcept {
  switch (g) {
    case GrowthClass::bounded: return "bounded";
    case GrowthClass::polynomial_suspected: return "polynomial-suspected";
    case GrowthClass::exponential_suspected: return "exponential-suspected";
  }
  return "bounded";
}

long map_degree(const DynamicalSystem& sys) {
  long d = 0;
  for (const auto& c : sys.coords()) d = std::max(d, c.degree());
  return d;
}

namespace {

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

}  // namespace

DegreeProfile classify_degrees(std::vector<long> degrees) {
  DegreeProfile out;
  out.degrees = std::move(degrees);
  const std::size_t n = out.degrees.size();
  if (n == 0) return out;
  const std::size_t h = (n + 1) / 2;
  const auto tail_begin = out.degrees.end() - static_cast<std::ptrdiff_t>(h);
  std::set<long> tail_values(tail_begin, out.degrees.end());
  const long tail_max = *std::max_element(tail_begin, out.degrees.end());
  bool within_earlier = true;
  if (n > h) within_earlier = tail_max <= *std::max_element(out.degrees.begin(), tail_begin);
  if (tail_values.size() <= 2 && within_earlier) {
    out.growth_class = GrowthClass::bounded;
    out.fitted_rate = 0.0;
    return out;
  }
  const std::size_t window = std::max<std::size_t>(h, std::min<std::size_t>(n, 2));
  std::vector<double> idx, log_idx, log_deg;
  for (std::size_t i = n - window; i < n; ++i) {
    idx.push_back(static_cast<double>(i + 1));
    log_idx.push_back(std::log(static_cast<double>(i + 1)));
    log_deg.push_back(std::log(static_cast<double>(std::max(out.degrees[i], 1L))));
  }
  const double exp_rate = slope(idx, log_deg);
  if (exp_rate > 0.1) {
    out.growth_class = GrowthClass::exponential_suspected;
    out.fitted_rate = exp_rate;
  } else {
    out.growth_class = GrowthClass::polynomial_suspected;
    out.fitted_rate = slope(log_idx, log_deg);
  }
  return out;
}

DegreeProfile degree_sequence(IterateCache& cache, unsigned n) {
  if (n < 1) throw Error(ErrorCode::precondition, "degree_sequence needs N >= 1");
  std::vector<long> degrees;
  degrees.reserve(n);
  for (unsigned i = 1; i <= n; ++i) degrees.push_back(map_degree(cache.get(i)));
  return classify_degrees(std::move(degrees));
}

DegreeProfile degree_sequence(const DynamicalSystem& sys, unsigned n) {
  IterateCache cache(sys);
  return degree_sequence(cache, n);
}

}  // namespace ratdyn
