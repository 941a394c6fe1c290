#include "lpgn/interp.hpp"

#include <algorithm>
#include <cmath>

#include "lpgn/errors.hpp"

namespace lpgn {

InterpolationTriple InterpolationTriple::make(const Exponent& p0, const Exponent& p1, const Exponent& p) {
  return {p0, p1, p, theta_for(p0, p1, p)};
}

double theta_for(const Exponent& p0, const Exponent& p1, const Exponent& p) {
  if (Exponent::equal(p0, p1)) throw ValidationError("interpolation endpoints coincide");
  const double r0 = p0.reciprocal();
  const double r1 = p1.reciprocal();
  const double r = p.reciprocal();
  constexpr double eps = 1e-15;
  if (r < std::min(r0, r1) - eps || r > std::max(r0, r1) + eps)
    throw ValidationError("1/p = " + std::to_string(r) + " lies outside [" + std::to_string(std::min(r0, r1)) +
                          ", " + std::to_string(std::max(r0, r1)) + "]");
  if (Exponent::equal(p, p0)) return 0.0;
  if (Exponent::equal(p, p1)) return 1.0;
  return std::clamp((r0 - r) / (r0 - r1), 0.0, 1.0);
}

double rt_bound(double norm_p0, double norm_p1, double theta) {
  if (!(norm_p0 >= 0.0) || !(norm_p1 >= 0.0)) throw ValidationError("rt_bound needs nonnegative norms");
  if (!(theta >= 0.0 && theta <= 1.0)) throw ValidationError("rt_bound needs theta in [0, 1]");
  if (theta == 0.0) return norm_p0;
  if (theta == 1.0) return norm_p1;
  if (norm_p0 == 0.0 || norm_p1 == 0.0) return 0.0;
  return std::pow(norm_p0, 1.0 - theta) * std::pow(norm_p1, theta);
}

std::vector<LogConvexViolation> check_logconvex(const std::vector<std::pair<Exponent, NormEstimate>>& samples,
                                                double slack) {
  if (samples.size() < 3) throw ValidationError("check_logconvex needs at least three samples");
  std::vector<const std::pair<Exponent, NormEstimate>*> sorted;
  for (const auto& s : samples) sorted.push_back(&s);
  // Decreasing 1/p, i.e. increasing p.
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->first.reciprocal() > b->first.reciprocal(); });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (Exponent::equal(sorted[i - 1]->first, sorted[i]->first))
      throw ValidationError("check_logconvex needs distinct exponents");

  std::vector<LogConvexViolation> violations;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      for (std::size_t k = j + 1; k < sorted.size(); ++k) {
        const auto& [p0, e0] = *sorted[i];
        const auto& [p, e] = *sorted[j];
        const auto& [p1, e1] = *sorted[k];
        const double bound = rt_bound(e0.upper, e1.upper, theta_for(p0, p1, p));
        if (e.lower > bound + slack) violations.push_back({p0, p, p1, e.lower, bound});
      }
  return violations;
}

}  // namespace lpgn
