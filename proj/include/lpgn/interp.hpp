#pragma once

#include <utility>
#include <vector>

#include "lpgn/exponent.hpp"
#include "lpgn/pnorm.hpp"

namespace lpgn {

/// Exponents p0, p1, p with 1/p = (1-θ)/p0 + θ/p1.
struct InterpolationTriple {
  Exponent p0;
  Exponent p1;
  Exponent p;
  double theta = 0.0;

  static InterpolationTriple make(const Exponent& p0, const Exponent& p1, const Exponent& p);
};

/// θ ∈ [0, 1] with 1/p = (1-θ)/p0 + θ/p1. Throws if p0 == p1 or 1/p is not
/// between 1/p0 and 1/p1.
double theta_for(const Exponent& p0, const Exponent& p1, const Exponent& p);

/// norm_p0^{1-θ} · norm_p1^θ, and 0 when either factor with positive weight is 0.
double rt_bound(double norm_p0, double norm_p1, double theta);

struct LogConvexViolation {
  Exponent p0;
  Exponent p;
  Exponent p1;
  double lower_mid = 0.0;
  double bound = 0.0;
};

/// Checks lower(p) <= rt_bound(upper(p0), upper(p1), θ) + slack for every
/// ordered triple of samples. Needs at least three samples with distinct
/// exponents.
std::vector<LogConvexViolation> check_logconvex(const std::vector<std::pair<Exponent, NormEstimate>>& samples,
                                                double slack = 1e-9);

}  // namespace lpgn
