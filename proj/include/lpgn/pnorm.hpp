#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lpgn/cmatrix.hpp"
#include "lpgn/exponent.hpp"

namespace lpgn {

/// Interval [lower, upper] enclosing an operator norm, with a unit input
/// vector attaining `lower` and tags naming the routines that produced it.
struct NormEstimate {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool exact = false;
  CVector lower_witness;
  std::vector<std::string> method_tags;

  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
  bool contains(double v, double slack = 0.0) const { return lower - slack <= v && v <= upper + slack; }
  /// Intervals intersect after widening both by `slack`.
  static bool overlap(const NormEstimate& a, const NormEstimate& b, double slack = 0.0);
};

/// Tolerance under which an interval is reported as exact.
inline constexpr double kExactTolerance = 1e-8;

struct BoydOptions {
  int starts = 8;  ///< seeded random starts, in addition to every basis vector
  std::uint64_t seed = 0;
  int max_iter = 500;
  double tol = 1e-14;
  /// Use every basis_stride-th basis vector as a start (1 = all of them).
  std::size_t basis_stride = 1;
  /// Caller-supplied starts, run before the random ones.
  std::vector<CVector> extra_starts;
};

struct Refine2x2Options {
  int grid = 256;
  int newton_iters = 12;
};

struct NormBudget {
  BoydOptions boyd;
  Refine2x2Options refine;
};

/// Closed forms at p ∈ {1, 2, ∞}: max column sum, largest singular value,
/// max row sum.
NormEstimate norm_exact_special(const CMatrix& a, const Exponent& p);

/// Multi-start Boyd–Higham ascent; lower bound only (upper = +∞). p ∈ (1, ∞).
NormEstimate norm_lower_boyd(const CMatrix& a, const Exponent& p, const BoydOptions& opts = {});

/// Riesz–Thorin upper bound interpolating between {1, 2} or {2, ∞}; lower = 0.
NormEstimate norm_upper_interp(const CMatrix& a, const Exponent& p);

/// Grid search plus local refinement over the unit sphere of ℓ^p_2 for a
/// 2×2 matrix. The upper end adds a Lipschitz-estimated bound on what the
/// grid could have missed. p ∈ (1, ∞).
NormEstimate norm2x2_refined(const CMatrix& a, const Exponent& p, const Refine2x2Options& opts = {});

/// Tightest available interval from all of the above.
NormEstimate norm_certified(const CMatrix& a, const Exponent& p, const NormBudget& budget = {});

}  // namespace lpgn
