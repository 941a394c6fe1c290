#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace lpgn {

/// Lift of a circle homeomorphism to [0, 2π]: strictly monotone with
/// |h(2π) − h(0)| = 2π. Decreasing lifts describe orientation-reversing maps.
class MonotoneCircleMap {
public:
  enum class Orientation { preserving, reversing };

  /// Checks strict monotonicity on a uniform sample of `checks` + 1 points.
  static MonotoneCircleMap from_function(std::function<double(double)> h, int checks = 4096);
  /// Piecewise-linear through (t_i, h_i); t must run from 0 to 2π, strictly increasing.
  static MonotoneCircleMap from_table(std::vector<std::pair<double, double>> table);

  double operator()(double t) const { return eval_(t); }
  Orientation orientation() const { return orientation_; }
  bool tabulated() const { return !table_.empty(); }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

private:
  MonotoneCircleMap() = default;

  std::function<double(double)> eval_;
  Orientation orientation_ = Orientation::preserving;
  std::vector<std::pair<double, double>> table_;
};

struct AntipodalResult {
  double t = 0.0;         ///< t* in [0, π]; t* and t* + π are mapped to antipodal points
  double residual = 0.0;  ///< | |h(t*+π) − h(t*)| / π − 1 | for the map as given
  int iterations = 0;     ///< bisection steps plus scan evaluations
  bool degenerate = false;  ///< no strict sign change; answer came from the scan
};

namespace circle {

inline constexpr int kScanSize = 4096;

/// Finds t* with h(t* + π) − h(t*) = ±π to within tol·π. Orientation-reversing
/// maps are reflected first and the answer is mapped back.
AntipodalResult antipodal_point(const MonotoneCircleMap& h, double tol = 1e-10);

/// Iteration cap: ⌈log2(π / tol)⌉ + kScanSize.
int iteration_cap(double tol);

}  // namespace circle
}  // namespace lpgn
