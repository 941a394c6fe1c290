#include "lpgn/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lpgn/errors.hpp"

namespace lpgn {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

MonotoneCircleMap::Orientation check_lift(double h0, double h1) {
  const double span = h1 - h0;
  if (!std::isfinite(span) || std::abs(std::abs(span) - kTwoPi) > 1e-9 * kTwoPi)
    throw ValidationError("circle map lift must satisfy |h(2pi) - h(0)| = 2pi, got " + std::to_string(span));
  return span > 0 ? MonotoneCircleMap::Orientation::preserving : MonotoneCircleMap::Orientation::reversing;
}

}  // namespace

MonotoneCircleMap MonotoneCircleMap::from_function(std::function<double(double)> h, int checks) {
  if (!h) throw ValidationError("empty circle map");
  if (checks < 2) throw ValidationError("monotonicity check needs at least 2 intervals");
  MonotoneCircleMap m;
  m.orientation_ = check_lift(h(0.0), h(kTwoPi));
  const double sign = m.orientation_ == Orientation::preserving ? 1.0 : -1.0;
  double prev = h(0.0);
  for (int i = 1; i <= checks; ++i) {
    const double cur = h(kTwoPi * i / checks);
    if (!(sign * (cur - prev) > 0.0))
      throw ValidationError("circle map is not strictly monotone near t = " + std::to_string(kTwoPi * i / checks));
    prev = cur;
  }
  m.eval_ = std::move(h);
  return m;
}

MonotoneCircleMap MonotoneCircleMap::from_table(std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) throw ValidationError("circle map table needs at least two rows");
  if (table.front().first != 0.0 || std::abs(table.back().first - kTwoPi) > 1e-12)
    throw ValidationError("circle map table must run from t = 0 to t = 2pi");
  table.back().first = kTwoPi;
  MonotoneCircleMap m;
  m.orientation_ = check_lift(table.front().second, table.back().second);
  const double sign = m.orientation_ == Orientation::preserving ? 1.0 : -1.0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (!(table[i].first > table[i - 1].first)) throw ValidationError("circle map table times must increase");
    if (!(sign * (table[i].second - table[i - 1].second) > 0.0))
      throw ValidationError("circle map table values are not strictly monotone");
  }
  m.table_ = std::move(table);
  m.eval_ = [rows = m.table_](double t) {
    t = std::clamp(t, 0.0, kTwoPi);
    auto hi = std::upper_bound(rows.begin(), rows.end(), t, [](double v, const auto& r) { return v < r.first; });
    if (hi == rows.end()) return rows.back().second;
    const auto lo = hi - 1;
    const double w = (t - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  };
  return m;
}

namespace circle {

int iteration_cap(double tol) { return static_cast<int>(std::ceil(std::log2(kPi / tol))) + kScanSize; }

AntipodalResult antipodal_point(const MonotoneCircleMap& h, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");
  const bool reversing = h.orientation() == MonotoneCircleMap::Orientation::reversing;

  // Increasing lift with k(0) = 0: reflect reversing maps, then rotate.
  const double base = reversing ? h(kTwoPi) : h(0.0);
  const auto k = [&](double t) { return (reversing ? h(kTwoPi - t) : h(t)) - base; };
  const auto r = [&](double t) { return (k(t + kPi) - k(t)) / kPi - 1.0; };

  AntipodalResult out;
  const int cap = iteration_cap(tol);
  double a = 0.0, b = kPi;
  double ra = r(a), rb = r(b);
  double t = 0.0;
  if ((ra < 0.0 && rb > 0.0) || (ra > 0.0 && rb < 0.0)) {
    // r(0) + r(π) = 0, so a strict sign change is the generic case.
    double best_t = std::abs(ra) <= std::abs(rb) ? a : b;
    double best_r = std::min(std::abs(ra), std::abs(rb));
    while (out.iterations < cap) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double rm = r(mid);
      ++out.iterations;
      if (std::abs(rm) < best_r || (std::abs(rm) == best_r && mid < best_t)) best_t = mid, best_r = std::abs(rm);
      if (rm == 0.0) break;
      if ((rm < 0.0) == (ra < 0.0))
        a = mid, ra = rm;
      else
        b = mid;
      if (b - a <= tol && best_r <= tol) break;
    }
    t = best_t;
  } else {
    out.degenerate = true;
    bool found = false;
    for (int i = 0; i <= kScanSize && out.iterations < cap; ++i) {
      const double s = kPi * i / kScanSize;
      ++out.iterations;
      if (std::abs(r(s)) <= tol) {
        t = s;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("antipodal scan found no point with |g - 1| <= tol");
  }

  out.t = reversing ? kPi - t : t;
  out.residual = std::abs(std::abs(h(out.t + kPi) - h(out.t)) / kPi - 1.0);
  return out;
}

}  // namespace circle
}  // namespace lpgn
