#include "lpgn/pnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpgn/errors.hpp"
#include "lpgn/hermitian.hpp"
#include "lpgn/interp.hpp"
#include "lpgn/kernels.hpp"
#include "lpgn/rng.hpp"

namespace lpgn {

bool NormEstimate::overlap(const NormEstimate& a, const NormEstimate& b, double slack) {
  return a.lower - slack <= b.upper + slack && b.lower - slack <= a.upper + slack;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Relative outward rounding applied to combined intervals.
constexpr double kRoundingMargin = 1e-14;

void require_finite(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw ValidationError("empty matrix");
  if (!a.all_finite()) throw ValidationError("matrix has non-finite entries");
}

CVector basis_vector(std::size_t n, std::size_t k) {
  CVector e(n);
  e[k] = 1.0;
  return e;
}

NormEstimate zero_estimate(const CMatrix& a) {
  NormEstimate est;
  est.lower = est.upper = 0.0;
  est.exact = true;
  est.lower_witness = basis_vector(a.cols(), 0);
  est.method_tags = {"zero"};
  return est;
}

double max_column_sum(const CMatrix& a, std::size_t* arg = nullptr) {
  double best = -1.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += std::abs(a(r, c));
    if (s > best) {
      best = s;
      if (arg) *arg = c;
    }
  }
  return best;
}

double max_row_sum(const CMatrix& a, std::size_t* arg = nullptr) {
  double best = -1.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double s = 0.0;
    for (const auto& z : a.row(r)) s += std::abs(z);
    if (s > best) {
      best = s;
      if (arg) *arg = r;
    }
  }
  return best;
}

bool is_special(const Exponent& p) { return p.is_infinite() || p.is_exactly(1) || p.is_exactly(2); }

// ---- local maximization over (s, φ) for the 2×2 solver -------------------

struct Point {
  double s = 0.0;
  double phi = 0.0;
  double val = 0.0;
};

struct Box {
  double s_lo, s_hi, phi_lo, phi_hi;
};

class Objective2x2 {
public:
  Objective2x2(const CMatrix& a, double p) : a_(a), p_(p) {}
  double operator()(double s, double phi) const {
    ++evals_;
    return kernels::objective2x2(a_, p_, std::clamp(s, 0.0, 1.0), phi);
  }
  std::size_t evals() const { return evals_; }

private:
  const CMatrix& a_;
  double p_;
  mutable std::size_t evals_ = 0;
};

template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters) {
  constexpr double g = 0.6180339887498949;
  double best_x = lo, best_v = f(lo);
  if (const double v = f(hi); v > best_v) best_x = hi, best_v = v;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-15 * (1.0 + std::abs(a)); ++i) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 > best_v) best_x = x1, best_v = f1;
  if (f2 > best_v) best_x = x2, best_v = f2;
  return {best_x, best_v};
}

Point coordinate_ascent(const Objective2x2& f, const Box& box, Point pt, int sweeps) {
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const double before = pt.val;
    auto [s, vs] = golden_max([&](double x) { return f(x, pt.phi); }, box.s_lo, box.s_hi, 60);
    if (vs > pt.val) pt.s = s, pt.val = vs;
    auto [phi, vp] = golden_max([&](double y) { return f(pt.s, y); }, box.phi_lo, box.phi_hi, 60);
    if (vp > pt.val) pt.phi = phi, pt.val = vp;
    if (pt.val - before <= 1e-16 * std::max(1.0, pt.val)) break;
  }
  return pt;
}

// Damped Newton on finite-difference derivatives; only improving steps are kept.
Point newton_polish(const Objective2x2& f, Point pt, int iters) {
  const double h = 1e-5;
  for (int it = 0; it < iters; ++it) {
    if (pt.s < 2 * h || pt.s > 1.0 - 2 * h) break;
    const double f0 = pt.val;
    const double fsp = f(pt.s + h, pt.phi), fsm = f(pt.s - h, pt.phi);
    const double fpp = f(pt.s, pt.phi + h), fpm = f(pt.s, pt.phi - h);
    const double fpp2 = f(pt.s + h, pt.phi + h), fmm2 = f(pt.s - h, pt.phi - h);
    const double fpm2 = f(pt.s + h, pt.phi - h), fmp2 = f(pt.s - h, pt.phi + h);
    const double gs = (fsp - fsm) / (2 * h), gp = (fpp - fpm) / (2 * h);
    const double hss = (fsp - 2 * f0 + fsm) / (h * h), hpp = (fpp - 2 * f0 + fpm) / (h * h);
    const double hsp = (fpp2 - fpm2 - fmp2 + fmm2) / (4 * h * h);
    const double det = hss * hpp - hsp * hsp;
    if (!(hss < 0.0 && det > 0.0)) break;
    double ds = -(hpp * gs - hsp * gp) / det;
    double dp = -(-hsp * gs + hss * gp) / det;
    bool improved = false;
    for (int k = 0; k < 12; ++k) {
      const double s = std::clamp(pt.s + ds, 0.0, 1.0);
      const double v = f(s, pt.phi + dp);
      if (v > pt.val) {
        pt = {s, pt.phi + dp, v};
        improved = true;
        break;
      }
      ds *= 0.5;
      dp *= 0.5;
    }
    if (!improved) break;
  }
  return pt;
}

CVector point_to_vector(const Point& pt, double p) {
  return {cplx{std::pow(1.0 - pt.s, 1.0 / p)}, std::polar(std::pow(pt.s, 1.0 / p), pt.phi)};
}

}  // namespace

NormEstimate norm_exact_special(const CMatrix& a, const Exponent& p) {
  require_finite(a);
  if (!is_special(p)) throw ValidationError("closed form needs p in {1, 2, inf}, got " + p.to_string());
  if (a.is_zero()) return zero_estimate(a);

  NormEstimate est;
  est.exact = true;
  if (p.is_exactly(1)) {
    std::size_t col = 0;
    est.lower = est.upper = max_column_sum(a, &col);
    est.lower_witness = basis_vector(a.cols(), col);
    est.method_tags = {"exact-col-sum"};
  } else if (p.is_infinite()) {
    std::size_t row = 0;
    est.lower = est.upper = max_row_sum(a, &row);
    est.lower_witness.resize(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const cplx z = a(row, c);
      const double m = std::abs(z);
      est.lower_witness[c] = m == 0.0 ? cplx{1.0} : std::conj(z) / m;
    }
    est.method_tags = {"exact-row-sum"};
  } else {
    const auto top = hermitian_top_eigenpair(kernels::gram_parallel(a));
    est.lower = est.upper = std::sqrt(std::max(top.value, 0.0));
    est.lower_witness = top.vector;
    est.method_tags = {"exact-spectral"};
  }
  return est;
}

NormEstimate norm_lower_boyd(const CMatrix& a, const Exponent& p, const BoydOptions& opts) {
  require_finite(a);
  if (p.is_infinite() || p.is_exactly(1))
    throw ValidationError("Boyd iteration needs 1 < p < inf; use the closed form at p = " + p.to_string());
  if (opts.starts < 1) throw ValidationError("Boyd iteration needs at least one random start");
  if (opts.basis_stride < 1) throw ValidationError("basis_stride must be positive");
  if (a.is_zero()) return zero_estimate(a);

  const std::size_t n = a.cols();
  std::vector<CVector> starts;
  starts.reserve(n + static_cast<std::size_t>(opts.starts));
  for (std::size_t k = 0; k < n; k += opts.basis_stride) starts.push_back(basis_vector(n, k));
  for (const auto& x : opts.extra_starts) {
    if (x.size() != n) throw ValidationError("extra Boyd start has the wrong length");
    starts.push_back(x);
  }
  Rng rng(opts.seed);
  for (int s = 0; s < opts.starts; ++s) {
    CVector x(n);
    for (auto& z : x) z = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    starts.push_back(std::move(x));
  }

  auto ms = kernels::boyd_multistart_parallel(a, p.value(), starts, opts.max_iter, opts.tol);
  NormEstimate est;
  est.lower = ms.runs[ms.best].value;
  est.lower_witness = std::move(ms.runs[ms.best].x);
  est.method_tags = {"boyd"};
  return est;
}

NormEstimate norm_upper_interp(const CMatrix& a, const Exponent& p) {
  require_finite(a);
  if (is_special(p)) return norm_exact_special(a, p);
  if (a.is_zero()) return zero_estimate(a);
  const double n2 = norm_exact_special(a, Exponent{}).upper;
  NormEstimate est;
  est.lower = 0.0;
  if (p.value() < 2.0) {
    est.upper = rt_bound(max_column_sum(a), n2, theta_for(Exponent::rational(1, 1), Exponent{}, p));
  } else {
    est.upper = rt_bound(n2, max_row_sum(a), theta_for(Exponent{}, Exponent::infinity(), p));
  }
  est.method_tags = {"riesz-thorin"};
  return est;
}

NormEstimate norm2x2_refined(const CMatrix& a, const Exponent& p, const Refine2x2Options& opts) {
  require_finite(a);
  if (a.rows() != 2 || a.cols() != 2) throw ValidationError("norm2x2_refined needs a 2x2 matrix");
  if (p.is_infinite() || p.is_exactly(1))
    throw ValidationError("norm2x2_refined needs 1 < p < inf; use the closed form at p = " + p.to_string());
  if (opts.grid < 8) throw ValidationError("norm2x2_refined needs grid >= 8");
  if (a.is_zero()) return zero_estimate(a);

  const double pv = p.value();
  const std::size_t nphi = static_cast<std::size_t>(opts.grid);
  const std::size_t ns = nphi + 1;
  const double hs = 1.0 / static_cast<double>(ns - 1);
  const double hphi = kTwoPi / static_cast<double>(nphi);
  const auto grid = kernels::grid2x2_parallel(a, pv, ns, nphi);
  const auto at = [&](std::size_t i, std::size_t j) { return grid[i * nphi + (j % nphi)]; };
  const Objective2x2 f(a, pv);

  // Grid local maxima (φ periodic) seed the global refinement.
  std::vector<Point> seeds;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nphi; ++j) {
      const double v = at(i, j);
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const auto ii = static_cast<std::ptrdiff_t>(i) + di;
          if (ii < 0 || ii >= static_cast<std::ptrdiff_t>(ns)) continue;
          if (at(static_cast<std::size_t>(ii), (j + nphi + dj) % nphi) > v) {
            is_max = false;
            break;
          }
        }
      if (is_max) seeds.push_back({static_cast<double>(i) * hs, static_cast<double>(j) * hphi, v});
    }
  std::sort(seeds.begin(), seeds.end(), [](const Point& x, const Point& y) { return x.val > y.val; });
  if (seeds.size() > 16) seeds.resize(16);
  seeds.push_back({0.0, 0.0, f(0.0, 0.0)});
  seeds.push_back({1.0, 0.0, f(1.0, 0.0)});

  Point best = seeds.front();
  for (const auto& seed : seeds) {
    const Box box{std::max(0.0, seed.s - hs), std::min(1.0, seed.s + hs), seed.phi - hphi, seed.phi + hphi};
    Point pt = coordinate_ascent(f, box, seed, opts.newton_iters);
    pt = newton_polish(f, pt, opts.newton_iters);
    if (pt.val > best.val) best = pt;
  }

  // Per-cell Lipschitz estimates from neighbouring grid differences, with a
  // safety factor of 2. Cells whose estimated ceiling exceeds the incumbent
  // are maximized directly inside the cell.
  const auto slope_s = [&](std::size_t i, std::size_t j) {  // edge between rows i, i+1
    return std::abs(at(i + 1, j) - at(i, j)) / hs;
  };
  const auto slope_phi = [&](std::size_t i, std::size_t j) {  // edge between columns j, j+1
    return std::abs(at(i, j + 1) - at(i, j)) / hphi;
  };
  std::vector<std::pair<std::size_t, std::size_t>> open_cells;
  for (std::size_t i = 0; i + 1 < ns; ++i)
    for (std::size_t j = 0; j < nphi; ++j) {
      double ls = 0.0, lp = 0.0;
      for (std::ptrdiff_t di = -1; di <= 1; ++di) {
        const auto row = static_cast<std::ptrdiff_t>(i) + di;
        if (row < 0 || row + 1 >= static_cast<std::ptrdiff_t>(ns)) continue;
        for (std::size_t dj = 0; dj < 4; ++dj) ls = std::max(ls, slope_s(row, j + nphi + dj - 1));
      }
      for (std::size_t ii = (i == 0 ? 0 : i - 1); ii <= std::min(i + 2, ns - 1); ++ii)
        for (std::size_t dj = 0; dj < 3; ++dj) lp = std::max(lp, slope_phi(ii, j + nphi + dj - 1));
      const double corner = std::max({at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)});
      const double ceiling = corner + 2.0 * (ls * hs / 2.0 + lp * hphi / 2.0);
      if (ceiling > best.val) open_cells.emplace_back(i, j);
    }

  std::vector<Point> cell_best(open_cells.size());
  const auto count = static_cast<std::ptrdiff_t>(open_cells.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(kernels::thread_cap())
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto [i, j] = open_cells[static_cast<std::size_t>(k)];
    const Objective2x2 local(a, pv);
    Point start{static_cast<double>(i) * hs, static_cast<double>(j) * hphi, at(i, j)};
    for (std::size_t di = 0; di < 2; ++di)
      for (std::size_t dj = 0; dj < 2; ++dj)
        if (at(i + di, j + dj) > start.val)
          start = {static_cast<double>(i + di) * hs, static_cast<double>(j + dj) * hphi, at(i + di, j + dj)};
    const Box box{static_cast<double>(i) * hs, static_cast<double>(i + 1) * hs, static_cast<double>(j) * hphi,
                  static_cast<double>(j + 1) * hphi};
    cell_best[static_cast<std::size_t>(k)] = coordinate_ascent(local, box, start, opts.newton_iters);
  }
  double ceiling = best.val;
  for (const auto& pt : cell_best) {
    ceiling = std::max(ceiling, pt.val);
    if (pt.val > best.val) best = newton_polish(f, pt, opts.newton_iters);
  }
  ceiling = std::max(ceiling, best.val);

  NormEstimate est;
  est.lower_witness = point_to_vector(best, pv);
  est.lower = kernels::lp_norm(a.apply(est.lower_witness), pv);
  // Rounding margin for the refined maxima.
  est.upper = std::max(ceiling, est.lower) + 1e-13 * std::max(1.0, ceiling);
  est.exact = est.width() <= kExactTolerance;
  est.method_tags = {"grid2x2", "lipschitz-cells"};
  return est;
}

NormEstimate norm_certified(const CMatrix& a, const Exponent& p, const NormBudget& budget) {
  require_finite(a);
  if (a.is_zero()) return zero_estimate(a);
  if (is_special(p)) {
    // Closed forms carry rounding from the entries and the sums.
    NormEstimate est = norm_exact_special(a, p);
    est.lower *= 1.0 - kRoundingMargin;
    est.upper *= 1.0 + kRoundingMargin;
    return est;
  }

  const NormEstimate upper = norm_upper_interp(a, p);
  // A basis vector that already meets the upper bound (isometries, diagonal
  // matrices) settles the norm without a search.
  double best_col = 0.0;
  std::size_t arg = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    CVector col(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) col[r] = a(r, c);
    const double v = kernels::lp_norm(col, p.value());
    if (v > best_col) best_col = v, arg = c;
  }
  if (upper.upper - best_col <= 1e-13 * best_col) {
    NormEstimate est;
    est.lower = best_col * (1.0 - kRoundingMargin);
    est.upper = std::max(upper.upper, best_col) * (1.0 + kRoundingMargin);
    est.lower_witness = basis_vector(a.cols(), arg);
    est.method_tags = {"basis-vector", "riesz-thorin"};
    est.exact = true;
    return est;
  }
  NormEstimate est = (a.rows() == 2 && a.cols() == 2) ? norm2x2_refined(a, p, budget.refine)
                                                      : norm_lower_boyd(a, p, budget.boyd);
  if (upper.upper < est.upper) est.upper = upper.upper;
  est.method_tags.insert(est.method_tags.end(), upper.method_tags.begin(), upper.method_tags.end());
  // Both ends can be attained (e.g. at an isometry), so round outward.
  est.lower *= 1.0 - kRoundingMargin;
  est.upper *= 1.0 + kRoundingMargin;
  if (est.lower > est.upper && est.lower - est.upper <= 1e-12 * std::max(1.0, est.lower)) est.upper = est.lower;
  est.exact = est.width() <= kExactTolerance;
  return est;
}

}  // namespace lpgn
