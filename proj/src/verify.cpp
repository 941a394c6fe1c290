#include "lpgn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>

#include "lpgn/circle.hpp"
#include "lpgn/cyclic.hpp"
#include "lpgn/errors.hpp"
#include "lpgn/interp.hpp"
#include "lpgn/rng.hpp"
#include "lpgn/zline.hpp"

namespace lpgn::verify {
namespace {

constexpr std::size_t kMaxFailures = 5;
constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

CVector random_vector(Rng& rng, std::size_t n) {
  CVector v(n);
  for (auto& z : v) {
    const double re = rng.uniform(-1.0, 1.0);
    z = {re, rng.uniform(-1.0, 1.0)};
  }
  return v;
}

CVector random_phases(Rng& rng, std::size_t n) {
  CVector v(n);
  for (auto& z : v) z = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
  return v;
}

NormBudget trial_budget(const SuiteConfig& cfg, int trial) {
  NormBudget b = cfg.budget;
  b.boyd.seed = cfg.seed * 1000003u + static_cast<std::uint64_t>(trial);
  return b;
}

std::vector<Exponent> exps(std::initializer_list<std::pair<int, int>> fr) {
  std::vector<Exponent> out;
  for (auto [a, b] : fr) out.push_back(Exponent::rational(a, b));
  return out;
}

void suite_shift(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed);
  const auto ps = exps({{1, 1}, {13, 10}, {17, 10}, {2, 1}, {5, 2}});
  for (int t = 0; t < cfg.trials; ++t) {
    const auto x = CyclicElement::from_gelfand(cfg.n, random_vector(rng, cfg.n));
    const auto y = cyclic::shift_auto(x);
    const auto budget = trial_budget(cfg, t);
    bool ok = true;
    std::string what;
    for (const auto& p : ps) {
      const auto a = cyclic::norm(x, p, budget), b = cyclic::norm(y, p, budget);
      if (!NormEstimate::overlap(a, b, 1e-6)) {
        ok = false;
        what = fmt("trial %d p=%s: [%.17g, %.17g] vs shifted [%.17g, %.17g]", t, p.to_string().c_str(), a.lower,
                   a.upper, b.lower, b.upper);
        break;
      }
    }
    res.record(ok, what);
  }
}

void suite_duality(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed);
  const auto ps = exps({{6, 5}, {3, 2}, {9, 5}});
  for (int t = 0; t < cfg.trials; ++t) {
    const auto x = CyclicElement::from_gelfand(cfg.n, random_vector(rng, cfg.n));
    const auto budget = trial_budget(cfg, t);
    for (const auto& p : ps) {
      const auto a = cyclic::norm(x, p, budget), b = cyclic::norm(x, p.conjugate(), budget);
      res.record(NormEstimate::overlap(a, b, 1e-6),
                 fmt("trial %d p=%s: [%.17g, %.17g] vs p'=%s [%.17g, %.17g]", t, p.to_string().c_str(), a.lower,
                     a.upper, p.conjugate().to_string().c_str(), b.lower, b.upper));
    }
  }
  // The truncation of f^♯ is the transpose of the truncation of f.
  for (int t = 0; t < std::max(1, cfg.trials / 4); ++t) {
    const auto width = 1 + rng.below(5);
    const auto lo = static_cast<std::int64_t>(rng.below(5)) - 2;
    const Kernel f(lo, random_vector(rng, width));
    for (int n_half = 1; n_half <= 64; n_half *= 2) {
      const double diff = CMatrix::max_abs_diff(zline::toeplitz_truncation(zline::sharp(f), n_half),
                                                zline::toeplitz_truncation(f, n_half).transpose());
      res.record(diff <= 1e-8, fmt("kernel %d N=%d: sharp/transpose mismatch %.3g", t, n_half, diff));
    }
  }
}

void suite_gamma(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed);
  auto grid = cfg.grid;
  if (grid.empty()) grid = exps({{1, 1}, {5, 4}, {3, 2}, {7, 4}, {2, 1}});
  for (const auto& p : grid)
    if (p.is_infinite() || p.value() > 2.0) throw ValidationError("gamma grid must lie in [1, 2]");
  std::sort(grid.begin(), grid.end(), [](const Exponent& a, const Exponent& b) { return a.value() < b.value(); });
  for (int t = 0; t < cfg.trials; ++t) {
    const auto x = CyclicElement::from_gelfand(cfg.n, random_vector(rng, cfg.n));
    const auto budget = trial_budget(cfg, t);
    std::vector<NormEstimate> est;
    for (const auto& p : grid) est.push_back(cyclic::norm(x, p, budget));
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i + 1; j < grid.size(); ++j)
        res.record(est[j].lower <= est[i].upper + 1e-8,
                   fmt("trial %d: lower(q=%s) = %.17g > upper(p=%s) = %.17g", t, grid[j].to_string().c_str(),
                       est[j].lower, grid[i].to_string().c_str(), est[i].upper));
  }
}

void suite_logconvex(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed);
  const auto ps = exps({{1, 1}, {4, 3}, {3, 2}, {2, 1}});
  for (int t = 0; t < cfg.trials; ++t) {
    const auto rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    const CMatrix a(rows, cols, random_vector(rng, rows * cols));
    std::vector<std::pair<Exponent, NormEstimate>> samples;
    for (const auto& p : ps) samples.emplace_back(p, norm_certified(a, p, trial_budget(cfg, t)));
    const auto v = check_logconvex(samples, 1e-8);
    res.record(v.empty(), v.empty() ? std::string{}
                                    : fmt("trial %d (%zux%zu): lower(%s) = %.17g above bound %.17g", t,
                                          static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                                          v[0].p.to_string().c_str(), v[0].lower_mid, v[0].bound));
  }
}

void suite_isometry(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed);
  const auto p = Exponent::rational(3, 2);
  const std::size_t top = std::max<std::size_t>(cfg.n, 2);
  for (std::size_t n = 2; n <= top; ++n) {
    for (int t = 0; t < cfg.trials; ++t) {
      const cplx zeta = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
      const auto k = static_cast<std::size_t>(rng.below(n));
      CVector xi(n);
      for (std::size_t j = 0; j < n; ++j)
        xi[j] = zeta * std::polar(1.0, 2.0 * kPi * static_cast<double>((k * j) % n) / static_cast<double>(n));
      const auto x = CyclicElement::from_gelfand(n, xi);
      const auto cls = cyclic::classify_isometry(x, p);
      const auto est = cyclic::norm(x, p, trial_budget(cfg, t));
      const bool ok = cls.is_isometry && cls.witness && cls.witness->k == k && std::abs(cls.witness->zeta - zeta) <= 1e-9 &&
                      est.contains(1.0, 1e-6) && est.width() <= 1e-6;
      res.record(ok, fmt("n=%zu k=%zu: classified %d, norm [%.17g, %.17g]", n, k, cls.is_isometry ? 1 : 0, est.lower,
                         est.upper));
    }
    for (int t = 0; t < cfg.trials; ++t) {
      CVector xi = random_phases(rng, n);
      while (cyclic::distance_to_isometries(xi) < 0.1) xi = random_phases(rng, n);
      const auto x = CyclicElement::from_gelfand(n, xi);
      const auto cls = cyclic::classify_isometry(x, p);
      const auto est = cyclic::norm(x, p, trial_budget(cfg, t));
      res.record(!cls.is_isometry && est.lower > 1.0 + 1e-4,
                 fmt("n=%zu trial %d: non-isometry classified %d, lower %.17g", n, t, cls.is_isometry ? 1 : 0,
                     est.lower));
    }
  }
}

void suite_toeplitz(const SuiteConfig& cfg, SuiteResult& res) {
  const Kernel kernels[] = {Kernel(0, {1.0, 1.0}), Kernel(0, {1.0, 1.0, cplx{0.0, 1.0}})};
  int idx = 0;
  for (const auto& f : kernels) {
    const double sup = zline::symbol_sup(f).value;
    const auto two = Exponent::rational(2, 1);
    double prev = 0.0;
    for (int n_half = 4; n_half <= 256; n_half *= 2) {
      const double lower = zline::norm_lambda_lower(f, two, n_half, cfg.budget).lower;
      res.record(lower >= prev - 1e-12 && lower <= sup + 1e-9,
                 fmt("kernel %d N=%d: lower %.17g after %.17g (sup %.17g)", idx, n_half, lower, prev, sup));
      prev = lower;
    }
    res.record(std::abs(prev - sup) <= 1e-2, fmt("kernel %d: lower_256 %.17g vs sup %.17g", idx, prev, sup));
    const auto p = Exponent::rational(3, 2);
    const double upper = zline::norm_lambda_upper(f, p).upper;
    for (int n_half = 1; n_half <= 16; n_half *= 2) {
      const double lower = zline::norm_lambda_lower(f, p, n_half, cfg.budget).lower;
      res.record(lower <= upper + 1e-9, fmt("kernel %d N=%d p=3/2: lower %.17g > upper %.17g", idx, n_half, lower, upper));
    }
    ++idx;
  }
}

MonotoneCircleMap random_pl_map(Rng& rng, bool reversing) {
  const auto knots = 2 + rng.below(8);
  std::vector<double> ts, hs;
  for (std::uint64_t i = 0; i < knots; ++i) ts.push_back(rng.uniform(0.0, 2.0 * kPi)), hs.push_back(rng.uniform(0.0, 2.0 * kPi));
  std::sort(ts.begin(), ts.end());
  std::sort(hs.begin(), hs.end());
  if (reversing) std::reverse(hs.begin(), hs.end());
  std::vector<std::pair<double, double>> table{{0.0, reversing ? 2.0 * kPi : 0.0}};
  for (std::size_t i = 0; i < ts.size(); ++i) table.emplace_back(ts[i], hs[i]);
  table.emplace_back(2.0 * kPi, reversing ? 0.0 : 2.0 * kPi);
  return MonotoneCircleMap::from_table(std::move(table));
}

void suite_antipodal(const SuiteConfig& cfg, SuiteResult& res) {
  constexpr double tol = 1e-10;
  const auto quad = circle::antipodal_point(MonotoneCircleMap::from_function([](double t) { return t * t / (2 * kPi); }), tol);
  res.record(std::abs(quad.t - kPi / 2) <= 1e-8, fmt("quadratic map: t* = %.17g", quad.t));
  const auto id = circle::antipodal_point(MonotoneCircleMap::from_function([](double t) { return t; }), tol);
  res.record(id.t == 0.0 && id.degenerate, fmt("identity map: t* = %.17g", id.t));
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const bool reversing = t % 2 == 1;
    const auto h = random_pl_map(rng, reversing);
    const auto r = circle::antipodal_point(h, tol);
    res.record(r.residual <= 1e-8 && r.t >= 0.0 && r.t <= kPi && r.iterations <= circle::iteration_cap(tol),
               fmt("random map %d (%s): t* = %.17g residual %.3g", t, reversing ? "reversing" : "preserving", r.t,
                   r.residual));
  }
}

}  // namespace

void SuiteResult::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxFailures) failures.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"shift", "duality", "gamma", "logconvex", "isometry", "toeplitz", "antipodal"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.n < 1) throw ValidationError("--n must be >= 1");
  if (cfg.trials < 0) throw ValidationError("--trials must be >= 0");
  SuiteResult res;
  res.name = name;
  if (name == "shift") suite_shift(cfg, res);
  else if (name == "duality") suite_duality(cfg, res);
  else if (name == "gamma") suite_gamma(cfg, res);
  else if (name == "logconvex") suite_logconvex(cfg, res);
  else if (name == "isometry") suite_isometry(cfg, res);
  else if (name == "toeplitz") suite_toeplitz(cfg, res);
  else if (name == "antipodal") suite_antipodal(cfg, res);
  else throw ValidationError("unknown suite '" + name + "'");
  return res;
}

}  // namespace lpgn::verify
