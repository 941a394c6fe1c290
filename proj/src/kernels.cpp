#include "lpgn/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lpgn::kernels {
namespace {

std::atomic<int> g_thread_cap{0};

int env_thread_cap() {
  if (const char* env = std::getenv("LPGN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

double max_abs(std::span<const cplx> x) {
  double m = 0.0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}

void normalize(CVector& x, double p) {
  const double n = lp_norm(x, p);
  for (auto& z : x) z /= n;
}

}  // namespace

void set_thread_cap(int threads) { g_thread_cap.store(std::max(threads, 0)); }

int thread_cap() {
  int cap = g_thread_cap.load();
  if (cap == 0) cap = env_thread_cap();
#ifdef _OPENMP
  const int avail = omp_get_max_threads();
  return cap == 0 ? avail : std::min(cap, avail);
#else
  return 1;
#endif
}

double lp_norm(std::span<const cplx> x, double p) {
  const double m = max_abs(x);
  if (m == 0.0 || std::isinf(p)) return m;
  // Scale by the max modulus to keep |x_i|^p in range.
  double acc = 0.0;
  if (p == 1.0) {
    for (const auto& z : x) acc += std::abs(z);
    return acc;
  }
  if (p == 2.0) {
    for (const auto& z : x) {
      const double r = std::abs(z) / m;
      acc += r * r;
    }
    return m * std::sqrt(acc);
  }
  for (const auto& z : x) acc += std::pow(std::abs(z) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

CVector duality_map(std::span<const cplx> w, double r) {
  CVector out(w.size());
  const double m = max_abs(w);
  if (m == 0.0) return out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double mod = std::abs(w[i]);
    if (mod == 0.0) continue;  // |0|^{r-1} = 0 for r > 1
    const cplx phase_conj = std::conj(w[i]) / mod;
    out[i] = std::pow(mod / m, r - 1.0) * phase_conj;
  }
  return out;
}

BoydRun boyd_ascent(const CMatrix& a, double p, std::span<const cplx> start, int max_iter, double tol) {
  const double q = p / (p - 1.0);
  BoydRun run;
  run.x.assign(start.begin(), start.end());
  if (lp_norm(run.x, p) == 0.0) run.x.assign(a.cols(), cplx{1.0});
  normalize(run.x, p);
  run.value = lp_norm(a.apply(run.x), p);
  run.trace.push_back(run.value);

  for (int it = 0; it < max_iter; ++it) {
    const CVector y = a.apply(run.x);
    const CVector dual_y = duality_map(y, p);
    const CVector z = a.apply_transpose(dual_y);
    CVector next = duality_map(z, q);
    if (lp_norm(next, p) == 0.0) {
      run.converged = true;
      break;
    }
    normalize(next, p);
    const double value = lp_norm(a.apply(next), p);
    run.trace.push_back(value);
    ++run.iterations;
    if (value <= run.value * (1.0 + tol)) {
      if (value > run.value) {
        run.value = value;
        run.x = std::move(next);
      }
      run.converged = true;
      break;
    }
    run.value = value;
    run.x = std::move(next);
  }
  return run;
}

namespace {

std::size_t pick_best(const std::vector<BoydRun>& runs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].value > runs[best].value) best = i;
  return best;
}

}  // namespace

MultiStart boyd_multistart_serial(const CMatrix& a, double p, const std::vector<CVector>& starts,
                                  int max_iter, double tol) {
  MultiStart out;
  out.runs.reserve(starts.size());
  for (const auto& s : starts) out.runs.push_back(boyd_ascent(a, p, s, max_iter, tol));
  out.best = pick_best(out.runs);
  return out;
}

MultiStart boyd_multistart_parallel(const CMatrix& a, double p, const std::vector<CVector>& starts,
                                    int max_iter, double tol) {
  MultiStart out;
  out.runs.resize(starts.size());
  const auto count = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
  for (std::ptrdiff_t i = 0; i < count; ++i) out.runs[i] = boyd_ascent(a, p, starts[i], max_iter, tol);
  out.best = pick_best(out.runs);
  return out;
}

namespace {

cplx gram_entry(const CMatrix& a, std::size_t i, std::size_t j) {
  cplx acc{};
  for (std::size_t k = 0; k < a.rows(); ++k) acc += std::conj(a(k, i)) * a(k, j);
  return acc;
}

}  // namespace

CMatrix gram_serial(const CMatrix& a) {
  const std::size_t n = a.cols();
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = gram_entry(a, i, j);
      g(j, i) = std::conj(g(i, j));
    }
  for (std::size_t i = 0; i < n; ++i) g(i, i) = g(i, i).real();
  return g;
}

CMatrix gram_parallel(const CMatrix& a) {
  const std::size_t n = a.cols();
  // Work on the transpose so the inner loop is contiguous; the summation
  // order over k matches gram_serial.
  const CMatrix at = a.transpose();
  CMatrix g(n, n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_cap())
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto ri = at.row(i);
    for (std::size_t j = i; j < n; ++j) {
      const auto rj = at.row(j);
      cplx acc{};
      for (std::size_t k = 0; k < ri.size(); ++k) acc += std::conj(ri[k]) * rj[k];
      g(i, j) = acc;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) g(j, i) = std::conj(g(i, j));
  }
  return g;
}

double objective2x2(const CMatrix& a, double p, double s, double phi) {
  const double r0 = std::pow(1.0 - s, 1.0 / p);
  const double r1 = std::pow(s, 1.0 / p);
  const cplx x1 = std::polar(r1, phi);
  const cplx y0 = a(0, 0) * r0 + a(0, 1) * x1;
  const cplx y1 = a(1, 0) * r0 + a(1, 1) * x1;
  const double m0 = std::abs(y0);
  const double m1 = std::abs(y1);
  const double m = std::max(m0, m1);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(m0 / m, p) + std::pow(m1 / m, p), 1.0 / p);
}

std::vector<double> grid2x2_serial(const CMatrix& a, double p, std::size_t ns, std::size_t nphi) {
  std::vector<double> out(ns * nphi);
  for (std::size_t i = 0; i < ns; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(ns - 1);
    for (std::size_t j = 0; j < nphi; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nphi);
      out[i * nphi + j] = objective2x2(a, p, s, phi);
    }
  }
  return out;
}

std::vector<double> grid2x2_parallel(const CMatrix& a, double p, std::size_t ns, std::size_t nphi) {
  std::vector<double> out(ns * nphi);
  const auto rows = static_cast<std::ptrdiff_t>(ns);
#pragma omp parallel for schedule(static) num_threads(thread_cap())
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double s = static_cast<double>(i) / static_cast<double>(ns - 1);
    for (std::size_t j = 0; j < nphi; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nphi);
      out[i * nphi + j] = objective2x2(a, p, s, phi);
    }
  }
  return out;
}

}  // namespace lpgn::kernels
