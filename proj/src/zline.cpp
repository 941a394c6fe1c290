#include "lpgn/zline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "lpgn/errors.hpp"
#include "lpgn/interp.hpp"

namespace lpgn {

Kernel::Kernel(std::int64_t support_lo, CVector values) : lo_(support_lo), values_(std::move(values)) {
  if (values_.empty()) values_.assign(1, cplx{});
  for (const auto& z : values_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("kernel has non-finite values");
}

Kernel Kernel::delta(std::int64_t at, cplx weight) { return Kernel(at, CVector{weight}); }

Kernel Kernel::from_terms(const std::vector<std::pair<std::int64_t, cplx>>& terms) {
  if (terms.empty()) return {};
  std::map<std::int64_t, cplx> acc;
  for (const auto& [k, v] : terms) acc[k] += v;
  const std::int64_t lo = acc.begin()->first;
  const std::int64_t hi = acc.rbegin()->first;
  CVector values(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [k, v] : acc) values[static_cast<std::size_t>(k - lo)] = v;
  return Kernel(lo, std::move(values));
}

bool Kernel::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const cplx& z) { return z == cplx{}; });
}

cplx Kernel::operator()(std::int64_t k) const {
  if (k < lo_ || k > support_hi()) return {};
  return values_[static_cast<std::size_t>(k - lo_)];
}

double Kernel::l1_norm() const {
  // Sorted summation: the result depends only on the multiset of moduli, so
  // reflections such as f^♯ reproduce it bit for bit.
  std::vector<double> mods;
  mods.reserve(values_.size());
  for (const auto& z : values_) mods.push_back(std::abs(z));
  std::sort(mods.begin(), mods.end());
  double s = 0.0;
  for (double m : mods) s += m;
  return s;
}

double Kernel::first_moment() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    s += std::abs(static_cast<double>(lo_ + static_cast<std::int64_t>(i))) * std::abs(values_[i]);
  return s;
}

cplx Kernel::symbol(double theta) const {
  // Horner in z = e^{iθ}; the z^{lo} factor only rotates.
  const cplx z = std::polar(1.0, theta);
  cplx acc{};
  for (std::size_t i = values_.size(); i-- > 0;) acc = acc * z + values_[i];
  return acc * std::polar(1.0, theta * static_cast<double>(lo_));
}

Kernel convolve(const Kernel& f, const Kernel& g) {
  CVector out(f.width() + g.width() - 1);
  for (std::size_t i = 0; i < f.width(); ++i)
    for (std::size_t j = 0; j < g.width(); ++j) out[i + j] += f.values_[i] * g.values_[j];
  return Kernel(f.lo_ + g.lo_, std::move(out));
}

bool operator==(const Kernel& f, const Kernel& g) {
  const std::int64_t lo = std::min(f.support_lo(), g.support_lo());
  const std::int64_t hi = std::max(f.support_hi(), g.support_hi());
  for (std::int64_t k = lo; k <= hi; ++k)
    if (f(k) != g(k)) return false;
  return true;
}

namespace zline {

CMatrix toeplitz_truncation(const Kernel& f, int n_half) {
  if (n_half < 1) throw ValidationError("truncation half-width N must be >= 1");
  const auto m = static_cast<std::size_t>(2 * n_half + 1);
  CMatrix t(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      t(j, k) = f(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k));
  return t;
}

SymbolSup symbol_sup(const Kernel& f, int grid) {
  const int min_grid = 4 * static_cast<int>(f.width());
  if (grid == 0) grid = std::max(16384, 8 * static_cast<int>(f.width()));
  if (grid < min_grid)
    throw ValidationError("symbol grid " + std::to_string(grid) + " below 4 x support width " +
                          std::to_string(min_grid));
  const double h = 2.0 * std::numbers::pi / grid;
  std::vector<double> vals(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) vals[static_cast<std::size_t>(j)] = std::abs(f.symbol(h * j));

  std::vector<int> peaks;
  for (int j = 0; j < grid; ++j) {
    const double v = vals[static_cast<std::size_t>(j)];
    if (v >= vals[static_cast<std::size_t>((j + grid - 1) % grid)] && v >= vals[static_cast<std::size_t>((j + 1) % grid)])
      peaks.push_back(j);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](int a, int b) { return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)]; });
  if (peaks.size() > 8) peaks.resize(8);

  SymbolSup out;
  for (int j : peaks) {
    double a = h * (j - 1), b = h * (j + 1);
    constexpr double g = 0.6180339887498949;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = std::abs(f.symbol(x1)), f2 = std::abs(f.symbol(x2));
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
      if (f1 >= f2) {
        b = x2, x2 = x1, f2 = f1, x1 = b - g * (b - a), f1 = std::abs(f.symbol(x1));
      } else {
        a = x1, x1 = x2, f1 = f2, x2 = a + g * (b - a), f2 = std::abs(f.symbol(x2));
      }
    }
    const double grid_v = vals[static_cast<std::size_t>(j)];
    for (auto [x, v] : {std::pair{h * j, grid_v}, std::pair{x1, f1}, std::pair{x2, f2}})
      if (v > out.value) out.value = v, out.theta = x;
  }
  out.error_bound = std::max(f.l1_norm(), f.first_moment()) * h / 2.0;
  return out;
}

NormEstimate norm_lambda_lower(const Kernel& f, const Exponent& p, int n_half, const NormBudget& budget) {
  if (p.is_infinite()) throw ValidationError("F^p_lambda(Z) needs p < inf");
  const CMatrix t = toeplitz_truncation(f, n_half);
  NormBudget local = budget;
  const std::size_t m = t.rows();
  local.boyd.basis_stride = std::max<std::size_t>(1, m / 32);
  if (!f.is_zero()) {
    // Windowed plane wave at the symbol's peak frequency: T x ≈ symbol(θ) x.
    const double theta = symbol_sup(f).theta;
    CVector wave(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double w = std::sin(std::numbers::pi * static_cast<double>(j + 1) / static_cast<double>(m + 1));
      wave[j] = std::polar(w, -theta * (static_cast<double>(j) - n_half));
    }
    local.boyd.extra_starts.push_back(std::move(wave));
  }
  NormEstimate est = norm_certified(t, p, local);
  est.upper = std::numeric_limits<double>::infinity();
  est.exact = false;
  est.method_tags.push_back("toeplitz-N" + std::to_string(n_half));
  return est;
}

NormEstimate norm_lambda_upper(const Kernel& f, const Exponent& p, int grid) {
  if (p.is_infinite()) throw ValidationError("F^p_lambda(Z) needs p < inf");
  NormEstimate est;
  if (f.is_zero()) {
    est.lower = est.upper = 0.0;
    est.exact = true;
    est.method_tags = {"zero"};
    return est;
  }
  const double l1 = f.l1_norm();
  if (p.is_exactly(1)) {
    est.lower = est.upper = l1;
    est.exact = true;
    est.method_tags = {"l1"};
    return est;
  }
  const double sup = symbol_sup(f, grid).value;
  if (p.is_exactly(2)) {
    est.lower = est.upper = sup;
    est.exact = true;
    est.method_tags = {"symbol-sup"};
    return est;
  }
  est.lower = 0.0;
  if (p.value() < 2.0)
    est.upper = rt_bound(l1, sup, theta_for(Exponent::rational(1, 1), Exponent{}, p));
  else
    est.upper = rt_bound(sup, l1, theta_for(Exponent{}, Exponent::infinity(), p));
  est.method_tags = {"riesz-thorin", "symbol-sup", "l1"};
  return est;
}

Kernel sharp(const Kernel& f) {
  CVector rev(f.values().rbegin(), f.values().rend());
  return Kernel(-f.support_hi(), std::move(rev));
}

}  // namespace zline
}  // namespace lpgn
