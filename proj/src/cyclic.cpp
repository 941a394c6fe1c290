#include "lpgn/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lpgn/errors.hpp"
#include "lpgn/kernels.hpp"

namespace lpgn {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ω_n^m, reducing m mod n first so no powers are accumulated.
cplx root_of_unity(std::size_t n, std::int64_t m) {
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t r = ((m % nn) + nn) % nn;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
}

void require_order(std::size_t n, std::size_t len) {
  if (n == 0) throw ValidationError("group order must be positive");
  if (len != n)
    throw ValidationError("expected " + std::to_string(n) + " entries, got " + std::to_string(len));
}

void require_group_exponent(const Exponent& p) {
  if (p.is_infinite()) throw ValidationError("group algebras need p < inf");
}

}  // namespace

CyclicElement CyclicElement::from_coeffs(std::size_t n, CVector coeffs) {
  require_order(n, coeffs.size());
  for (const auto& z : coeffs)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("non-finite coefficient");
  CVector g = cyclic::dft(coeffs);
  return CyclicElement(std::move(coeffs), std::move(g));
}

CyclicElement CyclicElement::from_gelfand(std::size_t n, const CVector& gelfand) {
  require_order(n, gelfand.size());
  return from_coeffs(n, cyclic::inverse_dft(gelfand));
}

CMatrix CyclicElement::circulant() const {
  const std::size_t n = order();
  CMatrix c(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c(a, b) = coeffs_[(b + n - a) % n];
  return c;
}

CyclicElement operator*(const CyclicElement& x, const CyclicElement& y) {
  const std::size_t n = x.order();
  if (y.order() != n) throw ValidationError("cannot multiply elements of different groups");
  CVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
  return CyclicElement::from_coeffs(n, std::move(out));
}

namespace cyclic {

CVector dft(const CVector& coeffs) {
  const std::size_t n = coeffs.size();
  CVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) acc += coeffs[k] * root_of_unity(n, static_cast<std::int64_t>(j * k));
    out[j] = acc;
  }
  return out;
}

CVector inverse_dft(const CVector& gelfand) {
  const std::size_t n = gelfand.size();
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{};
    for (std::size_t j = 0; j < n; ++j) acc += gelfand[j] * root_of_unity(n, -static_cast<std::int64_t>(j * k));
    out[k] = acc / static_cast<double>(n);
  }
  return out;
}

CMatrix shift_matrix(std::size_t n) {
  if (n == 0) throw ValidationError("group order must be positive");
  CMatrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) s((a + 1) % n, a) = 1.0;
  return s;
}

CMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw ValidationError("group order must be positive");
  CMatrix u(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) u(j, k) = scale * root_of_unity(n, static_cast<std::int64_t>(j * k));
  return u;
}

NormEstimate norm(const CyclicElement& x, const Exponent& p, const NormBudget& budget) {
  require_group_exponent(p);
  const CMatrix c = x.circulant();
  NormEstimate est = norm_certified(c, p, budget);
  if (est.exact) return est;

  // Fourier modes are eigenvectors: the largest |ξ_j| is always attained.
  const auto& g = x.gelfand();
  const auto j = static_cast<std::size_t>(
      std::max_element(g.begin(), g.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); }) - g.begin());
  const std::size_t n = x.order();
  CVector mode(n);
  for (std::size_t a = 0; a < n; ++a) mode[a] = root_of_unity(n, static_cast<std::int64_t>(a * j));
  const double scale = kernels::lp_norm(mode, p.value());
  for (auto& z : mode) z /= scale;
  const double value = kernels::lp_norm(c.apply(mode), p.value()) * (1.0 - 1e-14);
  if (value > est.lower) {
    est.lower = value;
    est.lower_witness = std::move(mode);
    est.method_tags.push_back("fourier-mode");
    if (est.upper < est.lower) est.upper = est.lower;
    est.exact = est.width() <= kExactTolerance;
  }
  return est;
}

std::vector<std::pair<Exponent, NormEstimate>> delta_curve(const std::vector<Exponent>& ts, const NormBudget& budget) {
  const auto x = CyclicElement::from_gelfand(2, {cplx{1.0}, cplx{0.0, 1.0}});
  std::vector<std::pair<Exponent, NormEstimate>> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.emplace_back(t, norm(x, t, budget));
  return out;
}

CyclicElement shift_auto(const CyclicElement& x) {
  // τ(ξ)_j = ξ_{j-1}  ⇔  f(k) ↦ f(k) ω^{-k}.
  const std::size_t n = x.order();
  CVector f = x.coeffs();
  for (std::size_t k = 0; k < n; ++k) f[k] *= root_of_unity(n, -static_cast<std::int64_t>(k));
  return CyclicElement::from_coeffs(n, std::move(f));
}

CyclicElement inversion_auto(const CyclicElement& x) {
  const std::size_t n = x.order();
  CVector f(n);
  for (std::size_t k = 0; k < n; ++k) f[(n - k) % n] = x.coeffs()[k];
  return CyclicElement::from_coeffs(n, std::move(f));
}

CyclicElement conj_auto(const CyclicElement& x) {
  const std::size_t n = x.order();
  CVector f(n);
  for (std::size_t k = 0; k < n; ++k) f[(n - k) % n] = std::conj(x.coeffs()[k]);
  return CyclicElement::from_coeffs(n, std::move(f));
}

IsometryClassification classify_isometry(const CyclicElement& x, const Exponent& p, double tol) {
  require_group_exponent(p);
  if (p.is_exactly(2))
    throw ValidationError("at p = 2 every unimodular Gelfand vector is an isometry; classification needs p != 2");
  const auto& g = x.gelfand();
  const std::size_t n = x.order();
  IsometryClassification out;
  const double m0 = std::abs(g[0]);
  if (std::abs(m0 - 1.0) > tol) return out;
  const cplx zeta = g[0] / m0;
  std::size_t k = 0;
  if (n > 1) {
    const double angle = std::arg(g[1] / g[0]);
    const auto steps = static_cast<std::int64_t>(std::llround(angle * static_cast<double>(n) / kTwoPi));
    const auto nn = static_cast<std::int64_t>(n);
    k = static_cast<std::size_t>(((steps % nn) + nn) % nn);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(g[j] - zeta * root_of_unity(n, static_cast<std::int64_t>(k * j))) > tol) return out;
  out.is_isometry = true;
  out.witness = IsometryWitness{zeta, k};
  return out;
}

double distance_to_isometries(const CVector& gelfand) {
  const std::size_t n = gelfand.size();
  constexpr int grid = 8192;
  const double h = kTwoPi / grid;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    CVector eta(n);
    for (std::size_t j = 0; j < n; ++j) eta[j] = gelfand[j] * root_of_unity(n, -static_cast<std::int64_t>(k * j));
    for (int a = 0; a < grid; ++a) {
      const cplx zeta = std::polar(1.0, h * a);
      double worst = 0.0;
      for (const auto& e : eta) worst = std::max(worst, std::abs(e - zeta));
      best = std::min(best, worst);
    }
  }
  // θ ↦ max_j |η_j − e^{iθ}| is 1-Lipschitz; this is a lower bound.
  return std::max(0.0, best - h / 2.0);
}

GammaReport gamma_check(const CyclicElement& x, const Exponent& p, const Exponent& q, const NormBudget& budget,
                        double slack) {
  if (p.is_infinite() || q.is_infinite() || p.value() > q.value() || q.value() > 2.0)
    throw ValidationError("gamma_check needs 1 <= p <= q <= 2, got p = " + p.to_string() + ", q = " + q.to_string());
  GammaReport r;
  r.at_p = norm(x, p, budget);
  r.at_q = norm(x, q, budget);
  r.holds = r.at_q.lower <= r.at_p.upper + slack;
  return r;
}

CyclicElement periodize(const Kernel& f, std::size_t n) {
  if (n == 0) throw ValidationError("group order must be positive");
  const auto nn = static_cast<std::int64_t>(n);
  CVector c(n);
  for (std::int64_t k = f.support_lo(); k <= f.support_hi(); ++k) c[static_cast<std::size_t>(((k % nn) + nn) % nn)] += f(k);
  return CyclicElement::from_coeffs(n, std::move(c));
}

}  // namespace cyclic
}  // namespace lpgn
