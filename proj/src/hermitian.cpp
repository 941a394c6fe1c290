#include "lpgn/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpgn/errors.hpp"

namespace lpgn {
namespace {

struct Reflector {
  CVector v;  // v[0] == 1
  cplx tau{};
};

// Number of eigenvalues of the symmetric tridiagonal (d, f) strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& f, double x) {
  constexpr double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = tiny;
    q = d[i] - x - f[i - 1] * f[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

double largest_tridiagonal_eigenvalue(const std::vector<double>& d, const std::vector<double>& f) {
  const std::size_t n = d.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? f[i - 1] : 0.0) + (i + 1 < n ? f[i] : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), std::numeric_limits<double>::min()});
  lo -= 4.0 * std::numeric_limits<double>::epsilon() * scale;
  hi += 4.0 * std::numeric_limits<double>::epsilon() * scale;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(d, f, mid) == n)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Solves (T - mu I) y = b in place for the symmetric tridiagonal T = (d, f),
// Gaussian elimination with partial pivoting.
void tridiagonal_solve(const std::vector<double>& d_in, const std::vector<double>& f, double mu,
                       std::vector<double>& b) {
  const std::size_t n = d_in.size();
  if (n == 1) {
    const double piv = d_in[0] - mu;
    b[0] /= (piv == 0.0 ? std::numeric_limits<double>::epsilon() : piv);
    return;
  }
  std::vector<double> dl(f), d(n), du(f), du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<bool> swapped(n - 1, false);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = d_in[i] - mu;
    norm = std::max(norm, std::abs(d_in[i]) + (i > 0 ? f[i - 1] : 0.0) + (i + 1 < n ? f[i] : 0.0));
  }
  const double pivot_floor = std::max(norm, 1.0) * std::numeric_limits<double>::epsilon();

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] != 0.0) {
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        dl[i] = 0.0;
      }
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = true;
    }
  }
  for (auto& piv : d)
    if (std::abs(piv) < pivot_floor) piv = piv < 0.0 ? -pivot_floor : pivot_floor;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped[i]) {
      b[i + 1] -= dl[i] * b[i];
    } else {
      const double temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - dl[i] * b[i];
    }
  }
  b[n - 1] /= d[n - 1];
  b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t k = n - 2; k-- > 0;) b[k] = (b[k] - du[k] * b[k + 1] - du2[k] * b[k + 2]) / d[k];
}

}  // namespace

TopEigenpair hermitian_top_eigenpair(const CMatrix& h) {
  if (!h.is_square()) throw ValidationError("eigenvalue problem needs a square matrix");
  const std::size_t n = h.rows();
  if (n == 1) return {h(0, 0).real(), CVector{cplx{1.0}}};

  CMatrix a = h;
  std::vector<Reflector> reflectors;
  reflectors.reserve(n >= 2 ? n - 2 : 0);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    Reflector r;
    r.v.assign(m, cplx{});
    const cplx alpha = a(k + 1, k);
    double xnorm2 = 0.0;
    for (std::size_t i = 1; i < m; ++i) xnorm2 += std::norm(a(k + 1 + i, k));
    if (xnorm2 == 0.0 && alpha.imag() == 0.0) {
      reflectors.push_back(std::move(r));  // tau = 0: identity
      continue;
    }
    const double full = std::sqrt(std::norm(alpha) + xnorm2);
    const double beta = alpha.real() >= 0.0 ? -full : full;
    r.tau = (beta - alpha) / beta;
    const cplx denom = alpha - beta;
    r.v[0] = 1.0;
    for (std::size_t i = 1; i < m; ++i) r.v[i] = a(k + 1 + i, k) / denom;

    // Trailing block S <- Hᴴ S H with H = I - tau v vᴴ.
    CVector w(m);
    for (std::size_t i = 0; i < m; ++i) {
      cplx acc{};
      for (std::size_t j = 0; j < m; ++j) acc += a(k + 1 + i, k + 1 + j) * r.v[j];
      w[i] = acc;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(k + 1 + i, k + 1 + j) -= r.tau * w[i] * std::conj(r.v[j]);
    CVector u(m);
    for (std::size_t j = 0; j < m; ++j) {
      cplx acc{};
      for (std::size_t i = 0; i < m; ++i) acc += std::conj(r.v[i]) * a(k + 1 + i, k + 1 + j);
      u[j] = acc;
    }
    const cplx tau_c = std::conj(r.tau);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(k + 1 + i, k + 1 + j) -= tau_c * r.v[i] * u[j];

    a(k + 1, k) = beta;
    a(k, k + 1) = beta;
    for (std::size_t i = 1; i < m; ++i) a(k + 1 + i, k) = a(k, k + 1 + i) = 0.0;
    reflectors.push_back(std::move(r));
  }

  // Tridiagonal with possibly complex subdiagonal; D^H T D is real with |e_i|.
  std::vector<double> d(n), f(n - 1);
  CVector phase(n, cplx{1.0});
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const cplx e = a(i + 1, i);
    f[i] = std::abs(e);
    phase[i + 1] = f[i] > 0.0 ? phase[i] * (e / f[i]) : phase[i];
  }

  TopEigenpair out;
  out.value = largest_tridiagonal_eigenvalue(d, f);

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i) + 1.0);
  for (int it = 0; it < 3; ++it) {
    tridiagonal_solve(d, f, out.value, y);
    double nrm = 0.0;
    for (double v : y) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : y) v /= nrm;
  }

  out.vector.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.vector[i] = phase[i] * y[i];
  for (std::size_t k = reflectors.size(); k-- > 0;) {
    const auto& r = reflectors[k];
    if (r.tau == cplx{}) continue;
    cplx dot{};
    for (std::size_t i = 0; i < r.v.size(); ++i) dot += std::conj(r.v[i]) * out.vector[k + 1 + i];
    const cplx scale = r.tau * dot;
    for (std::size_t i = 0; i < r.v.size(); ++i) out.vector[k + 1 + i] -= scale * r.v[i];
  }
  double nrm = 0.0;
  for (const auto& z : out.vector) nrm += std::norm(z);
  nrm = std::sqrt(nrm);
  for (auto& z : out.vector) z /= nrm;
  return out;
}

}  // namespace lpgn
