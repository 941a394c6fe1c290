#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpgn/cmatrix.hpp"
#include "lpgn/exponent.hpp"
#include "lpgn/pnorm.hpp"
#include "lpgn/zline.hpp"

namespace lpgn {

/// Element of the group algebra of Z_n.
///
/// Stored by its convolution coefficients f(0..n-1); the Gelfand vector
/// ξ_j = Σ_k f(k) ω_n^{jk}, ω_n = e^{2πi/n}, is derived from them. The
/// element acts on ℓ^p_n as u_n diag(ξ) u_n^{-1}, whose (a, b) entry is
/// f((b − a) mod n).
class CyclicElement {
public:
  static CyclicElement from_coeffs(std::size_t n, CVector coeffs);
  static CyclicElement from_gelfand(std::size_t n, const CVector& gelfand);

  std::size_t order() const { return coeffs_.size(); }
  const CVector& coeffs() const { return coeffs_; }
  const CVector& gelfand() const { return gelfand_; }

  CMatrix circulant() const;

  /// Cyclic convolution; multiplies Gelfand vectors entrywise.
  friend CyclicElement operator*(const CyclicElement& x, const CyclicElement& y);

private:
  CyclicElement(CVector coeffs, CVector gelfand) : coeffs_(std::move(coeffs)), gelfand_(std::move(gelfand)) {}

  CVector coeffs_;
  CVector gelfand_;
};

struct IsometryWitness {
  cplx zeta;
  std::size_t k = 0;
};

struct IsometryClassification {
  bool is_isometry = false;
  std::optional<IsometryWitness> witness;
};

struct GammaReport {
  NormEstimate at_p;
  NormEstimate at_q;
  bool holds = false;  ///< lower(q) <= upper(p) + slack
};

namespace cyclic {

/// Forward DFT ξ_j = Σ_k f(k) ω_n^{jk} and its inverse, by direct summation.
CVector dft(const CVector& coeffs);
CVector inverse_dft(const CVector& gelfand);

/// Cyclic shift s_n: ones on the subdiagonal and in the top-right corner.
CMatrix shift_matrix(std::size_t n);
/// u_n with entries ω_n^{jk} / √n.
CMatrix dft_matrix(std::size_t n);

/// Norm in F^p(Z_n), p ∈ [1, ∞).
NormEstimate norm(const CyclicElement& x, const Exponent& p, const NormBudget& budget = {});

/// ‖(1, i)‖ in F^t(Z_2) for each t.
std::vector<std::pair<Exponent, NormEstimate>> delta_curve(const std::vector<Exponent>& ts,
                                                           const NormBudget& budget = {});

/// Gelfand vector (ξ_{n-1}, ξ_0, …, ξ_{n-2}).
CyclicElement shift_auto(const CyclicElement& x);
/// ξ_j ↦ ξ_{−j mod n}.
CyclicElement inversion_auto(const CyclicElement& x);
/// ξ_j ↦ conj(ξ_j).
CyclicElement conj_auto(const CyclicElement& x);

/// Pattern match against (ζ, ζω^k, …, ζω^{k(n−1)}) with |ζ| = 1, within
/// `tol` in the max norm. p must be in [1, ∞) and not 2.
IsometryClassification classify_isometry(const CyclicElement& x, const Exponent& p, double tol = 1e-9);

/// ℓ^∞ distance from a Gelfand vector to the set of (ζ, ζω^k, …) patterns.
double distance_to_isometries(const CVector& gelfand);

/// Checks ‖x‖_{F^q} <= ‖x‖_{F^p} for 1 <= p <= q <= 2 on certified intervals.
GammaReport gamma_check(const CyclicElement& x, const Exponent& p, const Exponent& q,
                        const NormBudget& budget = {}, double slack = 1e-9);

/// Pushes a kernel on Z down to Z_n: coeffs(k) = Σ_j f(k + jn).
CyclicElement periodize(const Kernel& f, std::size_t n);

}  // namespace cyclic
}  // namespace lpgn
