#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lpgn/cmatrix.hpp"
#include "lpgn/exponent.hpp"
#include "lpgn/pnorm.hpp"

namespace lpgn {

/// Finitely supported complex function on Z, stored on [support_lo, support_hi].
class Kernel {
public:
  /// The zero kernel.
  Kernel() = default;
  Kernel(std::int64_t support_lo, CVector values);

  static Kernel delta(std::int64_t at, cplx weight = 1.0);
  /// Sum of weighted point masses; repeated positions add up.
  static Kernel from_terms(const std::vector<std::pair<std::int64_t, cplx>>& terms);

  std::int64_t support_lo() const { return lo_; }
  std::int64_t support_hi() const { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t width() const { return values_.size(); }
  const CVector& values() const { return values_; }
  bool is_zero() const;

  cplx operator()(std::int64_t k) const;

  double l1_norm() const;
  /// Σ |k · f(k)|, a Lipschitz constant for the symbol.
  double first_moment() const;
  /// Σ_k f(k) e^{ikθ}.
  cplx symbol(double theta) const;

  /// Convolution (f ∗ g)(k) = Σ_j f(j) g(k − j).
  friend Kernel convolve(const Kernel& f, const Kernel& g);
  /// Pointwise equality as functions on Z (zero padding ignored).
  friend bool operator==(const Kernel& f, const Kernel& g);

private:
  std::int64_t lo_ = 0;
  CVector values_{cplx{}};
};

struct SymbolSup {
  double value = 0.0;        ///< refined maximum of |symbol|
  double theta = 0.0;        ///< where it is attained
  double error_bound = 0.0;  ///< Lipschitz bound on what the grid could miss
};

namespace zline {

/// (2N+1)×(2N+1) compression of the convolution operator, T[j][k] = f(j − k)
/// for j, k ∈ {−N, …, N}.
CMatrix toeplitz_truncation(const Kernel& f, int n_half);

/// Lower bound for ‖f‖ in F^p_λ(Z) from the truncated operator. p ∈ [1, ∞).
NormEstimate norm_lambda_lower(const Kernel& f, const Exponent& p, int n_half, const NormBudget& budget = {});

/// Riesz–Thorin upper bound from ‖f‖_1 (at p = 1 and p = ∞) and the symbol
/// supremum (at p = 2). p ∈ [1, ∞). grid = 0 picks a default.
NormEstimate norm_lambda_upper(const Kernel& f, const Exponent& p, int grid = 0);

/// max_θ |Σ f(k) e^{ikθ}| from a uniform grid, refined by golden-section.
/// grid = 0 picks a default; otherwise grid >= 4 · width is required.
SymbolSup symbol_sup(const Kernel& f, int grid = 0);

/// f^♯(k) = f(−k).
Kernel sharp(const Kernel& f);

}  // namespace zline
}  // namespace lpgn
