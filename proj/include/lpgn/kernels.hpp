#pragma once

// Data-parallel inner loops behind the norm routines. Every kernel comes as a
// serial reference and an OpenMP version; both produce bitwise-identical
// results because each output element is computed independently in a fixed
// order and all reductions happen afterwards in index order.

#include <cstddef>
#include <span>
#include <vector>

#include "lpgn/cmatrix.hpp"

namespace lpgn::kernels {

/// Caps OpenMP parallelism. 0 restores the default (LPGN_THREADS if set).
void set_thread_cap(int threads);
/// Thread count the parallel kernels will use.
int thread_cap();

/// ‖x‖_p for p in [1, ∞]; pass +inf for the max norm.
double lp_norm(std::span<const cplx> x, double p);

/// Componentwise duality map J_r(w)_i = |w_i|^{r-1} · conj(w_i / |w_i|), with
/// the phase of 0 taken as 1. The input is rescaled by its max modulus first,
/// so the result is J_r(w) up to a positive factor.
CVector duality_map(std::span<const cplx> w, double r);

struct BoydRun {
  double value = 0.0;  ///< ‖A x‖_p at the returned unit vector
  CVector x;           ///< unit ℓ^p vector
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;  ///< objective at every iterate, including rejected final step
};

/// Boyd–Higham ascent from one start. `p` must lie in (1, ∞).
BoydRun boyd_ascent(const CMatrix& a, double p, std::span<const cplx> start, int max_iter, double tol);

struct MultiStart {
  std::vector<BoydRun> runs;
  std::size_t best = 0;  ///< first index attaining the maximum value
};

MultiStart boyd_multistart_serial(const CMatrix& a, double p, const std::vector<CVector>& starts,
                                  int max_iter, double tol);
MultiStart boyd_multistart_parallel(const CMatrix& a, double p, const std::vector<CVector>& starts,
                                    int max_iter, double tol);

/// AᴴA.
CMatrix gram_serial(const CMatrix& a);
CMatrix gram_parallel(const CMatrix& a);

/// ‖A x(s, φ)‖_p for a 2×2 matrix with x(s, φ) = ((1-s)^{1/p}, s^{1/p} e^{iφ}).
double objective2x2(const CMatrix& a, double p, double s, double phi);

/// Objective on the tensor grid s_i = i/(ns-1), φ_j = 2πj/nphi; row-major in i.
std::vector<double> grid2x2_serial(const CMatrix& a, double p, std::size_t ns, std::size_t nphi);
std::vector<double> grid2x2_parallel(const CMatrix& a, double p, std::size_t ns, std::size_t nphi);

}  // namespace lpgn::kernels
