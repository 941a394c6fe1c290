#pragma once

#include "lpgn/cmatrix.hpp"

namespace lpgn {

struct TopEigenpair {
  double value = 0.0;
  CVector vector;  ///< unit 2-norm
};

/// Largest eigenvalue of a Hermitian matrix and an eigenvector for it.
/// Householder reduction to tridiagonal form, Sturm bisection for the
/// eigenvalue, inverse iteration on the tridiagonal for the vector.
TopEigenpair hermitian_top_eigenpair(const CMatrix& h);

}  // namespace lpgn
