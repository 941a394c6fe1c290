#include <doctest.h>

#include <cmath>

#include "lpgn/cmatrix.hpp"
#include "lpgn/errors.hpp"
#include "lpgn/hermitian.hpp"
#include "lpgn/kernels.hpp"
#include "lpgn/rng.hpp"

using namespace lpgn;

namespace {

CMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  CMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return a;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("construction validates") {
    CHECK_THROWS_AS(CMatrix(0, 3), ValidationError);
    CHECK_THROWS_AS(CMatrix(2, 2, CVector(3)), ValidationError);
    CHECK_THROWS_AS(CMatrix(1, 1, CVector{cplx{NAN, 0}}), ValidationError);
  }

  TEST_CASE("products and adjoint") {
    const CMatrix a{{1, cplx(0, 1)}, {2, 3}};
    const CMatrix b = a * a.adjoint();
    CHECK(b(0, 0) == cplx(2, 0));
    CHECK(b(0, 1) == cplx(2, 3));
    CHECK(b(1, 0) == cplx(2, -3));
    const auto v = a.apply(CVector{1, 1});
    CHECK(v[0] == cplx(1, 1));
    CHECK(a.apply_transpose(CVector{1, 0})[1] == cplx(0, 1));
  }

  TEST_CASE("top eigenpair of a Hermitian matrix") {
    // [[2,1],[1,1]]: characteristic polynomial λ² − 3λ + 1, top root (3+√5)/2.
    const auto e = hermitian_top_eigenpair(CMatrix{{2, 1}, {1, 1}});
    CHECK(e.value == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-14));
    CHECK(e.vector.size() == 2);
  }

  TEST_CASE("eigenpair residual on random Gram matrices") {
    Rng rng(3);
    for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
      const auto a = random_matrix(rng, n, n);
      const auto g = kernels::gram_serial(a);
      const auto e = hermitian_top_eigenpair(g);
      const auto gv = g.apply(e.vector);
      double res = 0.0, nrm = 0.0;
      for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(gv[i] - e.value * e.vector[i])), nrm += std::norm(e.vector[i]);
      CHECK(res <= 1e-10 * std::max(1.0, e.value));
      CHECK(nrm == doctest::Approx(1.0));
      // Rayleigh quotient of basis vectors never exceeds the top eigenvalue.
      for (std::size_t i = 0; i < n; ++i) CHECK(g(i, i).real() <= e.value * (1 + 1e-12));
    }
  }

  TEST_CASE("lp norms and duality map") {
    const CVector x{3, cplx(0, 4)};
    CHECK(kernels::lp_norm(x, 1) == doctest::Approx(7));
    CHECK(kernels::lp_norm(x, 2) == doctest::Approx(5));
    CHECK(kernels::lp_norm(x, INFINITY) == doctest::Approx(4));
    CHECK(kernels::lp_norm(x, 3) == doctest::Approx(std::cbrt(27.0 + 64.0)));
    // ⟨x, J_r(x)⟩ = ‖x‖_r^r up to the positive scale the map applies.
    const auto j = kernels::duality_map(x, 3);
    cplx pair{};
    for (std::size_t i = 0; i < 2; ++i) pair += x[i] * j[i];
    CHECK(std::abs(pair.imag()) <= 1e-12 * std::abs(pair));
    CHECK(pair.real() > 0);
    CHECK(kernels::duality_map(CVector{0, 0}, 3)[0] == cplx(0));
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel kernels agree bitwise") {
    Rng rng(11);
    kernels::set_thread_cap(4);
    for (int rep = 0; rep < 4; ++rep) {
      const auto a = random_matrix(rng, 7, 7);
      const auto g1 = kernels::gram_serial(a), g2 = kernels::gram_parallel(a);
      CHECK(CMatrix::max_abs_diff(g1, g2) == 0.0);

      std::vector<CVector> starts;
      for (int s = 0; s < 6; ++s) {
        CVector v(7);
        for (auto& z : v) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        starts.push_back(v);
      }
      const auto m1 = kernels::boyd_multistart_serial(a, 1.5, starts, 200, 1e-14);
      const auto m2 = kernels::boyd_multistart_parallel(a, 1.5, starts, 200, 1e-14);
      CHECK(m1.best == m2.best);
      for (std::size_t s = 0; s < starts.size(); ++s) {
        CHECK(m1.runs[s].value == m2.runs[s].value);
        CHECK(m1.runs[s].x == m2.runs[s].x);
      }

      const auto b = random_matrix(rng, 2, 2);
      CHECK(kernels::grid2x2_serial(b, 1.5, 33, 32) == kernels::grid2x2_parallel(b, 1.5, 33, 32));
    }
    kernels::set_thread_cap(0);
  }

  TEST_CASE("Boyd ascent is monotone") {
    Rng rng(5);
    const auto a = random_matrix(rng, 6, 6);
    CVector start(6, 1.0);
    const auto run = kernels::boyd_ascent(a, 1.4, start, 300, 1e-14);
    for (std::size_t i = 1; i + 1 < run.trace.size(); ++i) CHECK(run.trace[i] >= run.trace[i - 1] * (1 - 1e-15));
    CHECK(kernels::lp_norm(run.x, 1.4) == doctest::Approx(1.0));
    CHECK(kernels::lp_norm(a.apply(run.x), 1.4) == doctest::Approx(run.value).epsilon(1e-12));
  }

  TEST_CASE("thread cap honours explicit settings") {
    kernels::set_thread_cap(1);
    CHECK(kernels::thread_cap() == 1);
    kernels::set_thread_cap(0);
    CHECK(kernels::thread_cap() >= 1);
  }
}
