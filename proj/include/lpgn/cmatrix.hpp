#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lpgn {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix.
class CMatrix {
public:
  CMatrix() = default;
  /// Zero matrix; both dimensions must be positive.
  CMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws if the size does not match or an entry is not finite.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cplx> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const { return data_; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool all_finite() const;
  bool is_zero() const;

  CMatrix transpose() const;
  CMatrix conj() const;
  CMatrix adjoint() const;

  CVector apply(std::span<const cplx> x) const;
  /// Aᵀ x (plain transpose, no conjugation).
  CVector apply_transpose(std::span<const cplx> x) const;

  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator*(cplx scalar) const;

  /// max_ij |A_ij - B_ij|.
  static double max_abs_diff(const CMatrix& a, const CMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

}  // namespace lpgn
