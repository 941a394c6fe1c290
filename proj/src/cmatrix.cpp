#include "lpgn/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpgn/errors.hpp"

namespace lpgn {

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    throw ValidationError("matrix entry count " + std::to_string(data_.size()) + " != " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  if (!all_finite()) throw ValidationError("matrix has non-finite entries");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw ValidationError("matrix has non-finite entries");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

bool CMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) { return z == cplx{}; });
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

CMatrix CMatrix::adjoint() const { return transpose().conj(); }

CVector CMatrix::apply(std::span<const cplx> x) const {
  CVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    cplx acc{};
    const cplx* a = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += a[c] * x[c];
    y[r] = acc;
  }
  return y;
}

CVector CMatrix::apply_transpose(std::span<const cplx> x) const {
  CVector y(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const cplx xr = x[r];
    const cplx* a = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) y[c] += a[c] * xr;
  }
  return y;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("matrix product dimension mismatch");
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx a = (*this)(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

CMatrix CMatrix::operator*(cplx scalar) const {
  CMatrix m = *this;
  for (auto& z : m.data_) z *= scalar;
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
  return m;
}

}  // namespace lpgn
