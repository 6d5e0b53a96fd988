#include "boatune/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boatune::numerics {

NonSquareError::NonSquareError(std::size_t rows, std::size_t cols)
    : NumericsError("matrix is not square: " + std::to_string(rows) + "x" +
                    std::to_string(cols)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix data length does not match " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (!all_finite()) throw NonFiniteError("matrix has non-finite entries");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw NonFiniteError("matrix has non-finite entries");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double Matrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (double v : row(r)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  Matrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) { return lhs + (-1.0) * rhs; }

Matrix operator*(double s, const Matrix& m) {
  Matrix out = m;
  for (double& v : out.data_) v *= s;
  return out;
}

bool eigenvalue_less(const Complex& lhs, const Complex& rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
  return lhs.imag() < rhs.imag();
}

Spectrum::Spectrum(std::vector<Complex> eigenvalues) : values_(std::move(eigenvalues)) {
  std::sort(values_.begin(), values_.end(), eigenvalue_less);
}

Complex Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), Complex{0.0, 0.0});
}

Complex Spectrum::product() const {
  return std::accumulate(values_.begin(), values_.end(), Complex{1.0, 0.0},
                         std::multiplies<>());
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

LuDecomposition::LuDecomposition(const Matrix& m) : lu_(m), pivots_(m.rows()) {
  if (!m.is_square()) throw NonSquareError(m.rows(), m.cols());
  const std::size_t n = m.rows();
  std::iota(pivots_.begin(), pivots_.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
      std::swap(pivots_[p], pivots_[k]);
      pivot_sign_ = -pivot_sign_;
    }
    const double pivot = lu_(k, k);
    if (pivot == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu_(i, k) / pivot;
      lu_(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

double LuDecomposition::determinant() const {
  double det = pivot_sign_;
  for (std::size_t i = 0; i < lu_.rows(); ++i) det *= lu_(i, i);
  return det;
}

bool LuDecomposition::is_singular() const {
  for (std::size_t i = 0; i < lu_.rows(); ++i) {
    if (lu_(i, i) == 0.0) return true;
  }
  return false;
}

std::vector<double> LuDecomposition::solve(std::span<const double> rhs) const {
  const std::size_t n = lu_.rows();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  if (is_singular()) throw NumericsError("cannot solve with a singular matrix");

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[pivots_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

Matrix LuDecomposition::inverse() const {
  const std::size_t n = lu_.rows();
  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(e.begin(), e.end(), 0.0);
    e[c] = 1.0;
    const auto col = solve(e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

double trace(const Matrix& m) {
  if (!m.is_square()) throw NonSquareError(m.rows(), m.cols());
  double t = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double determinant(const Matrix& m) {
  if (!m.is_square()) throw NonSquareError(m.rows(), m.cols());
  const std::size_t n = m.rows();
  bool upper = true;
  bool lower = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == 0.0) continue;
      if (i > j) upper = false;
      if (i < j) lower = false;
    }
  }
  if (upper || lower) {
    double det = 1.0;
    for (std::size_t i = 0; i < n; ++i) det *= m(i, i);
    return det;
  }
  return LuDecomposition(m).determinant();
}

Matrix inverse(const Matrix& m) { return LuDecomposition(m).inverse(); }

}  // namespace boatune::numerics
