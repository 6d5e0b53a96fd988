#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace boatune::numerics {

using Complex = std::complex<double>;

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquareError : public NumericsError {
 public:
  NonSquareError(std::size_t rows, std::size_t cols);
};

class ConvergenceFailure : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class NonFiniteError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

/**
 * Dense real matrix stored row-major.
 *
 * Entries are checked for finiteness on construction from data; element
 * access through operator() is unchecked.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const { return data_; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }

  bool all_finite() const;
  /// Max absolute row sum.
  double norm_inf() const;

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(double s, const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues of a real matrix, ordered by real part then imaginary part.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> eigenvalues);

  const std::vector<Complex>& eigenvalues() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  Complex sum() const;
  Complex product() const;
  double max_abs() const;

 private:
  std::vector<Complex> values_;
};

/// Total order used for spectra: real part, then imaginary part.
bool eigenvalue_less(const Complex& lhs, const Complex& rhs);

/// Partial-pivoting LU factorization PA = LU, packed in one matrix.
class LuDecomposition {
 public:
  explicit LuDecomposition(const Matrix& m);

  double determinant() const;
  bool is_singular() const;
  std::vector<double> solve(std::span<const double> rhs) const;
  Matrix inverse() const;

 private:
  Matrix lu_;
  std::vector<std::size_t> pivots_;
  int pivot_sign_ = 1;
};

double trace(const Matrix& m);
double determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

/**
 * All eigenvalues of a real square matrix, with algebraic multiplicity.
 *
 * The matrix is balanced, reduced to upper Hessenberg form with Householder
 * reflections, and then driven to quasi-triangular form by Francis
 * double-shift QR. A subdiagonal entry is treated as zero once it falls below
 * 1e-12 times the magnitude of its two diagonal neighbours. The whole
 * reduction gets 40*n QR sweeps before ConvergenceFailure is thrown.
 */
Spectrum eigenvalues(const Matrix& m);

}  // namespace boatune::numerics
