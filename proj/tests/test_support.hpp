#pragma once

// Test-only helpers: random inputs and oracles that do not go through the
// library's eigensolver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "boatune/numerics.hpp"

namespace boatune::testing {

using numerics::Complex;
using numerics::Matrix;

inline Matrix random_matrix(std::size_t n, std::mt19937_64& gen, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(gen);
  }
  return m;
}

/// det(m - lambda I) by complex Gaussian elimination with partial pivoting.
inline Complex shifted_determinant(const Matrix& m, Complex lambda) {
  const std::size_t n = m.rows();
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j) - (i == j ? lambda : Complex{});
  }
  Complex det{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      det = -det;
    }
    const Complex pivot = a[k * n + k];
    det *= pivot;
    if (pivot == Complex{}) return Complex{};
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

/// Largest distance after greedily pairing each value with its nearest unused partner.
inline double matching_distance(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(rhs.size(), false);
  double worst = 0.0;
  for (const auto& z : lhs) {
    std::size_t best = rhs.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - rhs[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

/// True when the non-real values pair up with their conjugates within tol*max(1,|z|).
inline bool conjugate_closed(const std::vector<Complex>& values, double tol) {
  std::vector<Complex> complex_values;
  for (const auto& z : values) {
    if (z.imag() != 0.0) complex_values.push_back(z);
  }
  std::vector<bool> used(complex_values.size(), false);
  for (std::size_t i = 0; i < complex_values.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex target = std::conj(complex_values[i]);
    bool found = false;
    for (std::size_t j = 0; j < complex_values.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(complex_values[j] - target) <= tol * std::max(1.0, std::abs(target))) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace boatune::testing
