#include <algorithm>
#include <cmath>
#include <limits>

#include "boatune/numerics.hpp"

namespace boatune::numerics {
namespace {

constexpr double kDeflationTolerance = 1e-12;
constexpr std::size_t kSweepsPerDimension = 40;

double copy_sign(double magnitude, double sign) {
  return sign >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Parlett-Reinsch balancing with radix-2 scale factors, so the similarity
// transform introduces no rounding error.
void balance(Matrix& a) {
  constexpr double radix = 2.0;
  constexpr double radix_sq = radix * radix;
  const std::size_t n = a.rows();

  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;

      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix_sq;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix_sq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form.
void reduce_to_hessenberg(Matrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<double> v(n, 0.0);
  const std::size_t high = n - 1;

  for (std::size_t m = 1; m < high; ++m) {
    double scale = 0.0;
    for (std::size_t i = m; i <= high; ++i) scale += std::abs(h(i, m - 1));
    if (scale == 0.0) continue;

    double norm_sq = 0.0;
    for (std::size_t i = high + 1; i-- > m;) {
      v[i] = h(i, m - 1) / scale;
      norm_sq += v[i] * v[i];
    }
    double g = std::sqrt(norm_sq);
    if (v[m] > 0.0) g = -g;
    norm_sq -= v[m] * g;
    v[m] -= g;

    // H <- (I - v v' / norm_sq) H (I - v v' / norm_sq)
    for (std::size_t j = m; j < n; ++j) {
      double f = 0.0;
      for (std::size_t i = high + 1; i-- > m;) f += v[i] * h(i, j);
      f /= norm_sq;
      for (std::size_t i = m; i <= high; ++i) h(i, j) -= f * v[i];
    }
    for (std::size_t i = 0; i <= high; ++i) {
      double f = 0.0;
      for (std::size_t j = high + 1; j-- > m;) f += v[j] * h(i, j);
      f /= norm_sq;
      for (std::size_t j = m; j <= high; ++j) h(i, j) -= f * v[j];
    }
    h(m, m - 1) = scale * g;
    for (std::size_t i = m + 1; i <= high; ++i) h(i, m - 1) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<Complex> hessenberg_qr(Matrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> wr(n, 0.0);
  std::vector<double> wi(n, 0.0);
  const std::size_t budget = kSweepsPerDimension * a.rows();
  std::size_t sweeps = 0;

  double anorm = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
  }

  int nn = n - 1;
  double shift_total = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= kDeflationTolerance * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }

      double x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + shift_total;
        wi[nn] = 0.0;
        --nn;
        continue;
      }

      double y = a(nn - 1, nn - 1);
      double w = a(nn, nn - 1) * a(nn - 1, nn);
      if (l == nn - 1) {
        const double p = 0.5 * (y - x);
        const double q = p * p + w;
        double z = std::sqrt(std::abs(q));
        x += shift_total;
        if (q >= 0.0) {
          z = p + copy_sign(z, p);
          wr[nn - 1] = wr[nn] = x + z;
          if (z != 0.0) wr[nn] = x - w / z;
          wi[nn - 1] = wi[nn] = 0.0;
        } else {
          wr[nn - 1] = wr[nn] = x + p;
          wi[nn - 1] = -z;
          wi[nn] = z;
        }
        nn -= 2;
        continue;
      }

      if (++sweeps > budget) {
        throw ConvergenceFailure("QR iteration did not converge within " +
                                 std::to_string(budget) + " sweeps");
      }
      if (its == 10 || its == 20) {
        // Exceptional shift to break cycles.
        shift_total += x;
        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
        y = x = 0.75 * s;
        w = -0.4375 * s * s;
      }
      ++its;

      // Look for two consecutive small subdiagonal elements.
      int m = nn - 2;
      double p = 0.0;
      double q = 0.0;
      double r = 0.0;
      for (; m >= l; --m) {
        const double z = a(m, m);
        r = x - z;
        const double s0 = y - z;
        p = (r * s0 - w) / a(m + 1, m) + a(m, m + 1);
        q = a(m + 1, m + 1) - z - r - s0;
        r = a(m + 2, m + 1);
        const double s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
        const double v =
            std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
        if (u <= std::numeric_limits<double>::epsilon() * v) break;
      }
      for (int i = m + 2; i <= nn; ++i) {
        a(i, i - 2) = 0.0;
        if (i != m + 2) a(i, i - 3) = 0.0;
      }

      // Double QR step on rows l..nn and columns m..nn.
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = a(k, k - 1);
          q = a(k + 1, k - 1);
          r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const double s = copy_sign(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) a(k, k - 1) = -a(k, k - 1);
        } else {
          a(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        const double z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          double t = a(k, j) + q * a(k + 1, j);
          if (k != nn - 1) {
            t += r * a(k + 2, j);
            a(k + 2, j) -= t * z;
          }
          a(k + 1, j) -= t * y;
          a(k, j) -= t * x;
        }
        const int last = std::min(nn, k + 3);
        for (int i = l; i <= last; ++i) {
          double t = x * a(i, k) + y * a(i, k + 1);
          if (k != nn - 1) {
            t += z * a(i, k + 2);
            a(i, k + 2) -= t * r;
          }
          a(i, k + 1) -= t * q;
          a(i, k) -= t;
        }
      }
    } while (l < nn - 1);
  }

  std::vector<Complex> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(wr[i], wi[i]);
  return out;
}

}  // namespace

Spectrum eigenvalues(const Matrix& m) {
  if (!m.is_square()) throw NonSquareError(m.rows(), m.cols());
  if (!m.all_finite()) throw NonFiniteError("eigenvalues: matrix has non-finite entries");
  if (m.rows() == 0) return Spectrum{};

  Matrix h = m;
  balance(h);
  reduce_to_hessenberg(h);
  auto values = hessenberg_qr(h);

  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ConvergenceFailure("eigenvalues: iteration produced non-finite values");
    }
  }
  return Spectrum(std::move(values));
}

}  // namespace boatune::numerics
