#include "polyscheme/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace polyscheme {

namespace {

// One cyclic sweep zeroes every off-diagonal pivot once; repeat until the
// off-diagonal mass is negligible against the Frobenius norm.
template <typename Scalar>
double offdiag_norm(const std::vector<Scalar>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += std::norm(std::complex<double>(a[p * n + q]));
  return std::sqrt(s);
}

double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

double frobenius(const std::vector<std::complex<double>>& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

// tan of the rotation angle zeroing a real 2x2 pivot with off-diagonal `apq`.
double rotation_tangent(double app, double aqq, double apq) {
  const double tau = (aqq - app) / (2.0 * apq);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  return t;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  if (n == 0) return {};
  const double scale = frobenius(a);
  const double stop = scale * 1e-15 + 1e-300;
  for (int sweep = 0; sweep < 64 && offdiag_norm(a, n) > stop; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= stop / (n * n)) continue;
        const double t = rotation_tangent(a[p * n + p], a[q * n + q], apq);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a[p * n + i];
          const double aqi = a[q * n + i];
          a[p * n + i] = c * api - s * aqi;
          a[q * n + i] = s * api + c * aqi;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::complex<double>> a, int n) {
  using cd = std::complex<double>;
  if (n == 0) return {};
  const double scale = frobenius(a);
  const double stop = scale * 1e-15 + 1e-300;
  for (int sweep = 0; sweep < 64 && offdiag_norm(a, n) > stop; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cd apq = a[p * n + q];
        const double mag = std::abs(apq);
        if (mag <= stop / (n * n)) continue;
        // Unitary U = D R with D = diag(1, conj(phase)) making the pivot
        // real, then the usual real rotation.
        const cd w = apq / mag;  // phase
        const double t = rotation_tangent(a[p * n + p].real(), a[q * n + q].real(), mag);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cd uqp = -s * std::conj(w);
        const cd uqq = c * std::conj(w);
        // columns: A <- A U
        for (int i = 0; i < n; ++i) {
          const cd aip = a[i * n + p];
          const cd aiq = a[i * n + q];
          a[i * n + p] = c * aip + uqp * aiq;
          a[i * n + q] = s * aip + uqq * aiq;
        }
        // rows: A <- U^H A
        for (int i = 0; i < n; ++i) {
          const cd api = a[p * n + i];
          const cd aqi = a[q * n + i];
          a[p * n + i] = c * api + std::conj(uqp) * aqi;
          a[q * n + i] = s * api + std::conj(uqq) * aqi;
        }
        // keep the diagonal exactly real against rounding drift
        a[p * n + p] = cd(a[p * n + p].real(), 0.0);
        a[q * n + q] = cd(a[q * n + q].real(), 0.0);
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i].real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

Signature classify_eigenvalues(const std::vector<double>& eig, double tol) {
  double max_abs = 0.0;
  for (double v : eig) max_abs = std::max(max_abs, std::abs(v));
  const double cut = tol * max_abs;
  Signature sig;
  for (double v : eig) {
    if (std::abs(v) <= cut)
      ++sig.zero;
    else if (v < 0)
      ++sig.negative;
    else
      ++sig.positive;
  }
  return sig;
}

}  // namespace polyscheme
