#pragma once

#include <complex>
#include <vector>

namespace polyscheme {

/// Eigenvalue signature of a symmetric or Hermitian form: counts of negative,
/// zero and positive eigenvalues (with multiplicity).
struct Signature {
  int negative = 0;
  int zero = 0;
  int positive = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigenvalues of a dense real symmetric matrix (row-major, n*n) by cyclic
/// Jacobi sweeps, ascending order. Intended for the small matrices that occur
/// here (n <= 24); converges to machine precision.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

/// Eigenvalues of a dense complex Hermitian matrix, ascending order. Each
/// rotation first makes the pivot real by a unitary phase, then applies the
/// real Jacobi rotation.
std::vector<double> jacobi_eigenvalues(std::vector<std::complex<double>> a, int n);

/// Splits eigenvalues into (negative, zero, positive) counts; an eigenvalue is
/// zero iff |lambda| <= tol * max|lambda|.
Signature classify_eigenvalues(const std::vector<double>& eig, double tol);

}  // namespace polyscheme
