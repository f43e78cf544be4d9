#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "polyscheme/angle.hpp"
#include "polyscheme/linalg.hpp"

namespace polyscheme {

/// Cumulative outward normal directions of a polygon with the given exterior
/// angles: phi[k] = phi[k-1] + a[k] starting from phi[-1] = 0, so the k-th
/// unit normal is (cos phi[k], sin phi[k]) and the last direction closes the
/// full turn.
struct NormalFan {
  std::vector<double> phi;                  // size m, phi[m-1] = 2*pi
  std::vector<std::complex<double>> unit;   // unit normals u_k
};

NormalFan normal_fan(const AngleList& a);

/// Support numbers h_k: signed distances of the edge lines from the origin.
/// Arbitrary vectors are allowed; convexity (all edge lengths positive) is a
/// derived predicate.
using SupportVector = std::vector<double>;

/// Edge lengths of the polygon with support numbers h. Linear in h; negative
/// entries mean the support vector does not describe a convex polygon.
std::vector<double> edge_lengths(const AngleList& a, const SupportVector& h);

/// Dense symmetric matrix of the mixed-area form on the basis of unit-normal
/// support vectors. Entries at cyclic index distance in [2, n+1] are
/// structural zeros.
struct GramMatrix {
  int dim = 0;
  std::vector<double> a;  // row-major dim*dim
  std::optional<AngleList> source;

  double at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
  double& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
};

GramMatrix gram_matrix(const AngleList& a);

/// Mixed area form m(P, Q) = h(P)^T G h(Q); m(P, P) is minus the area of the
/// polygon with support numbers h(P).
double mixed_area(const AngleList& a, const SupportVector& p, const SupportVector& q);

/// Same form evaluated through -(1/2) sum h_k(P) l_k(Q); kept as a second
/// algebraic route for cross-checks.
double mixed_area_by_lengths(const AngleList& a, const SupportVector& p, const SupportVector& q);

/// The kernel of the mixed-area form: support numbers of the two unit
/// translations, (cos phi_k) and (sin phi_k).
std::pair<SupportVector, SupportVector> kernel_basis(const AngleList& a);

/// Signature of the Gram matrix by Jacobi eigendecomposition. Throws
/// NotSymmetric if the asymmetry exceeds tol relative to the largest entry.
Signature signature(const GramMatrix& g, double tol = tol::kSignatureZero);

/// m(P,Q)^2 - m(P,P) m(Q,Q); non-negative for convex P, Q with equality iff
/// they differ by homothety and translation. Throws NotConvex when some edge
/// length is non-positive.
double minkowski_defect(const AngleList& a, const SupportVector& p, const SupportVector& q);

/// Residual of the closed-form negative eigenvector of the 3x3 case (n = 0):
/// (1, sin a1/sin a3, sin a2/sin a3) with eigenvalue
/// -(sin^2 a1 + sin^2 a2 + sin^2 a3) / (2 sin a1 sin a2 sin a3).
double negative_eigenvector_check(const AngleList& a);

/// Vertices of the polygon with support numbers h: vertex k is the
/// intersection of the support lines of edges k-1 and k, as a complex number.
std::vector<std::complex<double>> polygon_vertices(const AngleList& a, const SupportVector& h);

/// Signed area of a closed polygon (shoelace), positive when counterclockwise.
double polygon_area(const std::vector<std::complex<double>>& vertices);

}  // namespace polyscheme
