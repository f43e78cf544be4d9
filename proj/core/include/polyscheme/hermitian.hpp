#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "polyscheme/angle.hpp"
#include "polyscheme/linalg.hpp"
#include "polyscheme/mixed_area.hpp"

namespace polyscheme {

/// Unfolding of the doubled polygon: cutting the double along the segments
/// from the origin to the vertices and developing it in the plane gives the
/// 2(n+3)-gon x_1 s_1 x_2 s_2 ... where x_k are the polygon vertices and s_k
/// is the reflection of the origin in edge k.
struct Unfolding {
  std::vector<std::complex<double>> s;  // source images, s_k = 2 h_k u_k
  std::vector<std::complex<double>> x;  // vertex images
  AngleList source;

  /// Interleaved vertex cycle x_0, s_0, x_1, s_1, ...
  std::vector<std::complex<double>> cycle() const;
};

/// Requires a convex support vector with every height positive (the origin is
/// the source point and must be interior). Throws NotConvex/OriginNotInterior.
Unfolding unfold_double(const AngleList& a, const SupportVector& h);

/// Max residual of the vertex rotation relation
/// s_k - x_k = e^{2 i a_k} (s_{k-1} - x_k) over all k.
double rotation_residual(const Unfolding& u);

/// Matrix of the complex mixed-area form in source-image coordinates: the
/// vertex images are linear in s, and the signed-area form of the interleaved
/// 2(n+3)-gon is pulled back through that map. With counterclockwise
/// traversal, s^H M s is minus the face area of the doubled polygon.
struct HermitianMatrix {
  int dim = 0;
  std::vector<std::complex<double>> a;  // row-major dim*dim
  std::optional<AngleList> source;

  std::complex<double> at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
  std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
};

HermitianMatrix hermitian_matrix(const AngleList& a);

/// p^H M q (conjugate-linear in the first argument).
std::complex<double> evaluate(const HermitianMatrix& m,
                              std::span<const std::complex<double>> p,
                              std::span<const std::complex<double>> q);

/// Signature by complex Jacobi eigendecomposition; throws NotSymmetric when
/// the matrix is not Hermitian within tol (relative).
Signature signature(const HermitianMatrix& m, double tol = tol::kSignatureZero);

/// The doubling embedding on support numbers: f(h)_k = 2 h_k u_k. Real-linear.
std::vector<std::complex<double>> embed(const AngleList& a, const SupportVector& h);

/// max_{i,j} |M(f(u_i), f(u_j)) - 2 m(u_i, u_j)|: the embedding is an isometry
/// from the doubled mixed-area form onto a real form of the complex one.
double embedding_residual(const AngleList& a);

/// SVG rendering of the unfolding: the interleaved polygon with vertex images
/// and source images distinguished.
std::string to_svg(const Unfolding& u);

}  // namespace polyscheme
