#include "polyscheme/mixed_area.hpp"

#include <cmath>

#include "polyscheme/errors.hpp"

namespace polyscheme {

NormalFan normal_fan(const AngleList& a) {
  const int m = a.size();
  NormalFan fan;
  fan.phi.resize(m);
  fan.unit.resize(m);
  // Accumulate exactly while the prefix stays rational; the closing direction
  // then lands on 2*pi up to one rounding.
  AngleSum acc;
  for (int i = 0; i < m; ++i) {
    acc.add(a[i]);
    fan.phi[i] = acc.radians();
    fan.unit[i] = {std::cos(fan.phi[i]), std::sin(fan.phi[i])};
  }
  return fan;
}

std::vector<double> edge_lengths(const AngleList& a, const SupportVector& h) {
  const int m = a.size();
  if (static_cast<int>(h.size()) != m)
    throw WrongDimension("support vector length does not match the angle list");
  std::vector<double> len(m);
  for (int i = 0; i < m; ++i) {
    const Angle& left = a[i];                 // angle between edges i-1 and i
    const Angle& right = a.cyclic(i + 1);     // angle between edges i and i+1
    const double h_prev = h[(i + m - 1) % m];
    const double h_next = h[(i + 1) % m];
    len[i] = (h_prev - h[i] * left.cos()) / left.sin() +
             (h_next - h[i] * right.cos()) / right.sin();
  }
  return len;
}

GramMatrix gram_matrix(const AngleList& a) {
  const int m = a.size();
  GramMatrix g;
  g.dim = m;
  g.a.assign(static_cast<size_t>(m) * m, 0.0);  // off-chain entries stay exactly 0
  g.source = a;
  for (int i = 0; i < m; ++i) {
    const Angle& left = a[i];
    const Angle& right = a.cyclic(i + 1);
    g.at(i, i) = 0.5 * sum_of(left, right).sin() / (left.sin() * right.sin());
    g.at(i, (i + m - 1) % m) = -0.5 / left.sin();
    g.at(i, (i + 1) % m) = -0.5 / right.sin();
  }
  return g;
}

double mixed_area(const AngleList& a, const SupportVector& p, const SupportVector& q) {
  const GramMatrix g = gram_matrix(a);
  const int m = g.dim;
  if (static_cast<int>(p.size()) != m || static_cast<int>(q.size()) != m)
    throw WrongDimension("support vector length does not match the angle list");
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s += p[i] * g.at(i, j) * q[j];
  return s;
}

double mixed_area_by_lengths(const AngleList& a, const SupportVector& p, const SupportVector& q) {
  const std::vector<double> len = edge_lengths(a, q);
  double s = 0.0;
  for (size_t i = 0; i < len.size(); ++i) s += p[i] * len[i];
  return -0.5 * s;
}

std::pair<SupportVector, SupportVector> kernel_basis(const AngleList& a) {
  const NormalFan fan = normal_fan(a);
  const int m = a.size();
  SupportVector vx(m), vy(m);
  for (int i = 0; i < m; ++i) {
    vx[i] = fan.unit[i].real();  // heights of the unit x-translation
    vy[i] = fan.unit[i].imag();
  }
  return {vx, vy};
}

Signature signature(const GramMatrix& g, double tol) {
  const int m = g.dim;
  double max_abs = 0.0, asym = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      max_abs = std::max(max_abs, std::abs(g.at(i, j)));
      asym = std::max(asym, std::abs(g.at(i, j) - g.at(j, i)));
    }
  if (asym > tol * std::max(1.0, max_abs)) throw NotSymmetric();
  return classify_eigenvalues(jacobi_eigenvalues(g.a, m), tol);
}

namespace {

void require_convex(const AngleList& a, const SupportVector& h) {
  const std::vector<double> len = edge_lengths(a, h);
  for (size_t i = 0; i < len.size(); ++i)
    if (!(len[i] > 0.0)) throw NotConvex(static_cast<int>(i));
}

}  // namespace

double minkowski_defect(const AngleList& a, const SupportVector& p, const SupportVector& q) {
  require_convex(a, p);
  require_convex(a, q);
  const GramMatrix g = gram_matrix(a);
  const int m = g.dim;
  auto form = [&](const SupportVector& u, const SupportVector& v) {
    double s = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s += u[i] * g.at(i, j) * v[j];
    return s;
  };
  const double mixed = form(p, q);
  return mixed * mixed - form(p, p) * form(q, q);
}

double negative_eigenvector_check(const AngleList& a) {
  if (a.dimension() != 0)
    throw WrongDimension("closed-form eigenvector check needs n = 0 (three angles)");
  const double s1 = a[0].sin(), s2 = a[1].sin(), s3 = a[2].sin();
  const double v[3] = {1.0, s1 / s3, s2 / s3};
  const double lambda = -0.5 * (s1 * s1 + s2 * s2 + s3 * s3) / (s1 * s2 * s3);
  const GramMatrix g = gram_matrix(a);
  double residual = 0.0;
  for (int i = 0; i < 3; ++i) {
    double row = 0.0;
    for (int j = 0; j < 3; ++j) row += g.at(i, j) * v[j];
    residual = std::max(residual, std::abs(row - lambda * v[i]));
  }
  return residual;
}

std::vector<std::complex<double>> polygon_vertices(const AngleList& a, const SupportVector& h) {
  const int m = a.size();
  if (static_cast<int>(h.size()) != m)
    throw WrongDimension("support vector length does not match the angle list");
  const NormalFan fan = normal_fan(a);
  std::vector<std::complex<double>> x(m);
  for (int i = 0; i < m; ++i) {
    // Vertex between edges i-1 and i: solve <v, u_{i-1}> = h_{i-1},
    // <v, u_i> = h_i. The determinant is sin of the angle between the
    // normals, nonzero by the angle-range condition.
    const int prev = (i + m - 1) % m;
    const std::complex<double> up = fan.unit[prev];
    const std::complex<double> uc = fan.unit[i];
    const double det = up.real() * uc.imag() - uc.real() * up.imag();
    x[i] = {(h[prev] * uc.imag() - h[i] * up.imag()) / det,
            (h[i] * up.real() - h[prev] * uc.real()) / det};
  }
  return x;
}

double polygon_area(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i) {
    const std::complex<double>& p = v[i];
    const std::complex<double>& q = v[(i + 1) % m];
    s += p.real() * q.imag() - q.real() * p.imag();
  }
  return 0.5 * s;
}

}  // namespace polyscheme
