#include "polyscheme/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "polyscheme/errors.hpp"

namespace polyscheme {

namespace {
using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
}  // namespace

std::vector<cd> Unfolding::cycle() const {
  std::vector<cd> v;
  v.reserve(2 * s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    v.push_back(x[i]);
    v.push_back(s[i]);
  }
  return v;
}

Unfolding unfold_double(const AngleList& a, const SupportVector& h) {
  const int m = a.size();
  if (static_cast<int>(h.size()) != m)
    throw WrongDimension("support vector length does not match the angle list");
  const std::vector<double> len = edge_lengths(a, h);
  for (int i = 0; i < m; ++i)
    if (!(len[i] > 0.0)) throw NotConvex(i);
  for (int i = 0; i < m; ++i)
    if (!(h[i] > 0.0)) throw OriginNotInterior(i);
  Unfolding u;
  u.source = a;
  u.x = polygon_vertices(a, h);
  const NormalFan fan = normal_fan(a);
  u.s.resize(m);
  for (int i = 0; i < m; ++i) u.s[i] = 2.0 * h[i] * fan.unit[i];
  return u;
}

double rotation_residual(const Unfolding& u) {
  const int m = static_cast<int>(u.s.size());
  double res = 0.0;
  for (int i = 0; i < m; ++i) {
    const cd rot = std::exp(2.0 * kI * u.source[i].value());
    const cd lhs = u.s[i] - u.x[i];
    const cd rhs = rot * (u.s[(i + m - 1) % m] - u.x[i]);
    res = std::max(res, std::abs(lhs - rhs));
  }
  return res;
}

HermitianMatrix hermitian_matrix(const AngleList& a) {
  const int m = a.size();
  const int nv = 2 * m;  // vertices of the doubled unfolding
  // Vertex images are linear in the source images:
  //   x_k = (e^{i a_k} s_{k-1} - e^{-i a_k} s_k) / (2 i sin a_k),
  // so the interleaved vertex cycle is L s with L of size 2m x m.
  std::vector<cd> L(static_cast<size_t>(nv) * m, cd{0.0, 0.0});
  for (int k = 0; k < m; ++k) {
    const double ang = a[k].value();
    const cd coef = 1.0 / (2.0 * kI * a[k].sin());
    const int row_x = 2 * k;
    const int row_s = 2 * k + 1;
    L[static_cast<size_t>(row_x) * m + (k + m - 1) % m] = coef * std::exp(kI * ang);
    L[static_cast<size_t>(row_x) * m + k] = -coef * std::exp(-kI * ang);
    L[static_cast<size_t>(row_s) * m + k] = 1.0;
  }
  // Signed-area form of an nv-gon: S(v, w) = (1/4i) sum conj(v_i) w_{i+1}
  //                                                 - conj(v_{i+1}) w_i.
  // Pull back through L and flip the sign so that s^H M s = -(face area).
  std::vector<cd> SL(static_cast<size_t>(nv) * m, cd{0.0, 0.0});
  const cd quarter = 1.0 / (4.0 * kI);
  for (int i = 0; i < nv; ++i) {
    const int up = (i + 1) % nv;
    const int dn = (i + nv - 1) % nv;
    for (int j = 0; j < m; ++j)
      SL[static_cast<size_t>(i) * m + j] =
          quarter * (L[static_cast<size_t>(up) * m + j] - L[static_cast<size_t>(dn) * m + j]);
  }
  HermitianMatrix M;
  M.dim = m;
  M.source = a;
  M.a.assign(static_cast<size_t>(m) * m, cd{0.0, 0.0});
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      cd sum{0.0, 0.0};
      for (int r = 0; r < nv; ++r)
        sum += std::conj(L[static_cast<size_t>(r) * m + i]) * SL[static_cast<size_t>(r) * m + j];
      M.at(i, j) = -sum;
    }
  }
  // Symmetrize away the last rounding so the stored matrix is Hermitian to
  // machine precision.
  for (int i = 0; i < m; ++i) {
    M.at(i, i) = cd(M.at(i, i).real(), 0.0);
    for (int j = i + 1; j < m; ++j) {
      const cd avg = 0.5 * (M.at(i, j) + std::conj(M.at(j, i)));
      M.at(i, j) = avg;
      M.at(j, i) = std::conj(avg);
    }
  }
  return M;
}

std::complex<double> evaluate(const HermitianMatrix& m, std::span<const cd> p,
                              std::span<const cd> q) {
  if (static_cast<int>(p.size()) != m.dim || static_cast<int>(q.size()) != m.dim)
    throw WrongDimension("vector length does not match the form");
  cd sum{0.0, 0.0};
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) sum += std::conj(p[i]) * m.at(i, j) * q[j];
  return sum;
}

Signature signature(const HermitianMatrix& m, double tol) {
  double max_abs = 0.0, asym = 0.0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) {
      max_abs = std::max(max_abs, std::abs(m.at(i, j)));
      asym = std::max(asym, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    }
  if (asym > tol * std::max(1.0, max_abs)) throw NotSymmetric();
  return classify_eigenvalues(jacobi_eigenvalues(m.a, m.dim), tol);
}

std::vector<cd> embed(const AngleList& a, const SupportVector& h) {
  const int m = a.size();
  if (static_cast<int>(h.size()) != m)
    throw WrongDimension("support vector length does not match the angle list");
  const NormalFan fan = normal_fan(a);
  std::vector<cd> f(m);
  for (int i = 0; i < m; ++i) f[i] = 2.0 * h[i] * fan.unit[i];
  return f;
}

double embedding_residual(const AngleList& a) {
  const int m = a.size();
  const HermitianMatrix M = hermitian_matrix(a);
  const GramMatrix G = gram_matrix(a);
  const NormalFan fan = normal_fan(a);
  // f(u_i) has the single entry 2 u_i, so M(f(u_i), f(u_j)) collapses to
  // 4 conj(u_i) u_j M_ij.
  double res = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const cd value = 4.0 * std::conj(fan.unit[i]) * fan.unit[j] * M.at(i, j);
      res = std::max(res, std::abs(value - 2.0 * G.at(i, j)));
    }
  }
  return res;
}

std::string to_svg(const Unfolding& u) {
  const std::vector<cd> cycle = u.cycle();
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const cd& v : cycle) {
    min_x = std::min(min_x, v.real());
    max_x = std::max(max_x, v.real());
    min_y = std::min(min_y, v.imag());
    max_y = std::max(max_y, v.imag());
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double pad = 0.05 * span;
  const double r = 0.012 * span;
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%g %g %g %g\">\n",
                min_x - pad, -max_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad);
  out += buf;
  out += "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"";
  std::snprintf(buf, sizeof buf, "%g\" points=\"", 0.004 * span);
  out += buf;
  for (const cd& v : cycle) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g ", v.real(), -v.imag());
    out += buf;
  }
  out += "\"/>\n";
  for (const cd& v : u.x) {
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.12g\" cy=\"%.12g\" r=\"%g\" fill=\"#d62728\"/>\n", v.real(),
                  -v.imag(), r);
    out += buf;
  }
  for (const cd& v : u.s) {
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.12g\" cy=\"%.12g\" r=\"%g\" fill=\"none\" stroke=\"#1f77b4\" "
                  "stroke-width=\"%g\"/>\n",
                  v.real(), -v.imag(), r, 0.004 * span);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polyscheme
