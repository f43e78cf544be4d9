#include "polyscheme/orthoscheme.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyscheme/errors.hpp"

namespace polyscheme {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

OrthoschemeType classify_type(const AngleList& a) {
  const int n = a.dimension();
  if (n < 2) throw DimensionTooSmall(n);
  const int m = a.size();
  OrthoschemeType out;
  out.dimension = n;
  out.characters.resize(m);
  for (int i = 0; i < m; ++i) {
    const int cmp = sum_of(a[i], a.cyclic(i + 1)).compare_pi_multiple(Rational(1, 1), tol::kCharacter);
    out.characters[i] = cmp < 0   ? VertexCharacter::spacelike
                        : cmp > 0 ? VertexCharacter::timelike
                                  : VertexCharacter::lightlike;
    if (out.characters[i] == VertexCharacter::spacelike) out.facets.push_back(i);
  }
  out.type = 3 - (m - static_cast<int>(out.facets.size()));
  return out;
}

FacetRelationMatrix facet_relations(const AngleList& a) {
  const OrthoschemeType type = classify_type(a);
  const int m = a.size();
  FacetRelationMatrix rel;
  rel.facets = type.facets;
  const int f = rel.size();
  rel.rel.assign(static_cast<size_t>(f) * f, FacetRelation{});
  for (int i = 0; i < f; ++i) {
    for (int j = i + 1; j < f; ++j) {
      const int vi = rel.facets[i];
      const int vj = rel.facets[j];
      const int dist = std::min((vj - vi + m) % m, (vi - vj + m) % m);
      FacetRelation r;  // defaults to orthogonal
      if (dist == 1) {
        // Adjacent spacelike pair: the normalized Gram entry decides whether
        // the hyperplanes intersect, are asymptotic, or admit a common
        // perpendicular.
        const int lo = (vj - vi + m) % m == 1 ? vi : vj;  // pair (lo, lo+1)
        const double ratio =
            a.cyclic(lo).sin() * a.cyclic(lo + 2).sin() /
            (sum_of(a.cyclic(lo), a.cyclic(lo + 1)).sin() *
             sum_of(a.cyclic(lo + 1), a.cyclic(lo + 2)).sin());
        if (std::abs(ratio - 1.0) <= tol::kParallel) {
          r.kind = FacetRelation::Kind::parallel;
        } else if (ratio < 1.0) {
          r.kind = FacetRelation::Kind::angle;
          r.theta = std::acos(std::sqrt(ratio));
        } else {
          r.kind = FacetRelation::Kind::ultraparallel;
          r.distance = std::acosh(std::sqrt(ratio));
        }
      }
      rel.at(i, j) = r;
      rel.at(j, i) = r;
    }
  }
  return rel;
}

namespace {

// Projective coordinates of an unoriented line, normalized to unit length.
std::array<double, 2> projective(const Slope& s) {
  if (s.at_infinity) return {1.0, 0.0};
  const double norm = std::hypot(s.value, 1.0);
  return {s.value / norm, 1.0 / norm};
}

double det2(const std::array<double, 2>& p, const std::array<double, 2>& q) {
  return p[0] * q[1] - q[0] * p[1];
}

}  // namespace

double cross_ratio(const std::array<Slope, 4>& lines) {
  std::array<std::array<double, 2>, 4> p;
  for (int i = 0; i < 4; ++i) p[i] = projective(lines[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(det2(p[i], p[j])) <= 1e-12) throw RepeatedDirection();
  // (d-a)/(a-b) * (b-c)/(c-d) in homogeneous form
  return det2(p[3], p[0]) * det2(p[1], p[2]) / (det2(p[0], p[1]) * det2(p[2], p[3]));
}

double cross_ratio_angle(const std::array<Slope, 4>& lines) { return -cross_ratio(lines); }

std::optional<CoxeterDiagram> coxeter_check(const FacetRelationMatrix& rel, double tolerance, int kmax) {
  const int f = rel.size();
  CoxeterDiagram d;
  d.nodes = rel.facets;
  for (int i = 0; i < f; ++i) {
    for (int j = i + 1; j < f; ++j) {
      const FacetRelation& r = rel.at(i, j);
      CoxeterDiagram::Edge e;
      e.i = i;
      e.j = j;
      switch (r.kind) {
        case FacetRelation::Kind::orthogonal:
          continue;  // nodes not joined
        case FacetRelation::Kind::parallel:
          e.kind = CoxeterDiagram::Edge::Kind::infinite;
          break;
        case FacetRelation::Kind::ultraparallel:
          e.kind = CoxeterDiagram::Edge::Kind::dashed;
          break;
        case FacetRelation::Kind::angle: {
          int k = static_cast<int>(std::llround(kPi / r.theta));
          k = std::clamp(k, 2, kmax);
          if (std::abs(r.theta - kPi / k) > tolerance) return std::nullopt;
          e.kind = CoxeterDiagram::Edge::Kind::finite;
          e.label = k;
          break;
        }
      }
      d.edges.push_back(e);
    }
  }
  // Every cyclically adjacent facet pair produced an edge, so the diagram is
  // a cycle exactly when the edge count matches the node count.
  d.shape = static_cast<int>(d.edges.size()) == f ? CoxeterDiagram::Shape::cycle
                                                  : CoxeterDiagram::Shape::chain;
  return d;
}

std::string to_dot(const CoxeterDiagram& d) {
  std::string out = "graph coxeter {\n";
  out += "  layout=circo;\n";
  for (int idx : d.nodes) out += "  F" + std::to_string(idx + 1) + ";\n";
  for (const auto& e : d.edges) {
    out += "  F" + std::to_string(d.nodes[e.i] + 1) + " -- F" + std::to_string(d.nodes[e.j] + 1);
    switch (e.kind) {
      case CoxeterDiagram::Edge::Kind::finite:
        if (e.label != 3) out += " [label=\"" + std::to_string(e.label) + "\"]";
        break;
      case CoxeterDiagram::Edge::Kind::infinite:
        out += " [label=\"inf\"]";
        break;
      case CoxeterDiagram::Edge::Kind::dashed:
        out += " [style=dashed]";
        break;
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

CompactnessReport is_compact(const AngleList& a) {
  const int m = a.size();
  CompactnessReport report;
  for (int len = 1; len <= m - 1; ++len) {
    for (int start = 0; start < m; ++start) {
      AngleSum s;
      for (int i = 0; i < len; ++i) s.add(a.cyclic(start + i));
      if (s.compare_pi_multiple(Rational(1, 1), tol::kSubsetPi) == 0) {
        report.compact = false;
        report.witness = {start, (start + len - 1) % m};
        return report;
      }
    }
  }
  return report;
}

namespace {

// Normalized adjacent Gram entry as a function of three consecutive angles,
// squared: sin(a) sin(c) / (sin(a+b) |sin(b+c)|). Solving for c at fixed a, b
// is a monotone one-dimensional problem on either character branch.
struct AdjacentSolve {
  double b;           // middle angle
  double rhs;         // target value of sin(x)/|sin(b+x)|
  bool timelike_tail; // solve on the branch with sin(b+x) < 0

  double eval(double x) const {
    const double num = std::sin(x);
    const double den = std::sin(b + x);
    return timelike_tail ? num / -den : num / den;
  }
  double derivative(double x) const {
    const double den = std::sin(b + x);
    const double d = std::sin(b) / (den * den);
    return timelike_tail ? -d : d;
  }
};

// Bisection plus Newton polish; the bracket is the open interval where the
// branch is defined and the function is a bijection onto (0, inf).
std::optional<double> solve_adjacent(const AdjacentSolve& f, double lo, double hi) {
  if (!(f.rhs > 0.0) || !(hi > lo)) return std::nullopt;
  double a = lo, b = hi;
  const bool increasing = !f.timelike_tail;
  for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
    const double mid = 0.5 * (a + b);
    const bool below = f.eval(mid) < f.rhs;
    if (below == increasing)
      a = mid;
    else
      b = mid;
  }
  double x = 0.5 * (a + b);
  for (int it = 0; it < 4; ++it) {
    const double step = (f.eval(x) - f.rhs) / f.derivative(x);
    const double next = x - step;
    if (next > lo && next < hi) x = next;
  }
  if (!(x > lo && x < hi)) return std::nullopt;
  return x;
}

struct NapierShape {
  std::vector<int> character;  // +1 spacelike, 0 lightlike, -1 timelike
  int rotation = 0;            // shift applied so non-positives sit at the tail
};

NapierShape napier_shape(const GramMatrix& g) {
  const int m = g.dim;
  if (m < 3) throw NotNapier("matrix is smaller than 3x3");
  double max_diag = 0.0;
  for (int i = 0; i < m; ++i) max_diag = std::max(max_diag, std::abs(g.at(i, i)));
  if (max_diag == 0.0) throw NotNapier("zero diagonal");
  NapierShape shape;
  shape.character.resize(m);
  std::vector<int> nonpositive;
  for (int i = 0; i < m; ++i) {
    const double d = g.at(i, i);
    shape.character[i] = std::abs(d) <= 1e-9 * max_diag ? 0 : (d > 0 ? 1 : -1);
    if (shape.character[i] <= 0) nonpositive.push_back(i);
  }
  if (nonpositive.size() > 2) throw NotNapier("more than two non-positive vectors");
  if (nonpositive.size() == 2) {
    const int d = (nonpositive[1] - nonpositive[0]) % m;
    if (d != 1 && d != m - 1) throw NotNapier("non-positive vectors are not adjacent");
  }
  // Adjacent products must be negative, everything off the cyclic chain zero.
  double max_abs = 0.0;
  for (double v : g.a) max_abs = std::max(max_abs, std::abs(v));
  for (int i = 0; i < m; ++i) {
    if (!(g.at(i, (i + 1) % m) < 0.0)) throw NotNapier("adjacent product is not negative");
    for (int j = 0; j < m; ++j) {
      const int dist = std::min((j - i + m) % m, (i - j + m) % m);
      if (dist >= 2 && std::abs(g.at(i, j)) > 1e-8 * max_abs)
        throw NotNapier("nonzero entry off the cyclic chain");
    }
  }
  // Rotate labels so the non-positive vectors occupy the last positions, the
  // doubly-truncated case keeping their cyclic order.
  if (nonpositive.size() == 1) {
    shape.rotation = (nonpositive[0] - (m - 1) + m) % m;
  } else if (nonpositive.size() == 2) {
    int first = nonpositive[0];
    if ((nonpositive[1] - nonpositive[0]) % m != 1) first = nonpositive[1];  // wrap pair
    shape.rotation = (first - (m - 2) + m) % m;
  }
  return shape;
}

}  // namespace

AngleList angles_from_gram(const GramMatrix& g) {
  const int m = g.dim;
  const NapierShape shape = napier_shape(g);
  // Rotated view: index i reads original slot (i + rotation) mod m.
  auto orig = [&](int i) { return (i + shape.rotation) % m; };
  auto character = [&](int i) { return shape.character[orig(i)]; };
  auto scale = [&](int i) {
    const double d = std::abs(g.at(orig(i), orig(i)));
    return d > 0 ? std::sqrt(d) : 1.0;
  };
  auto normalized = [&](int i, int j) {
    return g.at(orig(i), orig(j)) / (scale(i) * scale(j));
  };

  std::vector<std::pair<double, double>> seeds = {
      {kPi / 3, kPi / 3}, {kPi / 2, kPi / 3}, {kPi / 3, kPi / 2}, {kPi / 2, kPi / 2}};
  std::mt19937 rng(20130211u);
  std::uniform_real_distribution<double> dist(0.15 * kPi, 0.85 * kPi);
  for (int i = 0; i < 16; ++i) seeds.emplace_back(dist(rng), dist(rng));

  for (const auto& [seed1, seed2] : seeds) {
    std::vector<double> ang(m, 0.0);
    ang[0] = seed1;
    ang[1] = seed2;
    if (std::sin(ang[0] + ang[1]) <= 0.0) continue;  // seed would not be spacelike
    bool ok = true;
    // Chain sweep: entry (k, k+1) determines angle k+2 on the spacelike
    // branch, up to the second-to-last vector.
    for (int k = 0; k + 3 < m && ok; ++k) {
      const double gk = normalized(k, k + 1);
      AdjacentSolve f{ang[k + 1], gk * gk * std::sin(ang[k] + ang[k + 1]) / std::sin(ang[k]),
                      false};
      const auto x = solve_adjacent(f, 0.0, kPi - ang[k + 1]);
      if (!x) {
        ok = false;
        break;
      }
      ang[k + 2] = *x;
    }
    if (!ok) continue;
    // Tail: the character of the second-to-last vector picks the branch for
    // the closing angle.
    const int tail = m - 2;
    if (character(tail) == 0) {
      ang[m - 1] = kPi - ang[tail];
    } else {
      const double gk = normalized(tail - 1, tail);
      AdjacentSolve f{ang[tail],
                      gk * gk * std::sin(ang[tail - 1] + ang[tail]) / std::sin(ang[tail - 1]),
                      character(tail) < 0};
      const auto x = character(tail) > 0 ? solve_adjacent(f, 0.0, kPi - ang[tail])
                                         : solve_adjacent(f, kPi - ang[tail], kPi);
      if (!x) continue;
      ang[m - 1] = *x;
    }
    double total = 0.0;
    for (double v : ang) total += v;
    if (std::abs(total - kTwoPi) > 1e-6) continue;
    for (double& v : ang) v *= kTwoPi / total;  // absorb the closing rounding
    // Undo the rotation so indices line up with the input matrix.
    std::vector<Angle> out(m, Angle::radians(kPi / 2));
    bool in_range = true;
    for (int i = 0; i < m && in_range; ++i) {
      if (!(ang[i] > 1e-12 && ang[i] < kPi - 1e-12)) {
        in_range = false;
        break;
      }
      out[orig(i)] = Angle::radians(ang[i]);
    }
    if (!in_range) continue;
    return validate(out);
  }
  throw NoSolutionForSeed();
}

OrthoschemeReport orthoscheme_report(const AngleList& a, double coxeter_tol, int kmax) {
  OrthoschemeReport report{a, classify_type(a), facet_relations(a), std::nullopt, is_compact(a)};
  report.diagram = coxeter_check(report.relations, coxeter_tol, kmax);
  return report;
}

}  // namespace polyscheme
