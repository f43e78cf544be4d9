#include "polyscheme/cone_manifold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "polyscheme/errors.hpp"

namespace polyscheme {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

long long element_count(int n) {
  if (n < 2) throw DimensionTooSmall(n);
  if (n > 17) throw WrongDimension("ordering count overflows 64 bits");
  long long f = 1;
  for (int i = 2; i <= n + 2; ++i) f *= i;
  return f / 2;
}

namespace {

using Perm = std::vector<std::uint8_t>;

// Lexicographically least representative under rotations, and under
// reflections as well unless the double cover is requested.
Perm canonical(const Perm& p, bool double_cover) {
  const int m = static_cast<int>(p.size());
  Perm best = p;
  Perm cur(m);
  for (int rev = 0; rev < (double_cover ? 1 : 2); ++rev) {
    for (int start = 0; start < m; ++start) {
      for (int i = 0; i < m; ++i) {
        const int idx = rev ? (start - i + 2 * m) % m : (start + i) % m;
        cur[i] = p[idx];
      }
      if (cur < best) best = cur;
    }
  }
  return best;
}

// True when the two angles may be swapped across a gluing facet.
bool glueable(const AngleList& a, int i, int j) {
  return sum_of(a[i], a[j]).compare_pi_multiple(Rational(1, 1), tol::kCharacter) < 0;
}

}  // namespace

int GluingGraph::component_count() const {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> comp(n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    ++count;
    stack.push_back(s);
    comp[s] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency[v]) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

GluingGraph gluing_graph(const AngleList& a, bool double_cover) {
  const int n = a.dimension();
  if (n < 2) throw DimensionTooSmall(n);
  const int m = a.size();
  GluingGraph graph;
  graph.double_cover = double_cover;

  std::map<Perm, int> index;
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    Perm c = canonical(p, double_cover);
    if (index.emplace(c, static_cast<int>(graph.nodes.size())).second)
      graph.nodes.push_back(std::move(c));
  } while (std::next_permutation(p.begin(), p.end()));

  graph.adjacency.resize(graph.nodes.size());
  for (size_t v = 0; v < graph.nodes.size(); ++v) {
    const Perm& node = graph.nodes[v];
    for (int pos = 0; pos < m; ++pos) {
      const int next = (pos + 1) % m;
      if (!glueable(a, node[pos], node[next])) continue;
      Perm swapped = node;
      std::swap(swapped[pos], swapped[next]);
      const int w = index.at(canonical(swapped, double_cover));
      if (w != static_cast<int>(v)) graph.adjacency[v].push_back(w);
    }
    auto& adj = graph.adjacency[v];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return graph;
}

ConnectivityResult double_cover_components(const AngleList& a) {
  const int n = a.dimension();
  if (n < 2) throw DimensionTooSmall(n);
  const int m = a.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (glueable(a, i, j)) continue;
      for (int k = j + 1; k < m; ++k) {
        if (!glueable(a, j, k) && !glueable(a, k, i))
          return {2, std::array<int, 3>{i, j, k}};
      }
    }
  }
  return {1, std::nullopt};
}

namespace {

// Dihedral angle of the orthoscheme pair determined by three consecutive
// angles with `mid` in the middle; always acute for triples summing below pi.
double middle_dihedral(const Angle& left, const Angle& mid, const Angle& right) {
  const double ratio = left.sin() * right.sin() /
                       (sum_of(left, mid).sin() * sum_of(mid, right).sin());
  if (ratio > 1.0 + tol::kThetaMatch || !(ratio > 0.0)) throw RatioOutOfRange();
  return std::acos(std::sqrt(std::min(ratio, 1.0)));
}

}  // namespace

double cos_half_stratum_angle(const Angle& a, const Angle& b, const Angle& c) {
  const double sa = a.sin(), sb = b.sin(), sc = c.sin();
  const double s_abc = sum_of(a, b, c).sin();
  const double num = sa * sb * sc - s_abc * (sa * sb + sb * sc + sc * sa);
  const double den = sum_of(a, b).sin() * sum_of(b, c).sin() * sum_of(c, a).sin();
  return num / den;
}

double stratum_angle(const Angle& a, const Angle& b, const Angle& c) {
  if (sum_of(a, b, c).compare_pi_multiple(Rational(1, 1), tol::kCharacter) >= 0)
    throw TripleSumNotBelowPi();
  const double theta =
      2.0 * (middle_dihedral(b, a, c) + middle_dihedral(a, b, c) + middle_dihedral(a, c, b));
  // Two independent routes to the same angle; they must agree.
  if (std::abs(std::cos(0.5 * theta) - cos_half_stratum_angle(a, b, c)) > 1e-9)
    throw RatioOutOfRange();
  return theta;
}

namespace {

std::optional<int> match_orbifold_angle(double theta, double cos_half, double theta_tol) {
  if (std::abs(cos_half) <= 1e-12) return 2;  // exact right-angle case
  const int k = static_cast<int>(std::llround(kTwoPi / theta));
  if (k >= 1 && k <= 10000 && std::abs(theta - kTwoPi / k) <= theta_tol) return k;
  return std::nullopt;
}

}  // namespace

StrataResult strata(const AngleList& a, double theta_tol) {
  const int n = a.dimension();
  if (n < 2) throw DimensionTooSmall(n);
  const int m = a.size();
  StrataResult out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const int cmp =
            sum_of(a[i], a[j], a[k]).compare_pi_multiple(Rational(1, 1), tol::kCharacter);
        if (cmp > 0) continue;
        if (cmp == 0) {
          out.ideal.push_back({i, j, k});
          continue;
        }
        StratumReport report;
        report.triple = {i, j, k};
        report.values = {a[i].value(), a[j].value(), a[k].value()};
        report.theta = stratum_angle(a[i], a[j], a[k]);
        report.matched_k =
            match_orbifold_angle(report.theta, cos_half_stratum_angle(a[i], a[j], a[k]), theta_tol);
        out.singular.push_back(report);
      }
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Manifold: return "Manifold";
    case Verdict::Orbifold: return "Orbifold";
    case Verdict::ConeManifold: return "ConeManifold";
  }
  return "?";
}

Classification classify(const AngleList& a, double theta_tol) {
  Classification c;
  c.angles = a;
  c.strata = strata(a, theta_tol);
  c.connectivity = double_cover_components(a);
  const auto witness = subset_sum_pi(a);
  c.compact = !witness.has_value();
  c.noncompact_witness = witness;

  bool all_two_pi = true;
  bool all_orbifold = true;
  for (const StratumReport& s : c.strata.singular) {
    if (!(s.matched_k && *s.matched_k == 1)) all_two_pi = false;
    if (!s.matched_k) all_orbifold = false;
  }
  if (c.strata.singular.empty() || all_two_pi)
    c.verdict = Verdict::Manifold;
  else if (all_orbifold)
    c.verdict = Verdict::Orbifold;
  else
    c.verdict = Verdict::ConeManifold;
  return c;
}

}  // namespace polyscheme
