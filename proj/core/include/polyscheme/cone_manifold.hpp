#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyscheme/angle.hpp"

namespace polyscheme {

/// Number of orthoschemes glued into the cone-manifold: (n+2)!/2.
long long element_count(int n);

/// Gluing graph over angle orderings. Nodes are permutations of the index set
/// up to the dihedral group (quotient) or up to cyclic rotation only (double
/// cover); an edge joins orderings that differ by an adjacent transposition
/// whose two angles sum strictly below pi.
struct GluingGraph {
  bool double_cover = false;
  std::vector<std::vector<std::uint8_t>> nodes;  // canonical representatives
  std::vector<std::vector<int>> adjacency;
  int component_count() const;
};

GluingGraph gluing_graph(const AngleList& a, bool double_cover = false);

struct ConnectivityResult {
  int components = 1;                           // 1 or 2
  std::optional<std::array<int, 3>> witness;    // indices with pairwise sums >= pi
};

/// Connectivity of the double cover by the pairwise-sum criterion; agrees with
/// breadth-first search on the explicit double-cover gluing graph.
ConnectivityResult double_cover_components(const AngleList& a);

/// Total cone angle around the codimension-2 stratum where the three angles
/// collide: twice the sum of the three distinct dihedral angles, one per
/// choice of middle angle. Cross-checked internally against the closed form
/// for cos(theta/2).
double stratum_angle(const Angle& a, const Angle& b, const Angle& c);

/// Closed form for cos(theta/2) of the triple; also usable on raw rationals
/// (units of pi) by the census search.
double cos_half_stratum_angle(const Angle& a, const Angle& b, const Angle& c);

struct StratumReport {
  std::array<int, 3> triple{};         // 0-based indices, ascending
  std::array<double, 3> values{};      // the three angles, radians
  double theta = 0.0;                  // total cone angle
  std::optional<int> matched_k;        // theta == 2*pi/k within tolerance
};

struct StrataResult {
  std::vector<StratumReport> singular;          // triples summing strictly below pi
  std::vector<std::array<int, 3>> ideal;        // triples summing to exactly pi
};

/// One report per index triple with sum strictly below pi; triples summing to
/// exactly pi are ideal (cusp directions) and excluded from the angle test.
/// Pair strata always close up to total angle 2*pi and are not reported.
StrataResult strata(const AngleList& a, double theta_tol = tol::kThetaMatch);

enum class Verdict { Manifold, Orbifold, ConeManifold };

std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Manifold;
  bool compact = true;
  std::optional<std::vector<int>> noncompact_witness;  // subset summing to pi
  ConnectivityResult connectivity;
  StrataResult strata;
  AngleList angles;
};

/// Manifold iff there is no singular stratum (or every total angle is 2*pi);
/// orbifold iff every total angle is 2*pi/k; cone-manifold otherwise.
/// Compactness is tested over arbitrary subsets: every ordering occurs in the
/// gluing, so any subset appears contiguously somewhere. Requires n >= 2.
Classification classify(const AngleList& a, double theta_tol = tol::kThetaMatch);

}  // namespace polyscheme
