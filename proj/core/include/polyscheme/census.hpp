#pragma once

#include <array>
#include <vector>

#include "polyscheme/angle.hpp"
#include "polyscheme/cone_manifold.hpp"

namespace polyscheme {

/// One row of the Deligne--Mostow table: the angle lists whose completed
/// moduli space of cone metrics on the sphere is a complex hyperbolic
/// orbifold, with the known structure of the polygonal locus.
struct TableRow {
  int thurston_id = 0;         // numbering of the orbifold list
  AngleList angles;            // exact rational multiples of pi
  Verdict expected = Verdict::Manifold;
  int dimension = 0;           // n
};

/// The 36 rows, in table order.
const std::vector<TableRow>& dm_table();

struct RowResult {
  int thurston_id = 0;
  Verdict computed = Verdict::Manifold;
  Verdict expected = Verdict::Manifold;
  bool match = false;
};

struct TableReport {
  std::vector<RowResult> rows;
  bool all_match = false;
};

/// Classifies every table row and compares with the expected column.
TableReport reproduce_table(double theta_tol = tol::kThetaMatch);

/// A rational angle triple whose total cone angle is an orbifold angle 2*pi/k.
struct SearchHit {
  std::array<Rational, 3> triple;  // ascending, units of pi
  int k = 0;
  double cos_half_theta = 0.0;
};

/// Scans unordered triples of rationals p/q in lowest terms with q <= max_den
/// and exact sum below 1 (units of pi), flagging triples whose cos(theta/2)
/// equals cos(pi/k) for some 2 <= k <= kmax within tol. Output is sorted
/// lexicographically and independent of the parallel execution order.
std::vector<SearchHit> rational_search(int max_den, int kmax = 100, double tolerance = tol::kThetaMatch);

}  // namespace polyscheme
