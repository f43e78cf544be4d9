#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "polyscheme/rational.hpp"

namespace polyscheme {

/// Exterior angle of a convex polygon, strictly inside (0, pi). Angles given
/// as rational multiples of pi keep the exact fraction so that sums can be
/// compared against pi and 2*pi without tolerances.
class Angle {
 public:
  static Angle rational(long long p, long long q);  // p*pi/q
  static Angle radians(double r);

  bool is_rational() const { return rational_; }
  /// The fraction value/pi; only meaningful for rational angles.
  const Rational& fraction() const { return frac_; }
  double value() const { return rad_; }  // radians

  double sin() const;
  double cos() const;

  /// Exact-first three-way comparison (used for canonical forms).
  friend int compare(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b) { return compare(a, b) == 0; }
  friend bool operator<(const Angle& a, const Angle& b) { return compare(a, b) < 0; }

  std::string str() const;  // "p/q" for rational (units of pi), decimal radians otherwise

 private:
  bool rational_ = false;
  Rational frac_{};
  double rad_ = 0.0;
};

/// Accumulates a sum of angles, staying exact while every summand is rational.
class AngleSum {
 public:
  void add(const Angle& a);
  /// Three-way comparison of the sum against t*pi (t rational). Exact when the
  /// sum is exact, otherwise within `tol` radians.
  int compare_pi_multiple(const Rational& t, double tol) const;
  bool is_exact() const { return exact_; }
  double radians() const { return rad_; }
  double sin() const { return exact_ ? sin_pi(frac_) : std::sin(rad_); }

 private:
  bool exact_ = true;
  Rational frac_{};
  double rad_ = 0.0;
};

inline AngleSum sum_of(const Angle& a, const Angle& b) {
  AngleSum s;
  s.add(a);
  s.add(b);
  return s;
}
inline AngleSum sum_of(const Angle& a, const Angle& b, const Angle& c) {
  AngleSum s;
  s.add(a);
  s.add(b);
  s.add(c);
  return s;
}

/// Validated list of n+3 exterior angles satisfying 0 < a_k < pi and
/// sum a_k = 2*pi. Immutable after construction; indexing is 0-based and
/// cyclic helpers wrap modulo the length.
class AngleList {
 public:
  int size() const { return static_cast<int>(angles_.size()); }
  int dimension() const { return size() - 3; }  // n
  const Angle& operator[](int i) const { return angles_[i]; }
  const Angle& cyclic(int i) const {
    const int m = size();
    return angles_[((i % m) + m) % m];
  }
  const std::vector<Angle>& angles() const { return angles_; }
  bool all_rational() const;
  std::string str() const;

 private:
  friend AngleList validate(const std::vector<Angle>& raw);
  std::vector<Angle> angles_;
};

/// Checks condition 0 < a_k < pi, length >= 3 and sum = 2*pi (exact for
/// all-rational input, within 1e-10 otherwise).
AngleList validate(const std::vector<Angle>& raw);

/// Representative of the dihedral-group orbit: the lexicographically least
/// sequence among all rotations and reflections. Idempotent.
AngleList canonicalize(const AngleList& a);

/// Unoriented line direction given by a slope, with a distinct token for the
/// vertical line.
struct Slope {
  bool at_infinity = false;
  double value = 0.0;

  static Slope finite(double v) { return Slope{false, v}; }
  static Slope infinite() { return Slope{true, 0.0}; }
  /// Direction angle of the line, normalized into [0, pi).
  double line_angle() const;
};

using SlopeList = std::vector<Slope>;

/// Reconstructs exterior angles from the slopes of the lines carrying the
/// outward normals, by unwrapping consecutive direction gaps into (0, pi).
/// The gaps must close up to a full turn.
AngleList angles_from_slopes(const SlopeList& slopes);

/// Searches subsets of size 2..n+1 whose angles sum to pi; exact for
/// all-rational lists, within 1e-9 otherwise. Returns 0-based indices of the
/// first witness in (size, lexicographic) order, or nullopt.
std::optional<std::vector<int>> subset_sum_pi(const AngleList& a);

namespace tol {
inline constexpr double kSumTwoPi = 1e-10;     // float angle-list sum check
inline constexpr double kUnwrap = 1e-9;        // slope unwrap closure
inline constexpr double kSubsetPi = 1e-9;      // subset / contiguous sums vs pi
inline constexpr double kCharacter = 1e-12;    // vertex character trichotomy
inline constexpr double kParallel = 1e-9;      // |ratio - 1| for parallel facets
inline constexpr double kCoxeter = 1e-9;       // dihedral angle vs pi/k
inline constexpr double kThetaMatch = 1e-9;    // cone angle vs 2*pi/k
inline constexpr double kSignatureZero = 1e-8; // relative eigenvalue cutoff
}  // namespace tol

}  // namespace polyscheme
