#pragma once

#include <stdexcept>
#include <string>

namespace polyscheme {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class AngleOutOfRange : public Error {
 public:
  int index;
  explicit AngleOutOfRange(int idx)
      : Error(idx < 0 ? "angle is not strictly inside (0, pi)"
                      : "angle at index " + std::to_string(idx + 1) +
                            " is not strictly inside (0, pi)"),
        index(idx) {}
};

class SumNotTwoPi : public Error {
 public:
  double actual;
  explicit SumNotTwoPi(double sum)
      : Error("angle sum is " + std::to_string(sum) + ", expected 2*pi"),
        actual(sum) {}
};

class TooFewAngles : public Error {
 public:
  explicit TooFewAngles(int count)
      : Error("need at least 3 angles, got " + std::to_string(count)) {}
};

class DegenerateConsecutive : public Error {
 public:
  int index;
  explicit DegenerateConsecutive(int idx)
      : Error("consecutive slopes " + std::to_string(idx + 1) + " and " +
              std::to_string(idx + 2) + " span the same line"),
        index(idx) {}
};

class UnwrapNotTwoPi : public Error {
 public:
  double actual;
  explicit UnwrapNotTwoPi(double total)
      : Error("slope unwrap closes after " + std::to_string(total) +
              " radians, expected 2*pi"),
        actual(total) {}
};

class DimensionTooSmall : public Error {
 public:
  int n;
  explicit DimensionTooSmall(int dim)
      : Error("dimension n = " + std::to_string(dim) +
              " is below 2; the polyhedron is geometrically meaningless"),
        n(dim) {}
};

class NotSymmetric : public Error {
 public:
  NotSymmetric() : Error("matrix is not symmetric/Hermitian within tolerance") {}
};

class NotConvex : public Error {
 public:
  int index;
  explicit NotConvex(int idx)
      : Error("support vector is not convex: edge " + std::to_string(idx + 1) +
              " has non-positive length"),
        index(idx) {}
};

class OriginNotInterior : public Error {
 public:
  int index;
  explicit OriginNotInterior(int idx)
      : Error("origin is not interior: height " + std::to_string(idx + 1) +
              " is non-positive"),
        index(idx) {}
};

class WrongDimension : public Error {
 public:
  explicit WrongDimension(const std::string& what) : Error(what) {}
};

class TripleSumNotBelowPi : public Error {
 public:
  TripleSumNotBelowPi() : Error("angle triple does not sum strictly below pi") {}
};

class RatioOutOfRange : public Error {
 public:
  RatioOutOfRange() : Error("dihedral cosine ratio left [0, 1]; inconsistent input") {}
};

class RepeatedDirection : public Error {
 public:
  RepeatedDirection() : Error("two of the four directions span the same line") {}
};

class NoSolutionForSeed : public Error {
 public:
  NoSolutionForSeed() : Error("angle recovery failed for every seed in the schedule") {}
};

class NotNapier : public Error {
 public:
  explicit NotNapier(const std::string& why) : Error("not a Napier cycle Gram matrix: " + why) {}
};

}  // namespace polyscheme
