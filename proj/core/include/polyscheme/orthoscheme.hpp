#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyscheme/angle.hpp"
#include "polyscheme/mixed_area.hpp"

namespace polyscheme {

/// Character of the k-th normal vector in Minkowski space, decided by the sign
/// of sin(a_k + a_{k+1}): spacelike vectors carry facets, the others are
/// (ideal or hyperideal) vertices of the polyhedron.
enum class VertexCharacter { spacelike, lightlike, timelike };

struct OrthoschemeType {
  int type = 3;        // 3 minus the number of non-spacelike vectors
  int dimension = 0;   // n
  std::vector<VertexCharacter> characters;  // one per index, cyclic
  std::vector<int> facets;                  // indices of spacelike (positive) vectors
};

/// Requires n >= 2.
OrthoschemeType classify_type(const AngleList& a);

/// Relation between two facet hyperplanes.
struct FacetRelation {
  enum class Kind { orthogonal, angle, parallel, ultraparallel };
  Kind kind = Kind::orthogonal;
  double theta = 0.0;     // dihedral angle, angle kind only; in (0, pi/2]
  double distance = 0.0;  // common perpendicular length, ultraparallel only
};

/// Pairwise relations between the facets (spacelike vectors) of the
/// orthoscheme: cyclically adjacent pairs get the normalized-Gram reading
/// (angle / parallel / ultraparallel), all others are orthogonal.
struct FacetRelationMatrix {
  std::vector<int> facets;            // original 0-based indices, cyclic order
  std::vector<FacetRelation> rel;     // row-major size() x size()
  int size() const { return static_cast<int>(facets.size()); }
  const FacetRelation& at(int i, int j) const { return rel[static_cast<size_t>(i) * facets.size() + j]; }
  FacetRelation& at(int i, int j) { return rel[static_cast<size_t>(i) * facets.size() + j]; }
};

FacetRelationMatrix facet_relations(const AngleList& a);

/// Cross-ratio (d-a)/(a-b) * (b-c)/(c-d) of four lines given by slopes, in
/// projective coordinates so the vertical line needs no special casing.
double cross_ratio(const std::array<Slope, 4>& lines);

/// Returns minus the cross-ratio of the four consecutive normal lines, which
/// equals tan^2 of the dihedral angle between the middle pair of facets
/// whenever that relation is of angle kind. Throws RepeatedDirection.
double cross_ratio_angle(const std::array<Slope, 4>& lines);

struct CoxeterDiagram {
  enum class Shape { chain, cycle };
  struct Edge {
    int i = 0, j = 0;        // node positions into `nodes`
    enum class Kind { finite, infinite, dashed } kind = Kind::finite;
    int label = 3;           // pi/label, finite kind only
  };
  Shape shape = Shape::cycle;
  std::vector<int> nodes;    // original facet indices, 0-based
  std::vector<Edge> edges;
};

/// Coxeter iff every angle-kind relation is within tol of pi/k for some
/// integer k <= kmax. Parallel facets become "inf" edges, ultraparallel ones
/// dashed edges; orthogonal pairs are not joined.
std::optional<CoxeterDiagram> coxeter_check(const FacetRelationMatrix& rel,
                                            double tolerance = tol::kCoxeter,
                                            int kmax = 10000);

/// Graphviz serialization; node names F1..F(n+3), a solid unlabeled edge means
/// label 3.
std::string to_dot(const CoxeterDiagram& d);

struct CompactnessReport {
  bool compact = true;
  bool finite_volume = true;  // orthoschemes always have finite volume
  std::optional<std::pair<int, int>> witness;  // cyclic run [first, last], 0-based
};

/// Compact iff no cyclically contiguous run of angles sums to pi (exact for
/// rational lists).
CompactnessReport is_compact(const AngleList& a);

/// Recovers a representative angle list from the Gram matrix of a Napier
/// cycle: seed the first two angles, solve each next one from the normalized
/// adjacent entry by bisection, and close the list according to the character
/// of the second-to-last vector. The result reproduces the normalized Gram of
/// the input on the spacelike block within 1e-8. Accepts the full matrix as
/// produced by gram_matrix (rows of non-positive vectors included).
AngleList angles_from_gram(const GramMatrix& g);

/// Everything the CLI reports about a single orthoscheme.
struct OrthoschemeReport {
  AngleList angles;
  OrthoschemeType type;
  FacetRelationMatrix relations;
  std::optional<CoxeterDiagram> diagram;
  CompactnessReport compactness;
};

OrthoschemeReport orthoscheme_report(const AngleList& a,
                                     double coxeter_tol = tol::kCoxeter,
                                     int kmax = 10000);

}  // namespace polyscheme
