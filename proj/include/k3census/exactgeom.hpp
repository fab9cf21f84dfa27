#pragma once

#include <vector>

#include "k3census/int_types.hpp"

namespace k3census::exactgeom {

// Exponents of a single monomial, one entry per participating variable.
using ExponentVector = std::vector<Int>;

// All solutions of sum(a_i * w_i) == degree with a_i >= 0, in descending
// lexicographic order on the exponents. Weights must be >= 1.
std::vector<ExponentVector> monomials_of_degree(const std::vector<Int>& weights,
                                                const Int& degree);

// |monomials_of_degree(weights, degree)| without materializing the list.
Int count_monomials(const std::vector<Int>& weights, const Int& degree);

// Basis of the full integer kernel lattice {a in Z^n : a . w == 0} of a
// positive weight covector, obtained from a unimodular column reduction.
struct NullLatticeBasis {
  std::vector<std::vector<Int>> basis;  // n-1 vectors of length n
};

NullLatticeBasis null_lattice_basis(const std::vector<Int>& weights);

// Integer coordinates of v in the basis. Throws std::invalid_argument if v
// is not in the lattice spanned by the basis.
std::vector<Int> basis_coordinates(const NullLatticeBasis& basis,
                                   const std::vector<Int>& v);

struct Point2 {
  Int x;
  Int y;

  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point2& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

// hull is the CCW boundary (degenerate inputs give a point or a segment);
// doubled_area is the shoelace sum of the hull, 0 iff the points are
// collinear or a single point.
struct LatticePolygon {
  std::vector<Point2> points;
  std::vector<Point2> hull;
  Int doubled_area;
};

LatticePolygon hull_and_area(std::vector<Point2> points);

// Normalized 2D mixed volume (A2(P+Q) - A2(P) - A2(Q)) / 2, the generic
// number of common torus zeros of two polynomials with these Newton
// polygons. Two generic lines give 1.
Int mixed_volume2(const LatticePolygon& p, const LatticePolygon& q);

// max - min of a non-empty list of 1D lattice coordinates.
Int segment_length(const std::vector<Int>& coords);

}  // namespace k3census::exactgeom
