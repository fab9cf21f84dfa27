#pragma once

#include <vector>

#include "k3census/int_types.hpp"

namespace k3census::quadlattice {

using Matrix = std::vector<std::vector<Int>>;

// Integer symmetric bilinear form given by its Gram matrix.
struct GramLattice {
  Matrix gram;

  size_t rank() const { return gram.size(); }
  bool is_symmetric() const;
  bool is_even() const;  // all diagonal entries even
  Int determinant() const;
};

GramLattice gram_E8();
GramLattice gram_H(const Int& m);

// The K3 lattice (-E8)^2 + H(1)^3, even unimodular of signature (3,19).
GramLattice k3_gram();

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice negate(const GramLattice& a);

struct Signature {
  Int positive;
  Int negative;
  Int zero;

  bool operator==(const Signature&) const = default;
};

// Inertia counts by exact rational congruence diagonalization. Throws
// std::invalid_argument on non-symmetric input.
Signature signature(const GramLattice& l);

// Invariant factors (diagonal of the Smith normal form) of an integer
// matrix, non-negative, each dividing the next.
std::vector<Int> smith_normal_form(Matrix m);

// True iff the sublattice generated by the columns is primitive in Z^rows
// (torsion-free quotient: all invariant factors are 1). Throws
// std::invalid_argument when the columns are rationally dependent.
bool is_primitive(const Matrix& columns);

// The explicit embedding of a rank-2 even positive definite lattice into
// H(1) + H(1): f(l1) = v1 + (l1,l1)/2 w1, f(l2) = v2 + (l2,l2)/2 w2
// + 2(l1,l2) w1, in the basis (v1, w1, v2, w2) with (v_i, w_j) = delta_ij.
struct Lemma34Embedding {
  Matrix image_columns;  // 4x2: coordinates of f(l1), f(l2)
  Matrix induced_gram;   // 2x2 Gram of the images under the H(1)+H(1) form
  bool primitive;        // Smith certificate for the image sublattice
};

// Throws std::invalid_argument unless T is 2x2, symmetric, even and
// positive definite.
Lemma34Embedding lemma34_map(const GramLattice& t);

}  // namespace k3census::quadlattice
