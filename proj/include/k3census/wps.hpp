#pragma once

#include <vector>

#include "k3census/int_types.hpp"

namespace k3census::wps {

// Sorted non-decreasing positive weights of the ambient weighted
// projective space.
using WeightVector = std::vector<Int>;

// True iff omitting any single weight leaves a gcd-1 set.
bool is_well_formed(const WeightVector& w);

// Dimension of the space of weighted homogeneous polynomials of degree l.
Int h0(const WeightVector& w, const Int& l);

// A coordinate stratum with non-trivial cyclic stabilizer. Strata are keyed
// by index subsets: equal weights occupy distinct strata.
struct Stratum {
  std::vector<size_t> indices;  // strictly increasing
  Int stabilizer;               // gcd of the selected weights, >= 2
};

// All nonempty proper index subsets whose weight gcd is >= 2, ordered by
// subset size then lexicographically. Throws std::invalid_argument on
// non-well-formed input.
std::vector<Stratum> singular_strata(const WeightVector& w);

}  // namespace k3census::wps
