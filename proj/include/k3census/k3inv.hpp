#pragma once

#include <optional>
#include <string>

#include "k3census/stratum.hpp"

namespace k3census::k3inv {

bool is_k3(const stratum::WeightSystem& ws);

// 22 minus the number of exceptional curves of the minimal resolution.
// Throws std::domain_error when the basket exceeds the rank bound.
Int b2_orbifold(const stratum::Basket& basket);

struct LinkInvariants {
  Int b2_link;
  std::string diffeo;  // "#k(S2xS3)"
};

// Second Betti number and diffeomorphism type of the associated link.
// Throws std::domain_error outside 4 <= b2 <= 22; b2 = 3 is rejected
// explicitly (no projective K3 surface has second Betti number 3).
LinkInvariants link_invariants(const Int& b2_orbifold);

// Deformation-space dimension 2(b2_link - 2).
Int moduli_dim(const Int& b2_link);

// Codimension-1 polynomial count 2[h0(O(d)) - sum h0(O(w_i))].
Int moduli_dim_polynomial(const stratum::WeightSystem& ws);

// Dolgachev lattice-polarized moduli dimension 20 - rank(M) with
// rank(M) = 1 + sum n_i.
Int dolgachev_dim(const stratum::Basket& basket);

struct PeriodQuadric {
  Int ambient_dim;   // the quadric lives in CP^{ambient_dim}
  std::string condition;
  Int complex_dim;   // b2_link - 2
};

PeriodQuadric period_quadric_descriptor(const Int& b2_link);

// Everything the census reports about one weight system.
struct K3Record {
  stratum::WeightSystem ws;
  stratum::Basket basket;
  Int b2_orbifold;
  Int b2_link;
  Int k;  // connected-sum count, equals b2_link
  std::string diffeo;
  Int moduli;               // 2(k - 2)
  Int dolgachev;            // 20 - rank(M)
  std::optional<Int> moduli_poly;  // codim 1 only
  PeriodQuadric quadric;
};

stratum::Expected<K3Record> make_record(const stratum::WeightSystem& ws);

}  // namespace k3census::k3inv
