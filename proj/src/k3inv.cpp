#include "k3census/k3inv.hpp"

#include <sstream>
#include <stdexcept>

#include "k3census/wps.hpp"

namespace k3census::k3inv {

bool is_k3(const stratum::WeightSystem& ws) { return ws.is_k3(); }

Int b2_orbifold(const stratum::Basket& basket) {
  const Int total = basket.sum_n();
  if (total > 19)
    throw std::domain_error("basket exceeds the Neron-Severi rank bound 19");
  return 22 - total;
}

LinkInvariants link_invariants(const Int& b2_orbifold) {
  if (b2_orbifold == 3)
    throw std::domain_error(
        "b2 = 3 is excluded: no projective K3 surface has second Betti "
        "number 3");
  if (b2_orbifold < 4 || b2_orbifold > 22)
    throw std::domain_error("orbifold b2 must lie in [4, 22]");
  const Int k = b2_orbifold - 1;
  std::ostringstream os;
  os << '#' << k << "(S2xS3)";
  return {k, os.str()};
}

Int moduli_dim(const Int& b2_link) {
  if (b2_link < 3) throw std::domain_error("link b2 must be >= 3");
  return 2 * (b2_link - 2);
}

Int moduli_dim_polynomial(const stratum::WeightSystem& ws) {
  if (ws.codim() != 1)
    throw std::domain_error("polynomial moduli count applies to codim 1 only");
  if (!ws.is_k3()) throw std::domain_error("K3 condition fails");
  Int inner = wps::h0(ws.weights, ws.degrees[0]);
  for (const Int& w : ws.weights) inner -= wps::h0(ws.weights, w);
  return 2 * inner;
}

Int dolgachev_dim(const stratum::Basket& basket) {
  const Int total = basket.sum_n();
  if (total >= 19)
    throw std::domain_error("polarizing lattice would have rank >= 20");
  return 20 - (1 + total);
}

PeriodQuadric period_quadric_descriptor(const Int& b2_link) {
  if (b2_link < 3) throw std::domain_error("link b2 must be >= 3");
  return {b2_link - 1,
          "{ [a] in H2(M,C) | ||([a],[a])|| - ||([a],[conj a])|| > 0 } / C*",
          b2_link - 2};
}

stratum::Expected<K3Record> make_record(const stratum::WeightSystem& input) {
  stratum::WeightSystem ws = input;
  ws.canonicalize();
  auto analyzed = stratum::analyze(ws);
  if (!analyzed.ok()) return analyzed.error();

  K3Record rec;
  rec.ws = ws;
  rec.basket = analyzed.value();
  rec.b2_orbifold = b2_orbifold(rec.basket);
  const auto link = link_invariants(rec.b2_orbifold);
  rec.b2_link = link.b2_link;
  rec.k = link.b2_link;
  rec.diffeo = link.diffeo;
  rec.moduli = moduli_dim(rec.b2_link);
  rec.dolgachev = dolgachev_dim(rec.basket);
  if (ws.codim() == 1) rec.moduli_poly = moduli_dim_polynomial(ws);
  rec.quadric = period_quadric_descriptor(rec.b2_link);
  return rec;
}

}  // namespace k3census::k3inv
