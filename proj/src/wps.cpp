#include "k3census/wps.hpp"

#include <algorithm>
#include <stdexcept>

#include "k3census/exactgeom.hpp"

namespace k3census::wps {

bool is_well_formed(const WeightVector& w) {
  if (w.empty()) return false;
  for (const Int& wi : w)
    if (wi < 1) return false;
  for (size_t skip = 0; skip < w.size(); ++skip) {
    Int g = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (i != skip) g = gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

Int h0(const WeightVector& w, const Int& l) {
  return exactgeom::count_monomials(w, l);
}

std::vector<Stratum> singular_strata(const WeightVector& w) {
  if (!is_well_formed(w))
    throw std::invalid_argument("singular_strata requires a well-formed weight vector");
  const size_t n = w.size();
  std::vector<Stratum> out;
  for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
    Int g = 0;
    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (size_t{1} << i)) {
        idx.push_back(i);
        g = gcd(g, w[i]);
      }
    }
    if (g >= 2) out.push_back({std::move(idx), g});
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.indices.size() != b.indices.size())
      return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });
  return out;
}

}  // namespace k3census::wps
