#include "k3census/stratum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k3census/exactgeom.hpp"
#include "k3census/wps.hpp"

namespace k3census::stratum {

using exactgeom::ExponentVector;

Int WeightSystem::weight_sum() const {
  Int s = 0;
  for (const Int& w : weights) s += w;
  return s;
}

Int WeightSystem::degree_sum() const {
  Int s = 0;
  for (const Int& d : degrees) s += d;
  return s;
}

void WeightSystem::canonicalize() {
  std::sort(weights.begin(), weights.end());
  std::sort(degrees.begin(), degrees.end());
}

bool WeightSystem::operator<(const WeightSystem& o) const {
  if (weights != o.weights) return weights < o.weights;
  return degrees < o.degrees;
}

Int Basket::sum_n() const {
  Int s = 0;
  for (const BasketEntry& e : entries) s += e.n * e.multiplicity;
  return s;
}

std::map<Int, Int> Basket::counts() const {
  std::map<Int, Int> c;
  for (const BasketEntry& e : entries) c[e.n] += e.multiplicity;
  return c;
}

std::string Basket::to_string() const {
  const auto c = counts();
  if (c.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, mult] : c) {
    if (!first) os << '+';
    first = false;
    if (mult > 1) os << mult << 'x';
    os << 'A' << n;
  }
  return os.str();
}

std::string AnalysisError::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case ErrorKind::NotWellFormed: os << "NotWellFormed"; break;
    case ErrorKind::NotSurfaceCodimension: os << "NotSurfaceCodimension"; break;
    case ErrorKind::ContainedSingularStratum:
      os << "ContainedSingularStratum";
      break;
    case ErrorKind::NonIsolatedSingularLocus:
      os << "NonIsolatedSingularLocus";
      break;
    case ErrorKind::QuasismoothnessFailureAtVertex:
      os << "QuasismoothnessFailureAtVertex";
      break;
    case ErrorKind::UnsupportedInput: os << "UnsupportedInput"; break;
  }
  if (!indices.empty()) {
    os << '{';
    for (size_t i = 0; i < indices.size(); ++i) {
      if (i) os << ',';
      os << indices[i];
    }
    os << '}';
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

namespace {

std::vector<Int> select(const std::vector<Int>& w,
                        const std::vector<size_t>& idx) {
  std::vector<Int> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(w[i]);
  return out;
}

std::vector<size_t> complement(size_t n, const std::vector<size_t>& idx) {
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
  return out;
}

// The two coordinate directions transverse to X at a stratum point must
// carry a (q, -q) action with q coprime to the stabilizer, otherwise the
// singularity is not an isolated A_{h-1} point.
std::optional<AnalysisError> check_du_val_pair(
    const std::vector<size_t>& stratum, const Int& alpha, const Int& beta,
    const Int& h) {
  if ((alpha + beta) % h != 0)
    return AnalysisError{ErrorKind::UnsupportedInput, stratum,
                         "transverse weights do not satisfy the Du Val congruence"};
  if (gcd(alpha, h) != 1 || gcd(beta, h) != 1)
    return AnalysisError{ErrorKind::NonIsolatedSingularLocus, stratum,
                         "transverse weight shares a factor with the stabilizer"};
  return std::nullopt;
}

// Segment length of the restricted monomial support in the primitive
// null-lattice coordinate of the edge.
Int edge_newton_length(const Int& wi, const Int& wj,
                       const std::vector<ExponentVector>& support) {
  const auto basis = exactgeom::null_lattice_basis({wi, wj});
  const ExponentVector& base = support.back();  // descending lex: last is min
  std::vector<Int> coords;
  coords.reserve(support.size());
  for (const ExponentVector& m : support) {
    std::vector<Int> diff{m[0] - base[0], m[1] - base[1]};
    coords.push_back(exactgeom::basis_coordinates(basis, diff)[0]);
  }
  return exactgeom::segment_length(coords);
}

}  // namespace

Expected<MaybeEntry> vertex_analysis(const WeightSystem& ws, size_t i) {
  const Int& h = ws.weights[i];
  if (h == 1) return MaybeEntry{};
  for (const Int& d : ws.degrees)
    if (d % h == 0) return MaybeEntry{};  // general member misses the vertex

  // One coordinate direction per defining equation must be eliminated by a
  // monomial x_i^a x_j of the right degree, with distinct j across
  // equations.
  const size_t n = ws.weights.size();
  std::vector<std::vector<size_t>> candidates;
  for (const Int& d : ws.degrees) {
    std::vector<size_t> js;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (d >= ws.weights[j] && (d - ws.weights[j]) % h == 0) js.push_back(j);
    }
    candidates.push_back(std::move(js));
  }

  std::vector<size_t> eliminated;
  if (ws.codim() == 1) {
    if (!candidates[0].empty()) eliminated = {candidates[0][0]};
  } else {
    for (size_t j1 : candidates[0]) {
      for (size_t j2 : candidates[1]) {
        if (j1 != j2) {
          eliminated = {j1, j2};
          break;
        }
      }
      if (!eliminated.empty()) break;
    }
  }
  if (eliminated.size() != ws.codim())
    return AnalysisError{ErrorKind::QuasismoothnessFailureAtVertex,
                         {i},
                         "vertex lies on X but no eliminated-direction "
                         "assignment exists"};

  std::vector<size_t> used = eliminated;
  used.push_back(i);
  const auto transverse = complement(n, used);
  if (transverse.size() != 2)
    throw std::logic_error("vertex analysis expects two transverse directions");
  if (auto err = check_du_val_pair({i}, ws.weights[transverse[0]],
                                   ws.weights[transverse[1]], h))
    return *err;
  return MaybeEntry{BasketEntry{h - 1, 1, {i}}};
}

Expected<MaybeEntry> edge_analysis(const WeightSystem& ws, size_t i, size_t j) {
  const Int& wi = ws.weights[i];
  const Int& wj = ws.weights[j];
  const Int h = gcd(wi, wj);
  if (h < 2) throw std::invalid_argument("edge stabilizer must be >= 2");
  const std::vector<size_t> stratum{i, j};
  const auto externals = complement(ws.weights.size(), stratum);

  std::vector<std::vector<ExponentVector>> restrictions;
  for (const Int& d : ws.degrees)
    restrictions.push_back(exactgeom::monomials_of_degree({wi, wj}, d));

  if (ws.codim() == 1) {
    if (restrictions[0].empty())
      return AnalysisError{ErrorKind::ContainedSingularStratum, stratum,
                           "restriction of the defining equation vanishes"};
    const Int mult = edge_newton_length(wi, wj, restrictions[0]);
    if (mult == 0) return MaybeEntry{};
    if (auto err = check_du_val_pair(stratum, ws.weights[externals[0]],
                                     ws.weights[externals[1]], h))
      return *err;
    return MaybeEntry{BasketEntry{h - 1, mult, stratum}};
  }

  const bool empty0 = restrictions[0].empty();
  const bool empty1 = restrictions[1].empty();
  if (empty0 && empty1)
    return AnalysisError{ErrorKind::ContainedSingularStratum, stratum,
                         "both restrictions vanish: X contains the edge"};
  if (!empty0 && !empty1)
    return MaybeEntry{};  // two general forms on the line share no torus zero

  const size_t vanishing = empty0 ? 0 : 1;
  const size_t active = 1 - vanishing;
  const Int mult = edge_newton_length(wi, wj, restrictions[active]);
  if (mult == 0) return MaybeEntry{};

  // The equation vanishing on the edge must be transverse via an external
  // monomial x_i^p x_j^q x_k.
  std::optional<size_t> transverse_k;
  for (size_t k : externals) {
    const Int rem = ws.degrees[vanishing] - ws.weights[k];
    if (rem >= 0 && exactgeom::count_monomials({wi, wj}, rem) > 0) {
      transverse_k = k;
      break;
    }
  }
  if (!transverse_k)
    return AnalysisError{ErrorKind::NonIsolatedSingularLocus, stratum,
                         "vanishing restriction has no transverse direction"};

  std::vector<size_t> used = stratum;
  used.push_back(*transverse_k);
  const auto pair = complement(ws.weights.size(), used);
  if (auto err = check_du_val_pair(stratum, ws.weights[pair[0]],
                                   ws.weights[pair[1]], h))
    return *err;
  return MaybeEntry{BasketEntry{h - 1, mult, stratum}};
}

Expected<MaybeEntry> face_analysis(const WeightSystem& ws, size_t i, size_t j,
                                   size_t k) {
  if (ws.codim() != 2)
    throw std::invalid_argument("face analysis applies to codimension 2 only");
  const std::vector<size_t> stratum{i, j, k};
  const auto face_weights = select(ws.weights, stratum);
  Int h = 0;
  for (const Int& w : face_weights) h = gcd(h, w);
  if (h < 2) throw std::invalid_argument("face stabilizer must be >= 2");

  std::vector<std::vector<ExponentVector>> restrictions;
  for (const Int& d : ws.degrees)
    restrictions.push_back(exactgeom::monomials_of_degree(face_weights, d));
  for (size_t a = 0; a < 2; ++a) {
    if (restrictions[a].empty())
      return AnalysisError{ErrorKind::NonIsolatedSingularLocus, stratum,
                           "a defining equation vanishes on the face: X meets "
                           "it in a curve"};
  }

  // Newton polygons in the rank-2 null lattice, dehomogenized at the
  // lexicographically smallest monomial; mixed volumes are translation
  // invariant so the choice is irrelevant.
  const auto basis = exactgeom::null_lattice_basis(face_weights);
  std::vector<exactgeom::LatticePolygon> polys;
  for (const auto& support : restrictions) {
    const ExponentVector base =
        *std::min_element(support.begin(), support.end());
    std::vector<exactgeom::Point2> pts;
    pts.reserve(support.size());
    for (const ExponentVector& m : support) {
      std::vector<Int> diff(3);
      for (size_t t = 0; t < 3; ++t) diff[t] = m[t] - base[t];
      const auto c = exactgeom::basis_coordinates(basis, diff);
      pts.push_back({c[0], c[1]});
    }
    polys.push_back(exactgeom::hull_and_area(std::move(pts)));
  }

  const Int mult = exactgeom::mixed_volume2(polys[0], polys[1]);
  if (mult == 0) return MaybeEntry{};

  const auto pair = complement(ws.weights.size(), stratum);
  if (auto err = check_du_val_pair(stratum, ws.weights[pair[0]],
                                   ws.weights[pair[1]], h))
    return *err;
  return MaybeEntry{BasketEntry{h - 1, mult, stratum}};
}

Expected<Basket> analyze(const WeightSystem& input) {
  WeightSystem ws = input;
  ws.canonicalize();

  const bool codim_ok =
      (ws.weights.size() == 4 && ws.degrees.size() == 1) ||
      (ws.weights.size() == 5 && ws.degrees.size() == 2);
  if (!codim_ok)
    return AnalysisError{ErrorKind::NotSurfaceCodimension,
                         {},
                         "need 4 weights with 1 degree or 5 weights with 2"};
  for (const Int& w : ws.weights)
    if (w < 1)
      return AnalysisError{ErrorKind::UnsupportedInput, {}, "weights must be >= 1"};
  for (const Int& d : ws.degrees)
    if (d < 1)
      return AnalysisError{ErrorKind::UnsupportedInput, {}, "degrees must be >= 1"};
  if (!wps::is_well_formed(ws.weights))
    return AnalysisError{ErrorKind::NotWellFormed, {}, ""};
  if (!ws.is_k3())
    return AnalysisError{ErrorKind::UnsupportedInput,
                         {},
                         "K3 condition fails: sum of degrees != sum of weights"};

  Basket basket;
  for (const auto& stratum : wps::singular_strata(ws.weights)) {
    Expected<MaybeEntry> result = MaybeEntry{};
    switch (stratum.indices.size()) {
      case 1:
        result = vertex_analysis(ws, stratum.indices[0]);
        break;
      case 2:
        result = edge_analysis(ws, stratum.indices[0], stratum.indices[1]);
        break;
      case 3:
        // Well-formedness forbids this in codimension 1.
        result = face_analysis(ws, stratum.indices[0], stratum.indices[1],
                               stratum.indices[2]);
        break;
      default:
        throw std::logic_error("singular stratum too large for a well-formed space");
    }
    if (!result.ok()) return result.error();
    if (result.value()) {
      if (result.value()->n != stratum.stabilizer - 1)
        throw std::logic_error("basket entry violates n = h - 1");
      basket.entries.push_back(*result.value());
    }
  }

  const Int total = basket.sum_n();
  if (total > 19)
    return AnalysisError{ErrorKind::UnsupportedInput,
                         {},
                         "sum of n exceeds the Neron-Severi rank bound 19"};
  if (total == 19)
    return AnalysisError{ErrorKind::UnsupportedInput,
                         {},
                         "sum of n = 19 would give second Betti number 3, "
                         "which no projective K3 surface attains"};
  return basket;
}

}  // namespace k3census::stratum
