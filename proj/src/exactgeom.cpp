#include "k3census/exactgeom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace k3census::exactgeom {

namespace {

void enumerate_rec(const std::vector<Int>& weights, size_t index,
                   const Int& remaining, ExponentVector& current,
                   std::vector<ExponentVector>& out) {
  if (index + 1 == weights.size()) {
    if (remaining % weights[index] == 0) {
      current[index] = remaining / weights[index];
      out.push_back(current);
    }
    return;
  }
  // Descending first exponent gives descending lex order overall.
  for (Int e = remaining / weights[index]; e >= 0; --e) {
    current[index] = e;
    enumerate_rec(weights, index + 1, remaining - e * weights[index], current,
                  out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(const std::vector<Int>& weights,
                                                const Int& degree) {
  if (weights.empty()) throw std::invalid_argument("weights must be non-empty");
  for (const Int& w : weights)
    if (w < 1) throw std::invalid_argument("weights must be >= 1");
  std::vector<ExponentVector> out;
  if (degree < 0) return out;
  ExponentVector current(weights.size(), 0);
  enumerate_rec(weights, 0, degree, current, out);
  return out;
}

Int count_monomials(const std::vector<Int>& weights, const Int& degree) {
  if (weights.empty()) throw std::invalid_argument("weights must be non-empty");
  if (degree < 0) return 0;
  // DP over (variable index, remaining degree), memoized.
  std::map<std::pair<size_t, Int>, Int> memo;
  struct Rec {
    const std::vector<Int>& w;
    std::map<std::pair<size_t, Int>, Int>& memo;
    Int operator()(size_t i, const Int& rem) {
      if (i + 1 == w.size()) return rem % w[i] == 0 ? 1 : 0;
      auto key = std::make_pair(i, rem);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      Int total = 0;
      for (Int r = rem; r >= 0; r -= w[i]) total += (*this)(i + 1, r);
      memo.emplace(key, total);
      return total;
    }
  } rec{weights, memo};
  return rec(0, degree);
}

NullLatticeBasis null_lattice_basis(const std::vector<Int>& weights) {
  const size_t n = weights.size();
  if (n < 2) throw std::invalid_argument("need at least two weights");
  for (const Int& w : weights)
    if (w < 1) throw std::invalid_argument("weights must be >= 1");

  // Column-reduce the 1xn matrix w to (g, 0, ..., 0) with unimodular U;
  // the columns of U mapping to 0 generate the full kernel lattice.
  std::vector<Int> w = weights;
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;

  for (size_t i = 1; i < n; ++i) {
    // Extended gcd of (w[0], w[i]).
    Int a = w[0], b = w[i];
    Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int r = a - q * b;
      a = b;
      b = r;
      Int ns = s0 - q * s1, nt = t0 - q * t1;
      s0 = s1;
      t0 = t1;
      s1 = ns;
      t1 = nt;
    }
    const Int g = a;  // g = s0*w[0] + t0*w[i]
    const Int p = w[0] / g, q = w[i] / g;
    for (size_t r = 0; r < n; ++r) {
      const Int c0 = u[r][0], ci = u[r][i];
      u[r][0] = s0 * c0 + t0 * ci;
      u[r][i] = -q * c0 + p * ci;  // det of the 2x2 block is s0*p + t0*q = 1
    }
    w[0] = g;
    w[i] = 0;
  }

  NullLatticeBasis out;
  for (size_t i = 1; i < n; ++i) {
    std::vector<Int> col(n);
    for (size_t r = 0; r < n; ++r) col[r] = u[r][i];
    out.basis.push_back(std::move(col));
  }
  return out;
}

std::vector<Int> basis_coordinates(const NullLatticeBasis& basis,
                                   const std::vector<Int>& v) {
  const size_t k = basis.basis.size();
  if (k == 0) throw std::invalid_argument("empty basis");
  const size_t n = basis.basis[0].size();
  if (v.size() != n) throw std::invalid_argument("dimension mismatch");

  // Solve B c = v over the rationals, then demand integrality.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < k; ++c) m[r][c] = Rat(basis.basis[c][r]);
    m[r][k] = Rat(v[r]);
  }
  size_t row = 0;
  std::vector<size_t> pivot_row(k, n);
  for (size_t c = 0; c < k && row < n; ++c) {
    size_t p = row;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[row][c];
      for (size_t cc = c; cc <= k; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_row[c] = row;
    ++row;
  }
  // Consistency of the remaining rows.
  for (size_t r = row; r < n; ++r)
    if (m[r][k] != 0)
      throw std::invalid_argument("vector not in the lattice span");

  std::vector<Int> coords(k);
  for (size_t c = 0; c < k; ++c) {
    if (pivot_row[c] == n)
      throw std::invalid_argument("basis columns are dependent");
    Rat val = m[pivot_row[c]][k] / m[pivot_row[c]][c];
    if (boost::multiprecision::denominator(val) != 1)
      throw std::invalid_argument("non-integral coordinates: not a lattice point");
    coords[c] = boost::multiprecision::numerator(val);
  }
  return coords;
}

namespace {

Int cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew monotone chain; collinear points are dropped. Degenerate inputs
// yield a single point or the two extremes of a segment.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

Int shoelace2(const std::vector<Point2>& hull) {
  if (hull.size() < 3) return 0;
  Int s = 0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point2& a = hull[i];
    const Point2& b = hull[(i + 1) % hull.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;  // CCW hull: positive
}

}  // namespace

LatticePolygon hull_and_area(std::vector<Point2> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  LatticePolygon poly;
  poly.hull = convex_hull(points);
  poly.points = std::move(points);
  poly.doubled_area = shoelace2(poly.hull);
  return poly;
}

Int mixed_volume2(const LatticePolygon& p, const LatticePolygon& q) {
  std::vector<Point2> sums;
  sums.reserve(p.hull.size() * q.hull.size());
  for (const Point2& a : p.hull)
    for (const Point2& b : q.hull) sums.push_back({a.x + b.x, a.y + b.y});
  const LatticePolygon pq = hull_and_area(std::move(sums));
  Int twice = pq.doubled_area - p.doubled_area - q.doubled_area;
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("mixed volume must be a non-negative integer");
  return twice / 2;
}

Int segment_length(const std::vector<Int>& coords) {
  if (coords.empty()) throw std::invalid_argument("empty coordinate set");
  auto [mn, mx] = std::minmax_element(coords.begin(), coords.end());
  return *mx - *mn;
}

}  // namespace k3census::exactgeom
