#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "k3census/exactgeom.hpp"

using namespace k3census;
using namespace k3census::exactgeom;

namespace {

std::vector<Int> iv(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

LatticePolygon poly(std::initializer_list<std::pair<long long, long long>> ps) {
  std::vector<Point2> pts;
  for (const auto& [x, y] : ps) pts.push_back({Int(x), Int(y)});
  return hull_and_area(std::move(pts));
}

LatticePolygon random_poly(std::mt19937& rng, int max_pts = 6, int box = 7) {
  std::uniform_int_distribution<int> npts(1, max_pts), coord(-box, box);
  std::vector<Point2> pts;
  const int n = npts(rng);
  for (int i = 0; i < n; ++i) pts.push_back({Int(coord(rng)), Int(coord(rng))});
  return hull_and_area(std::move(pts));
}

}  // namespace

TEST_CASE("monomial enumeration") {
  const auto m = monomials_of_degree(iv({2, 4}), 6);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == iv({3, 0}));
  CHECK(m[1] == iv({1, 1}));

  CHECK(monomials_of_degree(iv({1, 1, 1, 2}), 5).size() == 34);
  CHECK(monomials_of_degree(iv({3, 5, 7}), 0) ==
        std::vector<ExponentVector>{iv({0, 0, 0})});
  CHECK(monomials_of_degree(iv({2, 2}), 5).empty());

  for (const auto& e : monomials_of_degree(iv({1, 2, 3}), 9)) {
    CHECK(e[0] + 2 * e[1] + 3 * e[2] == 9);
  }
}

TEST_CASE("count agrees with enumeration on random inputs") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<int> len(2, 5), wt(1, 6), deg(0, 30);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(Int(wt(rng)));
    const Int d(deg(rng));
    CHECK(count_monomials(w, d) == Int(monomials_of_degree(w, d).size()));
  }
}

TEST_CASE("count is additive over the last variable") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> wt(1, 6), deg(0, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Int> w{Int(wt(rng)), Int(wt(rng)), Int(wt(rng)),
                             Int(wt(rng))};
    const std::vector<Int> head(w.begin(), w.end() - 1);
    const Int d(deg(rng));
    Int total = 0;
    for (Int e = 0; e * w.back() <= d; ++e)
      total += count_monomials(head, d - e * w.back());
    CHECK(total == count_monomials(w, d));
  }
}

TEST_CASE("null lattice basis") {
  auto check_lattice = [](const std::vector<Int>& w,
                          const std::vector<std::vector<Int>>& expected_gens) {
    const auto basis = null_lattice_basis(w);
    REQUIRE(basis.basis.size() == w.size() - 1);
    for (const auto& v : basis.basis) {
      Int dot = 0;
      for (size_t i = 0; i < w.size(); ++i) dot += v[i] * w[i];
      CHECK(dot == 0);
    }
    // expected generators have integer coordinates and, jointly, span the
    // same lattice (coordinate matrix has determinant +-1)
    std::vector<std::vector<Int>> coords;
    for (const auto& g : expected_gens)
      coords.push_back(basis_coordinates(basis, g));
    if (coords.size() == 1) {
      CHECK(abs(coords[0][0]) == 1);
    } else {
      const Int det = coords[0][0] * coords[1][1] - coords[0][1] * coords[1][0];
      CHECK(abs(det) == 1);
    }
  };
  check_lattice(iv({2, 4}), {iv({2, -1})});
  check_lattice(iv({2, 2}), {iv({1, -1})});
  check_lattice(iv({2, 2, 2}), {iv({1, -1, 0}), iv({1, 0, -1})});
}

TEST_CASE("null basis is full: monomial differences always have integer coordinates") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> wt(1, 8), deg(1, 40), pick(0, 1 << 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 2;
    std::vector<Int> w;
    for (int i = 0; i < n; ++i) w.push_back(Int(wt(rng)));
    const auto monos = monomials_of_degree(w, Int(deg(rng)));
    if (monos.size() < 2) continue;
    const auto basis = null_lattice_basis(w);
    const auto& a = monos[pick(rng) % monos.size()];
    const auto& b = monos[pick(rng) % monos.size()];
    std::vector<Int> diff(w.size());
    for (size_t i = 0; i < w.size(); ++i) diff[i] = a[i] - b[i];
    CHECK_NOTHROW(basis_coordinates(basis, diff));
  }
}

TEST_CASE("hulls and doubled areas") {
  CHECK(poly({{0, 0}, {1, 0}, {0, 1}}).doubled_area == 1);
  const auto p = poly({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}});
  CHECK(p.doubled_area == 4);
  CHECK(p.hull.size() == 4);
  CHECK(poly({{0, 0}}).doubled_area == 0);
  CHECK(poly({{0, 0}, {2, 4}, {1, 2}}).doubled_area == 0);
}

TEST_CASE("mixed volume basics") {
  const auto tri = poly({{0, 0}, {1, 0}, {0, 1}});
  CHECK(mixed_volume2(tri, tri) == 1);
  const auto pt = poly({{5, -3}});
  CHECK(mixed_volume2(pt, tri) == 0);
  const auto square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(mixed_volume2(square, square) == square.doubled_area);
}

TEST_CASE("mixed volume properties on random polygons") {
  std::mt19937 rng(20240902);
  int trials = 0;
  while (trials < 1000) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const Int pq = mixed_volume2(p, q);
    CHECK(pq >= 0);
    CHECK(pq == mixed_volume2(q, p));
    CHECK(mixed_volume2(p, p) == p.doubled_area);
    // monotone under point insertion
    std::uniform_int_distribution<int> coord(-7, 7);
    auto grown = p.points;
    grown.push_back({Int(coord(rng)), Int(coord(rng))});
    CHECK(mixed_volume2(hull_and_area(grown), q) >= pq);
    ++trials;
  }
}

TEST_CASE("segment lengths of edge restrictions") {
  auto edge_coords = [](std::vector<Int> w, const Int& d) {
    const auto monos = monomials_of_degree(w, d);
    REQUIRE(!monos.empty());
    const auto basis = null_lattice_basis(w);
    std::vector<Int> coords;
    for (const auto& m : monos) {
      const std::vector<Int> diff{m[0] - monos[0][0], m[1] - monos[0][1]};
      coords.push_back(basis_coordinates(basis, diff)[0]);
    }
    return coords;
  };
  CHECK(segment_length(edge_coords(iv({2, 2}), 6)) == 3);
  CHECK(segment_length(edge_coords(iv({2, 4}), 10)) == 2);
  CHECK(segment_length({Int(7)}) == 0);
}
