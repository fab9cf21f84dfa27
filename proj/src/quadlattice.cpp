#include "k3census/quadlattice.hpp"

#include <stdexcept>
#include <utility>

namespace k3census::quadlattice {

bool GramLattice::is_symmetric() const {
  const size_t n = gram.size();
  for (size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) return false;
    for (size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) return false;
  }
  return true;
}

bool GramLattice::is_even() const {
  for (size_t i = 0; i < gram.size(); ++i)
    if (gram[i][i] % 2 != 0) return false;
  return true;
}

Int GramLattice::determinant() const {
  // Fraction-free Bareiss elimination; exact over Z.
  Matrix a = gram;
  const size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  Int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

GramLattice gram_E8() {
  // Dynkin diagram with branch node 0; arms of lengths 1, 2 and 4.
  const std::pair<int, int> edges[] = {{0, 1}, {0, 2}, {2, 3}, {0, 4},
                                       {4, 5}, {5, 6}, {6, 7}};
  Matrix g(8, std::vector<Int>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = 2;
  for (const auto& [a, b] : edges) {
    g[a][b] = -1;
    g[b][a] = -1;
  }
  return {g};
}

GramLattice gram_H(const Int& m) {
  if (m < 1) throw std::invalid_argument("H(m) requires m >= 1");
  return {{{0, m}, {m, 0}}};
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const size_t n = a.rank(), m = b.rank();
  Matrix g(n + m, std::vector<Int>(n + m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
  return {g};
}

GramLattice negate(const GramLattice& a) {
  GramLattice out = a;
  for (auto& row : out.gram)
    for (auto& v : row) v = -v;
  return out;
}

GramLattice k3_gram() {
  GramLattice l = direct_sum(negate(gram_E8()), negate(gram_E8()));
  for (int i = 0; i < 3; ++i) l = direct_sum(l, gram_H(1));
  return l;
}

Signature signature(const GramLattice& l) {
  if (!l.is_symmetric())
    throw std::invalid_argument("signature requires a symmetric Gram matrix");
  const size_t n = l.rank();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(l.gram[i][j]);

  Signature sig{0, 0, 0};
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // Prefer a diagonal pivot exchange; otherwise mix in a row with a
      // nonzero off-diagonal entry, which makes the diagonal nonzero.
      size_t swap_with = n;
      for (size_t r = k + 1; r < n; ++r)
        if (a[r][r] != 0) {
          swap_with = r;
          break;
        }
      if (swap_with < n) {
        std::swap(a[k], a[swap_with]);
        for (size_t r = 0; r < n; ++r) std::swap(a[r][k], a[r][swap_with]);
      } else {
        size_t mix = n;
        for (size_t c = k + 1; c < n; ++c)
          if (a[k][c] != 0) {
            mix = c;
            break;
          }
        if (mix == n) {
          ++sig.zero;
          continue;
        }
        for (size_t c = 0; c < n; ++c) a[k][c] += a[mix][c];
        for (size_t r = 0; r < n; ++r) a[r][k] += a[r][mix];
      }
    }
    const Rat pivot = a[k][k];
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k] == 0) continue;
      const Rat f = a[r][k] / pivot;
      for (size_t c = 0; c < n; ++c) a[r][c] -= f * a[k][c];
      for (size_t c = 0; c < n; ++c) a[c][r] -= f * a[c][k];
    }
  }
  return sig;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

std::vector<Int> smith_normal_form(Matrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> factors;
  size_t top = 0, left = 0;
  while (top < rows && left < cols) {
    // Locate the smallest nonzero entry in the working block.
    size_t pr = rows, pc = cols;
    for (size_t r = top; r < rows; ++r)
      for (size_t c = left; c < cols; ++c)
        if (m[r][c] != 0 &&
            (pr == rows || abs_int(m[r][c]) < abs_int(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(m[top], m[pr]);
    for (size_t r = 0; r < rows; ++r) std::swap(m[r][left], m[r][pc]);

    bool clean = true;
    for (size_t r = top + 1; r < rows; ++r) {
      if (m[r][left] == 0) continue;
      const Int q = m[r][left] / m[top][left];
      for (size_t c = left; c < cols; ++c) m[r][c] -= q * m[top][c];
      if (m[r][left] != 0) clean = false;
    }
    for (size_t c = left + 1; c < cols; ++c) {
      if (m[top][c] == 0) continue;
      const Int q = m[top][c] / m[top][left];
      for (size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][left];
      if (m[top][c] != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; repeat with the same corner

    // Pivot must divide every remaining entry for the invariant-factor
    // chain; otherwise fold an offending row in and retry.
    bool divides_all = true;
    for (size_t r = top + 1; r < rows && divides_all; ++r)
      for (size_t c = left + 1; c < cols; ++c)
        if (m[r][c] % m[top][left] != 0) {
          for (size_t cc = left; cc < cols; ++cc) m[top][cc] += m[r][cc];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    factors.push_back(abs_int(m[top][left]));
    ++top;
    ++left;
  }
  while (factors.size() < std::min(rows, cols)) factors.push_back(0);
  return factors;
}

bool is_primitive(const Matrix& columns) {
  const size_t rows = columns.size();
  const size_t cols = rows ? columns[0].size() : 0;
  if (cols == 0) throw std::invalid_argument("no generators given");

  // Rational rank check.
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) a[r][c] = Rat(columns[r][c]);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[rank][c];
      for (size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  if (rank != cols)
    throw std::invalid_argument("generators are rationally dependent");

  const auto factors = smith_normal_form(columns);
  for (size_t i = 0; i < cols; ++i)
    if (factors[i] != 1) return false;
  return true;
}

Lemma34Embedding lemma34_map(const GramLattice& t) {
  if (t.rank() != 2 || !t.is_symmetric())
    throw std::invalid_argument("lemma34_map needs a symmetric 2x2 Gram matrix");
  const Int a = t.gram[0][0], b = t.gram[0][1], c = t.gram[1][1];
  if (a % 2 != 0 || c % 2 != 0)
    throw std::invalid_argument("lemma34_map needs an even lattice");
  if (a <= 0 || a * c - b * b <= 0)
    throw std::invalid_argument("lemma34_map needs a positive definite lattice");

  // Basis order (v1, w1, v2, w2) with (v_i, w_i) = 1.
  const Matrix pairing = {
      {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  Matrix image(4, std::vector<Int>(2, 0));
  image[0][0] = 1;
  image[1][0] = a / 2;
  image[1][1] = 2 * b;
  image[2][1] = 1;
  image[3][1] = c / 2;

  auto pair = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    Int s = 0;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) s += x[i] * pairing[i][j] * y[j];
    return s;
  };
  std::vector<Int> f1(4), f2(4);
  for (size_t i = 0; i < 4; ++i) {
    f1[i] = image[i][0];
    f2[i] = image[i][1];
  }

  Lemma34Embedding out;
  out.image_columns = image;
  out.induced_gram = {{pair(f1, f1), pair(f1, f2)}, {pair(f2, f1), pair(f2, f2)}};
  if (out.induced_gram[0][1] != 2 * b)
    throw std::logic_error("off-diagonal identity (f(l1),f(l2)) = 2(l1,l2) failed");
  // Primitivity certificate (f(l_i), w_j) = delta_ij.
  const std::vector<Int> w1{0, 1, 0, 0}, w2{0, 0, 0, 1};
  if (pair(f1, w1) != 1 || pair(f1, w2) != 0 || pair(f2, w1) != 0 ||
      pair(f2, w2) != 1)
    throw std::logic_error("primitivity certificate (f(l_i),w_j) = delta_ij failed");
  out.primitive = is_primitive(image);
  return out;
}

}  // namespace k3census::quadlattice
