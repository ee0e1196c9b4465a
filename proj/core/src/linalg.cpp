#include "gehrhart/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gehrhart::linalg {

namespace {

// Fraction-free forward elimination in place. Returns the rank and the
// final pivot (the determinant up to sign for square full-rank input).
std::pair<std::size_t, int> bareiss(IntMatrix& m, mpz_class* last_pivot) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (last_pivot != nullptr) *last_pivot = prev;
  return {r, sign};
}

}  // namespace

std::size_t rank(IntMatrix m) { return bareiss(m, nullptr).first; }

mpz_class determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  if (n == 0) return 1;
  mpz_class last;
  auto [r, sign] = bareiss(m, &last);
  if (r < n) return 0;
  // Without a column skip, Bareiss leaves det in the last pivot.
  return sign * last;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

mpz_class content(const IntVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector make_primitive(IntVector v, bool normalize_sign) {
  mpz_class g = content(v);
  if (g == 0) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (normalize_sign) {
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m, std::size_t cols) {
  RatMatrix q(m.size(), std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) q[i][j] = m[i][j];
  }
  const auto pivots = rref(q);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -q[r][free];
    mpz_class l = 1;
    for (const auto& e : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    IntVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = x[j] * l;
      v[j] = scaled.get_num();
    }
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<int>& columns) {
  IntMatrix out(m.size(), IntVector(columns.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) out[i][j] = m[i][static_cast<std::size_t>(columns[j])];
  }
  return out;
}

IntMatrix transpose(const IntMatrix& m, std::size_t cols) {
  IntMatrix out(cols, IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  }
  return out;
}

bool RowEchelon::insert(IntVector row) {
  if (row.size() != columns_) throw std::invalid_argument("RowEchelon: row length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p] == 0) continue;
    const mpz_class a = rows_[k][p];
    const mpz_class b = row[p];
    for (std::size_t j = 0; j < columns_; ++j) {
      if (rows_[k][j] == 0) {
        if (row[j] != 0) row[j] *= a;
        continue;
      }
      row[j] = a * row[j] - b * rows_[k][j];
    }
    row = make_primitive(std::move(row), false);
  }
  std::size_t pivot = 0;
  while (pivot < columns_ && row[pivot] == 0) ++pivot;
  if (pivot == columns_) return false;
  rows_.push_back(make_primitive(std::move(row), false));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace gehrhart::linalg
