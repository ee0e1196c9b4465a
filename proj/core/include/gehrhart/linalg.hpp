#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace gehrhart::linalg {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatMatrix = std::vector<std::vector<mpq_class>>;

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(IntMatrix m);

/// Determinant of a square matrix (Bareiss).
mpz_class determinant(IntMatrix m);

/// Reduced row echelon form over the rationals. Returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, each vector scaled to a
/// primitive integer vector.
std::vector<IntVector> kernel_basis(const IntMatrix& m, std::size_t cols);

/// Divide by the gcd of the entries; optionally flip so the first nonzero
/// entry is positive. The zero vector is returned unchanged.
IntVector make_primitive(IntVector v, bool normalize_sign = true);

mpz_class content(const IntVector& v);

IntMatrix select_columns(const IntMatrix& m, const std::vector<int>& columns);
IntMatrix transpose(const IntMatrix& m, std::size_t cols);

/// Incrementally maintained echelon basis of a row space, exact over Q.
/// Rows are kept primitive after every reduction step.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  /// Reduces the row against the basis; returns true if it was independent.
  bool insert(IntVector row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gehrhart::linalg
