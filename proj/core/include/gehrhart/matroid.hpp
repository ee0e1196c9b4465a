#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gehrhart/bipoly.hpp"
#include "gehrhart/linalg.hpp"

namespace gehrhart {

/// Ground-set element subsets are bitmasks; bit i is element i (0-based).
using ElementSet = std::uint32_t;

/// Enumeration guard on the ground-set size.
inline constexpr int kMaxGroundSet = 16;

/// A d x n integer matrix of full row rank d.
class Realization {
 public:
  Realization() = default;
  /// Throws RankDeficientError if rank < row count, ParseError on ragged rows.
  Realization(std::size_t rows, std::size_t cols, linalg::IntMatrix entries);
  static Realization from_rows(const linalg::IntMatrix& rows);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  const linalg::IntMatrix& entries() const { return entries_; }
  const mpz_class& at(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  linalg::IntVector column(std::size_t j) const;

  friend bool operator==(const Realization&, const Realization&) = default;

 private:
  std::size_t d_ = 0;
  std::size_t n_ = 0;
  linalg::IntMatrix entries_;
};

/// Minimal dependent set together with its fixed dependence
/// sum_{i in C} alpha_i A_i = 0 (alpha primitive, first entry positive).
struct CircuitRep {
  ElementSet support = 0;
  std::vector<int> elements;      // sorted
  std::vector<mpz_class> alpha;   // parallel to elements
};

/// Primitive rowspace vector with minimal support; c^T A = scale * v.
/// scale is 1 whenever the realization is unimodular.
struct CocircuitVector {
  linalg::IntVector v;
  linalg::IntVector c;
  mpz_class scale = 1;
  ElementSet support = 0;
  int support_size = 0;
};

struct Component {
  std::vector<int> elements;
  bool is_circuit = false;
};

enum class MinorOp { kDelete, kContract };

/// Matroid of the columns of a Realization. Circuits, cocircuit vectors and
/// the unimodularity flag are computed eagerly; the object is immutable.
class RealizedMatroid {
 public:
  /// Throws SizeGuardError when n exceeds kMaxGroundSet.
  explicit RealizedMatroid(Realization realization);

  const Realization& realization() const { return realization_; }
  std::size_t d() const { return realization_.d(); }
  std::size_t n() const { return realization_.n(); }
  ElementSet ground_set() const;

  const std::vector<CircuitRep>& circuits() const { return circuits_; }
  const std::vector<CocircuitVector>& cocircuits() const { return cocircuits_; }

  std::size_t rank(ElementSet subset) const;
  bool is_loop(int element) const;
  bool is_coloop(int element) const;
  bool is_unimodular() const { return unimodular_; }

 private:
  void compute_circuits();
  void compute_cocircuits();
  void compute_unimodularity();

  Realization realization_;
  std::vector<CircuitRep> circuits_;
  std::vector<CocircuitVector> cocircuits_;
  bool unimodular_ = false;
};

RealizedMatroid from_matrix(const linalg::IntMatrix& rows);
/// Explicit shape for matrices with zero rows (d = 0, n > 0).
RealizedMatroid from_matrix(std::size_t d, std::size_t n, const linalg::IntMatrix& rows);

std::size_t rank(const RealizedMatroid& m, ElementSet subset);
bool is_unimodular(const RealizedMatroid& m);

/// Deletion-contraction with a memo keyed on a canonical column signature.
BiPolyXY tutte(const RealizedMatroid& m);
BiPolyXY tutte(const Realization& a);

/// Closed-form Tutte polynomial by corank-nullity expansion over all subsets.
/// Independent of the recursion in tutte(); intended as an oracle.
BiPolyXY tutte_by_subsets(const RealizedMatroid& m);

/// Delete or contract one element (0-based). Throws ContractViolation for
/// deleting a coloop or contracting a loop.
RealizedMatroid minor(const RealizedMatroid& m, MinorOp op, int element);

/// Matroid of A(m): the columns of A repeated m times, row-major over [m]x[n].
RealizedMatroid thicken(const RealizedMatroid& m, int copies);

/// Tutte polynomial of the m-thickening from the Tutte polynomial of the base
/// matroid of rank d.
BiPolyXY tutte_thickened(const BiPolyXY& t, int d, int copies);

std::vector<Component> connected_components(const RealizedMatroid& m);

/// Subsets of rank |S|.
std::size_t count_independent_sets(const RealizedMatroid& m);

/// 0-based element list of a mask.
std::vector<int> elements_of(ElementSet s);

}  // namespace gehrhart
