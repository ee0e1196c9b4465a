#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gehrhart/ehrhart.hpp"
#include "gehrhart/laurent.hpp"
#include "gehrhart/matroid.hpp"

namespace gehrhart {

/// (c_1 x_1 + ... + c_d x_d)^exponent
struct PowerGenerator {
  linalg::IntVector form;
  int exponent = 0;
};

/// Ideal generated by powers of linear forms in `variables` unknowns.
struct GradedIdealSpec {
  std::size_t variables = 0;
  std::vector<PowerGenerator> generators;
  int degree_cap = 0;

  /// An exponent-0 generator makes the ideal the whole ring.
  bool is_unit_ideal() const;
};

struct HilbertFunction {
  std::vector<std::size_t> dims;  // index = degree, trailing zeros trimmed
  LaurentQ as_laurent;

  std::size_t total() const;
};

/// Guard on the number of degree-k monomials.
inline constexpr std::size_t kMaxMonomialsPerDegree = 50'000;

/// Generators v^{m(v)+1} over the cocircuit vectors.
GradedIdealSpec external_spec(const RealizedMatroid& m);
/// Generators v^{m(v)-1}; a coloop yields an exponent-0 generator.
GradedIdealSpec internal_spec(const RealizedMatroid& m);

/// Hilbert function of Sym / ideal by exact rank computations per degree,
/// monomials ordered graded-lexicographically.
HilbertFunction hilbert(const GradedIdealSpec& spec);

/// Compares both quotient Hilbert series against q^{n-d} T(1+q, 1/q) and
/// q^{n-d} T(0, 1/q).
CheckResult verify_zonotopal(const RealizedMatroid& m);

/// q^{n-d} T(1+q, 1/q) (external) or q^{n-d} T(0, 1/q) (internal).
LaurentQ zonotopal_hilbert_from_tutte(const BiPolyXY& tutte, int d, int n, bool internal);

/// Exponent vectors of total degree k in `variables` unknowns, graded-lex order.
std::vector<std::vector<int>> monomials_of_degree(std::size_t variables, int degree);

}  // namespace gehrhart
