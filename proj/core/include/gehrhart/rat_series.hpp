#pragma once

#include <cstdint>
#include <vector>

#include "gehrhart/poly_tq.hpp"

namespace gehrhart {

/// numerator / prod_{i=0}^{order} (1 - t q^i).
struct RatSeries {
  PolyTQ numerator;
  std::int64_t order = 0;
  bool interior = false;

  /// (1 - t)(1 - tq)...(1 - tq^order).
  PolyTQ denominator() const;

  friend bool operator==(const RatSeries&, const RatSeries&) = default;
};

/// Coefficients of t^0..t^up_to of the power-series expansion.
std::vector<LaurentQ> expand(const RatSeries& series, std::int64_t up_to);

/// (sum_k coefficients[k] t^k) * prod_{i=0}^{order} (1 - t q^i), truncated
/// below t^{coefficients.size()}. Recovers a numerator from enough known
/// series coefficients.
PolyTQ times_denominator(const std::vector<LaurentQ>& coefficients, std::int64_t order);

}  // namespace gehrhart
