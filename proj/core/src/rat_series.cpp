#include "gehrhart/rat_series.hpp"

#include <stdexcept>

namespace gehrhart {

PolyTQ RatSeries::denominator() const {
  PolyTQ den(1L);
  for (std::int64_t i = 0; i <= order; ++i) {
    den = den * (PolyTQ(1L) - PolyTQ::monomial(LaurentQ::q_power(i), 1));
  }
  return den;
}

std::vector<LaurentQ> expand(const RatSeries& series, std::int64_t up_to) {
  if (up_to < 0) throw std::invalid_argument("expand: up_to must be non-negative");
  const auto len = static_cast<std::size_t>(up_to) + 1;
  std::vector<LaurentQ> coeffs(len);
  for (const auto& [k, c] : series.numerator.coeffs()) {
    if (k <= up_to) coeffs[static_cast<std::size_t>(k)] = c;
  }
  // Divide by (1 - t q^i) one factor at a time: s_k <- s_k + q^i s_{k-1}.
  for (std::int64_t i = 0; i <= series.order; ++i) {
    for (std::size_t k = 1; k < len; ++k) {
      coeffs[k] += coeffs[k - 1].shifted(i);
    }
  }
  return coeffs;
}

PolyTQ times_denominator(const std::vector<LaurentQ>& coefficients, std::int64_t order) {
  std::vector<LaurentQ> s = coefficients;
  // Multiply by (1 - t q^i): s_k <- s_k - q^i s_{k-1}, highest k first.
  for (std::int64_t i = 0; i <= order; ++i) {
    for (std::size_t k = s.size(); k-- > 1;) {
      s[k] -= s[k - 1].shifted(i);
    }
  }
  PolyTQ out;
  for (std::size_t k = 0; k < s.size(); ++k) out.add_term(static_cast<PolyTQ::Degree>(k), s[k]);
  return out;
}

}  // namespace gehrhart
