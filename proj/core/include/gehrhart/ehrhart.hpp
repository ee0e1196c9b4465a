#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gehrhart/bipoly.hpp"
#include "gehrhart/laurent.hpp"
#include "gehrhart/matroid.hpp"
#include "gehrhart/poly_tq.hpp"
#include "gehrhart/rat_series.hpp"

namespace gehrhart {

/// Quantum integer-valued polynomial sum_k f_k(q) [t choose k]_q, stored by
/// its coefficients in the q-binomial basis.
struct QIVP {
  std::vector<LaurentQ> basis_coeffs;

  std::int64_t degree() const { return static_cast<std::int64_t>(basis_coeffs.size()) - 1; }
  bool coefficients_are_polynomials() const;

  friend bool operator==(const QIVP&, const QIVP&) = default;
};

/// i_Z(m;q) or the interior count ~i_Z(m;q).
struct GradedCount {
  LaurentQ value;
  std::int64_t m = 0;
  bool interior = false;
};

/// Outcome of a cross-check; witness describes the first mismatch.
struct CheckResult {
  bool passed = true;
  std::string witness;

  explicit operator bool() const { return passed; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// q^{(n-d)m} [m]_q^d T([m +- 1]_q / [m]_q, q^{-m}). For m = 0 the
/// non-interior count is 1; the interior count at m = 0 is rejected.
/// Throws UnimodularityError for non-unimodular input.
GradedCount graded_count(const RealizedMatroid& m, std::int64_t dilate, bool interior = false);

/// Same formula driven by a precomputed Tutte polynomial.
LaurentQ graded_count_from_tutte(const BiPolyXY& tutte, int d, int n, std::int64_t dilate, bool interior);

/// (1 + (q-1)t)^{n-d} t^d T((qt+1)/t, 1/(1+(q-1)t)) in the power basis of t.
PolyTQ ehr_power_form(const RealizedMatroid& m);

/// Graded Ehrhart polynomial in the q-binomial basis.
QIVP ehr_poly(const RealizedMatroid& m);

/// Converts a power-basis polynomial that takes Laurent values at every
/// q-integer into the q-binomial basis. Throws InternalConsistencyError when
/// the reconstruction does not reproduce the input.
QIVP to_qbinomial_basis(const PolyTQ& power_form);

/// sum_k f_k(q) binom(m, k)_q.
LaurentQ eval_qivp(const QIVP& p, std::int64_t m);

/// Value of the bar-involuted polynomial at [m]_q, via the basis identity
/// bar([t choose k])([m]_q) = (-1)^k q^{k(k+1)/2} binom(m+k-1, k)_q.
LaurentQ bar_eval(const QIVP& p, std::int64_t m);

/// sum_{m >= 0} P([m]_q) t^m over the order-deg(P) denominator.
RatSeries qivp_series(const QIVP& p);

/// sum_{m >= 1} barP([m]_q) t^m over the order-deg(P) denominator.
RatSeries qivp_bar_series(const QIVP& p);

/// E_Z(t, q).
RatSeries series(const RealizedMatroid& m);

/// ~E_Z(t, q), assembled from the bar-involuted basis expansion.
RatSeries interior_series(const RealizedMatroid& m);

/// (-1)^{n+d} q^{n(n+1)/2 - d} t^{n+1} N(1/t, 1/q): the interior numerator
/// predicted by reciprocity from the ordinary one.
PolyTQ reciprocal_numerator(const PolyTQ& numerator, int n, int d);

/// Checks the numerator identity and, for 1 <= m <= m_max,
/// (-1)^d q^{-d} bar_eval(ehr, m) = ~i_Z(m; q).
CheckResult reciprocity_check(const RealizedMatroid& m, std::int64_t m_max);

}  // namespace gehrhart
