#include "gehrhart/ehrhart.hpp"

#include <algorithm>
#include <string>

#include "gehrhart/errors.hpp"

namespace gehrhart {

namespace {

void require_unimodular(const RealizedMatroid& m) {
  if (!m.is_unimodular()) {
    throw UnimodularityError("matrix is not unimodular: some maximal minor lies outside {-1, 0, 1}");
  }
}

LaurentQ sign(std::int64_t exponent) { return (exponent % 2 == 0) ? LaurentQ(1L) : LaurentQ(-1L); }

// prod_{i=from}^{to} (1 - t q^i)
PolyTQ pochhammer_tail(std::int64_t from, std::int64_t to) {
  PolyTQ out(1L);
  for (std::int64_t i = from; i <= to; ++i) {
    out = out * (PolyTQ(1L) - PolyTQ::monomial(LaurentQ::q_power(i), 1));
  }
  return out;
}

}  // namespace

bool QIVP::coefficients_are_polynomials() const {
  return std::all_of(basis_coeffs.begin(), basis_coeffs.end(), [](const LaurentQ& f) { return f.is_polynomial(); });
}

LaurentQ graded_count_from_tutte(const BiPolyXY& tutte, int d, int n, std::int64_t dilate, bool interior) {
  if (dilate < 0) throw ContractViolation("graded_count requires m >= 0");
  if (dilate == 0) {
    if (interior) throw ContractViolation("the interior count is defined for m >= 1 only");
    return LaurentQ(1L);
  }
  const LaurentQ x_num = q_int(interior ? dilate - 1 : dilate + 1);
  const LaurentQ x_den = q_int(dilate);
  const LaurentQ y = LaurentQ::q_power(-dilate);
  const LaurentQ cleared =
      evaluate_cleared(tutte, x_num, x_den, d, y, LaurentQ(1L), std::max(tutte.y_degree(), 0));
  return cleared.shifted(static_cast<LaurentQ::Exponent>(n - d) * dilate);
}

GradedCount graded_count(const RealizedMatroid& m, std::int64_t dilate, bool interior) {
  require_unimodular(m);
  GradedCount out;
  out.m = dilate;
  out.interior = interior;
  if (dilate == 0 && !interior) {
    out.value = LaurentQ(1L);
    return out;
  }
  out.value = graded_count_from_tutte(tutte(m), static_cast<int>(m.d()), static_cast<int>(m.n()), dilate, interior);
  return out;
}

PolyTQ ehr_power_form(const RealizedMatroid& m) {
  require_unimodular(m);
  const int d = static_cast<int>(m.d());
  const int n = static_cast<int>(m.n());
  const PolyTQ t = PolyTQ::t();
  const PolyTQ q_minus_one(LaurentQ::q_power(1) - LaurentQ(1L));
  const PolyTQ x_num = PolyTQ(LaurentQ::q_power(1)) * t + PolyTQ(1L);
  const PolyTQ y_den = PolyTQ(1L) + q_minus_one * t;
  return evaluate_cleared(tutte(m), x_num, t, d, PolyTQ(1L), y_den, n - d);
}

QIVP to_qbinomial_basis(const PolyTQ& power_form) {
  const std::int64_t deg = std::max<std::int64_t>(power_form.degree(), 0);
  // Values at t = [m]_q are lower unitriangular in the basis: binom(m, m)_q = 1.
  QIVP out;
  out.basis_coeffs.resize(static_cast<std::size_t>(deg) + 1);
  for (std::int64_t m = 0; m <= deg; ++m) {
    LaurentQ value = power_form.evaluate(q_int(m));
    for (std::int64_t k = 0; k < m; ++k) value -= out.basis_coeffs[static_cast<std::size_t>(k)] * qbinom(m, k);
    out.basis_coeffs[static_cast<std::size_t>(m)] = value;
  }

  // Reconstruct D * P(t) with D = q^{binom(deg,2)} [deg]_q!, using
  // D / (q^{binom(k,2)} [k]_q!) = q^{binom(deg,2) - binom(k,2)} [k+1]_q ... [deg]_q,
  // so the check never divides.
  auto choose2 = [](std::int64_t k) { return k * (k - 1) / 2; };
  const PolyTQ t = PolyTQ::t();
  PolyTQ falling(1L);  // t (t - [1]_q) ... (t - [k-1]_q)
  PolyTQ rebuilt;
  for (std::int64_t k = 0; k <= deg; ++k) {
    if (k > 0) falling = falling * (t - PolyTQ(q_int(k - 1)));
    LaurentQ scale = LaurentQ::q_power(choose2(deg) - choose2(k));
    for (std::int64_t j = k + 1; j <= deg; ++j) scale = scale * q_int(j);
    rebuilt += falling * PolyTQ(out.basis_coeffs[static_cast<std::size_t>(k)] * scale);
  }
  LaurentQ big_d = q_factorial(deg).shifted(choose2(deg));
  if (!(rebuilt == power_form * PolyTQ(big_d))) {
    throw InternalConsistencyError("q-binomial basis expansion does not reproduce the polynomial");
  }
  return out;
}

QIVP ehr_poly(const RealizedMatroid& m) {
  QIVP p = to_qbinomial_basis(ehr_power_form(m));
  // Pad to t-degree n so the series order matches the ground set.
  p.basis_coeffs.resize(std::max<std::size_t>(p.basis_coeffs.size(), m.n() + 1));
  return p;
}

LaurentQ eval_qivp(const QIVP& p, std::int64_t m) {
  if (m < 0) throw ContractViolation("eval_qivp requires m >= 0");
  LaurentQ total;
  for (std::int64_t k = 0; k <= std::min(p.degree(), m); ++k) {
    total += p.basis_coeffs[static_cast<std::size_t>(k)] * qbinom(m, k);
  }
  return total;
}

LaurentQ bar_eval(const QIVP& p, std::int64_t m) {
  if (m < 1) throw ContractViolation("bar_eval requires m >= 1");
  LaurentQ total;
  for (std::int64_t k = 0; k <= p.degree(); ++k) {
    const LaurentQ basis = (sign(k) * qbinom(m + k - 1, k)).shifted(k * (k + 1) / 2);
    total += bar_q(p.basis_coeffs[static_cast<std::size_t>(k)]) * basis;
  }
  return total;
}

RatSeries qivp_series(const QIVP& p) {
  RatSeries s;
  s.order = std::max<std::int64_t>(p.degree(), 0);
  for (std::int64_t k = 0; k <= p.degree(); ++k) {
    s.numerator += PolyTQ::monomial(p.basis_coeffs[static_cast<std::size_t>(k)], k) * pochhammer_tail(k + 1, s.order);
  }
  return s;
}

RatSeries qivp_bar_series(const QIVP& p) {
  // sum_{m>=1} binom(m+k-1, k)_q t^m = t / prod_{i=0}^{k} (1 - t q^i)
  RatSeries s;
  s.order = std::max<std::int64_t>(p.degree(), 0);
  s.interior = true;
  for (std::int64_t k = 0; k <= p.degree(); ++k) {
    const LaurentQ c = (sign(k) * bar_q(p.basis_coeffs[static_cast<std::size_t>(k)])).shifted(k * (k + 1) / 2);
    s.numerator += PolyTQ::monomial(c, 1) * pochhammer_tail(k + 1, s.order);
  }
  return s;
}

RatSeries series(const RealizedMatroid& m) { return qivp_series(ehr_poly(m)); }

RatSeries interior_series(const RealizedMatroid& m) {
  const auto d = static_cast<std::int64_t>(m.d());
  RatSeries s = qivp_bar_series(ehr_poly(m));
  // ~E = (-1)^d q^{-d} barE
  s.numerator = PolyTQ(sign(d)) * s.numerator.q_shifted(-d);
  s.interior = true;
  return s;
}

PolyTQ reciprocal_numerator(const PolyTQ& numerator, int n, int d) {
  const std::int64_t exponent = static_cast<std::int64_t>(n) * (n + 1) / 2 - d;
  return PolyTQ(sign(n + d)) * reflect(numerator, n + 1).q_shifted(exponent);
}

CheckResult reciprocity_check(const RealizedMatroid& m, std::int64_t m_max) {
  require_unimodular(m);
  const int n = static_cast<int>(m.n());
  const int d = static_cast<int>(m.d());
  const QIVP ehr = ehr_poly(m);
  const RatSeries outer = qivp_series(ehr);
  const RatSeries inner = interior_series(m);
  const PolyTQ predicted = reciprocal_numerator(outer.numerator, n, d);
  if (!(predicted == inner.numerator)) {
    return CheckResult::fail("interior numerator " + inner.numerator.to_string() +
                             " differs from reflected numerator " + predicted.to_string());
  }
  const BiPolyXY t = tutte(m);
  for (std::int64_t k = 1; k <= m_max; ++k) {
    const LaurentQ via_bar = (sign(d) * bar_eval(ehr, k)).shifted(-d);
    const LaurentQ direct = graded_count_from_tutte(t, d, n, k, true);
    if (!(via_bar == direct)) {
      return CheckResult::fail("m = " + std::to_string(k) + ": bar evaluation gives " + via_bar.to_string() +
                               ", interior count is " + direct.to_string());
    }
  }
  return {};
}

}  // namespace gehrhart
