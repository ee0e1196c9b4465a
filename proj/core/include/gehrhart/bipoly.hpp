#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace gehrhart {

/// Polynomial in x, y with big-integer coefficients; holds Tutte polynomials.
class BiPolyXY {
 public:
  using Exponents = std::pair<int, int>;  // (x, y)
  using CoeffMap = std::map<Exponents, mpz_class>;

  BiPolyXY() = default;
  BiPolyXY(long constant);  // NOLINT(google-explicit-constructor)
  BiPolyXY(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  static BiPolyXY monomial(const mpz_class& coeff, int x_exp, int y_exp);
  static BiPolyXY x() { return monomial(1, 1, 0); }
  static BiPolyXY y() { return monomial(1, 0, 1); }

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  mpz_class coeff(int x_exp, int y_exp) const;
  void add_term(int x_exp, int y_exp, const mpz_class& coeff);

  int x_degree() const;
  int y_degree() const;
  bool has_nonnegative_coefficients() const;

  /// Evaluate at integers.
  mpz_class evaluate(const mpz_class& x, const mpz_class& y) const;

  BiPolyXY& operator+=(const BiPolyXY& other);
  BiPolyXY& operator-=(const BiPolyXY& other);
  BiPolyXY& operator*=(const BiPolyXY& other);

  friend BiPolyXY operator+(BiPolyXY a, const BiPolyXY& b) { return a += b; }
  friend BiPolyXY operator-(BiPolyXY a, const BiPolyXY& b) { return a -= b; }
  friend BiPolyXY operator*(const BiPolyXY& a, const BiPolyXY& b);
  friend bool operator==(const BiPolyXY& a, const BiPolyXY& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  CoeffMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BiPolyXY& p);

BiPolyXY pow(const BiPolyXY& base, unsigned exponent);

template <class Ring>
Ring ring_pow(const Ring& base, unsigned exponent) {
  Ring result(1L);
  Ring b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

/// Evaluates T at x = x_num/x_den, y = y_num/y_den with both denominators
/// cleared against degree bounds:
///
///   sum_{i,j} c_ij x_num^i x_den^(x_bound-i) y_num^j y_den^(y_bound-j).
///
/// Every term of T must satisfy i <= x_bound and j <= y_bound.
template <class Ring>
Ring evaluate_cleared(const BiPolyXY& poly, const Ring& x_num, const Ring& x_den, int x_bound,
                      const Ring& y_num, const Ring& y_den, int y_bound) {
  Ring total(0L);
  for (const auto& [exps, c] : poly.coeffs()) {
    const auto [i, j] = exps;
    Ring term = ring_pow(x_num, static_cast<unsigned>(i)) *
                ring_pow(x_den, static_cast<unsigned>(x_bound - i)) *
                ring_pow(y_num, static_cast<unsigned>(j)) *
                ring_pow(y_den, static_cast<unsigned>(y_bound - j));
    total = total + Ring(c) * term;
  }
  return total;
}

}  // namespace gehrhart
