#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace gehrhart {

/// Finitely supported Laurent polynomial in q with big-integer coefficients.
///
/// Zero coefficients are never stored, so two values are equal exactly when
/// their term maps are equal.
class LaurentQ {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, mpz_class>;

  LaurentQ() = default;
  LaurentQ(long constant);  // NOLINT(google-explicit-constructor)
  LaurentQ(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  static LaurentQ monomial(const mpz_class& coeff, Exponent exponent);
  static LaurentQ q_power(Exponent exponent) { return monomial(1, exponent); }
  static LaurentQ from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(Exponent exponent) const;
  void add_term(Exponent exponent, const mpz_class& coeff);

  // Only meaningful for nonzero values.
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }
  bool has_nonnegative_coefficients() const;

  /// Value at q = 1.
  mpz_class at_one() const;

  /// Multiply by q^k.
  LaurentQ shifted(Exponent k) const;

  LaurentQ& operator+=(const LaurentQ& other);
  LaurentQ& operator-=(const LaurentQ& other);
  LaurentQ& operator*=(const LaurentQ& other);

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator-(const LaurentQ& a);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "1 + 2q + 3q^2 + q^3".
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentQ& p);

/// q -> q^{-1}.
LaurentQ bar_q(const LaurentQ& p);

LaurentQ pow(const LaurentQ& base, unsigned exponent);

/// The q-integer [m]_q = (1 - q^m)/(1 - q); defined for every integer m.
LaurentQ q_int(std::int64_t m);

/// [m]_q! for m >= 0.
LaurentQ q_factorial(std::int64_t m);

/// Gaussian binomial coefficient; zero unless 0 <= k <= m.
LaurentQ qbinom(std::int64_t m, std::int64_t k);

}  // namespace gehrhart
