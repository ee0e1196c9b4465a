#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gehrhart/laurent.hpp"

namespace gehrhart {

/// Polynomial in t whose coefficients are Laurent polynomials in q.
/// Zero coefficients are stripped after every operation.
class PolyTQ {
 public:
  using Degree = std::int64_t;
  using CoeffMap = std::map<Degree, LaurentQ>;

  PolyTQ() = default;
  PolyTQ(const LaurentQ& constant);  // NOLINT(google-explicit-constructor)
  PolyTQ(long constant) : PolyTQ(LaurentQ(constant)) {}  // NOLINT

  /// coeff * t^k.
  static PolyTQ monomial(const LaurentQ& coeff, Degree k);
  static PolyTQ t() { return monomial(1, 1); }

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentQ coeff(Degree k) const;
  void add_term(Degree k, const LaurentQ& coeff);

  /// -1 for the zero polynomial.
  Degree degree() const { return is_zero() ? -1 : coeffs_.rbegin()->first; }
  Degree low_degree() const { return is_zero() ? -1 : coeffs_.begin()->first; }

  /// Substitute t := value.
  LaurentQ evaluate(const LaurentQ& value) const;

  /// Multiply every coefficient by q^k.
  PolyTQ q_shifted(LaurentQ::Exponent k) const;

  PolyTQ& operator+=(const PolyTQ& other);
  PolyTQ& operator-=(const PolyTQ& other);
  PolyTQ& operator*=(const PolyTQ& other);

  friend PolyTQ operator+(PolyTQ a, const PolyTQ& b) { return a += b; }
  friend PolyTQ operator-(PolyTQ a, const PolyTQ& b) { return a -= b; }
  friend PolyTQ operator*(const PolyTQ& a, const PolyTQ& b);
  friend PolyTQ operator-(const PolyTQ& a);
  friend bool operator==(const PolyTQ& a, const PolyTQ& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  CoeffMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyTQ& p);

PolyTQ pow(const PolyTQ& base, unsigned exponent);

/// t^shift * p(1/t, 1/q). Requires shift >= deg_t(p).
PolyTQ reflect(const PolyTQ& p, PolyTQ::Degree shift);

/// Specialize q := 1 coefficient-wise; returns plain integer coefficients.
std::map<PolyTQ::Degree, mpz_class> at_q_one(const PolyTQ& p);

}  // namespace gehrhart
