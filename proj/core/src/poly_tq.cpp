#include "gehrhart/poly_tq.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gehrhart {

PolyTQ::PolyTQ(const LaurentQ& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

PolyTQ PolyTQ::monomial(const LaurentQ& coeff, Degree k) {
  if (k < 0) throw std::invalid_argument("PolyTQ: negative t exponent");
  PolyTQ p;
  p.add_term(k, coeff);
  return p;
}

LaurentQ PolyTQ::coeff(Degree k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaurentQ() : it->second;
}

void PolyTQ::add_term(Degree k, const LaurentQ& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LaurentQ PolyTQ::evaluate(const LaurentQ& value) const {
  if (is_zero()) return {};
  // Horner from the top degree down.
  LaurentQ acc;
  Degree k = degree();
  for (; k >= 0; --k) {
    acc = acc * value + coeff(k);
  }
  return acc;
}

PolyTQ PolyTQ::q_shifted(LaurentQ::Exponent k) const {
  PolyTQ out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), deg, c.shifted(k));
  return out;
}

PolyTQ& PolyTQ::operator+=(const PolyTQ& other) {
  for (const auto& [k, c] : other.coeffs_) add_term(k, c);
  return *this;
}

PolyTQ& PolyTQ::operator-=(const PolyTQ& other) {
  for (const auto& [k, c] : other.coeffs_) add_term(k, -c);
  return *this;
}

PolyTQ& PolyTQ::operator*=(const PolyTQ& other) {
  *this = *this * other;
  return *this;
}

PolyTQ operator*(const PolyTQ& a, const PolyTQ& b) {
  PolyTQ out;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

PolyTQ operator-(const PolyTQ& a) {
  PolyTQ out;
  for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

std::string PolyTQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k == 1) os << "t";
    if (k > 1) os << "t^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyTQ& p) { return os << p.to_string(); }

PolyTQ pow(const PolyTQ& base, unsigned exponent) {
  PolyTQ result(1L);
  PolyTQ b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

PolyTQ reflect(const PolyTQ& p, PolyTQ::Degree shift) {
  if (p.degree() > shift) throw std::invalid_argument("reflect: shift below t-degree");
  PolyTQ out;
  for (const auto& [k, c] : p.coeffs()) out.add_term(shift - k, bar_q(c));
  return out;
}

std::map<PolyTQ::Degree, mpz_class> at_q_one(const PolyTQ& p) {
  std::map<PolyTQ::Degree, mpz_class> out;
  for (const auto& [k, c] : p.coeffs()) {
    mpz_class v = c.at_one();
    if (v != 0) out.emplace(k, v);
  }
  return out;
}

}  // namespace gehrhart
