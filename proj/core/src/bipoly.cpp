#include "gehrhart/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gehrhart {

BiPolyXY::BiPolyXY(long constant) {
  if (constant != 0) coeffs_.emplace(Exponents{0, 0}, constant);
}

BiPolyXY::BiPolyXY(const mpz_class& constant) {
  if (constant != 0) coeffs_.emplace(Exponents{0, 0}, constant);
}

BiPolyXY BiPolyXY::monomial(const mpz_class& coeff, int x_exp, int y_exp) {
  BiPolyXY p;
  p.add_term(x_exp, y_exp, coeff);
  return p;
}

mpz_class BiPolyXY::coeff(int x_exp, int y_exp) const {
  auto it = coeffs_.find({x_exp, y_exp});
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void BiPolyXY::add_term(int x_exp, int y_exp, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(Exponents{x_exp, y_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

int BiPolyXY::x_degree() const {
  int deg = -1;
  for (const auto& [e, c] : coeffs_) deg = std::max(deg, e.first);
  return deg;
}

int BiPolyXY::y_degree() const {
  int deg = -1;
  for (const auto& [e, c] : coeffs_) deg = std::max(deg, e.second);
  return deg;
}

bool BiPolyXY::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

mpz_class BiPolyXY::evaluate(const mpz_class& x, const mpz_class& y) const {
  mpz_class total = 0;
  for (const auto& [e, c] : coeffs_) {
    mpz_class xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e.first));
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(e.second));
    total += c * xp * yp;
  }
  return total;
}

BiPolyXY& BiPolyXY::operator+=(const BiPolyXY& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e.first, e.second, c);
  return *this;
}

BiPolyXY& BiPolyXY::operator-=(const BiPolyXY& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e.first, e.second, -c);
  return *this;
}

BiPolyXY& BiPolyXY::operator*=(const BiPolyXY& other) {
  *this = *this * other;
  return *this;
}

BiPolyXY operator*(const BiPolyXY& a, const BiPolyXY& b) {
  BiPolyXY out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

std::string BiPolyXY::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally: x^2 + x + y.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    if (mag != 1 || constant) os << mag.get_str();
    if (e.first > 0) os << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) os << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPolyXY& p) { return os << p.to_string(); }

BiPolyXY pow(const BiPolyXY& base, unsigned exponent) { return ring_pow(base, exponent); }

}  // namespace gehrhart
