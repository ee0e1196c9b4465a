#include "gehrhart/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>
#include <algorithm>

namespace gehrhart {

LaurentQ::LaurentQ(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentQ::LaurentQ(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentQ LaurentQ::monomial(const mpz_class& coeff, Exponent exponent) {
  LaurentQ p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentQ LaurentQ::from_terms(const TermMap& terms) {
  LaurentQ p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

mpz_class LaurentQ::coeff(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentQ::add_term(Exponent exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentQ::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

mpz_class LaurentQ::at_one() const {
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

LaurentQ LaurentQ::shifted(Exponent k) const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& other) {
  *this = *this * other;
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentQ operator-(const LaurentQ& a) {
  LaurentQ out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentQ& p) { return os << p.to_string(); }

LaurentQ bar_q(const LaurentQ& p) {
  LaurentQ out;
  for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
  return out;
}

LaurentQ pow(const LaurentQ& base, unsigned exponent) {
  LaurentQ result(1L);
  LaurentQ b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

LaurentQ q_int(std::int64_t m) {
  LaurentQ out;
  if (m >= 0) {
    for (std::int64_t i = 0; i < m; ++i) out.add_term(i, 1);
  } else {
    // [-k]_q = -q^{-k} [k]_q
    for (std::int64_t i = m; i < 0; ++i) out.add_term(i, -1);
  }
  return out;
}

LaurentQ q_factorial(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentQ out(1L);
  for (std::int64_t i = 2; i <= m; ++i) out = out * q_int(i);
  return out;
}

LaurentQ qbinom(std::int64_t m, std::int64_t k) {
  if (m < 0) throw std::invalid_argument("qbinom: m must be non-negative");
  if (k < 0 || k > m) return LaurentQ();
  // q-Pascal: binom(j, i)_q = binom(j-1, i-1)_q + q^i binom(j-1, i)_q
  std::vector<LaurentQ> row(static_cast<std::size_t>(k) + 1);
  row[0] = LaurentQ(1L);
  for (std::int64_t j = 1; j <= m; ++j) {
    const std::int64_t top = std::min(j, k);
    for (std::int64_t i = top; i >= 1; --i) {
      row[i] = row[i - 1] + row[i].shifted(i);
    }
  }
  return row[k];
}

}  // namespace gehrhart
