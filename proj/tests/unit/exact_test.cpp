#include <random>

#include <gtest/gtest.h>

#include "gehrhart/bipoly.hpp"
#include "gehrhart/laurent.hpp"
#include "gehrhart/poly_tq.hpp"
#include "gehrhart/rat_series.hpp"
#include "test_support.hpp"

namespace gehrhart {
namespace {

using testing::lq;
using testing::ptq;

// q-binomial by enumeration: k-subsets of {1..m} weighted by q^{sum - k(k+1)/2}.
LaurentQ qbinom_by_subsets(int m, int k) {
  LaurentQ out;
  if (k < 0 || k > m) return out;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (__builtin_popcount(s) != k) continue;
    std::int64_t sum = 0;
    for (int i = 0; i < m; ++i) {
      if (s & (1U << i)) sum += i + 1;
    }
    out.add_term(sum - k * (k + 1) / 2, 1);
  }
  return out;
}

LaurentQ random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> len(0, 4);
  LaurentQ out;
  for (int i = len(rng); i > 0; --i) out.add_term(exp(rng), coeff(rng));
  return out;
}

TEST(LaurentQ, ZeroCoefficientsAreNeverStored) {
  LaurentQ p = lq({{0, 1}, {2, 3}});
  p.add_term(2, -3);
  EXPECT_EQ(p, LaurentQ(1L));
  EXPECT_EQ(p.terms().size(), 1U);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(LaurentQ(0L), LaurentQ());
}

TEST(LaurentQ, ToString) {
  EXPECT_EQ(lq({{0, 1}, {1, 2}, {2, 3}, {3, 1}}).to_string(), "1 + 2q + 3q^2 + q^3");
  EXPECT_EQ(LaurentQ().to_string(), "0");
  EXPECT_EQ(lq({{-1, 2}, {4, -5}}).to_string(), "2q^-1 - 5q^4");
}

TEST(BarQ, NegatesExponents) {
  EXPECT_EQ(bar_q(lq({{0, 1}, {1, 2}, {2, 3}, {3, 1}})), lq({{0, 1}, {-1, 2}, {-2, 3}, {-3, 1}}));
  EXPECT_EQ(bar_q(LaurentQ()), LaurentQ());
  const LaurentQ p = lq({{-1, 2}, {4, -5}});
  EXPECT_EQ(bar_q(bar_q(p)), p);
}

TEST(BarQ, IsMultiplicative) {
  std::mt19937 rng(testing::kSeed);
  for (int i = 0; i < 200; ++i) {
    const LaurentQ p = random_laurent(rng);
    const LaurentQ r = random_laurent(rng);
    EXPECT_EQ(bar_q(p * r), bar_q(p) * bar_q(r));
  }
}

TEST(LaurentQ, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(testing::kSeed + 1);
  for (int i = 0; i < 200; ++i) {
    const LaurentQ a = random_laurent(rng);
    const LaurentQ b = random_laurent(rng);
    const LaurentQ c = random_laurent(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentQ());
    EXPECT_EQ(a * LaurentQ(1L), a);
  }
}

TEST(LaurentQ, AtOneAndShift) {
  const LaurentQ p = lq({{-2, 3}, {1, -1}});
  EXPECT_EQ(p.at_one(), 2);
  EXPECT_EQ(p.shifted(2), lq({{0, 3}, {3, -1}}));
  EXPECT_FALSE(p.is_polynomial());
  EXPECT_TRUE(p.shifted(2).is_polynomial());
  EXPECT_FALSE(p.has_nonnegative_coefficients());
}

TEST(QInt, PositiveAndNegative) {
  EXPECT_EQ(q_int(0), LaurentQ());
  EXPECT_EQ(q_int(3), lq({{0, 1}, {1, 1}, {2, 1}}));
  // [-k]_q = -q^{-k} [k]_q
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(q_int(-k), -(q_int(k).shifted(-k)));
  // (1 - q)[m]_q = 1 - q^m
  for (int m = -4; m <= 6; ++m) {
    EXPECT_EQ(lq({{0, 1}, {1, -1}}) * q_int(m), lq({{0, 1}}) - LaurentQ::q_power(m));
  }
}

TEST(QBinom, Examples) {
  EXPECT_EQ(qbinom(2, 1), lq({{0, 1}, {1, 1}}));
  EXPECT_EQ(qbinom(4, 2), lq({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  EXPECT_EQ(qbinom(3, 5), LaurentQ());
  EXPECT_EQ(qbinom(3, -1), LaurentQ());
  EXPECT_EQ(qbinom(0, 0), LaurentQ(1L));
}

TEST(QBinom, MatchesSubsetEnumeration) {
  for (int m = 0; m <= 8; ++m) {
    for (int k = -1; k <= m + 1; ++k) {
      const LaurentQ value = qbinom(m, k);
      EXPECT_EQ(value, qbinom_by_subsets(m, k)) << m << " " << k;
      EXPECT_TRUE(value.is_polynomial());
      EXPECT_TRUE(value.has_nonnegative_coefficients());
    }
  }
}

TEST(QBinom, FactorialIdentity) {
  for (int m = 0; m <= 7; ++m) {
    for (int k = 0; k <= m; ++k) {
      EXPECT_EQ(qbinom(m, k) * q_factorial(k) * q_factorial(m - k), q_factorial(m));
    }
  }
}

TEST(QBinom, RejectsNegativeTop) { EXPECT_ANY_THROW(qbinom(-1, 0)); }

TEST(Expand, Examples) {
  RatSeries one{PolyTQ(LaurentQ(1L)), 1, false};
  EXPECT_EQ(expand(one, 2), (std::vector<LaurentQ>{lq({{0, 1}}), lq({{0, 1}, {1, 1}}), lq({{0, 1}, {1, 1}, {2, 1}})}));

  RatSeries hexagon{ptq({{0, 0, 1}, {1, 2, 2}, {1, 1, 1}, {2, 3, -1}, {2, 2, -2}, {3, 4, -1}}), 3, false};
  EXPECT_EQ(expand(hexagon, 1), (std::vector<LaurentQ>{lq({{0, 1}}), lq({{0, 1}, {1, 2}, {2, 3}, {3, 1}})}));

  RatSeries geometric{PolyTQ(LaurentQ(1L)), 0, false};
  EXPECT_EQ(expand(geometric, 3), std::vector<LaurentQ>(4, LaurentQ(1L)));
}

TEST(Expand, NegativeQBinomialTheorem) {
  // 1 / prod_{i=0}^{n-1} (1 - t q^i) = sum_k binom(n+k-1, k)_q t^k
  for (int n = 1; n <= 5; ++n) {
    const auto coeffs = expand(RatSeries{PolyTQ(LaurentQ(1L)), n - 1, false}, 6);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(coeffs[k], qbinom(n + k - 1, k)) << n << " " << k;
  }
}

TEST(Expand, ShiftedQBinomialColumn) {
  // t^k / prod_{i=0}^{k} (1 - t q^i) = sum_m binom(m, k)_q t^m
  for (int k = 0; k <= 5; ++k) {
    const auto coeffs = expand(RatSeries{PolyTQ::monomial(1, k), k, false}, 8);
    for (int m = 0; m <= 8; ++m) EXPECT_EQ(coeffs[m], qbinom(m, k)) << m << " " << k;
  }
}

TEST(Expand, TimesDenominatorInvertsExpansion) {
  std::mt19937 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = trial % 4;
    PolyTQ numerator;
    for (int k = 0; k <= order + 1; ++k) numerator.add_term(k, random_laurent(rng));
    const RatSeries s{numerator, order, false};
    EXPECT_EQ(times_denominator(expand(s, order + 1), order), numerator);
  }
}

TEST(RatSeries, Denominator) {
  EXPECT_EQ((RatSeries{PolyTQ(LaurentQ(1L)), 1, false}.denominator()), ptq({{0, 0, 1}, {1, 0, -1}, {1, 1, -1}, {2, 1, 1}}));
}

TEST(PolyTQ, ReflectAndEvaluate) {
  const PolyTQ p = ptq({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}, {3, 1, -1}});
  EXPECT_EQ(reflect(p, 3), ptq({{3, 0, 1}, {2, -1, 3}, {1, -2, 3}, {0, -3, 1}, {0, -1, -1}}));
  EXPECT_EQ(reflect(reflect(p, 4), 4), p);
  EXPECT_ANY_THROW(reflect(p, 2));
  EXPECT_EQ(p.evaluate(LaurentQ(1L)), lq({{0, 1}, {1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(PolyTQ().degree(), -1);
}

TEST(PolyTQ, Arithmetic) {
  const PolyTQ a = ptq({{0, 0, 1}, {1, 1, -1}});
  const PolyTQ b = ptq({{0, 0, 1}, {1, 1, 1}});
  EXPECT_EQ(a * b, ptq({{0, 0, 1}, {2, 2, -1}}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(pow(b, 2), b * b);
  EXPECT_EQ(b.q_shifted(-1), ptq({{0, -1, 1}, {1, 0, 1}}));
}

TEST(BiPolyXY, EvaluateAndCleared) {
  const BiPolyXY t = BiPolyXY::x() * BiPolyXY::x() + BiPolyXY::x() + BiPolyXY::y();
  EXPECT_EQ(t.evaluate(2, 1), 7);
  EXPECT_EQ(t.to_string(), "x^2 + x + y");
  EXPECT_EQ(t.x_degree(), 2);
  EXPECT_EQ(t.y_degree(), 1);
  // 2^2 T(3/2, 1) = 9 + 6 + 4
  EXPECT_EQ(evaluate_cleared<mpz_class>(t, 3, 2, 2, 1, 1, 1), 19);
  EXPECT_TRUE(t.has_nonnegative_coefficients());
  EXPECT_FALSE((t - BiPolyXY::y() * 2).has_nonnegative_coefficients());
}

}  // namespace
}  // namespace gehrhart
