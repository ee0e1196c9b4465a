#include <random>

#include <gtest/gtest.h>

#include "gehrhart/ehrhart.hpp"
#include "gehrhart/errors.hpp"
#include "gehrhart/harmonic.hpp"
#include "test_support.hpp"

namespace gehrhart {
namespace {

using testing::lq;
using testing::mat;
using testing::ptq;

RealizedMatroid hexagon() { return from_matrix(mat({{1, 0, 1}, {0, 1, 1}})); }

// Independent sets by rank queries.
std::size_t independent_sets(const RealizedMatroid& m) {
  std::size_t count = 0;
  for (ElementSet s = 0; s < (ElementSet{1} << m.n()); ++s) {
    if (m.rank(s) == static_cast<std::size_t>(__builtin_popcount(s))) ++count;
  }
  return count;
}

TEST(Segre, Examples) {
  const auto hex = segre_generators(hexagon());
  ASSERT_EQ(hex.linear.size(), 1U);
  EXPECT_EQ(format_generator(hex.linear[0]), "z_{1} + z_{2} - z_{3}");
  EXPECT_EQ(hex.linear[0].q_degree, 1);

  EXPECT_TRUE(segre_generators(from_matrix(testing::identity(3))).linear.empty());

  const auto pair = segre_generators(from_matrix(mat({{1, 1}})));
  ASSERT_EQ(pair.linear.size(), 1U);
  EXPECT_EQ(format_generator(pair.linear[0]), "z_{1} - z_{2}");
}

TEST(Segre, OneGeneratorPerCircuitAndShift) {
  for (const auto& entry : testing::corpus()) {
    const auto m = from_matrix(entry.matrix);
    std::size_t expected = 0;
    for (const auto& c : m.circuits()) expected += std::size_t{1} << (m.n() - c.elements.size());
    const auto gens = segre_generators(m);
    EXPECT_EQ(gens.linear.size(), expected) << entry.name;
    for (const auto& g : gens.linear) {
      for (const auto& [s, c] : g.terms) EXPECT_EQ(__builtin_popcount(s), g.q_degree);
      EXPECT_EQ(g.q_degree, __builtin_popcount(g.shift) + 1);
    }
  }
}

TEST(Segre, PresentationText) {
  const std::string text = segre_generators(hexagon()).presentation();
  EXPECT_EQ(text,
            "z_{1} + z_{2} - z_{3}\n"
            "plus the binomials z_S z_T - z_{S cup T} z_{S cap T} for all S, T subsets of [3]\n");
  const auto k3 = segre_generators(from_matrix(mat({{1, 0, 1, 1}, {0, 1, 1, 0}})));
  EXPECT_NE(k3.presentation().find("z_{1,2} - z_{2,4}"), std::string::npos);
}

TEST(Segre, LoopGeneratesMonomials) {
  const auto gens = segre_generators(from_matrix(mat({{1, 0}})));
  ASSERT_EQ(gens.linear.size(), 2U);
  EXPECT_EQ(format_generator(gens.linear[0]), "z_{2}");
  EXPECT_EQ(format_generator(gens.linear[1]), "z_{1,2}");
}

TEST(Degree1Dim, Examples) {
  EXPECT_EQ(degree1_dim(hexagon()), 7U);
  EXPECT_EQ(degree1_dim(from_matrix(testing::identity(2))), 4U);
  EXPECT_EQ(degree1_dim(from_matrix(mat({{1, 1}}))), 3U);
}

TEST(Degree1Dim, CountsIndependentSets) {
  for (const auto& entry : testing::corpus()) {
    const auto m = from_matrix(entry.matrix);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(degree1_dim(m))), tutte(m).evaluate(2, 1)) << entry.name;
    EXPECT_EQ(degree1_dim(m), independent_sets(m));
  }
  std::mt19937 rng(testing::kSeed + 60);
  for (int trial = 0; trial < 15; ++trial) {
    const auto m = from_matrix(testing::random_small_matrix(rng, 1 + trial % 3, 3 + trial % 6));
    EXPECT_EQ(degree1_dim(m), independent_sets(m));
  }
}

TEST(GradedHilbert, Examples) {
  EXPECT_EQ(graded_hilbert(hexagon(), 1), lq({{0, 1}, {1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(graded_hilbert(hexagon(), 0), LaurentQ(1L));
  EXPECT_EQ(graded_hilbert(from_matrix(mat({{1, 1}})), 2), lq({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
}

TEST(GradedHilbert, MatchesGradedCount) {
  for (const auto& entry : testing::corpus()) {
    const auto m = from_matrix(entry.matrix);
    if (m.n() > 4) continue;
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(graded_hilbert(m, k), graded_count(m, k).value) << entry.name << " m=" << k;
  }
  EXPECT_EQ(graded_hilbert(hexagon(), 3), graded_count(hexagon(), 3).value);
}

TEST(GradedHilbert, Guard) {
  EXPECT_THROW(graded_hilbert(from_matrix(testing::identity(8)), 3), SizeGuardError);
  EXPECT_THROW(segre_generators(from_matrix(linalg::IntMatrix(1, linalg::IntVector(15, 1)))), SizeGuardError);
}

TEST(Gorenstein, Examples) {
  EXPECT_EQ(gorenstein_classify(hexagon()).verdict, Verdict::kCircuitComponents);
  EXPECT_EQ(gorenstein_classify(from_matrix(testing::identity(3))).verdict, Verdict::kBoolean);
  const auto k3 = gorenstein_classify(from_matrix(mat({{1, 0, 1, 1}, {0, 1, 1, 0}})));
  EXPECT_EQ(k3.verdict, Verdict::kNotGorenstein);
  EXPECT_EQ(k3.witness, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(to_string(Verdict::kCircuitComponents), "circuit-components");
  EXPECT_EQ(to_string(Verdict::kNotGorenstein), "not-gorenstein");
  EXPECT_EQ(to_string(Verdict::kBoolean), "boolean");
}

TEST(Gorenstein, ClassificationOnCorpus) {
  for (const auto& entry : testing::corpus()) {
    const auto v = gorenstein_classify(from_matrix(entry.matrix));
    switch (entry.shape) {
      case testing::Shape::kBoolean:
        EXPECT_EQ(v.verdict, Verdict::kBoolean) << entry.name;
        break;
      case testing::Shape::kCircuits:
        EXPECT_EQ(v.verdict, Verdict::kCircuitComponents) << entry.name;
        break;
      case testing::Shape::kOther:
        EXPECT_EQ(v.verdict, Verdict::kNotGorenstein) << entry.name;
        EXPECT_FALSE(v.witness.empty());
        break;
    }
  }
}

TEST(Palindrome, HexagonCoefficients) {
  const PolyTQ n = series(hexagon()).numerator;
  // g_1 = -q^4 g_2(1/q)
  EXPECT_EQ(n.coeff(1), -(bar_q(n.coeff(2)).shifted(4)));
  EXPECT_EQ(n.coeff(0), -(bar_q(n.coeff(3)).shifted(4)));
  EXPECT_TRUE(palindrome_check(hexagon()));
}

TEST(Palindrome, BooleanExamples) {
  EXPECT_TRUE(palindrome_check(from_matrix(testing::identity(2))));
  const PolyTQ n3 = series(from_matrix(testing::identity(3))).numerator;
  EXPECT_EQ(n3.coeff(1), lq({{1, 2}, {2, 2}}));
  EXPECT_EQ(n3.coeff(1), bar_q(n3.coeff(1)).shifted(3));
  EXPECT_TRUE(palindrome_check(from_matrix(testing::identity(3))));
}

TEST(Palindrome, RejectsNonGorenstein) {
  EXPECT_THROW(palindrome_check(from_matrix(mat({{1, 0, 1, 1}, {0, 1, 1, 0}}))), ContractViolation);
}

TEST(Palindrome, CorpusAgreesWithVerdict) {
  bool saw_failure = false;
  for (const auto& entry : testing::corpus()) {
    const auto m = from_matrix(entry.matrix);
    const auto v = gorenstein_classify(m);
    if (v.is_gorenstein()) {
      EXPECT_TRUE(palindrome_check(m)) << entry.name;
      continue;
    }
    const PolyTQ numerator = series(m).numerator;
    const int n = static_cast<int>(m.n());
    if (!boolean_palindrome(numerator, n).passed && !circuit_palindrome(numerator, n, static_cast<int>(m.d())).passed) {
      saw_failure = true;
    }
  }
  EXPECT_TRUE(saw_failure);
  const PolyTQ k3 = series(from_matrix(mat({{1, 0, 1, 1}, {0, 1, 1, 0}}))).numerator;
  EXPECT_FALSE(boolean_palindrome(k3, 4).passed);
  EXPECT_FALSE(circuit_palindrome(k3, 4, 2).passed);
}

TEST(EulerMahonian, Examples) {
  EXPECT_EQ(euler_mahonian(0), PolyTQ(LaurentQ(1L)));
  EXPECT_EQ(euler_mahonian(1), PolyTQ(LaurentQ(1L)));
  EXPECT_EQ(euler_mahonian(2), ptq({{0, 0, 1}, {1, 1, 1}}));
  EXPECT_EQ(euler_mahonian(3), ptq({{0, 0, 1}, {1, 1, 2}, {1, 2, 2}, {2, 3, 1}}));
  EXPECT_THROW(euler_mahonian(9), SizeGuardError);
}

TEST(EulerMahonian, IsTheCubeNumerator) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(euler_mahonian(static_cast<int>(n)), series(from_matrix(testing::identity(n))).numerator) << n;
  }
  // n! permutations in total, major index generating function [n]_q!.
  for (int n = 1; n <= 6; ++n) {
    const PolyTQ e = euler_mahonian(n);
    EXPECT_EQ(e.evaluate(LaurentQ(1L)), q_factorial(n));
  }
}

TEST(InteriorOnset, Trichotomy) {
  for (const auto& entry : testing::corpus()) {
    const InteriorOnset onset = interior_onset(from_matrix(entry.matrix));
    switch (entry.shape) {
      case testing::Shape::kCircuits:
        EXPECT_EQ(onset.m0, 1) << entry.name;
        EXPECT_EQ(onset.count_at_one, 1) << entry.name;
        break;
      case testing::Shape::kBoolean:
        EXPECT_EQ(onset.m0, 2) << entry.name;
        EXPECT_EQ(onset.count_at_one, 1) << entry.name;
        break;
      case testing::Shape::kOther:
        EXPECT_GT(onset.count_at_one, 1) << entry.name;
        break;
    }
  }
}

}  // namespace
}  // namespace gehrhart
