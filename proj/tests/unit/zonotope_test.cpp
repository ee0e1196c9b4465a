#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "gehrhart/errors.hpp"
#include "gehrhart/zonotope.hpp"
#include "test_support.hpp"

namespace gehrhart {
namespace {

using testing::mat;

// Distinct subset sums of the columns; for unimodular A these are exactly
// the lattice points of the zonotope.
std::size_t distinct_subset_sums(const RealizedMatroid& m) {
  std::set<linalg::IntVector> sums;
  for (ElementSet s = 0; s < (ElementSet{1} << m.n()); ++s) {
    linalg::IntVector p(m.d(), 0);
    for (int j : elements_of(s)) {
      for (std::size_t i = 0; i < m.d(); ++i) p[i] += m.realization().at(i, j);
    }
    sums.insert(p);
  }
  return sums.size();
}

TEST(HRep, Examples) {
  const auto hex = h_rep(from_matrix(mat({{1, 0, 1}, {0, 1, 1}})));
  ASSERT_EQ(hex.facets.size(), 3U);
  for (const auto& f : hex.facets) EXPECT_EQ(f.alpha_max - f.alpha_min, 2);

  const auto seg = h_rep(from_matrix(mat({{1}})));
  ASSERT_EQ(seg.facets.size(), 1U);
  EXPECT_EQ(seg.facets[0].c, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(seg.facets[0].alpha_min, 0);
  EXPECT_EQ(seg.facets[0].alpha_max, 1);

  const auto doubled = h_rep(from_matrix(mat({{1, 1}})));
  ASSERT_EQ(doubled.facets.size(), 1U);
  EXPECT_EQ(doubled.facets[0].alpha_min, 0);
  EXPECT_EQ(doubled.facets[0].alpha_max, 2);
}

TEST(HRep, RejectsNonUnimodularAndPoint) {
  EXPECT_THROW(h_rep(from_matrix(mat({{1, 1}, {-1, 1}}))), UnimodularityError);
  EXPECT_THROW(h_rep(from_matrix(0, 1, {})), ContractViolation);
}

TEST(LatticeCount, Examples) {
  const auto hexagon = from_matrix(mat({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(lattice_count(hexagon, 1, false).second, 7);
  EXPECT_EQ(lattice_count(hexagon, 1, true).second, 1);
  EXPECT_EQ(lattice_count(hexagon, 2, false).second, 19);
  EXPECT_EQ(lattice_count(from_matrix(mat({{1, 1}})), 1, true).second, 1);

  const auto [points, count] = lattice_count(hexagon, 1, true);
  ASSERT_EQ(points.points.size(), 1U);
  EXPECT_EQ(points.points[0], (std::vector<std::int64_t>{1, 1}));
}

TEST(LatticeCount, PointZonotope) {
  const auto point = from_matrix(0, 2, {});
  EXPECT_EQ(lattice_count(point, 3, false).second, 1);
  EXPECT_EQ(lattice_count(point, 3, true).second, 1);
}

TEST(LatticeCount, MatchesStanleyOnCorpus) {
  for (const auto& entry : testing::corpus()) {
    const auto m = from_matrix(entry.matrix);
    const BiPolyXY t = tutte(m);
    for (int k = 1; k <= 3; ++k) {
      const auto outer = lattice_count(m, k, false).second;
      const auto inner = lattice_count(m, k, true).second;
      EXPECT_EQ(outer, stanley_count(t, static_cast<int>(m.d()), k, false)) << entry.name << " m=" << k;
      EXPECT_EQ(inner, stanley_count(t, static_cast<int>(m.d()), k, true)) << entry.name << " m=" << k;
      EXPECT_LE(inner, outer);
    }
  }
}

TEST(LatticeCount, SubsetSumsOfThickening) {
  for (const auto& entry : testing::corpus()) {
    const auto m = from_matrix(entry.matrix);
    for (int k = 1; k <= 3 && k * m.n() <= 12; ++k) {
      const auto thick = thicken(m, k);
      const auto expected = static_cast<std::int64_t>(distinct_subset_sums(thick));
      EXPECT_EQ(lattice_count(m, k, false).second, expected) << entry.name << " m=" << k;
      EXPECT_EQ(lattice_count(thick, 1, false).second, expected) << entry.name << " m=" << k;
      EXPECT_EQ(lattice_count(thick, 1, true).second, lattice_count(m, k, true).second);
    }
  }
}

TEST(LatticeCount, InvariantUnderColumnPermutationAndNegation) {
  std::mt19937 rng(testing::kSeed + 30);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = testing::random_graphic(rng, 2 + trial % 3, 1 + trial % 3);
    const auto base = from_matrix(a);
    std::vector<std::size_t> perm(base.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    linalg::IntMatrix b(a.size(), linalg::IntVector(base.n()));
    std::bernoulli_distribution flip(0.5);
    for (std::size_t j = 0; j < base.n(); ++j) {
      const bool neg = flip(rng);
      for (std::size_t i = 0; i < a.size(); ++i) b[i][j] = neg ? -a[i][perm[j]] : a[i][perm[j]];
    }
    const auto other = from_matrix(b);
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(lattice_count(base, k, false).second, lattice_count(other, k, false).second);
      EXPECT_EQ(lattice_count(base, k, true).second, lattice_count(other, k, true).second);
    }
  }
}

TEST(LatticeCount, BoxGuard) {
  const auto m = from_matrix(testing::identity(3));
  EXPECT_THROW(lattice_count(m, 1000, false), SizeGuardError);
}

TEST(StanleyCount, Segment) {
  // [0, m] has m + 1 points and m - 1 interior points.
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(stanley_count(BiPolyXY::x(), 1, k, false), k + 1);
    EXPECT_EQ(stanley_count(BiPolyXY::x(), 1, k, true), k - 1);
  }
}

}  // namespace
}  // namespace gehrhart
