#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gehrhart/ehrhart.hpp"
#include "gehrhart/laurent.hpp"
#include "gehrhart/matroid.hpp"
#include "gehrhart/poly_tq.hpp"

namespace gehrhart {

/// f_C^A(z) = sum_{i in C} alpha_{C,i} z_{A + i}.
struct LinearGenerator {
  ElementSet circuit = 0;
  ElementSet shift = 0;  // A
  std::vector<std::pair<ElementSet, mpz_class>> terms;
  int q_degree = 0;      // |A| + 1
};

/// Linear part of the Segre ideal. The binomials z_S z_T - z_{S|T} z_{S&T}
/// are implied and built per degree when needed.
struct SegreGenerators {
  std::size_t n = 0;
  std::vector<LinearGenerator> linear;

  /// One generator per line, then a line for the binomial family.
  std::string presentation() const;
};

/// Guard on 2^n variables.
inline constexpr std::size_t kMaxSegreGroundSet = 14;
/// Guard on the number of degree-m monomials in graded_hilbert.
inline constexpr std::size_t kMaxHarmonicMonomials = 100'000;
/// Guard on n for the permutation enumeration.
inline constexpr int kMaxEulerMahonian = 8;

SegreGenerators segre_generators(const RealizedMatroid& m);

/// "z_1 + z_2 - z_3" with 1-based sorted index lists; z_{} for the empty set.
std::string format_generator(const LinearGenerator& g);

/// 2^n minus the rank of the linear generators.
std::size_t degree1_dim(const RealizedMatroid& m);

/// q-graded dimension of the degree-m piece of C[z_S] / I_L^SE.
LaurentQ graded_hilbert(const RealizedMatroid& m, int degree);

enum class Verdict { kBoolean, kCircuitComponents, kNotGorenstein };

struct GorensteinVerdict {
  Verdict verdict = Verdict::kNotGorenstein;
  std::vector<int> witness;  // 0-based elements of the offending component

  bool is_gorenstein() const { return verdict != Verdict::kNotGorenstein; }
};

std::string to_string(Verdict v);

GorensteinVerdict gorenstein_classify(const RealizedMatroid& m);

/// g_k = q^{C(n,2)} g_{n-k-1}(1/q) for every k.
CheckResult boolean_palindrome(const PolyTQ& numerator, int n);
/// g_k = (-1)^{n+d} q^{C(n+1,2)-d} g_{n-k}(1/q) for every k.
CheckResult circuit_palindrome(const PolyTQ& numerator, int n, int d);

/// Applies the identity matching the verdict to the series numerator.
/// Throws ContractViolation for non-Gorenstein input.
bool palindrome_check(const RealizedMatroid& m);

/// sum over permutations of [n] of t^des q^maj.
PolyTQ euler_mahonian(int n);

/// Least m with a nonzero interior count and that count at q = 1.
struct InteriorOnset {
  std::int64_t m0 = -1;
  mpz_class count_at_one = 0;
};

InteriorOnset interior_onset(const RealizedMatroid& m);

}  // namespace gehrhart
