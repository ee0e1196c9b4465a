#include "gehrhart/harmonic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "gehrhart/errors.hpp"
#include "gehrhart/linalg.hpp"
#include "gehrhart/rat_series.hpp"

namespace gehrhart {

namespace {

using Monomial = std::vector<ElementSet>;  // sorted multiset of subsets

int popcount(ElementSet s) { return __builtin_popcount(s); }

void require_segre_size(std::size_t n) {
  if (n > kMaxSegreGroundSet) {
    throw SizeGuardError("Segre variable guard exceeded: n = " + std::to_string(n) + " > " +
                         std::to_string(kMaxSegreGroundSet));
  }
}

void fill_multisets(ElementSet variables, int degree, ElementSet start, Monomial& current, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(current);
    return;
  }
  for (ElementSet s = start; s < variables; ++s) {
    current.push_back(s);
    fill_multisets(variables, degree - 1, s, current, out);
    current.pop_back();
  }
}

std::vector<Monomial> multisets(ElementSet variables, int degree) {
  std::vector<Monomial> out;
  Monomial current;
  fill_multisets(variables, degree, 0, current, out);
  return out;
}

Monomial times(const Monomial& a, std::initializer_list<ElementSet> extra) {
  Monomial out = a;
  out.insert(out.end(), extra);
  std::sort(out.begin(), out.end());
  return out;
}

int q_degree_of(const Monomial& mono) {
  int total = 0;
  for (ElementSet s : mono) total += popcount(s);
  return total;
}

// Rank bookkeeping for one q-degree of a fixed total degree.
struct Bucket {
  std::map<Monomial, std::size_t> column;
  std::unique_ptr<linalg::RowEchelon> echelon;
};

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

SegreGenerators segre_generators(const RealizedMatroid& m) {
  require_segre_size(m.n());
  SegreGenerators out;
  out.n = m.n();
  const ElementSet ground = m.ground_set();
  for (const auto& c : m.circuits()) {
    const ElementSet rest = ground & ~c.support;
    // Every subset of rest, in increasing order.
    ElementSet a = 0;
    while (true) {
      LinearGenerator g;
      g.circuit = c.support;
      g.shift = a;
      g.q_degree = popcount(a) + 1;
      for (std::size_t k = 0; k < c.elements.size(); ++k) {
        g.terms.emplace_back(a | (ElementSet{1} << c.elements[k]), c.alpha[k]);
      }
      std::sort(g.terms.begin(), g.terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      out.linear.push_back(std::move(g));
      if (a == rest) break;
      a = (a - rest) & rest;
    }
  }
  return out;
}

std::string format_generator(const LinearGenerator& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : g.terms) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    mpz_class mag = abs(c);
    if (mag != 1) os << mag.get_str() << " ";
    os << "z_{";
    bool inner_first = true;
    for (int e : elements_of(s)) {
      if (!inner_first) os << ",";
      inner_first = false;
      os << e + 1;
    }
    os << "}";
  }
  return os.str();
}

std::string SegreGenerators::presentation() const {
  std::ostringstream os;
  for (const auto& g : linear) os << format_generator(g) << "\n";
  os << "plus the binomials z_S z_T - z_{S cup T} z_{S cap T} for all S, T subsets of [" << n << "]\n";
  return os.str();
}

std::size_t degree1_dim(const RealizedMatroid& m) {
  require_segre_size(m.n());
  const std::size_t vars = std::size_t{1} << m.n();
  linalg::RowEchelon echelon(vars);
  for (const auto& g : segre_generators(m).linear) {
    linalg::IntVector row(vars);
    for (const auto& [s, c] : g.terms) row[s] = c;
    echelon.insert(std::move(row));
  }
  return vars - echelon.rank();
}

LaurentQ graded_hilbert(const RealizedMatroid& m, int degree) {
  if (degree < 0) throw ContractViolation("degree must be non-negative");
  require_segre_size(m.n());
  if (degree == 0) return LaurentQ(1L);
  const ElementSet vars = ElementSet{1} << m.n();
  const mpz_class count = binomial(vars + static_cast<unsigned long>(degree) - 1, static_cast<unsigned long>(degree));
  if (count > kMaxHarmonicMonomials) {
    throw SizeGuardError("harmonic monomial guard exceeded: " + count.get_str() + " monomials > " +
                         std::to_string(kMaxHarmonicMonomials));
  }

  std::map<int, Bucket> buckets;
  for (auto& mono : multisets(vars, degree)) {
    auto& bucket = buckets[q_degree_of(mono)];
    const std::size_t index = bucket.column.size();
    bucket.column.emplace(std::move(mono), index);
  }
  for (auto& [q, bucket] : buckets) bucket.echelon = std::make_unique<linalg::RowEchelon>(bucket.column.size());

  auto add_row = [&buckets](const std::vector<std::pair<Monomial, mpz_class>>& terms) {
    auto& bucket = buckets.at(q_degree_of(terms.front().first));
    if (bucket.echelon->rank() == bucket.column.size()) return;
    linalg::IntVector row(bucket.column.size());
    for (const auto& [mono, c] : terms) row[bucket.column.at(mono)] += c;
    bucket.echelon->insert(std::move(row));
  };

  const auto gens = segre_generators(m);
  for (const auto& multiplier : multisets(vars, degree - 1)) {
    for (const auto& g : gens.linear) {
      std::vector<std::pair<Monomial, mpz_class>> terms;
      for (const auto& [s, c] : g.terms) terms.emplace_back(times(multiplier, {s}), c);
      add_row(terms);
    }
  }
  if (degree >= 2) {
    const auto multipliers = multisets(vars, degree - 2);
    for (ElementSet s = 0; s < vars; ++s) {
      for (ElementSet t = s + 1; t < vars; ++t) {
        if ((s & t) == s || (s & t) == t) continue;  // comparable pairs give zero
        for (const auto& multiplier : multipliers) {
          add_row({{times(multiplier, {s, t}), mpz_class(1)}, {times(multiplier, {s | t, s & t}), mpz_class(-1)}});
        }
      }
    }
  }

  LaurentQ out;
  for (const auto& [q, bucket] : buckets) {
    out.add_term(q, static_cast<long>(bucket.column.size() - bucket.echelon->rank()));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kBoolean:
      return "boolean";
    case Verdict::kCircuitComponents:
      return "circuit-components";
    case Verdict::kNotGorenstein:
      return "not-gorenstein";
  }
  return "unknown";
}

GorensteinVerdict gorenstein_classify(const RealizedMatroid& m) {
  GorensteinVerdict out;
  if (m.n() == m.d()) {
    out.verdict = Verdict::kBoolean;
    return out;
  }
  for (const auto& comp : connected_components(m)) {
    if (!comp.is_circuit) {
      out.verdict = Verdict::kNotGorenstein;
      out.witness = comp.elements;
      return out;
    }
  }
  out.verdict = Verdict::kCircuitComponents;
  return out;
}

CheckResult boolean_palindrome(const PolyTQ& numerator, int n) {
  const PolyTQ::Degree shift = n - 1;
  if (numerator.degree() > shift) return CheckResult::fail("numerator degree exceeds n-1");
  const PolyTQ mirrored = reflect(numerator, shift).q_shifted(static_cast<LaurentQ::Exponent>(n) * (n - 1) / 2);
  if (!(mirrored == numerator)) {
    return CheckResult::fail("boolean identity fails: " + numerator.to_string() + " vs " + mirrored.to_string());
  }
  return {};
}

CheckResult circuit_palindrome(const PolyTQ& numerator, int n, int d) {
  if (numerator.degree() > n) return CheckResult::fail("numerator degree exceeds n");
  PolyTQ mirrored = reflect(numerator, n).q_shifted(static_cast<LaurentQ::Exponent>(n) * (n + 1) / 2 - d);
  if ((n + d) % 2 != 0) mirrored = -mirrored;
  if (!(mirrored == numerator)) {
    return CheckResult::fail("circuit identity fails: " + numerator.to_string() + " vs " + mirrored.to_string());
  }
  return {};
}

bool palindrome_check(const RealizedMatroid& m) {
  const auto verdict = gorenstein_classify(m);
  if (!verdict.is_gorenstein()) throw ContractViolation("palindrome_check needs a Gorenstein zonotope");
  const PolyTQ numerator = series(m).numerator;
  const int n = static_cast<int>(m.n());
  if (verdict.verdict == Verdict::kBoolean) return boolean_palindrome(numerator, n).passed;
  return circuit_palindrome(numerator, n, static_cast<int>(m.d())).passed;
}

PolyTQ euler_mahonian(int n) {
  if (n < 0) throw ContractViolation("n must be non-negative");
  if (n > kMaxEulerMahonian) {
    throw SizeGuardError("permutation guard exceeded: n = " + std::to_string(n) + " > " +
                         std::to_string(kMaxEulerMahonian));
  }
  std::map<std::pair<int, int>, long> tally;  // (des, maj) -> count
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int des = 0;
    int maj = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (perm[i] > perm[i + 1]) {
        ++des;
        maj += i + 1;
      }
    }
    ++tally[{des, maj}];
  } while (std::next_permutation(perm.begin(), perm.end()));
  PolyTQ out;
  for (const auto& [key, count] : tally) out.add_term(key.first, LaurentQ::monomial(count, key.second));
  return out;
}

InteriorOnset interior_onset(const RealizedMatroid& m) {
  InteriorOnset out;
  const auto coeffs = expand(interior_series(m), static_cast<std::int64_t>(2 * m.n() + 2));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out.m0 = static_cast<std::int64_t>(k);
    out.count_at_one = coeffs[k].at_one();
    break;
  }
  return out;
}

}  // namespace gehrhart
