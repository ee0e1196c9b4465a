#include "gehrhart/zonalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "gehrhart/errors.hpp"

namespace gehrhart {

namespace {

GradedIdealSpec make_spec(const RealizedMatroid& m, int offset) {
  if (m.d() == 0) throw ContractViolation("zonotopal algebras need d >= 1");
  GradedIdealSpec spec;
  spec.variables = m.d();
  spec.degree_cap = static_cast<int>(m.n()) + 1;
  for (const auto& cv : m.cocircuits()) {
    spec.generators.push_back({cv.c, cv.support_size + offset});
  }
  return spec;
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Expansion of (c . x)^e as exponent vector -> coefficient.
std::map<std::vector<int>, mpz_class> expand_power(const linalg::IntVector& c, int e) {
  std::map<std::vector<int>, mpz_class> out;
  for (const auto& mono : monomials_of_degree(c.size(), e)) {
    // multinomial(e; mono) * prod c_i^{mono_i}
    mpz_class coeff = 1;
    int remaining = e;
    for (std::size_t i = 0; i < c.size(); ++i) {
      coeff *= binomial(static_cast<std::size_t>(remaining), static_cast<std::size_t>(mono[i]));
      remaining -= mono[i];
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), c[i].get_mpz_t(), static_cast<unsigned long>(mono[i]));
      coeff *= p;
    }
    if (coeff != 0) out.emplace(mono, coeff);
  }
  return out;
}

void fill_monomials(std::size_t var, int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    fill_monomials(var + 1, remaining - e, current, out);
  }
}

}  // namespace

bool GradedIdealSpec::is_unit_ideal() const {
  return std::any_of(generators.begin(), generators.end(), [](const PowerGenerator& g) { return g.exponent == 0; });
}

std::size_t HilbertFunction::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::vector<std::vector<int>> monomials_of_degree(std::size_t variables, int degree) {
  std::vector<std::vector<int>> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(variables, 0);
  fill_monomials(0, degree, current, out);
  return out;
}

GradedIdealSpec external_spec(const RealizedMatroid& m) { return make_spec(m, 1); }

GradedIdealSpec internal_spec(const RealizedMatroid& m) { return make_spec(m, -1); }

HilbertFunction hilbert(const GradedIdealSpec& spec) {
  HilbertFunction out;
  if (spec.is_unit_ideal()) return out;

  // Expanded on first use so the monomial guard runs first.
  std::vector<std::optional<std::map<std::vector<int>, mpz_class>>> expansions(spec.generators.size());

  for (int k = 0; k <= spec.degree_cap; ++k) {
    const std::size_t count = binomial(spec.variables + static_cast<std::size_t>(k) - 1, static_cast<std::size_t>(k)).get_ui();
    if (spec.variables > 0 && count > kMaxMonomialsPerDegree) {
      throw SizeGuardError("monomial guard exceeded: " + std::to_string(count) + " monomials in degree " +
                           std::to_string(k) + " > " + std::to_string(kMaxMonomialsPerDegree));
    }
    const auto basis = monomials_of_degree(spec.variables, k);
    std::map<std::vector<int>, std::size_t> column;
    for (std::size_t j = 0; j < basis.size(); ++j) column.emplace(basis[j], j);

    linalg::RowEchelon echelon(basis.size());
    for (std::size_t g = 0; g < spec.generators.size() && echelon.rank() < basis.size(); ++g) {
      const int e = spec.generators[g].exponent;
      if (e > k) continue;
      if (!expansions[g]) expansions[g] = expand_power(spec.generators[g].form, e);
      for (const auto& multiplier : monomials_of_degree(spec.variables, k - e)) {
        linalg::IntVector row(basis.size());
        for (const auto& [mono, c] : *expansions[g]) {
          std::vector<int> product = mono;
          for (std::size_t i = 0; i < product.size(); ++i) product[i] += multiplier[i];
          row[column.at(product)] = c;
        }
        echelon.insert(std::move(row));
        if (echelon.rank() == basis.size()) break;
      }
    }
    const std::size_t dim = basis.size() - echelon.rank();
    if (dim == 0) break;  // the ideal contains every monomial from here on
    out.dims.push_back(dim);
    out.as_laurent.add_term(k, static_cast<long>(dim));
  }
  return out;
}

LaurentQ zonotopal_hilbert_from_tutte(const BiPolyXY& tutte, int d, int n, bool internal) {
  const LaurentQ x = internal ? LaurentQ() : LaurentQ(1L) + LaurentQ::q_power(1);
  const LaurentQ y = LaurentQ::q_power(-1);
  return evaluate_cleared(tutte, x, LaurentQ(1L), d, y, LaurentQ(1L), std::max(tutte.y_degree(), 0))
      .shifted(n - d);
}

CheckResult verify_zonotopal(const RealizedMatroid& m) {
  const BiPolyXY t = tutte(m);
  const int d = static_cast<int>(m.d());
  const int n = static_cast<int>(m.n());
  const LaurentQ ext = hilbert(external_spec(m)).as_laurent;
  const LaurentQ ext_expected = zonotopal_hilbert_from_tutte(t, d, n, false);
  if (!(ext == ext_expected)) {
    return CheckResult::fail("external Hilbert series " + ext.to_string() + " != " + ext_expected.to_string());
  }
  const LaurentQ in = hilbert(internal_spec(m)).as_laurent;
  const LaurentQ in_expected = zonotopal_hilbert_from_tutte(t, d, n, true);
  if (!(in == in_expected)) {
    return CheckResult::fail("internal Hilbert series " + in.to_string() + " != " + in_expected.to_string());
  }
  return {};
}

}  // namespace gehrhart
