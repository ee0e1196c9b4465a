#include "verify.hpp"

#include <functional>

#include "gehrhart/ehrhart.hpp"
#include "gehrhart/errors.hpp"
#include "gehrhart/harmonic.hpp"
#include "gehrhart/rat_series.hpp"
#include "gehrhart/zonalg.hpp"
#include "gehrhart/zonotope.hpp"

namespace gehrhart::cli {

namespace {

// Thickenings beyond this many columns are left to the offline suites.
constexpr std::int64_t kMaxThickenedColumns = 12;
constexpr std::size_t kMaxPresentationGroundSet = 10;

class Recorder {
 public:
  void check(std::string name, const std::function<CheckResult()>& body) {
    CheckOutcome out{std::move(name), Status::kPass, {}};
    try {
      const CheckResult r = body();
      if (!r) {
        out.status = Status::kFail;
        out.detail = r.witness;
      }
    } catch (const SizeGuardError& e) {
      out.status = Status::kSkipped;
      out.detail = e.what();
    }
    outcomes_.push_back(std::move(out));
  }

  void skip(std::string name, std::string why) {
    outcomes_.push_back({std::move(name), Status::kSkipped, std::move(why)});
  }

  std::vector<CheckOutcome> take() { return std::move(outcomes_); }

 private:
  std::vector<CheckOutcome> outcomes_;
};

std::string mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
  return what + ": " + lhs + " != " + rhs;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
  }
  return "unknown";
}

std::vector<CheckOutcome> verify_suite(const RealizedMatroid& m, std::int64_t m_max) {
  if (!m.is_unimodular()) {
    throw UnimodularityError("verify needs a unimodular matrix; some maximal minor lies outside {-1, 0, 1}");
  }
  if (m.d() == 0) throw ContractViolation("verify needs d >= 1");
  if (m_max < 1) throw ContractViolation("--m-max must be at least 1");

  Recorder rec;
  const BiPolyXY t = tutte(m);
  const int d = static_cast<int>(m.d());
  const int n = static_cast<int>(m.n());

  rec.check("tutte-vs-subsets", [&] {
    const BiPolyXY oracle = tutte_by_subsets(m);
    if (!(oracle == t)) return CheckResult::fail(mismatch("tutte", t.to_string(), oracle.to_string()));
    return CheckResult{};
  });

  for (std::int64_t k = 1; k <= m_max; ++k) {
    for (const bool interior : {false, true}) {
      const std::string suffix = std::string(interior ? "interior " : "") + "m=" + std::to_string(k);
      rec.check("lattice-vs-tutte " + suffix, [&] {
        const mpz_class enumerated = lattice_count(m, k, interior).second;
        const mpz_class predicted = stanley_count(t, d, k, interior);
        if (enumerated != predicted) {
          return CheckResult::fail(mismatch("lattice points", enumerated.get_str(), predicted.get_str()));
        }
        const mpz_class graded = graded_count(m, k, interior).value.at_one();
        if (graded != predicted) return CheckResult::fail(mismatch("graded count at q=1", graded.get_str(), predicted.get_str()));
        return CheckResult{};
      });
    }
  }

  rec.check("zonotopal-hilbert", [&] { return verify_zonotopal(m); });

  for (std::int64_t k = 1; k <= m_max; ++k) {
    const std::string suffix = "m=" + std::to_string(k);
    if (n * k > kMaxThickenedColumns) {
      rec.skip("zonalg-vs-graded " + suffix, "thickening has more than " + std::to_string(kMaxThickenedColumns) + " columns");
      rec.skip("thickening " + suffix, "thickening has more than " + std::to_string(kMaxThickenedColumns) + " columns");
      continue;
    }
    const RealizedMatroid thick = thicken(m, static_cast<int>(k));
    rec.check("zonalg-vs-graded " + suffix, [&] {
      const LaurentQ ext = hilbert(external_spec(thick)).as_laurent;
      const LaurentQ ext_expected = graded_count(m, k).value;
      if (!(ext == ext_expected)) return CheckResult::fail(mismatch("external", ext.to_string(), ext_expected.to_string()));
      const LaurentQ in = hilbert(internal_spec(thick)).as_laurent;
      const LaurentQ in_expected = graded_count(m, k, true).value;
      if (!(in == in_expected)) return CheckResult::fail(mismatch("internal", in.to_string(), in_expected.to_string()));
      return CheckResult{};
    });
    rec.check("thickening " + suffix, [&] {
      const BiPolyXY direct = tutte(thick);
      const BiPolyXY formula = tutte_thickened(t, d, static_cast<int>(k));
      if (!(direct == formula)) return CheckResult::fail(mismatch("tutte", direct.to_string(), formula.to_string()));
      return CheckResult{};
    });
  }

  rec.check("series-expansion", [&] {
    const auto ordinary = expand(series(m), m_max);
    const auto inner = expand(interior_series(m), m_max);
    if (!inner.front().is_zero()) return CheckResult::fail("interior series has a constant term " + inner.front().to_string());
    for (std::int64_t k = 0; k <= m_max; ++k) {
      const LaurentQ expected = graded_count(m, k).value;
      if (!(ordinary[k] == expected)) {
        return CheckResult::fail(mismatch("coefficient of t^" + std::to_string(k), ordinary[k].to_string(), expected.to_string()));
      }
      if (k == 0) continue;
      const LaurentQ expected_inner = graded_count(m, k, true).value;
      if (!(inner[k] == expected_inner)) {
        return CheckResult::fail(
            mismatch("interior coefficient of t^" + std::to_string(k), inner[k].to_string(), expected_inner.to_string()));
      }
    }
    return CheckResult{};
  });

  rec.check("reciprocity", [&] { return reciprocity_check(m, m_max); });

  if (m.n() > kMaxPresentationGroundSet) {
    rec.skip("degree1-dim", "more than " + std::to_string(kMaxPresentationGroundSet) + " elements");
  } else {
    rec.check("degree1-dim", [&] {
      const mpz_class dim = static_cast<unsigned long>(degree1_dim(m));
      const mpz_class expected = t.evaluate(2, 1);
      if (dim != expected) return CheckResult::fail(mismatch("degree-1 dimension", dim.get_str(), expected.get_str()));
      return CheckResult{};
    });
  }

  return rec.take();
}

}  // namespace gehrhart::cli
