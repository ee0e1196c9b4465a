#include "gehrhart/zonotope.hpp"

#include <string>

#include "gehrhart/errors.hpp"

namespace gehrhart {

namespace {

std::int64_t to_i64(const mpz_class& x) {
  if (!x.fits_slong_p()) throw SizeGuardError("coordinate does not fit in 64 bits");
  return x.get_si();
}

}  // namespace

HRep h_rep(const RealizedMatroid& m) {
  if (m.d() == 0) throw ContractViolation("h_rep requires d >= 1");
  HRep rep;
  for (const auto& cv : m.cocircuits()) {
    Facet f;
    for (const auto& x : cv.c) f.c.push_back(to_i64(x));
    for (std::size_t j = 0; j < m.n(); ++j) {
      const std::int64_t value = to_i64(cv.scale * cv.v[j]);
      if (value < 0) f.alpha_min += value;
      if (value > 0) f.alpha_max += value;
    }
    if (f.alpha_max - f.alpha_min != cv.support_size) {
      throw UnimodularityError("facet width " + std::to_string(f.alpha_max - f.alpha_min) +
                               " differs from cocircuit size " + std::to_string(cv.support_size) +
                               "; the realization is not unimodular");
    }
    rep.facets.push_back(std::move(f));
  }
  return rep;
}

std::pair<LatticePointSet, std::int64_t> lattice_count(const RealizedMatroid& m, std::int64_t dilate,
                                                       bool interior) {
  if (dilate < 1) throw ContractViolation("lattice_count requires m >= 1");
  LatticePointSet set;
  set.dilate = dilate;
  set.interior = interior;
  const std::size_t d = m.d();
  if (d == 0) {
    set.points.emplace_back();
    return {std::move(set), 1};
  }

  std::vector<std::int64_t> lo(d, 0);
  std::vector<std::int64_t> hi(d, 0);
  std::int64_t volume = 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      const std::int64_t a = to_i64(m.realization().at(i, j));
      if (a < 0) lo[i] += dilate * a;
      if (a > 0) hi[i] += dilate * a;
    }
    volume *= hi[i] - lo[i] + 1;
    if (volume > kMaxBoxVolume) {
      throw SizeGuardError("bounding-box guard exceeded: volume > " + std::to_string(kMaxBoxVolume));
    }
  }

  const HRep rep = h_rep(m);
  std::vector<std::int64_t> x = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : rep.facets) {
      std::int64_t value = 0;
      for (std::size_t i = 0; i < d; ++i) value += f.c[i] * x[i];
      const std::int64_t low = dilate * f.alpha_min;
      const std::int64_t high = dilate * f.alpha_max;
      inside = interior ? (low < value && value < high) : (low <= value && value <= high);
      if (!inside) break;
    }
    if (inside) set.points.push_back(x);

    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++x[i];
  }
  const auto count = static_cast<std::int64_t>(set.points.size());
  return {std::move(set), count};
}

mpz_class stanley_count(const BiPolyXY& tutte, int d, std::int64_t dilate, bool interior) {
  const mpz_class num = interior ? dilate - 1 : dilate + 1;
  return evaluate_cleared<mpz_class>(tutte, num, mpz_class(dilate), d, mpz_class(1), mpz_class(1),
                                     std::max(tutte.y_degree(), 0));
}

}  // namespace gehrhart
