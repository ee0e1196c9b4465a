#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gehrhart/matroid.hpp"

namespace gehrhart {

/// alpha_min <= <c, x> <= alpha_max for every x in Z = A [0,1]^n.
struct Facet {
  std::vector<std::int64_t> c;
  std::int64_t alpha_min = 0;
  std::int64_t alpha_max = 0;
};

struct HRep {
  std::vector<Facet> facets;
};

struct LatticePointSet {
  std::vector<std::vector<std::int64_t>> points;
  std::int64_t dilate = 1;
  bool interior = false;
};

inline constexpr std::int64_t kMaxBoxVolume = 10'000'000;

/// H-description from the cocircuit vectors. Requires d >= 1 and throws
/// UnimodularityError when a facet width differs from its support size.
HRep h_rep(const RealizedMatroid& m);

/// Enumerates the (interior) lattice points of m*Z by scanning the bounding
/// box. For d = 0 the single origin point is returned in both modes.
std::pair<LatticePointSet, std::int64_t> lattice_count(const RealizedMatroid& m, std::int64_t dilate,
                                                       bool interior);

/// Stanley's counts m^d T((m +- 1)/m, 1), cleared of denominators.
mpz_class stanley_count(const BiPolyXY& tutte, int d, std::int64_t dilate, bool interior);

}  // namespace gehrhart
