#include "gehrhart/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "gehrhart/errors.hpp"

namespace gehrhart {

using linalg::IntMatrix;
using linalg::IntVector;

std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

namespace {

int popcount(ElementSet s) { return std::popcount(s); }

std::vector<int> range_excluding(std::size_t n, std::size_t skip) {
  std::vector<int> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != skip) out.push_back(static_cast<int>(j));
  }
  return out;
}

IntMatrix drop_column(const IntMatrix& a, std::size_t cols, std::size_t col) {
  return linalg::select_columns(a, range_excluding(cols, col));
}

// Integer row operations with determinant +-1 that clear column `col` in all
// rows but the first, then drop that row and column. The result realizes the
// contraction L / col = L cap {x_col = 0}.
IntMatrix contract_column(IntMatrix a, std::size_t cols, std::size_t col) {
  const std::size_t rows = a.size();
  std::size_t p = 0;
  while (p < rows && a[p][col] == 0) ++p;
  if (p == rows) throw ContractViolation("cannot contract a loop");
  std::swap(a[0], a[p]);
  for (std::size_t k = 1; k < rows; ++k) {
    if (a[k][col] == 0) continue;
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[0][col].get_mpz_t(), a[k][col].get_mpz_t());
    const mpz_class u = a[k][col] / g;
    const mpz_class w = a[0][col] / g;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class top = s * a[0][j] + t * a[k][j];
      const mpz_class bottom = u * a[0][j] - w * a[k][j];
      a[0][j] = top;
      a[k][j] = bottom;
    }
  }
  IntMatrix rest(a.begin() + 1, a.end());
  return drop_column(rest, cols, col);
}

std::size_t rank_of_columns(const IntMatrix& a, const std::vector<int>& columns) {
  if (a.empty() || columns.empty()) return 0;
  return linalg::rank(linalg::select_columns(a, columns));
}

}  // namespace

// ---------------------------------------------------------------------------
// Realization

Realization::Realization(std::size_t rows, std::size_t cols, IntMatrix entries)
    : d_(rows), n_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows) throw ParseError("matrix row count does not match d");
  for (const auto& row : entries_) {
    if (row.size() != cols) throw ParseError("matrix row length does not match n");
  }
  if (rows > 0 && linalg::rank(entries_) != rows) {
    throw RankDeficientError("matrix is rank-deficient: rank " + std::to_string(linalg::rank(entries_)) +
                             " < d = " + std::to_string(rows));
  }
}

Realization Realization::from_rows(const IntMatrix& rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  return Realization(rows.size(), n, rows);
}

IntVector Realization::column(std::size_t j) const {
  IntVector col(d_);
  for (std::size_t i = 0; i < d_; ++i) col[i] = entries_[i][j];
  return col;
}

// ---------------------------------------------------------------------------
// RealizedMatroid

RealizedMatroid::RealizedMatroid(Realization realization) : realization_(std::move(realization)) {
  if (n() > static_cast<std::size_t>(kMaxGroundSet)) {
    throw SizeGuardError("ground set guard exceeded: n = " + std::to_string(n()) + " > " +
                         std::to_string(kMaxGroundSet));
  }
  compute_circuits();
  compute_cocircuits();
  compute_unimodularity();
}

ElementSet RealizedMatroid::ground_set() const {
  return n() == 0 ? 0 : static_cast<ElementSet>((std::uint64_t{1} << n()) - 1);
}

std::size_t RealizedMatroid::rank(ElementSet subset) const {
  return rank_of_columns(realization_.entries(), elements_of(subset));
}

bool RealizedMatroid::is_loop(int element) const {
  for (std::size_t i = 0; i < d(); ++i) {
    if (realization_.at(i, static_cast<std::size_t>(element)) != 0) return false;
  }
  return true;
}

bool RealizedMatroid::is_coloop(int element) const {
  return rank(ground_set() & ~(ElementSet{1} << element)) < d();
}

void RealizedMatroid::compute_circuits() {
  const std::size_t total = std::size_t{1} << n();
  std::vector<ElementSet> order(total);
  std::iota(order.begin(), order.end(), ElementSet{0});
  std::stable_sort(order.begin(), order.end(),
                   [](ElementSet a, ElementSet b) { return popcount(a) < popcount(b); });
  for (ElementSet s : order) {
    if (s == 0) continue;
    const bool contains_circuit = std::any_of(circuits_.begin(), circuits_.end(),
                                              [s](const CircuitRep& c) { return (c.support & s) == c.support; });
    if (contains_circuit) continue;
    const auto elems = elements_of(s);
    if (rank_of_columns(realization_.entries(), elems) == elems.size()) continue;

    CircuitRep circuit;
    circuit.support = s;
    circuit.elements = elems;
    IntMatrix sub = realization_.d() == 0 ? IntMatrix{} : linalg::select_columns(realization_.entries(), elems);
    const auto kernel = linalg::kernel_basis(sub, elems.size());
    if (kernel.size() != 1) throw InternalConsistencyError("circuit kernel is not one-dimensional");
    circuit.alpha = kernel.front();
    circuits_.push_back(std::move(circuit));
  }
}

void RealizedMatroid::compute_cocircuits() {
  const std::size_t rows = d();
  if (rows == 0) return;
  const std::size_t want = rows - 1;
  std::set<ElementSet> seen;
  // Every hyperplane of the matroid is spanned by some independent (d-1)-set.
  // Full row rank with d >= 1 implies n >= 1.
  for (ElementSet b = 0; b < (ElementSet{1} << n()); ++b) {
    if (static_cast<std::size_t>(popcount(b)) != want) continue;
    const auto elems = elements_of(b);
    if (rank_of_columns(realization_.entries(), elems) != want) continue;
    IntMatrix normal_system =
        want == 0 ? IntMatrix{} : linalg::transpose(linalg::select_columns(realization_.entries(), elems), want);
    const auto kernel = linalg::kernel_basis(normal_system, rows);
    if (kernel.size() != 1) throw InternalConsistencyError("hyperplane normal is not unique");
    IntVector c = kernel.front();
    IntVector v(n());
    for (std::size_t j = 0; j < n(); ++j) {
      mpz_class acc = 0;
      for (std::size_t i = 0; i < rows; ++i) acc += c[i] * realization_.at(i, j);
      v[j] = acc;
    }
    ElementSet support = 0;
    for (std::size_t j = 0; j < n(); ++j) {
      if (v[j] != 0) support |= ElementSet{1} << j;
    }
    if (!seen.insert(support).second) continue;

    CocircuitVector cv;
    mpz_class g = linalg::content(v);
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& y : v) y = -y;
        for (auto& y : c) y = -y;
      }
      break;
    }
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    const bool c_divisible =
        std::all_of(c.begin(), c.end(), [&g](const mpz_class& x) { return mpz_divisible_p(x.get_mpz_t(), g.get_mpz_t()) != 0; });
    if (c_divisible) {
      for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      cv.scale = 1;
    } else {
      cv.scale = g;
    }
    cv.v = std::move(v);
    cv.c = std::move(c);
    cv.support = support;
    cv.support_size = popcount(support);
    cocircuits_.push_back(std::move(cv));
  }
}

void RealizedMatroid::compute_unimodularity() {
  unimodular_ = true;
  const std::size_t rows = d();
  if (rows == 0) return;
  for (ElementSet b = 0; b < (ElementSet{1} << n()); ++b) {
    if (static_cast<std::size_t>(popcount(b)) != rows) continue;
    const mpz_class det = linalg::determinant(linalg::select_columns(realization_.entries(), elements_of(b)));
    if (abs(det) > 1) {
      unimodular_ = false;
      return;
    }
  }
}

RealizedMatroid from_matrix(const IntMatrix& rows) { return RealizedMatroid(Realization::from_rows(rows)); }

RealizedMatroid from_matrix(std::size_t d, std::size_t n, const IntMatrix& rows) {
  return RealizedMatroid(Realization(d, n, rows));
}

std::size_t rank(const RealizedMatroid& m, ElementSet subset) { return m.rank(subset); }

bool is_unimodular(const RealizedMatroid& m) { return m.is_unimodular(); }

// ---------------------------------------------------------------------------
// Tutte polynomial

namespace {

class TutteSolver {
 public:
  BiPolyXY solve(IntMatrix a, std::size_t cols) {
    // Peel off loops and coloops: T = x^coloops y^loops T(rest).
    int loops = 0;
    int coloops = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < cols; ++j) {
        if (is_zero_column(a, j)) {
          a = drop_column(a, cols, j);
          --cols;
          ++loops;
          changed = true;
          break;
        }
        if (is_coloop(a, cols, j)) {
          a = contract_column(std::move(a), cols, j);
          --cols;
          ++coloops;
          changed = true;
          break;
        }
      }
    }
    const BiPolyXY factor = BiPolyXY::monomial(1, coloops, loops);
    if (cols == 0) return factor;

    const std::string key = canonical_key(a, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return factor * it->second;

    // After peeling, element 0 is neither a loop nor a coloop.
    BiPolyXY result = solve(drop_column(a, cols, 0), cols - 1) + solve(contract_column(a, cols, 0), cols - 1);
    memo_.emplace(key, result);
    return factor * result;
  }

 private:
  static bool is_zero_column(const IntMatrix& a, std::size_t j) {
    return std::all_of(a.begin(), a.end(), [j](const IntVector& row) { return row[j] == 0; });
  }

  static bool is_coloop(const IntMatrix& a, std::size_t cols, std::size_t j) {
    if (a.empty()) return false;
    return linalg::rank(drop_column(a, cols, j)) < a.size();
  }

  // Equal keys imply isomorphic matroids: RREF fixes the row space, then each
  // column is rescaled to a primitive sign-normalized integer vector and the
  // columns are sorted.
  static std::string canonical_key(const IntMatrix& a, std::size_t cols) {
    linalg::RatMatrix q(a.size(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) q[i][j] = a[i][j];
    }
    linalg::rref(q);
    std::vector<IntVector> columns(cols, IntVector(a.size()));
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class l = 1;
      for (std::size_t i = 0; i < a.size(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q[i][j].get_den_mpz_t());
      for (std::size_t i = 0; i < a.size(); ++i) {
        mpq_class scaled = q[i][j] * l;
        columns[j][i] = scaled.get_num();
      }
      columns[j] = linalg::make_primitive(std::move(columns[j]));
    }
    std::sort(columns.begin(), columns.end());
    std::string key = std::to_string(a.size()) + "x" + std::to_string(cols) + ":";
    for (const auto& col : columns) {
      for (const auto& e : col) {
        key += e.get_str();
        key += ',';
      }
      key += ';';
    }
    return key;
  }

  std::unordered_map<std::string, BiPolyXY> memo_;
};

}  // namespace

BiPolyXY tutte(const Realization& a) {
  TutteSolver solver;
  return solver.solve(a.entries(), a.n());
}

BiPolyXY tutte(const RealizedMatroid& m) { return tutte(m.realization()); }

BiPolyXY tutte_by_subsets(const RealizedMatroid& m) {
  const BiPolyXY xm1 = BiPolyXY::x() - BiPolyXY(1L);
  const BiPolyXY ym1 = BiPolyXY::y() - BiPolyXY(1L);
  const int d = static_cast<int>(m.d());
  BiPolyXY total;
  for (ElementSet s = 0; s <= m.ground_set(); ++s) {
    const int r = static_cast<int>(m.rank(s));
    total += pow(xm1, static_cast<unsigned>(d - r)) * pow(ym1, static_cast<unsigned>(popcount(s) - r));
    if (s == m.ground_set()) break;
  }
  return total;
}

RealizedMatroid minor(const RealizedMatroid& m, MinorOp op, int element) {
  if (element < 0 || static_cast<std::size_t>(element) >= m.n()) {
    throw ContractViolation("element " + std::to_string(element + 1) + " is not in the ground set");
  }
  const auto col = static_cast<std::size_t>(element);
  const IntMatrix& a = m.realization().entries();
  if (op == MinorOp::kDelete) {
    if (m.is_coloop(element)) {
      throw ContractViolation("cannot delete element " + std::to_string(element + 1) + ": it is a coloop");
    }
    return RealizedMatroid(Realization(m.d(), m.n() - 1, drop_column(a, m.n(), col)));
  }
  if (m.is_loop(element)) {
    throw ContractViolation("cannot contract element " + std::to_string(element + 1) + ": it is a loop");
  }
  return RealizedMatroid(Realization(m.d() - 1, m.n() - 1, contract_column(a, m.n(), col)));
}

RealizedMatroid thicken(const RealizedMatroid& m, int copies) {
  if (copies < 1) throw ContractViolation("thickening factor must be >= 1");
  const std::size_t total = m.n() * static_cast<std::size_t>(copies);
  if (total > static_cast<std::size_t>(kMaxGroundSet)) {
    throw SizeGuardError("ground set guard exceeded: m*n = " + std::to_string(total) + " > " +
                         std::to_string(kMaxGroundSet));
  }
  IntMatrix rows(m.d(), IntVector(total));
  for (std::size_t i = 0; i < m.d(); ++i) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(copies); ++k) {
      for (std::size_t j = 0; j < m.n(); ++j) rows[i][k * m.n() + j] = m.realization().at(i, j);
    }
  }
  return RealizedMatroid(Realization(m.d(), total, std::move(rows)));
}

BiPolyXY tutte_thickened(const BiPolyXY& t, int d, int copies) {
  if (copies < 1) throw ContractViolation("thickening factor must be >= 1");
  if (t.x_degree() > d) throw ContractViolation("Tutte polynomial has x-degree above the rank");
  BiPolyXY geometric;  // 1 + y + ... + y^{m-1}
  for (int k = 0; k < copies; ++k) geometric += BiPolyXY::monomial(1, 0, k);
  const BiPolyXY x_num = geometric - BiPolyXY(1L) + BiPolyXY::x();
  const BiPolyXY y_num = BiPolyXY::monomial(1, 0, copies);
  return evaluate_cleared(t, x_num, geometric, d, y_num, BiPolyXY(1L), std::max(t.y_degree(), 0));
}

std::vector<Component> connected_components(const RealizedMatroid& m) {
  const std::size_t n = m.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& c : m.circuits()) {
    for (std::size_t k = 1; k < c.elements.size(); ++k) {
      parent[find(c.elements[k])] = find(c.elements[0]);
    }
  }
  std::vector<ElementSet> masks(n, 0);
  for (std::size_t j = 0; j < n; ++j) masks[find(static_cast<int>(j))] |= ElementSet{1} << j;

  std::vector<Component> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (masks[j] == 0) continue;
    Component comp;
    comp.elements = elements_of(masks[j]);
    const ElementSet mask = masks[j];
    comp.is_circuit = std::any_of(m.circuits().begin(), m.circuits().end(),
                                  [mask](const CircuitRep& c) { return c.support == mask; });
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const Component& a, const Component& b) { return a.elements.front() < b.elements.front(); });
  return out;
}

std::size_t count_independent_sets(const RealizedMatroid& m) {
  std::size_t count = 0;
  for (ElementSet s = 0;; ++s) {
    if (m.rank(s) == static_cast<std::size_t>(popcount(s))) ++count;
    if (s == m.ground_set()) break;
  }
  return count;
}

}  // namespace gehrhart
