#include "tropcay/arrangement.hpp"

#include <algorithm>
#include <functional>

#include "tropcay/errors.hpp"

namespace tropcay {

bool Covector::is_subset_of(const Covector& other) const {
  return std::includes(other.pairs.begin(), other.pairs.end(), pairs.begin(), pairs.end());
}

Covector covector(const TropMatrix& v, const RationalVector& z) {
  if (z.size() != v.rows()) throw DimensionError("covector: point has wrong length");
  Covector cv{v.rows(), v.cols(), {}};
  for (std::size_t k = 0; k < v.cols(); ++k) {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (!v(i, k).is_finite()) continue;
      Rational d = v(i, k).value() - z[i];
      if (!best || d < *best) best = d;
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (v(i, k).is_finite() && v(i, k).value() - z[i] == *best) cv.pairs.emplace(i, k);
    }
  }
  return cv;
}

CoarseType coarse_type(const Covector& cv) {
  CoarseType counts(cv.rows, 0);
  for (const auto& [i, k] : cv.pairs) ++counts[i];
  return counts;
}

ExponentVector covector_incidence(const Covector& cv) {
  ExponentVector e(cv.rows * cv.cols, 0);
  for (const auto& [i, k] : cv.pairs) e[separate_variable_index(i, k, cv.cols)] = 1;
  return e;
}

namespace {

// z_j - z_i <= v_jk - v_ik, i.e. row i is at least as small as row j in column k.
AffineConstraint row_no_larger(const TropMatrix& v, std::size_t i, std::size_t j, std::size_t k) {
  RationalVector a(v.rows(), 0);
  a[j] += 1;
  a[i] -= 1;
  return {std::move(a), Rational(v(j, k).value() - v(i, k).value())};
}

// Constraints for tc(z) containing cv; `strict` collects the inequalities
// that must be strict for tc(z) == cv on the columns in [0, upto).
Hrep covector_system(const TropMatrix& v, const Covector& cv, std::size_t upto, std::vector<std::size_t>* strict) {
  Hrep h;
  h.dim = v.rows();
  h.equations.push_back(first_coordinate_zero(v.rows()));
  for (std::size_t k = 0; k < upto; ++k) {
    std::vector<std::size_t> rows_in;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (cv.contains(i, k)) rows_in.push_back(i);
    }
    if (rows_in.empty()) continue;
    for (auto i : rows_in) {
      if (!v(i, k).is_finite()) throw EmptyCellError("covector pair on an infinite entry");
    }
    const std::size_t lead = rows_in.front();
    for (std::size_t j = 0; j < v.rows(); ++j) {
      if (!v(j, k).is_finite() || j == lead) continue;
      if (cv.contains(j, k)) {
        // Both minimal: two opposite inequalities, kept weak.
        h.inequalities.push_back(row_no_larger(v, lead, j, k));
        h.inequalities.push_back(row_no_larger(v, j, lead, k));
      } else {
        if (strict) strict->push_back(h.inequalities.size());
        h.inequalities.push_back(row_no_larger(v, lead, j, k));
      }
    }
  }
  return h;
}

}  // namespace

Hrep cell_from_covector(const TropMatrix& v, const Covector& cv) {
  Hrep h = covector_system(v, cv, v.cols(), nullptr);
  if (!is_feasible(h)) throw EmptyCellError("covector is not realizable");
  return h;
}

std::optional<RationalVector> realize_covector(const TropMatrix& v, const Covector& cv) {
  for (std::size_t k = 0; k < v.cols(); ++k) {
    bool any = false;
    for (std::size_t i = 0; i < v.rows(); ++i) any = any || cv.contains(i, k);
    if (!any) return std::nullopt;
  }
  std::vector<std::size_t> strict;
  Hrep h;
  try {
    h = covector_system(v, cv, v.cols(), &strict);
  } catch (const EmptyCellError&) {
    return std::nullopt;
  }
  return strictly_feasible_point(h, strict);
}

std::vector<ArrangementCell> arrangement_cells(const TropMatrix& v) {
  std::vector<ArrangementCell> out;
  Covector cv{v.rows(), v.cols(), {}};
  // Depth-first over columns; a prefix is pruned as soon as its partial
  // covector has no realization.
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    std::vector<std::size_t> strict;
    Hrep h = covector_system(v, cv, k, &strict);
    auto point = strictly_feasible_point(h, strict);
    if (!point) return;
    if (k == v.cols()) {
      out.push_back({cv, *point});
      return;
    }
    std::vector<std::size_t> finite_rows;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (v(i, k).is_finite()) finite_rows.push_back(i);
    }
    const std::size_t subsets = std::size_t{1} << finite_rows.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      for (std::size_t b = 0; b < finite_rows.size(); ++b) {
        if (mask >> b & 1) cv.pairs.emplace(finite_rows[b], k);
      }
      extend(k + 1);
      for (std::size_t b = 0; b < finite_rows.size(); ++b) cv.pairs.erase({finite_rows[b], k});
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const ArrangementCell& a, const ArrangementCell& b) { return a.cv < b.cv; });
  return out;
}

std::vector<const BoundedCell*> TropicalPolytopeCells::maximal_cells() const {
  std::vector<const BoundedCell*> out;
  for (const auto& c : bounded_cells) {
    if (c.maximal) out.push_back(&c);
  }
  return out;
}

bool TropicalPolytopeCells::contains(const RationalVector& z) const {
  RationalVector chart = z;
  const Rational shift = chart.front();
  for (auto& c : chart) c -= shift;
  return std::any_of(bounded_cells.begin(), bounded_cells.end(),
                     [&](const BoundedCell& c) { return c.hrep.contains(chart); });
}

TropicalPolytopeCells tconv_bounded_cells(const TropMatrix& v) {
  if (!v.all_finite()) throw UnsupportedError("bounded-cell extraction requires a matrix with finite entries");
  const TropPolynomial f = arrangement_poly(v);
  TropicalPolytopeCells out{v, {}};
  for (auto& cell : arrangement_cells(v)) {
    Hrep h = cell_from_covector(v, cell.cv);
    if (!is_bounded(h)) continue;
    BoundedCell b;
    b.cv = cell.cv;
    b.dimension = dimension(h);
    b.interior = cell.interior;
    b.dual = eval(f, cell.interior).argopt;
    b.vertices = vertices(h);
    b.hrep = std::move(h);
    out.bounded_cells.push_back(std::move(b));
  }
  // A closed cell is contained in another iff its covector is a superset.
  for (auto& b : out.bounded_cells) {
    b.maximal = std::none_of(out.bounded_cells.begin(), out.bounded_cells.end(), [&](const BoundedCell& other) {
      return other.cv != b.cv && other.cv.is_subset_of(b.cv);
    });
  }
  return out;
}

RationalVector project_nearest(const TropMatrix& v, const RationalVector& z) {
  if (z.size() != v.rows()) throw DimensionError("project_nearest: point has wrong length");
  RationalVector out(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    std::optional<Rational> best;
    for (std::size_t k = 0; k < v.cols(); ++k) {
      if (!v(i, k).is_finite()) continue;
      std::optional<Rational> inner;
      for (std::size_t j = 0; j < v.rows(); ++j) {
        if (!v(j, k).is_finite()) continue;
        Rational t = v(i, k).value() - v(j, k).value() + z[j];
        if (!inner || t > *inner) inner = t;
      }
      if (!best || *inner < *best) best = inner;
    }
    if (!best) throw UnsupportedError("projection is infinite in coordinate " + std::to_string(i + 1));
    out[i] = *best;
  }
  return out;
}

bool membership(const TropMatrix& v, const RationalVector& z) {
  const RationalVector p = project_nearest(v, z);
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (p[i] - z[i] != p[0] - z[0]) return false;
  }
  return true;
}

}  // namespace tropcay
