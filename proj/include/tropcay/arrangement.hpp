#pragma once

// Tropical hyperplane arrangements of a matrix V, covectors, and tropical
// polytopes. Pairs and indices are 0-based; reports convert to 1-based.

#include <set>
#include <utility>
#include <vector>

#include "tropcay/polyhedron.hpp"
#include "tropcay/trop_poly.hpp"

namespace tropcay {

// tc(z) = {(i,k) : v_ik - z_i = min_j (v_jk - z_j)} over finite entries.
struct Covector {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  friend bool operator==(const Covector&, const Covector&) = default;
  friend bool operator<(const Covector& a, const Covector& b) { return a.pairs < b.pairs; }
  bool contains(std::size_t i, std::size_t k) const { return pairs.count({i, k}) > 0; }
  bool is_subset_of(const Covector& other) const;
};

using CoarseType = std::vector<long>;

Covector covector(const TropMatrix& v, const RationalVector& z);
CoarseType coarse_type(const Covector& cv);

// 0/1 vector over the separate variables y_ik (index i*cols + k).
ExponentVector covector_incidence(const Covector& cv);

// Closed cell {z : tc(z) contains cv} in the chart z_1 = 0. Throws
// EmptyCellError when cv is not realizable.
Hrep cell_from_covector(const TropMatrix& v, const Covector& cv);

// A point with tc(z) == cv exactly, if one exists.
std::optional<RationalVector> realize_covector(const TropMatrix& v, const Covector& cv);

struct ArrangementCell {
  Covector cv;
  RationalVector interior;  // relative interior point, chart coordinates
};

// Every relatively open cell of the arrangement, sorted by covector.
std::vector<ArrangementCell> arrangement_cells(const TropMatrix& v);

struct BoundedCell {
  Covector cv;
  Hrep hrep;
  std::size_t dimension = 0;
  RationalVector interior;
  std::vector<ExponentVector> dual;  // face of the dual mixed subdivision
  std::vector<RationalVector> vertices;
  bool maximal = false;
};

struct TropicalPolytopeCells {
  TropMatrix matrix;
  std::vector<BoundedCell> bounded_cells;

  std::vector<const BoundedCell*> maximal_cells() const;
  // True when z lies in some bounded cell.
  bool contains(const RationalVector& z) const;
};

// Bounded cells of the arrangement in R^d / R1. Requires finite V.
TropicalPolytopeCells tconv_bounded_cells(const TropMatrix& v);

// min_k max_j (v_ik - v_jk + z_j).
RationalVector project_nearest(const TropMatrix& v, const RationalVector& z);

// z + R1 lies in tconv(V).
bool membership(const TropMatrix& v, const RationalVector& z);

}  // namespace tropcay
