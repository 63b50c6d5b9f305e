#pragma once

// Cayley embeddings and the label-level bijection between subdivisions of a
// Cayley embedding and mixed subdivisions of the Minkowski sum.

#include <set>
#include <utility>
#include <vector>

#include "tropcay/polyhedral.hpp"

namespace tropcay {

// Embedded point (a, e_part) in R^{d+n}; labels are "part:label" with the
// part counted from 1.
struct CayleyConfig {
  std::vector<PointConfiguration> parts;
  PointConfiguration embedded;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // embedded index -> (part, index in part)

  std::size_t embedded_index(std::size_t part, std::size_t index) const;
};

// One subset of point indices per part, each sorted and nonempty.
struct MixedCell {
  std::vector<Cell> subsets;
  friend bool operator==(const MixedCell&, const MixedCell&) = default;
  friend bool operator<(const MixedCell& a, const MixedCell& b) { return a.subsets < b.subsets; }
};

struct MixedSubdivision {
  std::vector<PointConfiguration> parts;
  std::vector<MixedCell> cells;  // sorted
};

CayleyConfig cayley_embed(const std::vector<PointConfiguration>& parts);

// Throws NonTransversalCellError when a cell misses a part.
MixedSubdivision cayley_to_mixed(const CayleyConfig& cayley, const Subdivision& subdivision);

// Label-level inverse of cayley_to_mixed. The result carries no lifting.
// Throws PreconditionError on malformed or non-maximal label sets.
Subdivision mixed_to_cayley(const CayleyConfig& cayley, const MixedSubdivision& ms);

// Every label tuple (first part varying fastest) with its coordinate sum.
// Labels are "(l_1,...,l_n)".
PointConfiguration minkowski_config(const std::vector<PointConfiguration>& parts);

// Regular subdivision of the Cayley embedding under the concatenated
// liftings, read as a mixed subdivision.
MixedSubdivision mixed_regular(const std::vector<PointConfiguration>& parts, const std::vector<Lifting>& liftings);

// {a_1 + ... + a_n : a_i in the i-th subset}.
std::set<RationalVector> mixed_cell_points(const std::vector<PointConfiguration>& parts, const MixedCell& cell);

// Min polynomial with the part's (integral) points as exponents and the
// lifting as coefficients.
TropPolynomial part_polynomial(const PointConfiguration& part, const Lifting& lifting);

// Coordinates (a, u_2 - u_1) of a two-part embedded point: the
// {(a,-1)} u {(b,1)} picture.
RationalVector two_sided_coordinates(const CayleyConfig& cayley, std::size_t embedded_index);

// If every part is the vertex set of the standard simplex in R^d (in any
// order), returns for each embedded point the index pair (i, k) such that it
// sits at (e_i, e_k), the vertex of Delta_{d-1} x Delta_{n-1}. Empty otherwise.
std::vector<std::pair<std::size_t, std::size_t>> product_of_simplices_vertices(const CayleyConfig& cayley);

// Every fine cell lies inside some coarse cell, by labels.
bool refines(const std::vector<Cell>& fine, const std::vector<Cell>& coarse);
bool refines(const MixedSubdivision& fine, const MixedSubdivision& coarse);

}  // namespace tropcay
