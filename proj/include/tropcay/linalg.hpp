#pragma once

// Exact dense linear algebra over the rationals.

#include <optional>
#include <vector>

#include "tropcay/rational.hpp"

namespace tropcay::linalg {

using Matrix = std::vector<RationalVector>;  // row-major

// Reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

// Unique solution of the square system a x = b, or nullopt when singular.
std::optional<RationalVector> solve(Matrix a, RationalVector b);

// Any solution of a x = b (free variables set to zero), or nullopt.
std::optional<RationalVector> solve_any(Matrix a, RationalVector b);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);

// Affine coordinates on the affine hull of a finite point set. The basis is
// chosen among the points themselves: origin = points[0], directions =
// differences to later points, picked greedily.
class AffineChart {
 public:
  explicit AffineChart(const std::vector<RationalVector>& points);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  // Coordinates of a point lying in the affine hull; throws otherwise.
  RationalVector coordinates(const RationalVector& p) const;
  bool contains(const RationalVector& p) const;
  const RationalVector& origin() const { return origin_; }
  // Ambient functional a with a . (x - origin) == alpha . coordinates(x) on
  // the affine hull.
  RationalVector pullback(const RationalVector& alpha) const;

 private:
  std::size_t ambient_ = 0;
  RationalVector origin_;
  Matrix basis_;                   // dim x ambient
  std::vector<std::size_t> pivots_;  // ambient columns where basis_ restricted is invertible
  Matrix inverse_;                 // inverse of basis_ restricted to pivots_, dim x dim
};

}  // namespace tropcay::linalg
