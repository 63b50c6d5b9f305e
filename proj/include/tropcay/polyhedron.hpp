#pragma once

// H-represented polyhedra: feasibility, dimension, boundedness, interior
// points and vertex enumeration, all exact.

#include <optional>
#include <string>
#include <vector>

#include "tropcay/rational.hpp"

namespace tropcay {

struct AffineConstraint {
  RationalVector normal;
  Rational offset;
  friend bool operator==(const AffineConstraint&, const AffineConstraint&) = default;
};

// {x : normal . x <= offset for every inequality, normal . x == offset for every equation}
struct Hrep {
  std::size_t dim = 0;
  std::vector<AffineConstraint> inequalities;
  std::vector<AffineConstraint> equations;

  void add_inequality(RationalVector normal, Rational offset) {
    inequalities.push_back({std::move(normal), std::move(offset)});
  }
  void add_equation(RationalVector normal, Rational offset) { equations.push_back({std::move(normal), std::move(offset)}); }
  bool contains(const RationalVector& x) const;
  // True when x satisfies every inequality strictly, except the ones that are
  // implicit equalities of the polyhedron.
  bool relatively_contains(const RationalVector& x) const;
};

// {x : x_0 = 0}, the chart used for the tropical projective torus.
AffineConstraint first_coordinate_zero(std::size_t dim);

std::optional<RationalVector> feasible_point(const Hrep& h);
bool is_feasible(const Hrep& h);

// Maximum of c . x, nullopt when unbounded. Throws InfeasibleError.
std::optional<Rational> maximize(const Hrep& h, const RationalVector& c);

// Indices of inequalities that hold with equality on the whole polyhedron.
std::vector<std::size_t> implicit_equalities(const Hrep& h);

// Affine dimension; throws InfeasibleError.
std::size_t dimension(const Hrep& h);

// A point strictly inside the relative interior; throws InfeasibleError.
RationalVector relative_interior_point(const Hrep& h);

// A point with the listed inequalities strict and the others weak, if any.
std::optional<RationalVector> strictly_feasible_point(const Hrep& h, const std::vector<std::size_t>& strict);

// Trivial recession cone. Throws InfeasibleError on an empty polyhedron.
bool is_bounded(const Hrep& h);
inline bool is_bounded_cell(const Hrep& h) { return is_bounded(h); }

// Vertices of a polyhedron by enumeration of inequality subsets, sorted.
std::vector<RationalVector> vertices(const Hrep& h);

std::string to_string(const Hrep& h);

}  // namespace tropcay
