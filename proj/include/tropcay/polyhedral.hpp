#pragma once

// Regular subdivisions of lifted point configurations and the dual normal
// complex of a tropical polynomial.

#include <string>
#include <vector>

#include "tropcay/polyhedron.hpp"
#include "tropcay/trop_poly.hpp"

namespace tropcay {

// Labeled points; distinct labels may share coordinates.
class PointConfiguration {
 public:
  PointConfiguration(std::size_t ambient_dim, std::vector<std::string> labels, std::vector<RationalVector> coords);
  // Labels "0", "1", ...
  static PointConfiguration unlabeled(std::vector<RationalVector> coords);
  static PointConfiguration from_exponents(const std::vector<ExponentVector>& exponents);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return coords_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const RationalVector& coords(std::size_t i) const { return coords_[i]; }
  const std::vector<RationalVector>& points() const { return coords_; }
  std::size_t index_of(const std::string& label) const;

 private:
  std::size_t ambient_dim_;
  std::vector<std::string> labels_;
  std::vector<RationalVector> coords_;
};

// Height per point, indexed like the configuration.
using Lifting = RationalVector;

enum class Side { Below, Above };

// A cell is a sorted list of point indices.
using Cell = std::vector<std::size_t>;

// Affine height function h(x) = normal . x + offset that agrees with the
// lifting on its cell and is strictly below (Below) or above (Above) it on
// every other point.
struct SupportingFunction {
  RationalVector normal;
  Rational offset;
  Rational operator()(const RationalVector& x) const;
};

struct Subdivision {
  PointConfiguration config;
  Lifting lifting;
  Side side = Side::Below;
  std::vector<Cell> cells;                 // sorted
  std::vector<SupportingFunction> witnesses;  // parallel to cells
  std::vector<std::size_t> non_face_points;   // in no cell

  std::vector<std::vector<std::string>> cell_labels() const;
};

std::size_t affine_dim(const PointConfiguration& config);

// Projection of the lower (Below) or upper (Above) facets of the lifted
// configuration. Exhaustive search over affinely spanning point subsets.
Subdivision regular_subdivision(const PointConfiguration& config, const Lifting& lifting, Side side);

// Checks the exactness witnesses: cell points on the supporting function,
// all other points strictly on the far side.
bool verify_witnesses(const Subdivision& s);

// Regular subdivision of the support lifted by the coefficients; below for
// min, above for max. Labels are the exponent strings, ordered like support().
Subdivision subdivision_from_poly(const TropPolynomial& f);

// Support points that are the unique optimum somewhere.
std::vector<ExponentVector> dome_facets(const TropPolynomial& f);

struct NormalCell {
  ExponentVector dual;
  Hrep hrep;
};

// Maximal cells of the normal complex, one per dome facet. For homogeneous
// sources the cells live in the chart x_1 = 0 of R^d / R1.
struct NormalComplex {
  TropPolynomial source;
  bool quotient = false;
  std::vector<NormalCell> cells;
};

NormalComplex normal_complex(const TropPolynomial& f);

// {x : every exponent of `face` is optimal}, in the chart when f is homogeneous.
Hrep dual_cell(const TropPolynomial& f, const std::vector<ExponentVector>& face);

// Face of the dual subdivision whose normal-complex cell contains z in its
// relative interior: the optimal exponents at z.
std::vector<ExponentVector> cell_of_point(const TropPolynomial& f, const RationalVector& z);

std::string to_string(const Cell& c, const PointConfiguration& config);

}  // namespace tropcay
