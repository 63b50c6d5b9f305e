#pragma once

// Deterministic SVG drawings of planar tropical line arrangements and mixed
// subdivisions of dilated triangles.

#include <string>

#include "tropcay/cayley.hpp"
#include "tropcay/trop_core.hpp"

namespace tropcay::svg {

// Lines of a finite 3 x n matrix in the chart (x_2 - x_1, x_3 - x_1), with
// cell labels and shaded bounded cells. Throws UnsupportedError unless the
// matrix has three rows and finite entries.
std::string arrangement_svg(const TropMatrix& v);

// Cells drawn as polygons. Parts must live in R^2, or in R^3 where they are
// drawn in barycentric position. Throws UnsupportedError otherwise.
std::string mixed_svg(const MixedSubdivision& ms);

}  // namespace tropcay::svg
