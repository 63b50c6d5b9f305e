#pragma once

// JSON input documents and report serialization.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcay/cayley.hpp"
#include "tropcay/ricardo.hpp"

namespace tropcay::io {

using Json = nlohmann::json;

struct ConfigurationPart {
  PointConfiguration points;
  Lifting lifting;
};

struct EconomyInput {
  TropMatrix log_costs;
  std::optional<RationalVector> work_force;  // accepted, unused
  std::optional<RationalVector> wages;
  std::optional<RationalVector> prices;
  bool approximate = false;
};

struct InputDocument {
  enum class Kind { Matrix, Configuration, Economy };
  Kind kind = Kind::Matrix;
  Orientation orientation = Orientation::Min;
  std::optional<TropMatrix> matrix;
  std::vector<ConfigurationPart> parts;
  std::optional<EconomyInput> economy;

  // Canonical JSON form embedded in every report.
  Json canonical() const;
};

// Throws SchemaError naming the offending field (or line for syntax errors).
InputDocument parse_input(const std::string& text);
InputDocument load_input(const std::string& path);

Json rational_json(const Rational& q);
Json tropnum_json(const TropNum& a);
Json vector_json(const RationalVector& v);
Json matrix_json(const TropMatrix& m);
Json polynomial_json(const TropPolynomial& f);
// 1-based (i, k) pairs, sorted.
Json pairs_json(const std::set<std::pair<std::size_t, std::size_t>>& pairs);
Json hrep_json(const Hrep& h);

// Parses "1,2,-1/3" into a rational vector. Throws SchemaError.
RationalVector parse_point(const std::string& csv);

// Deterministic serialization: sorted keys, two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace tropcay::io
