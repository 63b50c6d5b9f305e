#include "tropcay/io.hpp"

#include <fstream>
#include <sstream>

#include "tropcay/errors.hpp"

namespace tropcay::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw SchemaError("field '" + field + "': " + message);
}

TropNum parse_entry(const Json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return TropNum(Rational(j.get<long>()));
    if (j.is_string()) return parse_tropnum(j.get<std::string>());
    if (j.is_number_float()) {
      // Floats are re-parsed from their shortest decimal text so that 0.1
      // means 1/10.
      return TropNum(parse_rational(j.dump()));
    }
  } catch (const SchemaError& e) {
    fail(field, e.what());
  }
  fail(field, "expected an integer, a \"p/q\" or decimal string, or \"inf\"");
}

Rational parse_finite(const Json& j, const std::string& field) {
  TropNum t = parse_entry(j, field);
  if (!t.is_finite()) fail(field, "must be finite");
  return t.value();
}

RationalVector parse_vector(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_finite(j[i], field + "/" + std::to_string(i)));
  return out;
}

TropMatrix parse_matrix(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of rows");
  std::vector<std::vector<TropNum>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rf = field + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].empty()) fail(rf, "expected a nonempty row");
    if (j[i].size() != j[0].size()) fail(rf, "row length differs from row 0");
    std::vector<TropNum> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      TropNum t = parse_entry(j[i][k], rf + "/" + std::to_string(k));
      if (t.is_neg_inf()) fail(rf + "/" + std::to_string(k), "-inf is not allowed");
      row.push_back(std::move(t));
    }
    rows.push_back(std::move(row));
  }
  try {
    return TropMatrix::from_rows(rows);
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

ConfigurationPart parse_part(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object with points and lifting");
  if (!j.contains("points")) fail(field + "/points", "missing");
  const Json& pts = j["points"];
  if (!pts.is_array() || pts.empty()) fail(field + "/points", "expected a nonempty array");
  std::vector<RationalVector> coords;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    coords.push_back(parse_vector(pts[i], field + "/points/" + std::to_string(i)));
    if (coords.back().size() != coords.front().size()) {
      fail(field + "/points/" + std::to_string(i), "dimension differs from point 0");
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || l.size() != coords.size()) fail(field + "/labels", "expected one label per point");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string() && !l[i].is_number_integer()) fail(field + "/labels/" + std::to_string(i), "bad label");
      labels.push_back(l[i].is_string() ? l[i].get<std::string>() : std::to_string(l[i].get<long>()));
    }
  } else {
    for (std::size_t i = 0; i < coords.size(); ++i) labels.push_back(std::to_string(i));
  }
  Lifting lifting(coords.size(), 0);
  if (j.contains("lifting")) {
    lifting = parse_vector(j["lifting"], field + "/lifting");
    if (lifting.size() != coords.size()) fail(field + "/lifting", "expected one height per point");
  }
  try {
    const std::size_t dim = coords.front().size();
    return {PointConfiguration(dim, std::move(labels), std::move(coords)), std::move(lifting)};
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }
Json tropnum_json(const TropNum& a) { return to_string(a); }

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Json matrix_json(const TropMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(tropnum_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json polynomial_json(const TropPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exponent", m}, {"coefficient", rational_json(c)}});
  Json out = {{"orientation", to_string(f.orientation())}, {"dim", f.dim()}, {"terms", std::move(terms)}};
  if (auto deg = is_homogeneous(f)) out["homogeneous_degree"] = *deg;
  return out;
}

Json pairs_json(const std::set<std::pair<std::size_t, std::size_t>>& pairs) {
  Json out = Json::array();
  for (const auto& [i, k] : pairs) out.push_back({i + 1, k + 1});
  return out;
}

Json hrep_json(const Hrep& h) {
  Json ineq = Json::array();
  for (const auto& c : h.inequalities) ineq.push_back({{"normal", vector_json(c.normal)}, {"offset", rational_json(c.offset)}});
  Json eq = Json::array();
  for (const auto& c : h.equations) eq.push_back({{"normal", vector_json(c.normal)}, {"offset", rational_json(c.offset)}});
  return {{"dim", h.dim}, {"inequalities", std::move(ineq)}, {"equations", std::move(eq)}};
}

Json InputDocument::canonical() const {
  Json out;
  out["orientation"] = to_string(orientation);
  switch (kind) {
    case Kind::Matrix:
      out["kind"] = "matrix";
      out["matrix"] = matrix_json(*matrix);
      break;
    case Kind::Configuration: {
      out["kind"] = "configuration";
      Json parts_json = Json::array();
      for (const auto& p : parts) {
        Json pts = Json::array();
        for (const auto& c : p.points.points()) pts.push_back(vector_json(c));
        parts_json.push_back({{"points", std::move(pts)}, {"labels", p.points.labels()}, {"lifting", vector_json(p.lifting)}});
      }
      out["parts"] = std::move(parts_json);
      break;
    }
    case Kind::Economy: {
      out["kind"] = "economy";
      out["logR"] = matrix_json(economy->log_costs);
      if (economy->work_force) out["q"] = vector_json(*economy->work_force);
      if (economy->wages) out["wages"] = vector_json(*economy->wages);
      if (economy->prices) out["prices"] = vector_json(*economy->prices);
      if (economy->approximate) out["approximate"] = true;
      break;
    }
  }
  return out;
}

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw SchemaError("top level must be an object");
  InputDocument doc;
  if (!j.contains("kind") || !j["kind"].is_string()) fail("kind", "missing or not a string");
  const std::string kind = j["kind"];
  if (j.contains("orientation")) {
    if (j["orientation"] == "min") {
      doc.orientation = Orientation::Min;
    } else if (j["orientation"] == "max") {
      doc.orientation = Orientation::Max;
    } else {
      fail("orientation", "expected \"min\" or \"max\"");
    }
  }
  if (kind == "matrix") {
    doc.kind = InputDocument::Kind::Matrix;
    if (!j.contains("matrix")) fail("matrix", "missing");
    doc.matrix = parse_matrix(j["matrix"], "matrix");
  } else if (kind == "configuration") {
    doc.kind = InputDocument::Kind::Configuration;
    if (j.contains("parts")) {
      const Json& parts = j["parts"];
      if (!parts.is_array() || parts.empty()) fail("parts", "expected a nonempty array");
      for (std::size_t i = 0; i < parts.size(); ++i) doc.parts.push_back(parse_part(parts[i], "parts/" + std::to_string(i)));
    } else {
      doc.parts.push_back(parse_part(j, ""));
    }
    for (std::size_t i = 1; i < doc.parts.size(); ++i) {
      if (doc.parts[i].points.ambient_dim() != doc.parts[0].points.ambient_dim()) {
        fail("parts/" + std::to_string(i), "ambient dimension differs from part 0");
      }
    }
  } else if (kind == "economy") {
    doc.kind = InputDocument::Kind::Economy;
    std::optional<TropMatrix> costs;
    bool approximate = false;
    if (j.contains("logR")) {
      costs = parse_matrix(j["logR"], "logR");
    } else if (j.contains("R")) {
      const Json& r = j["R"];
      if (!r.is_array() || r.empty()) fail("R", "expected a nonempty array of rows");
      std::vector<std::vector<std::string>> text_rows;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i].is_array()) fail("R/" + std::to_string(i), "expected a row");
        std::vector<std::string> row;
        for (const auto& e : r[i]) row.push_back(e.is_string() ? e.get<std::string>() : e.dump());
        text_rows.push_back(std::move(row));
      }
      int digits = 6;
      if (j.contains("log_digits")) {
        if (!j["log_digits"].is_number_integer()) fail("log_digits", "expected an integer");
        digits = j["log_digits"];
      }
      try {
        costs = ricardo::economy_from_production(text_rows, digits).economy.log_costs();
      } catch (const Error& e) {
        fail("R", e.what());
      }
      approximate = true;
    } else {
      fail("logR", "missing (give logR or R)");
    }
    if (!costs->all_finite()) fail("logR", "production coefficients must be finite");
    EconomyInput econ{*costs, std::nullopt, std::nullopt, std::nullopt, approximate};
    if (j.contains("q")) econ.work_force = parse_vector(j["q"], "q");
    if (j.contains("wages")) {
      econ.wages = parse_vector(j["wages"], "wages");
      if (econ.wages->size() != costs->cols()) fail("wages", "expected one wage per country (column)");
    }
    if (j.contains("prices")) {
      econ.prices = parse_vector(j["prices"], "prices");
      if (econ.prices->size() != costs->rows()) fail("prices", "expected one price per commodity (row)");
    }
    doc.economy = std::move(econ);
  } else {
    fail("kind", "expected \"matrix\", \"configuration\" or \"economy\"");
  }
  return doc;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

RationalVector parse_point(const std::string& csv) {
  RationalVector out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw SchemaError("empty point '" + csv + "'");
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tropcay::io
