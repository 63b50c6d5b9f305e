#include "tropcay/commands.hpp"

#include <map>

#include "tropcay/arrangement.hpp"
#include "tropcay/errors.hpp"
#include "tropcay/svg.hpp"

namespace tropcay::cli {

using io::Json;

namespace {

const TropMatrix& need_matrix(const io::InputDocument& doc, const char* command) {
  if (doc.kind != io::InputDocument::Kind::Matrix) {
    throw SchemaError(std::string("field 'kind': the ") + command + " command expects a matrix input");
  }
  return *doc.matrix;
}

Json report(const char* command, const io::InputDocument& doc, Json result) {
  return {{"command", command}, {"input", doc.canonical()}, {"result", std::move(result)}};
}

Json exponents_json(const std::vector<ExponentVector>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(e);
  return out;
}

Json covector_json(const Covector& cv) {
  return {{"pairs", io::pairs_json(cv.pairs)}, {"coarse_type", coarse_type(cv)}};
}

Json points_json(const std::vector<RationalVector>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(io::vector_json(p));
  return out;
}

}  // namespace

MixedSubdivision mixed_subdivision_of(const io::InputDocument& doc) {
  if (doc.kind == io::InputDocument::Kind::Configuration) {
    std::vector<PointConfiguration> parts;
    std::vector<Lifting> liftings;
    for (const auto& p : doc.parts) {
      parts.push_back(p.points);
      liftings.push_back(doc.orientation == Orientation::Min ? p.lifting : [&] {
        Lifting neg = p.lifting;
        for (auto& q : neg) q = -q;
        return neg;
      }());
    }
    return mixed_regular(parts, liftings);
  }
  const TropMatrix& v = need_matrix(doc, "mixed");
  const std::size_t d = v.rows();
  std::vector<PointConfiguration> parts;
  std::vector<Lifting> liftings;
  for (std::size_t k = 0; k < v.cols(); ++k) {
    std::vector<std::string> labels;
    std::vector<RationalVector> coords;
    Lifting lift;
    for (std::size_t i = 0; i < d; ++i) {
      if (!v(i, k).is_finite()) continue;
      RationalVector e(d, 0);
      e[i] = 1;
      labels.push_back(std::to_string(i + 1));
      coords.push_back(std::move(e));
      lift.push_back(v(i, k).value());
    }
    parts.emplace_back(d, std::move(labels), std::move(coords));
    liftings.push_back(std::move(lift));
  }
  return mixed_regular(parts, liftings);
}

Json cmd_arrangement(const io::InputDocument& doc, ArrangementOptions opts) {
  const TropMatrix& v = need_matrix(doc, "arrangement");
  if (!opts.poly && !opts.cells && !opts.dual) opts = {true, true, true};
  const TropPolynomial f = arrangement_poly(v);
  Json result;
  if (opts.poly) result["polynomial"] = io::polynomial_json(f);
  if (opts.cells) {
    const NormalComplex nc = normal_complex(f);
    Json cells = Json::array();
    for (const auto& c : nc.cells) cells.push_back({{"dual", c.dual}, {"dimension", dimension(c.hrep)}});
    result["normal_complex"] = {{"maximal_cells", nc.cells.size()}, {"quotient", nc.quotient}, {"cells", cells}};
  }
  if (opts.dual) {
    const Subdivision s = subdivision_from_poly(f);
    Json cells = Json::array();
    for (const auto& cell : s.cells) {
      std::vector<ExponentVector> pts;
      for (auto i : cell) pts.push_back(f.support()[i]);
      cells.push_back(exponents_json(pts));
    }
    Json non_faces = Json::array();
    for (auto i : s.non_face_points) non_faces.push_back(f.support()[i]);
    result["dual_subdivision"] = {{"cells", cells}, {"count", s.cells.size()}, {"non_face_points", non_faces}};
  }
  return report("arrangement", doc, std::move(result));
}

Json cmd_covector(const io::InputDocument& doc, const RationalVector& point) {
  const TropMatrix& v = need_matrix(doc, "covector");
  if (point.size() != v.rows()) {
    throw DimensionError("--point has " + std::to_string(point.size()) + " coordinates, the matrix has " +
                         std::to_string(v.rows()) + " rows");
  }
  const Covector cv = covector(v, point);
  Json result = covector_json(cv);
  result["point"] = io::vector_json(ProjectivePoint(point).coords());
  result["dual_cell"] = exponents_json(cell_of_point(arrangement_poly(v), point));
  return report("covector", doc, std::move(result));
}

Json cmd_tconv(const io::InputDocument& doc) {
  const TropMatrix& v = need_matrix(doc, "tconv");
  const TropicalPolytopeCells tp = tconv_bounded_cells(v);
  Json cells = Json::array();
  std::map<std::string, std::size_t> by_dim;
  for (const auto& c : tp.bounded_cells) {
    Json cj = covector_json(c.cv);
    cj["dimension"] = c.dimension;
    cj["maximal"] = c.maximal;
    cj["dual"] = exponents_json(c.dual);
    cj["vertices"] = points_json(c.vertices);
    cells.push_back(std::move(cj));
    if (c.maximal) ++by_dim["dim" + std::to_string(c.dimension)];
  }
  Json result = {{"bounded_cells", cells}, {"maximal_by_dimension", by_dim}};
  result["maximal_cells"] = tp.maximal_cells().size();
  return report("tconv", doc, std::move(result));
}

Json cmd_mixed(const io::InputDocument& doc) {
  const MixedSubdivision ms = mixed_subdivision_of(doc);
  const bool from_matrix = doc.kind == io::InputDocument::Kind::Matrix;
  Json cells = Json::array();
  for (const auto& cell : ms.cells) {
    Json subsets = Json::array();
    Json cayley = Json::array();
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < cell.subsets.size(); ++k) {
      Json labels = Json::array();
      for (auto j : cell.subsets[k]) {
        labels.push_back(ms.parts[k].label(j));
        cayley.push_back(std::to_string(k + 1) + ":" + ms.parts[k].label(j));
        if (from_matrix) pairs.insert({std::stoul(ms.parts[k].label(j)) - 1, k});
      }
      subsets.push_back(std::move(labels));
    }
    const auto sums = mixed_cell_points(ms.parts, cell);
    Json cj = {{"subsets", subsets},
               {"cayley_labels", cayley},
               {"points", points_json({sums.begin(), sums.end()})}};
    if (from_matrix) cj["pairs"] = io::pairs_json(pairs);
    cells.push_back(std::move(cj));
  }
  return report("mixed", doc, {{"cells", cells}, {"count", ms.cells.size()}});
}

Json cmd_ricardo(const io::InputDocument& doc, const RicardoOptions& opts) {
  if (doc.kind != io::InputDocument::Kind::Economy) {
    throw SchemaError("field 'kind': the ricardo command expects an economy input");
  }
  const ricardo::Economy e(doc.economy->log_costs);
  std::optional<RationalVector> wages = opts.wages ? opts.wages : doc.economy->wages;
  std::optional<RationalVector> prices = opts.prices ? opts.prices : doc.economy->prices;
  if (opts.wages && !opts.prices) prices.reset();
  if (opts.prices && !opts.wages) wages.reset();
  if (wages && wages->size() != e.countries()) throw DimensionError("wages need one entry per country");
  if (prices && prices->size() != e.commodities()) throw DimensionError("prices need one entry per commodity");
  if (!wages && !prices) throw SchemaError("field 'wages': give wages or prices in the input or on the command line");

  auto system_json = [&](const ricardo::WagePriceSystem& s) {
    const auto cls = ricardo::classify(e, s);
    Json out = {{"log_wages", io::vector_json(s.log_wages)},
                {"log_prices", io::vector_json(s.log_prices)},
                {"sharing", cls.sharing},
                {"covering", cls.covering},
                {"admissible", ricardo::is_admissible(e, s)}};
    if (ricardo::is_admissible(e, s)) out["competitive_pairs"] = io::pairs_json(ricardo::competitive_pairs(e, s));
    return out;
  };

  ricardo::WagePriceSystem given;
  if (wages && prices) {
    given = {*wages, *prices};
    // Explicit pairs must be admissible before competitive pairs are asked for.
    ricardo::competitive_pairs(e, given);
  } else if (wages) {
    given = {*wages, ricardo::prices_from_wages(e, *wages)};
  } else {
    given = {ricardo::wages_from_prices(e, *prices), *prices};
  }
  Json result = {{"system", system_json(given)}};
  if (opts.equilibrate) {
    const auto eq = (wages || !prices) ? ricardo::equilibrate(e, given.log_wages)
                                       : ricardo::equilibrate_prices(e, given.log_prices);
    result["equilibrated"] = system_json(eq);
  }
  if (doc.economy->approximate) result["approximate"] = true;
  return report("ricardo", doc, std::move(result));
}

std::string cmd_plot(const io::InputDocument& doc, PlotKind what) {
  if (what == PlotKind::Arrangement) return svg::arrangement_svg(need_matrix(doc, "plot"));
  return svg::mixed_svg(mixed_subdivision_of(doc));
}

}  // namespace tropcay::cli
