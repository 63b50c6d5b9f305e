#include "tropcay/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "tropcay/errors.hpp"
#include "tropcay/linalg.hpp"
#include "tropcay/parallel.hpp"

namespace tropcay {

PointConfiguration::PointConfiguration(std::size_t ambient_dim, std::vector<std::string> labels,
                                       std::vector<RationalVector> coords)
    : ambient_dim_(ambient_dim), labels_(std::move(labels)), coords_(std::move(coords)) {
  if (coords_.empty()) throw PreconditionError("point configuration is empty");
  if (labels_.size() != coords_.size()) throw DimensionError("label count does not match point count");
  for (const auto& c : coords_) {
    if (c.size() != ambient_dim_) throw DimensionError("point has wrong ambient dimension");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw PreconditionError("point labels must be distinct");
}

PointConfiguration PointConfiguration::unlabeled(std::vector<RationalVector> coords) {
  if (coords.empty()) throw PreconditionError("point configuration is empty");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < coords.size(); ++i) labels.push_back(std::to_string(i));
  const std::size_t dim = coords.front().size();
  return PointConfiguration(dim, std::move(labels), std::move(coords));
}

PointConfiguration PointConfiguration::from_exponents(const std::vector<ExponentVector>& exponents) {
  if (exponents.empty()) throw PreconditionError("point configuration is empty");
  std::vector<std::string> labels;
  std::vector<RationalVector> coords;
  for (const auto& e : exponents) {
    labels.push_back(to_string(e));
    coords.emplace_back(e.begin(), e.end());
  }
  return PointConfiguration(exponents.front().size(), std::move(labels), std::move(coords));
}

std::size_t PointConfiguration::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw PreconditionError("unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Rational SupportingFunction::operator()(const RationalVector& x) const { return linalg::dot(normal, x) + offset; }

std::vector<std::vector<std::string>> Subdivision::cell_labels() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cells) {
    std::vector<std::string> l;
    for (auto i : c) l.push_back(config.label(i));
    out.push_back(std::move(l));
  }
  return out;
}

std::size_t affine_dim(const PointConfiguration& config) { return linalg::AffineChart(config.points()).dim(); }

namespace {

struct Candidate {
  Cell cell;
  RationalVector alpha;  // chart coordinates
  Rational beta;
};

}  // namespace

Subdivision regular_subdivision(const PointConfiguration& config, const Lifting& lifting, Side side) {
  const std::size_t n = config.size();
  if (lifting.size() != n) throw DimensionError("lifting must assign one height per point");
  const linalg::AffineChart chart(config.points());
  const std::size_t k = chart.dim();
  std::vector<RationalVector> y;
  y.reserve(n);
  for (const auto& p : config.points()) y.push_back(chart.coordinates(p));

  // Slack of point j above (Below) or below (Above) the affine function.
  auto slack = [&](const RationalVector& alpha, const Rational& beta, std::size_t j) {
    Rational s = lifting[j] - linalg::dot(alpha, y[j]) - beta;
    return side == Side::Below ? s : Rational(-s);
  };

  std::map<Cell, Candidate> found;
  std::mutex found_mutex;
  const std::size_t subset_size = k + 1;
  // Work split: worker w handles subsets whose first element is = w mod W.
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  run_workers(workers, [&](std::size_t worker, std::size_t stride) {
    std::vector<Candidate> local;
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t first = worker; first + subset_size <= n; first += stride) {
      idx[0] = first;
      for (std::size_t i = 1; i < subset_size; ++i) idx[i] = first + i;
      for (;;) {
        const bool covered = std::any_of(local.begin(), local.end(), [&](const Candidate& c) {
          return std::includes(c.cell.begin(), c.cell.end(), idx.begin(), idx.end());
        });
        if (!covered) {
          linalg::Matrix a;
          RationalVector b;
          for (auto j : idx) {
            RationalVector row = y[j];
            row.push_back(1);
            a.push_back(std::move(row));
            b.push_back(lifting[j]);
          }
          if (auto sol = linalg::solve(std::move(a), std::move(b))) {
            RationalVector alpha(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
            const Rational beta = (*sol)[k];
            Cell cell;
            bool supporting = true;
            for (std::size_t j = 0; j < n && supporting; ++j) {
              const Rational s = slack(alpha, beta, j);
              if (s < 0) supporting = false;
              if (s == 0) cell.push_back(j);
            }
            if (supporting) local.push_back({std::move(cell), std::move(alpha), beta});
          }
        }
        // Advance positions 1..k; position 0 stays fixed.
        std::size_t i = subset_size;
        while (i > 1 && idx[i - 1] == n - subset_size + i - 1) --i;
        if (i <= 1) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    std::lock_guard<std::mutex> lock(found_mutex);
    for (auto& c : local) found.emplace(c.cell, std::move(c));
  });

  Subdivision out{config, lifting, side, {}, {}, {}};
  if (k == 0) {
    // All points coincide: the optimal heights form the single cell.
    Rational best = lifting[0];
    for (const auto& h : lifting) best = side == Side::Below ? std::min(best, h) : std::max(best, h);
    Cell cell;
    for (std::size_t j = 0; j < n; ++j) {
      if (lifting[j] == best) cell.push_back(j);
    }
    found.clear();
    found.emplace(cell, Candidate{cell, {}, best});
  }
  std::vector<bool> used(n, false);
  for (auto& [cell, cand] : found) {
    for (auto j : cell) used[j] = true;
    out.cells.push_back(cell);
    RationalVector a = chart.pullback(cand.alpha);
    Rational offset = cand.beta - linalg::dot(a, chart.origin());
    out.witnesses.push_back({std::move(a), std::move(offset)});
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!used[j]) out.non_face_points.push_back(j);
  }
  return out;
}

bool verify_witnesses(const Subdivision& s) {
  if (s.cells.size() != s.witnesses.size()) return false;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    for (std::size_t j = 0; j < s.config.size(); ++j) {
      Rational diff = s.lifting[j] - s.witnesses[c](s.config.coords(j));
      if (s.side == Side::Above) diff = -diff;
      const bool in_cell = std::binary_search(s.cells[c].begin(), s.cells[c].end(), j);
      if (in_cell ? diff != 0 : diff <= 0) return false;
    }
  }
  return true;
}

Subdivision subdivision_from_poly(const TropPolynomial& f) {
  Lifting lifting;
  for (const auto& [m, c] : f.terms()) lifting.push_back(c);
  return regular_subdivision(PointConfiguration::from_exponents(f.support()), lifting,
                             f.orientation() == Orientation::Min ? Side::Below : Side::Above);
}

namespace {

// c_m + m.x  is at least as good as  c_o + o.x, written as a . x <= b.
AffineConstraint optimality(const ExponentVector& m, const Rational& cm, const ExponentVector& other,
                            const Rational& co, Orientation o) {
  const std::size_t d = m.size();
  RationalVector a(d);
  if (o == Orientation::Min) {
    for (std::size_t i = 0; i < d; ++i) a[i] = m[i] - other[i];
    return {std::move(a), Rational(co - cm)};
  }
  for (std::size_t i = 0; i < d; ++i) a[i] = other[i] - m[i];
  return {std::move(a), Rational(cm - co)};
}

Hrep optimality_cell(const TropPolynomial& f, const ExponentVector& m) {
  Hrep h;
  h.dim = f.dim();
  const Rational cm = f.coefficient(m).value();
  for (const auto& [other, co] : f.terms()) {
    if (other == m) continue;
    h.inequalities.push_back(optimality(m, cm, other, co, f.orientation()));
  }
  return h;
}

}  // namespace

std::vector<ExponentVector> dome_facets(const TropPolynomial& f) {
  std::vector<ExponentVector> out;
  for (const auto& [m, c] : f.terms()) {
    Hrep h = optimality_cell(f, m);
    std::vector<std::size_t> strict(h.inequalities.size());
    for (std::size_t i = 0; i < strict.size(); ++i) strict[i] = i;
    if (strictly_feasible_point(h, strict)) out.push_back(m);
  }
  return out;
}

NormalComplex normal_complex(const TropPolynomial& f) {
  NormalComplex nc{f, is_homogeneous(f).has_value(), {}};
  for (const auto& m : dome_facets(f)) {
    Hrep h = optimality_cell(f, m);
    if (nc.quotient) h.equations.push_back(first_coordinate_zero(f.dim()));
    nc.cells.push_back({m, std::move(h)});
  }
  return nc;
}

Hrep dual_cell(const TropPolynomial& f, const std::vector<ExponentVector>& face) {
  if (face.empty()) throw PreconditionError("dual_cell: empty face");
  Hrep h;
  h.dim = f.dim();
  for (const auto& m : face) {
    const TropNum cm = f.coefficient(m);
    if (!cm.is_finite()) throw PreconditionError("dual_cell: " + to_string(m) + " is not in the support");
    for (const auto& [other, co] : f.terms()) {
      if (other == m) continue;
      h.inequalities.push_back(optimality(m, cm.value(), other, co, f.orientation()));
    }
  }
  if (is_homogeneous(f)) h.equations.push_back(first_coordinate_zero(f.dim()));
  return h;
}

std::vector<ExponentVector> cell_of_point(const TropPolynomial& f, const RationalVector& z) {
  return eval(f, z).argopt;
}

std::string to_string(const Cell& c, const PointConfiguration& config) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += config.label(c[i]);
  }
  return out + "}";
}

}  // namespace tropcay
