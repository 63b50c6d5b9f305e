#include "tropcay/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tropcay/arrangement.hpp"
#include "tropcay/errors.hpp"
#include "tropcay/polyhedron.hpp"

namespace tropcay::svg {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1b6ca8", "#d1495b", "#2a9d5c", "#8d5fd3",
                                                 "#e07a1f", "#17a2b8", "#7a7a7a", "#b5651d"};
constexpr double kSize = 600.0;

struct P2 {
  Rational x;
  Rational y;
  friend bool operator<(const P2& a, const P2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }
};

Rational cross(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Strict convex hull, counterclockwise, starting at the lexicographic minimum.
std::vector<P2> hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::string num(double v) {
  if (std::fabs(v) < 5e-5) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Maps plane coordinates to pixels with the y-axis pointing up and a 5% margin.
class Frame {
 public:
  Frame(double xmin, double xmax, double ymin, double ymax) : xmin_(xmin), ymax_(ymax) {
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    scale_ = kSize * 0.9 / span;
    margin_ = kSize * 0.05;
    width_ = (xmax - xmin) * scale_ + 2 * margin_;
    height_ = (ymax - ymin) * scale_ + 2 * margin_;
  }
  std::string point(double x, double y) const { return num(px(x)) + "," + num(py(y)); }
  double px(double x) const { return (x - xmin_) * scale_ + margin_; }
  double py(double y) const { return (ymax_ - y) * scale_ + margin_; }
  std::string header() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" + num(height_) +
           "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) + "\">\n";
  }

 private:
  double xmin_;
  double ymax_;
  double scale_ = 1;
  double margin_ = 0;
  double width_ = 0;
  double height_ = 0;
};

std::string points_attr(const Frame& f, const std::vector<P2>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += f.point(pts[i].x.get_d(), pts[i].y.get_d());
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string style_block(std::size_t classes, const char* prefix) {
  std::string out = "<style>\n";
  for (std::size_t k = 0; k < classes; ++k) {
    out += "." + std::string(prefix) + std::to_string(k + 1) + "{stroke:" + kPalette[k % kPalette.size()] +
           ";stroke-width:2;fill:none}\n";
  }
  out +=
      ".tconv-cell{fill:#f2d98c;fill-opacity:0.6;stroke:none}\n"
      ".tconv-edge{stroke:#c9a227;stroke-width:5;fill:none}\n"
      ".mixed-cell{fill:#e8eef7;stroke:#333333;stroke-width:1.5}\n"
      "text{font-family:sans-serif;font-size:11px;text-anchor:middle;fill:#222222}\n"
      "</style>\n";
  return out;
}

P2 chart(const RationalVector& z) { return {z[1] - z[0], z[2] - z[0]}; }

}  // namespace

std::string arrangement_svg(const TropMatrix& v) {
  if (v.rows() != 3) throw UnsupportedError("arrangement plots need a matrix with 3 rows");
  if (!v.all_finite()) throw UnsupportedError("arrangement plots need finite entries");
  const auto rows = v.finite_rows();
  const std::size_t n = v.cols();

  std::vector<P2> apex;
  for (std::size_t k = 0; k < n; ++k) apex.push_back(chart({rows[0][k], rows[1][k], rows[2][k]}));
  Rational xmin = apex[0].x, xmax = apex[0].x, ymin = apex[0].y, ymax = apex[0].y;
  for (const auto& a : apex) {
    xmin = std::min(xmin, a.x);
    xmax = std::max(xmax, a.x);
    ymin = std::min(ymin, a.y);
    ymax = std::max(ymax, a.y);
  }
  const Rational xspan = xmax - xmin, yspan = ymax - ymin;
  const Rational pad = std::max(Rational(1), Rational(std::max(xspan, yspan) / 2));
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const Frame frame(xmin.get_d(), xmax.get_d(), ymin.get_d(), ymax.get_d());

  auto clipped = [&](Hrep h) {
    h.add_inequality({0, 1, 0}, xmax);
    h.add_inequality({0, -1, 0}, -xmin);
    h.add_inequality({0, 0, 1}, ymax);
    h.add_inequality({0, 0, -1}, -ymin);
    return h;
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << frame.header() << style_block(n, "line-");

  // Bounded cells of the tropical polytope.
  out << "<g class=\"tconv\">\n";
  for (const auto& cell : tconv_bounded_cells(v).bounded_cells) {
    if (!cell.maximal || cell.dimension == 0) continue;
    std::vector<P2> pts;
    for (const auto& z : cell.vertices) pts.push_back(chart(z));
    const auto h = hull(pts);
    if (cell.dimension == 2) {
      out << "<polygon class=\"tconv-cell\" data-dimension=\"2\" points=\"" << points_attr(frame, h) << "\"/>\n";
    } else {
      out << "<polyline class=\"tconv-edge\" data-dimension=\"1\" points=\"" << points_attr(frame, h) << "\"/>\n";
    }
  }
  out << "</g>\n";

  // Each line: three rays from the apex in directions (1,1), (-1,0), (0,-1).
  const std::array<P2, 3> dirs = {P2{1, 1}, P2{-1, 0}, P2{0, -1}};
  for (std::size_t k = 0; k < n; ++k) {
    const P2& a = apex[k];
    out << "<g class=\"hyperplane line-" << k + 1 << "\" data-column=\"" << k + 1 << "\" data-apex=\""
        << to_string(RationalVector{a.x, a.y}) << "\">\n";
    for (const auto& d : dirs) {
      Rational t = -1;
      auto limit = [&](const Rational& dir, const Rational& lo, const Rational& hi, const Rational& at) {
        if (dir == 0) return;
        const Rational s = dir > 0 ? (hi - at) / dir : (lo - at) / dir;
        if (t < 0 || s < t) t = s;
      };
      limit(d.x, xmin, xmax, a.x);
      limit(d.y, ymin, ymax, a.y);
      const P2 end{a.x + t * d.x, a.y + t * d.y};
      out << "<polyline points=\"" << points_attr(frame, {a, end}) << "\"/>\n";
    }
    out << "<circle cx=\"" << num(frame.px(a.x.get_d())) << "\" cy=\"" << num(frame.py(a.y.get_d()))
        << "\" r=\"3\" fill=\"" << kPalette[k % kPalette.size()] << "\"/>\n";
    out << "</g>\n";
  }

  // Labels of full-dimensional cells with their dual lattice points.
  out << "<g class=\"labels\">\n";
  for (const auto& cell : arrangement_cells(v)) {
    const Hrep closed = cell_from_covector(v, cell.cv);
    if (dimension(closed) != 2) continue;
    const Hrep box = clipped(closed);
    if (!is_feasible(box) || dimension(box) != 2) continue;
    const auto vs = vertices(box);
    Rational cx = 0, cy = 0;
    for (const auto& z : vs) {
      const P2 p = chart(z);
      cx += p.x;
      cy += p.y;
    }
    cx /= static_cast<long>(vs.size());
    cy /= static_cast<long>(vs.size());
    const std::string dual = to_string(coarse_type(cell.cv));
    out << "<text class=\"cell-label\" x=\"" << num(frame.px(cx.get_d())) << "\" y=\"" << num(frame.py(cy.get_d()))
        << "\" data-dual=\"" << dual << "\">" << escape(dual) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string mixed_svg(const MixedSubdivision& ms) {
  const std::size_t dim = ms.parts.front().ambient_dim();
  if (dim != 2 && dim != 3) throw UnsupportedError("mixed plots need parts in R^2 or R^3");
  // Exact plane coordinates; the barycentric picture is an affine image of
  // (a_2, a_3), sheared at draw time.
  auto plane = [&](const RationalVector& a) { return dim == 2 ? P2{a[0], a[1]} : P2{a[1], a[2]}; };
  auto draw = [&](const P2& p) -> std::pair<double, double> {
    if (dim == 2) return {p.x.get_d(), p.y.get_d()};
    return {p.x.get_d() + p.y.get_d() / 2.0, p.y.get_d() * std::sqrt(3.0) / 2.0};
  };

  std::vector<std::pair<MixedCell, std::vector<P2>>> polys;
  std::vector<std::vector<RationalVector>> vertex_points;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& cell : ms.cells) {
    const auto pts = mixed_cell_points(ms.parts, cell);
    if (dim == 3) {
      for (const auto& p : pts) {
        if (p[0] + p[1] + p[2] != (*pts.begin())[0] + (*pts.begin())[1] + (*pts.begin())[2]) {
          throw UnsupportedError("mixed plots in R^3 need points on a plane x_1 + x_2 + x_3 = const");
        }
      }
    }
    std::vector<P2> flat;
    for (const auto& p : pts) flat.push_back(plane(p));
    auto h = hull(flat);
    std::vector<RationalVector> labels;
    for (const auto& q : h) {
      for (const auto& p : pts) {
        if (plane(p) == q) {
          labels.push_back(p);
          break;
        }
      }
    }
    for (const auto& q : h) {
      const auto [x, y] = draw(q);
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    polys.emplace_back(cell, std::move(h));
    vertex_points.push_back(std::move(labels));
  }
  const Frame frame(xmin, xmax, ymin, ymax);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << frame.header() << style_block(0, "");
  out << "<g class=\"mixed\">\n";
  for (std::size_t c = 0; c < polys.size(); ++c) {
    const auto& [cell, h] = polys[c];
    std::string vlabels;
    for (std::size_t i = 0; i < vertex_points[c].size(); ++i) {
      if (i) vlabels += ' ';
      vlabels += to_string(vertex_points[c][i]);
    }
    std::string subsets;
    for (std::size_t k = 0; k < cell.subsets.size(); ++k) {
      if (k) subsets += ' ';
      subsets += to_string(cell.subsets[k], ms.parts[k]);
    }
    std::string pts;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto [x, y] = draw(h[i]);
      if (i) pts += ' ';
      pts += frame.point(x, y);
    }
    out << "<polygon class=\"mixed-cell\" data-vertices=\"" << vlabels << "\" data-subsets=\"" << escape(subsets)
        << "\" points=\"" << pts << "\"/>\n";
  }
  out << "</g>\n<g class=\"labels\">\n";
  std::set<RationalVector> seen;
  for (const auto& labels : vertex_points) {
    for (const auto& p : labels) {
      if (!seen.insert(p).second) continue;
      const auto [x, y] = draw(plane(p));
      out << "<text class=\"vertex-label\" x=\"" << num(frame.px(x)) << "\" y=\"" << num(frame.py(y) - 4) << "\">"
          << to_string(p) << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace tropcay::svg
