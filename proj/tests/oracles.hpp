#pragma once

// Brute-force reference implementations used only by the tests. They share
// the number type with the library but none of its algorithms.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tropcay/rational.hpp"

namespace tropcay::oracle {

using Rows = std::vector<RationalVector>;

// Gaussian elimination on a copy; returns the rank.
inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Some solution of A x = b, or nullopt when inconsistent. Free variables are zero.
inline std::optional<RationalVector> solve(Rows a, RationalVector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  RationalVector x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

inline std::size_t affine_rank(const Rows& pts) {
  if (pts.empty()) return 0;
  Rows diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

struct HullFaces {
  std::set<std::vector<std::size_t>> cells;
  std::set<std::size_t> non_face_points;
};

// Facets of the lower (below = true) or upper hull of the lifted points,
// projected: every subset of size r+1 (r the affine dimension) that spans
// is fitted by an affine function through its lifted points, and kept when
// no other lifted point lies on the wrong side. Plain bitmask enumeration.
inline HullFaces lower_hull_cells(const Rows& pts, const RationalVector& heights, bool below) {
  const std::size_t n = pts.size();
  const std::size_t dim = pts[0].size();
  const std::size_t r = affine_rank(pts);
  HullFaces out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r + 1) continue;
    Rows sub;
    Rows system;
    RationalVector rhs;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      sub.push_back(pts[i]);
      RationalVector row = pts[i];
      row.push_back(1);
      system.push_back(std::move(row));
      rhs.push_back(heights[i]);
    }
    if (affine_rank(sub) != r) continue;
    auto h = solve(system, rhs);
    if (!h) continue;
    std::vector<std::size_t> cell;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational value = (*h)[dim];
      for (std::size_t j = 0; j < dim; ++j) value += (*h)[j] * pts[i][j];
      const Rational slack = below ? heights[i] - value : value - heights[i];
      if (slack < 0) ok = false;
      if (slack == 0) cell.push_back(i);
    }
    if (ok) out.cells.insert(cell);
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool seen = false;
    for (const auto& c : out.cells) seen = seen || std::binary_search(c.begin(), c.end(), i);
    if (!seen) out.non_face_points.insert(i);
  }
  return out;
}

// p in conv(s), by Caratheodory: some affinely independent subset of at most
// dim+1 points has nonnegative barycentric coordinates for p.
inline bool in_hull(const RationalVector& p, const Rows& s) {
  const std::size_t n = s.size();
  const std::size_t dim = p.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (k > dim + 1) continue;
    Rows sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(s[i]);
    }
    if (affine_rank(sub) != k - 1) continue;
    // Columns are the points extended by 1; unknowns are the weights.
    Rows a(dim + 1, RationalVector(k));
    RationalVector b(dim + 1);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < dim; ++c) a[c][j] = sub[j][c];
      a[dim][j] = 1;
    }
    for (std::size_t c = 0; c < dim; ++c) b[c] = p[c];
    b[dim] = 1;
    auto w = solve(a, b);
    if (w && std::all_of(w->begin(), w->end(), [](const Rational& x) { return x >= 0; })) return true;
  }
  return false;
}

// Points of s that are not in the hull of the others (duplicates removed).
inline std::set<RationalVector> hull_vertices(const Rows& s) {
  std::set<RationalVector> uniq(s.begin(), s.end());
  std::set<RationalVector> out;
  for (const auto& p : uniq) {
    Rows others;
    for (const auto& q : uniq) {
      if (q != p) others.push_back(q);
    }
    if (others.empty() || !in_hull(p, others)) out.insert(p);
  }
  return out;
}

}  // namespace tropcay::oracle
