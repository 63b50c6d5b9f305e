#include "tropcay/linalg.hpp"

#include "tropcay/errors.hpp"

namespace tropcay::linalg {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::optional<RationalVector> solve(Matrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionError("solve: matrix is not square");
    a[i].push_back(b[i]);
  }
  auto pivots = row_reduce(a);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<RationalVector> solve_any(Matrix a, RationalVector b) {
  if (a.empty()) return RationalVector{};
  const std::size_t n = a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
  return x;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

AffineChart::AffineChart(const std::vector<RationalVector>& points) {
  if (points.empty()) throw PreconditionError("affine chart of an empty point set");
  ambient_ = points.front().size();
  origin_ = points.front();
  Matrix echelon;  // running echelon form used for the independence test
  for (const auto& p : points) {
    RationalVector diff = sub(p, origin_);
    Matrix trial = echelon;
    trial.push_back(diff);
    if (rank(trial) > echelon.size()) {
      basis_.push_back(diff);
      echelon = std::move(trial);
    }
  }
  if (basis_.empty()) return;
  Matrix reduced = basis_;
  pivots_ = row_reduce(reduced);
  // Invert the square submatrix basis_[:, pivots_].
  const std::size_t k = basis_.size();
  Matrix aug(k, RationalVector(2 * k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[c][r] = basis_[r][pivots_[c]];  // transpose: coords solve B^T y = p
    aug[r][k + r] = 1;
  }
  row_reduce(aug);
  inverse_.assign(k, RationalVector(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) inverse_[r][c] = aug[r][k + c];
}

RationalVector AffineChart::coordinates(const RationalVector& p) const {
  if (p.size() != ambient_) throw DimensionError("affine chart: wrong point dimension");
  const RationalVector diff = sub(p, origin_);
  const std::size_t k = basis_.size();
  RationalVector y(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) y[r] += inverse_[r][c] * diff[pivots_[c]];
  for (std::size_t j = 0; j < ambient_; ++j) {
    Rational v = 0;
    for (std::size_t r = 0; r < k; ++r) v += y[r] * basis_[r][j];
    if (v != diff[j]) throw PreconditionError("affine chart: point outside the affine hull");
  }
  return y;
}

RationalVector AffineChart::pullback(const RationalVector& alpha) const {
  RationalVector a(ambient_, 0);
  const std::size_t k = basis_.size();
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < k; ++r) a[pivots_[c]] += alpha[r] * inverse_[r][c];
  return a;
}

bool AffineChart::contains(const RationalVector& p) const {
  try {
    coordinates(p);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace tropcay::linalg
