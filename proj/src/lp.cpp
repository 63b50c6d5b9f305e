#include "tropcay/lp.hpp"

#include <optional>

#include "tropcay/errors.hpp"

namespace tropcay::lp {

namespace {

// Dense tableau in canonical form with respect to `basis`. Column `cols` is
// the right hand side.
struct Tableau {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& v : pr) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
      }
    }
    basis[r] = c;
  }

  // Maximizes cost . x over columns [0, allowed). Returns false if unbounded.
  bool maximize(const RationalVector& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i][j] != 0 && cost[basis[i]] != 0) reduced -= cost[basis[i]] * rows[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][c] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][c];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, c);
    }
  }

  Rational value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rows[i][cols];
    return v;
  }
};

}  // namespace

Result solve(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  const std::size_t m = problem.constraints.size();
  std::size_t slacks = 0;
  for (const auto& c : problem.constraints) {
    if (c.coeffs.size() != n) throw DimensionError("lp: constraint has wrong number of coefficients");
    if (c.sense == Sense::LessEqual) ++slacks;
  }
  if (!problem.objective.empty() && problem.objective.size() != n) {
    throw DimensionError("lp: objective has wrong number of coefficients");
  }

  // Columns: x+ (n), x- (n), slacks, artificials (m).
  const std::size_t structural = 2 * n + slacks;
  Tableau t;
  t.cols = structural + m;
  t.rows.assign(m, RationalVector(t.cols + 1));
  t.basis.resize(m);
  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    const int sign = c.rhs < 0 ? -1 : 1;
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      row[j] = sign * c.coeffs[j];
      row[n + j] = -sign * c.coeffs[j];
    }
    if (c.sense == Sense::LessEqual) row[slack++] = sign;
    row[structural + i] = 1;
    row[t.cols] = sign * c.rhs;
    t.basis[i] = structural + i;
  }

  RationalVector phase1(t.cols, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = -1;
  t.maximize(phase1, t.cols);
  Result result;
  if (t.value(phase1) < 0) {
    result.status = Status::Infeasible;
    return result;
  }

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < structural) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < structural && !col; ++j) {
      if (t.rows[i][j] != 0) col = j;
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  RationalVector phase2(t.cols, 0);
  for (std::size_t j = 0; j < n && !problem.objective.empty(); ++j) {
    phase2[j] = problem.objective[j];
    phase2[n + j] = -problem.objective[j];
  }
  if (!t.maximize(phase2, structural)) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.value = t.value(phase2);
  RationalVector full(t.cols, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) full[t.basis[i]] = t.rows[i][t.cols];
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.point[j] = full[j] - full[n + j];
  return result;
}

}  // namespace tropcay::lp
