#pragma once

#include <optional>

#include "tropcay/lp.hpp"

namespace tropcay::testing {

// max c.x over conv(a) intersected with conv(b); nullopt when they are disjoint.
inline std::optional<Rational> intersection_support(const std::vector<RationalVector>& a,
                                                    const std::vector<RationalVector>& b, const RationalVector& c) {
  const std::size_t dim = c.size();
  lp::Problem p;
  p.num_vars = a.size() + b.size();
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    RationalVector row(p.num_vars, 0);
    row[j] = -1;
    p.add_le(row, 0);
  }
  RationalVector sum_a(p.num_vars, 0), sum_b(p.num_vars, 0);
  for (std::size_t j = 0; j < a.size(); ++j) sum_a[j] = 1;
  for (std::size_t j = 0; j < b.size(); ++j) sum_b[a.size() + j] = 1;
  p.add_eq(sum_a, 1);
  p.add_eq(sum_b, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector row(p.num_vars, 0);
    for (std::size_t j = 0; j < a.size(); ++j) row[j] = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j) row[a.size() + j] = -b[j][i];
    p.add_eq(row, 0);
  }
  p.objective.assign(p.num_vars, 0);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) p.objective[j] += c[i] * a[j][i];
  const auto r = lp::solve(p);
  if (r.status == lp::Status::Infeasible) return std::nullopt;
  return r.value;
}

inline std::optional<Rational> point_support(const std::vector<RationalVector>& pts, const RationalVector& c) {
  std::optional<Rational> best;
  for (const auto& p : pts) {
    Rational v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * p[i];
    if (!best || v > *best) best = v;
  }
  return best;
}

}  // namespace tropcay::testing
