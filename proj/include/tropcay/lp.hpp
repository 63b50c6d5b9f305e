#pragma once

// Exact two-phase simplex method with Bland's rule. Variables are free.

#include <vector>

#include "tropcay/rational.hpp"

namespace tropcay::lp {

enum class Sense { LessEqual, Equal };

struct Constraint {
  RationalVector coeffs;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

struct Problem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  RationalVector objective;  // maximized; empty means pure feasibility

  void add_le(RationalVector coeffs, Rational rhs) {
    constraints.push_back({std::move(coeffs), Sense::LessEqual, std::move(rhs)});
  }
  void add_eq(RationalVector coeffs, Rational rhs) {
    constraints.push_back({std::move(coeffs), Sense::Equal, std::move(rhs)});
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RationalVector point;
};

Result solve(const Problem& problem);

}  // namespace tropcay::lp
