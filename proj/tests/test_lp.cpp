#include <doctest.h>

#include "oracles.hpp"
#include "test_support.hpp"
#include "tropcay/errors.hpp"
#include "tropcay/linalg.hpp"
#include "tropcay/lp.hpp"
#include "tropcay/polyhedron.hpp"

using namespace tropcay;
using namespace tropcay::testing;

namespace {

Hrep unit_simplex(std::size_t d) {
  Hrep h;
  h.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector n(d, 0);
    n[i] = -1;
    h.add_inequality(n, 0);
  }
  h.add_inequality(RationalVector(d, 1), 1);
  return h;
}

}  // namespace

TEST_CASE("simplex solves a small LP exactly") {
  lp::Problem p;
  p.num_vars = 2;
  p.add_le({1, 1}, 4);
  p.add_le({1, 3}, 6);
  p.objective = {3, 2};
  // Free variables: the optimum must also respect these lower bounds.
  p.add_le({-1, 0}, 0);
  p.add_le({0, -1}, 0);
  const auto r = lp::solve(p);
  REQUIRE(r.status == lp::Status::Optimal);
  CHECK(r.value == 12);
  CHECK(r.point == vec({4, 0}));

  lp::Problem q;
  q.num_vars = 1;
  q.add_le({1}, Rational(1, 3));
  q.objective = {1};
  CHECK(lp::solve(q).value == Rational(1, 3));
  q.objective = {-1};
  CHECK(lp::solve(q).status == lp::Status::Unbounded);
  q.add_le({-1}, -1);
  CHECK(lp::solve(q).status == lp::Status::Infeasible);
}

TEST_CASE("equations and redundant rows") {
  lp::Problem p;
  p.num_vars = 3;
  p.add_eq({1, 1, 1}, 1);
  p.add_eq({2, 2, 2}, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    RationalVector n(3, 0);
    n[i] = -1;
    p.add_le(n, 0);
  }
  p.objective = {1, 2, 3};
  const auto r = lp::solve(p);
  REQUIRE(r.status == lp::Status::Optimal);
  CHECK(r.value == 3);
}

TEST_CASE("random LPs agree with vertex enumeration") {
  Rng rng(31);
  for (int s = 0; s < 80; ++s) {
    Hrep h = unit_simplex(2);
    for (int extra = 0; extra < 3; ++extra) h.add_inequality(rng.rational_vector(2, -3, 3), rng.rational(0, 2));
    const RationalVector c = rng.rational_vector(2, -3, 3);
    if (!is_feasible(h)) continue;
    const auto best = maximize(h, c);
    REQUIRE(best.has_value());
    Rational brute;
    bool first = true;
    for (const auto& vtx : vertices(h)) {
      const Rational val = c[0] * vtx[0] + c[1] * vtx[1];
      if (first || val > brute) brute = val;
      first = false;
    }
    CHECK(*best == brute);
  }
}

TEST_CASE("polyhedron queries") {
  const Hrep simplex = unit_simplex(3);
  CHECK(dimension(simplex) == 3);
  CHECK(is_bounded(simplex));
  CHECK(is_bounded_cell(simplex));
  CHECK(vertices(simplex).size() == 4);
  CHECK(simplex.relatively_contains(relative_interior_point(simplex)));

  Hrep half;
  half.dim = 1;
  half.add_inequality({1}, 0);
  CHECK_FALSE(is_bounded(half));

  Hrep flat = unit_simplex(2);
  flat.add_inequality({1, 0}, 0);
  CHECK(dimension(flat) == 1);
  CHECK(implicit_equalities(flat).size() == 2);
  const auto p = relative_interior_point(flat);
  CHECK(p[0] == 0);
  CHECK(p[1] > 0);
  CHECK(p[1] < 1);

  Hrep empty = unit_simplex(2);
  empty.add_inequality({-1, -1}, -2);
  CHECK_FALSE(is_feasible(empty));
  CHECK_THROWS_AS(dimension(empty), InfeasibleError);
  CHECK_THROWS_AS(is_bounded(empty), InfeasibleError);
  CHECK_FALSE(strictly_feasible_point(flat, {0}).has_value());
  CHECK(strictly_feasible_point(simplex, {0, 1, 2, 3}).has_value());
}

TEST_CASE("linear algebra helpers") {
  const linalg::Matrix m = {vec({1, 2, 3}), vec({2, 4, 6}), vec({1, 0, 1})};
  CHECK(linalg::rank(m) == 2);
  CHECK(linalg::rank(m) == oracle::rank(m));
  const auto x = linalg::solve({vec({2, 1}), vec({1, 3})}, vec({3, 5}));
  REQUIRE(x.has_value());
  CHECK(*x == RationalVector{Rational(4, 5), Rational(7, 5)});
  const linalg::AffineChart chart({vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1})});
  CHECK(chart.dim() == 2);
  CHECK(chart.contains(vec({2, 1, -1})));
  CHECK_FALSE(chart.contains(vec({0, 0, 0})));
  Rng rng(32);
  for (int s = 0; s < 100; ++s) {
    oracle::Rows rows;
    for (int r = 0; r < 4; ++r) rows.push_back(rng.rational_vector(4, -1, 1, 1));
    CHECK(linalg::rank(rows) == oracle::rank(rows));
  }
}
