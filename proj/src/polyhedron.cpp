#include "tropcay/polyhedron.hpp"

#include <algorithm>
#include <set>

#include "tropcay/errors.hpp"
#include "tropcay/linalg.hpp"
#include "tropcay/lp.hpp"

namespace tropcay {

namespace {

lp::Problem base_problem(const Hrep& h, std::size_t extra_vars = 0) {
  lp::Problem p;
  p.num_vars = h.dim + extra_vars;
  for (const auto& c : h.inequalities) {
    RationalVector a = c.normal;
    a.resize(p.num_vars, 0);
    p.add_le(std::move(a), c.offset);
  }
  for (const auto& c : h.equations) {
    RationalVector a = c.normal;
    a.resize(p.num_vars, 0);
    p.add_eq(std::move(a), c.offset);
  }
  return p;
}

void check_shape(const Hrep& h) {
  for (const auto* list : {&h.inequalities, &h.equations}) {
    for (const auto& c : *list) {
      if (c.normal.size() != h.dim) throw DimensionError("hrep constraint has wrong dimension");
    }
  }
}

// Enumerates k-subsets of [0, n) in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool Hrep::contains(const RationalVector& x) const {
  for (const auto& c : inequalities) {
    if (linalg::dot(c.normal, x) > c.offset) return false;
  }
  for (const auto& c : equations) {
    if (linalg::dot(c.normal, x) != c.offset) return false;
  }
  return true;
}

bool Hrep::relatively_contains(const RationalVector& x) const {
  if (!contains(x)) return false;
  const auto implicit = implicit_equalities(*this);
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (std::binary_search(implicit.begin(), implicit.end(), i)) continue;
    if (linalg::dot(inequalities[i].normal, x) == inequalities[i].offset) return false;
  }
  return true;
}

AffineConstraint first_coordinate_zero(std::size_t dim) {
  RationalVector n(dim, 0);
  n[0] = 1;
  return {std::move(n), Rational(0)};
}

std::optional<RationalVector> feasible_point(const Hrep& h) {
  check_shape(h);
  auto r = lp::solve(base_problem(h));
  if (r.status == lp::Status::Infeasible) return std::nullopt;
  return r.point;
}

bool is_feasible(const Hrep& h) { return feasible_point(h).has_value(); }

std::optional<Rational> maximize(const Hrep& h, const RationalVector& c) {
  check_shape(h);
  auto p = base_problem(h);
  p.objective = c;
  auto r = lp::solve(p);
  if (r.status == lp::Status::Infeasible) throw InfeasibleError("maximize over an empty polyhedron");
  if (r.status == lp::Status::Unbounded) return std::nullopt;
  return r.value;
}

std::vector<std::size_t> implicit_equalities(const Hrep& h) {
  std::vector<std::size_t> out;
  if (h.inequalities.empty()) {
    if (!is_feasible(h)) throw InfeasibleError("empty polyhedron");
    return out;
  }
  // Maximize the capped total slack; every inequality with positive slack at
  // the optimum is not implicit. Repeat on the rest until the optimum is zero.
  std::vector<bool> strict_possible(h.inequalities.size(), false);
  std::vector<bool> decided(h.inequalities.size(), false);
  for (;;) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
      if (!decided[i]) open.push_back(i);
    }
    if (open.empty()) break;
    // max sum t_i, a_i x + t_i <= b_i, 0 <= t_i <= 1 for open i.
    lp::Problem p = base_problem(h, open.size());
    for (std::size_t j = 0; j < open.size(); ++j) {
      p.constraints[open[j]].coeffs[h.dim + j] = 1;
      RationalVector lo(p.num_vars, 0), hi(p.num_vars, 0);
      lo[h.dim + j] = -1;
      hi[h.dim + j] = 1;
      p.add_le(std::move(lo), 0);
      p.add_le(std::move(hi), 1);
    }
    p.objective.assign(p.num_vars, 0);
    for (std::size_t j = 0; j < open.size(); ++j) p.objective[h.dim + j] = 1;
    auto r = lp::solve(p);
    if (r.status == lp::Status::Infeasible) throw InfeasibleError("empty polyhedron");
    bool progress = false;
    for (std::size_t j = 0; j < open.size(); ++j) {
      if (r.point[h.dim + j] > 0) {
        strict_possible[open[j]] = true;
        decided[open[j]] = true;
        progress = true;
      }
    }
    if (!progress) {
      // Zero optimum: a point strict for any open inequality would score > 0.
      for (auto i : open) decided[i] = true;
    }
  }
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    if (!strict_possible[i]) out.push_back(i);
  }
  return out;
}

std::size_t dimension(const Hrep& h) {
  const auto implicit = implicit_equalities(h);
  linalg::Matrix m;
  for (const auto& c : h.equations) m.push_back(c.normal);
  for (auto i : implicit) m.push_back(h.inequalities[i].normal);
  return h.dim - linalg::rank(std::move(m));
}

std::optional<RationalVector> strictly_feasible_point(const Hrep& h, const std::vector<std::size_t>& strict) {
  check_shape(h);
  lp::Problem p = base_problem(h, 1);
  const std::size_t t = h.dim;
  for (auto i : strict) p.constraints[i].coeffs[t] = 1;
  RationalVector cap(p.num_vars, 0);
  cap[t] = 1;
  p.add_le(cap, 1);
  p.objective = cap;
  auto r = lp::solve(p);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  if (!strict.empty() && r.value <= 0) return std::nullopt;
  r.point.resize(h.dim);
  return r.point;
}

RationalVector relative_interior_point(const Hrep& h) {
  const auto implicit = implicit_equalities(h);
  std::vector<std::size_t> strict;
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    if (!std::binary_search(implicit.begin(), implicit.end(), i)) strict.push_back(i);
  }
  auto p = strictly_feasible_point(h, strict);
  if (!p) throw InfeasibleError("no relative interior point");
  return *p;
}

bool is_bounded(const Hrep& h) {
  check_shape(h);
  if (!is_feasible(h)) throw InfeasibleError("boundedness of an empty polyhedron");
  Hrep cone;
  cone.dim = h.dim;
  for (const auto& c : h.inequalities) cone.add_inequality(c.normal, 0);
  for (const auto& c : h.equations) cone.add_equation(c.normal, 0);
  for (std::size_t j = 0; j < h.dim; ++j) {
    RationalVector e(h.dim, 0);
    e[j] = 1;
    cone.add_inequality(e, 1);
    e[j] = -1;
    cone.add_inequality(e, 1);
  }
  for (std::size_t j = 0; j < h.dim; ++j) {
    for (int s : {1, -1}) {
      RationalVector c(h.dim, 0);
      c[j] = s;
      if (*maximize(cone, c) > 0) return false;
    }
  }
  return true;
}

std::vector<RationalVector> vertices(const Hrep& h) {
  check_shape(h);
  linalg::Matrix eq;
  RationalVector eq_rhs;
  for (const auto& c : h.equations) {
    eq.push_back(c.normal);
    eq_rhs.push_back(c.offset);
  }
  const std::size_t eq_rank = linalg::rank(eq);
  const std::size_t need = h.dim - eq_rank;
  std::set<RationalVector> found;
  for_each_subset(h.inequalities.size(), need, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix a = eq;
    RationalVector b = eq_rhs;
    for (auto i : idx) {
      a.push_back(h.inequalities[i].normal);
      b.push_back(h.inequalities[i].offset);
    }
    if (linalg::rank(a) != h.dim) return;
    auto x = linalg::solve_any(a, b);
    if (x && h.contains(*x)) found.insert(*x);
  });
  return {found.begin(), found.end()};
}

std::string to_string(const Hrep& h) {
  std::string out;
  auto term = [](const AffineConstraint& c, const char* rel) {
    std::string s;
    for (std::size_t j = 0; j < c.normal.size(); ++j) {
      if (c.normal[j] == 0) continue;
      if (!s.empty()) s += " + ";
      s += c.normal[j].get_str() + "*x" + std::to_string(j + 1);
    }
    if (s.empty()) s = "0";
    return s + " " + rel + " " + c.offset.get_str();
  };
  for (const auto& c : h.inequalities) out += term(c, "<=") + "\n";
  for (const auto& c : h.equations) out += term(c, "==") + "\n";
  return out;
}

}  // namespace tropcay
