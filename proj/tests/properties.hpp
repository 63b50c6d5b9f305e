#pragma once

// Randomized property suites shared by the unit tests and the acceptance run.
// Each returns the number of instances checked and the failures found.

#include <sstream>
#include <string>

#include "oracles.hpp"
#include "test_support.hpp"
#include "tropcay/arrangement.hpp"
#include "tropcay/cayley.hpp"
#include "tropcay/ricardo.hpp"

namespace tropcay::testing {

struct SuiteResult {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

struct CayleyInstance {
  std::vector<PointConfiguration> parts;
  std::vector<Lifting> liftings;
};

// Lattice parts (distinct points within a part) with rational liftings. The
// product support is kept small enough for the exhaustive hull search.
inline CayleyInstance random_cayley_instance(Rng& rng) {
  for (;;) {
    const std::size_t d = 1 + rng.index(3);
    const std::size_t n = 1 + rng.index(3);
    const long hi = d == 1 ? 4 : d == 2 ? 2 : 1;
    CayleyInstance inst;
    for (std::size_t k = 0; k < n; ++k) {
      std::set<RationalVector> pts;
      const std::size_t want = 1 + rng.index(5);
      for (std::size_t tries = 0; pts.size() < want && tries < 40; ++tries) pts.insert(rng.rational_vector(d, 0, hi, 1));
      std::vector<RationalVector> coords(pts.begin(), pts.end());
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < coords.size(); ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
      inst.liftings.push_back(rng.rational_vector(coords.size(), -3, 3, 3));
      inst.parts.emplace_back(d, std::move(labels), std::move(coords));
    }
    std::set<RationalVector> sums{RationalVector(d, 0)};
    for (const auto& part : inst.parts) {
      std::set<RationalVector> next;
      for (const auto& s : sums)
        for (const auto& p : part.points()) {
          RationalVector t = s;
          for (std::size_t i = 0; i < d; ++i) t[i] += p[i];
          next.insert(t);
        }
      sums = std::move(next);
    }
    if (sums.size() <= (d == 3 ? 20u : 30u)) return inst;
  }
}

inline std::string describe(const CayleyInstance& inst) {
  std::ostringstream out;
  for (std::size_t k = 0; k < inst.parts.size(); ++k) {
    out << "part " << k + 1 << ":";
    for (std::size_t i = 0; i < inst.parts[k].size(); ++i) {
      out << ' ' << to_string(inst.parts[k].coords(i)) << '@' << to_string(inst.liftings[k][i]);
    }
    out << "; ";
  }
  return out.str();
}

// Mixed subdivision through the Cayley embedding versus the subdivision dual
// to the product polynomial, identified by label sums; and the label-level
// round trip between Cayley cells and mixed cells.
inline SuiteResult cayley_suite(int instances, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int s = 0; s < instances; ++s) {
    const CayleyInstance inst = random_cayley_instance(rng);
    ++r.instances;
    const MixedSubdivision ms = mixed_regular(inst.parts, inst.liftings);

    TropPolynomial product = part_polynomial(inst.parts[0], inst.liftings[0]);
    for (std::size_t k = 1; k < inst.parts.size(); ++k) {
      product = poly_mul(product, part_polynomial(inst.parts[k], inst.liftings[k]));
    }
    const Subdivision dual = subdivision_from_poly(product);
    const auto support = product.support();
    std::set<std::set<RationalVector>> dual_cells;
    for (const auto& cell : dual.cells) {
      std::set<RationalVector> pts;
      for (auto i : cell) pts.insert(RationalVector(support[i].begin(), support[i].end()));
      dual_cells.insert(pts);
    }
    std::set<std::set<RationalVector>> mixed_cells;
    for (const auto& cell : ms.cells) mixed_cells.insert(mixed_cell_points(inst.parts, cell));
    if (mixed_cells != dual_cells || mixed_cells.size() != ms.cells.size()) {
      r.fail("label sums differ from the product subdivision: " + describe(inst));
      continue;
    }

    const CayleyConfig cayley = cayley_embed(inst.parts);
    Lifting joint;
    for (const auto& l : inst.liftings) joint.insert(joint.end(), l.begin(), l.end());
    const Subdivision sub = regular_subdivision(cayley.embedded, joint, Side::Below);
    const MixedSubdivision forward = cayley_to_mixed(cayley, sub);
    const Subdivision back = mixed_to_cayley(cayley, forward);
    if (back.cells != sub.cells || cayley_to_mixed(cayley, back).cells != forward.cells || forward.cells != ms.cells) {
      r.fail("round trip is not the identity: " + describe(inst));
    }
  }
  return r;
}

// regular_subdivision against the bitmask facet oracle, on configurations
// with at most 8 points and affine dimension at most 3.
inline SuiteResult hull_suite(int instances, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int s = 0; s < instances; ++s) {
    const std::size_t ambient = 1 + rng.index(4);
    const std::size_t affine = std::min<std::size_t>(rng.index(4), ambient);
    const std::size_t n = 1 + rng.index(8);
    // Points o + sum t_j b_j in a random affine subspace of dimension <= 3.
    const RationalVector origin = rng.rational_vector(ambient, -2, 2, 1);
    std::vector<RationalVector> basis;
    for (std::size_t j = 0; j < affine; ++j) basis.push_back(rng.rational_vector(ambient, -2, 2, 1));
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && rng.chance(8)) {
        pts.push_back(pts[rng.index(pts.size())]);
        continue;
      }
      RationalVector p = origin;
      for (const auto& b : basis) {
        const Rational t(rng.range(-2, 2));
        for (std::size_t c = 0; c < ambient; ++c) p[c] += t * b[c];
      }
      pts.push_back(std::move(p));
    }
    const Lifting lift = rng.rational_vector(n, -3, 3, rng.chance(50) ? 1 : 3);
    const Side side = rng.chance(50) ? Side::Below : Side::Above;
    ++r.instances;
    const Subdivision sub = regular_subdivision(PointConfiguration::unlabeled(pts), lift, side);
    const auto ref = oracle::lower_hull_cells(pts, lift, side == Side::Below);
    const std::set<std::vector<std::size_t>> got(sub.cells.begin(), sub.cells.end());
    const std::set<std::size_t> non_faces(sub.non_face_points.begin(), sub.non_face_points.end());
    if (got != ref.cells || non_faces != ref.non_face_points || !verify_witnesses(sub)) {
      std::ostringstream out;
      out << "instance " << s << ":";
      for (std::size_t i = 0; i < n; ++i) out << ' ' << to_string(pts[i]) << '@' << to_string(lift[i]);
      r.fail(out.str());
    }
  }
  return r;
}

inline TropPolynomial random_polynomial(Rng& rng, std::size_t dim, Orientation o, std::size_t max_terms,
                                        long max_den) {
  std::vector<std::pair<ExponentVector, TropNum>> terms;
  const std::size_t count = 1 + rng.index(max_terms);
  for (std::size_t t = 0; t < count; ++t) {
    ExponentVector e;
    for (std::size_t i = 0; i < dim; ++i) e.push_back(rng.range(-2, 2));
    terms.emplace_back(e, rng.rational(-3, 3, max_den));
  }
  return make_poly(terms, o, dim);
}

inline TropMatrix random_finite_matrix(Rng& rng, std::size_t d, std::size_t n, long max_den) {
  std::vector<std::vector<TropNum>> rows(d);
  for (auto& row : rows)
    for (std::size_t k = 0; k < n; ++k) row.emplace_back(rng.rational(-4, 4, max_den));
  return TropMatrix::from_rows(rows);
}

// Semiring axioms, idempotence of both Shapley operators, the equivalence of
// membership, fixed points and bounded-cell containment, products of
// polynomials, and the upper/lower subdivision duality.
struct OperatorSuiteResult {
  SuiteResult semiring, idempotence, membership, product, vanishing, updown;
};

inline OperatorSuiteResult operator_suite(int samples, std::uint64_t seed) {
  Rng rng(seed);
  OperatorSuiteResult out;

  for (int s = 0; s < samples; ++s) {
    const Orientation o = s % 2 ? Orientation::Min : Orientation::Max;
    const TropNum a = rng.tropnum(o), b = rng.tropnum(o), c = rng.tropnum(o);
    ++out.semiring.instances;
    const bool ok = t_add(a, b, o) == t_add(b, a, o) && t_add(t_add(a, b, o), c, o) == t_add(a, t_add(b, c, o), o) &&
                    t_mul(a, b) == t_mul(b, a) && t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c)) &&
                    t_mul(a, t_add(b, c, o)) == t_add(t_mul(a, b), t_mul(a, c), o) &&
                    t_add(a, TropNum::zero(o), o) == a && t_mul(a, 0) == a && t_add(a, a, o) == a;
    if (!ok) out.semiring.fail(to_string(a) + " " + to_string(b) + " " + to_string(c));
  }

  for (int s = 0; s < samples; ++s) {
    const std::size_t d = 1 + rng.index(4), n = 1 + rng.index(4);
    const ricardo::Economy e(random_finite_matrix(rng, d, n, 3));
    const RationalVector p = rng.rational_vector(d, -6, 6, 3);
    const RationalVector w = rng.rational_vector(n, -6, 6, 3);
    ++out.idempotence.instances;
    const auto tp = ricardo::shapley_T(e, p);
    const auto tw = ricardo::dual_shapley(e, w);
    if (ricardo::shapley_T(e, tp) != tp || ricardo::dual_shapley(e, tw) != tw ||
        tp != project_nearest(e.log_costs(), p)) {
      out.idempotence.fail("economy sample " + std::to_string(s));
    }
  }

  // Bounded cells are computed once per matrix and probed with many points.
  const int per_matrix = 50;
  for (int m = 0; out.membership.instances < samples; ++m) {
    const std::size_t d = m % 5 == 4 ? 2 : 3;
    const std::size_t n = 2 + rng.index(3);
    const TropMatrix v = random_finite_matrix(rng, d, n, 2);
    const TropicalPolytopeCells cells = tconv_bounded_cells(v);
    const ricardo::Economy e(v);
    for (int s = 0; s < per_matrix; ++s) {
      RationalVector z;
      if (s % 2 == 0) {
        z = mat_vec(v, rng.rational_vector(n, -3, 3, 2), Orientation::Min);
      } else {
        z = rng.rational_vector(d, -4, 4, 2);
      }
      ++out.membership.instances;
      const bool member = membership(v, z);
      const bool fixed = ricardo::shapley_T(e, z) == z;
      const bool inside = cells.contains(z);
      if (member != fixed || member != inside || (s % 2 == 0 && !member)) {
        out.membership.fail("matrix " + std::to_string(m) + " point " + to_string(z));
      }
    }
  }

  for (int s = 0; s < samples; ++s) {
    const Orientation o = s % 2 ? Orientation::Min : Orientation::Max;
    const std::size_t dim = 1 + rng.index(3);
    const auto f = random_polynomial(rng, dim, o, 4, 1);
    const auto g = random_polynomial(rng, dim, o, 4, 1);
    const auto fg = poly_mul(f, g);
    RationalVector x;
    for (std::size_t i = 0; i < dim; ++i) x.emplace_back(rng.range(-2, 2));
    ++out.product.instances;
    ++out.vanishing.instances;
    if (eval(fg, x).value != eval(f, x).value + eval(g, x).value) out.product.fail("sample " + std::to_string(s));
    if (vanishes(fg, x) != (vanishes(f, x) || vanishes(g, x))) out.vanishing.fail("sample " + std::to_string(s));
  }

  for (int s = 0; s < samples; ++s) {
    const std::size_t dim = 1 + rng.index(2);
    const auto h = random_polynomial(rng, dim, Orientation::Max, 6, 2);
    ++out.updown.instances;
    const auto up = subdivision_from_poly(h);
    const auto down = subdivision_from_poly(negate_poly(h));
    oracle::Rows pts;
    RationalVector heights;
    for (const auto& [m, c] : h.terms()) {
      pts.emplace_back(m.begin(), m.end());
      heights.push_back(c);
    }
    const auto ref = oracle::lower_hull_cells(pts, heights, false);
    const std::set<std::vector<std::size_t>> got(up.cells.begin(), up.cells.end());
    if (up.side != Side::Above || down.side != Side::Below || up.cell_labels() != down.cell_labels() ||
        got != ref.cells) {
      out.updown.fail("sample " + std::to_string(s));
    }
  }
  return out;
}

}  // namespace tropcay::testing
