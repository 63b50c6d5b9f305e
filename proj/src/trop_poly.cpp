#include "tropcay/trop_poly.hpp"

#include <numeric>

#include "tropcay/errors.hpp"

namespace tropcay {

std::string to_string(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + ")";
}

namespace {

bool better(const Rational& a, const Rational& b, Orientation o) { return o == Orientation::Min ? a < b : a > b; }

}  // namespace

TropPolynomial TropPolynomial::make(const std::vector<std::pair<ExponentVector, TropNum>>& term_list, Orientation o,
                                    std::size_t dim) {
  Terms terms;
  for (const auto& [m, c] : term_list) {
    if (m.size() != dim) {
      throw DimensionError("exponent " + to_string(m) + " does not have length " + std::to_string(dim));
    }
    if (!c.legal_for(o)) throw OrientationError("coefficient " + to_string(c) + " illegal for " + to_string(o));
    if (!c.is_finite()) continue;
    auto [it, inserted] = terms.emplace(m, c.value());
    if (!inserted && better(c.value(), it->second, o)) it->second = c.value();
  }
  if (terms.empty()) throw EmptySupportError("tropical polynomial has empty support");
  return TropPolynomial(o, dim, std::move(terms));
}

TropPolynomial TropPolynomial::constant(const Rational& c, Orientation o, std::size_t dim) {
  return make({{ExponentVector(dim, 0), TropNum(c)}}, o, dim);
}

std::vector<ExponentVector> TropPolynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

TropNum TropPolynomial::coefficient(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? TropNum::zero(orientation_) : TropNum(it->second);
}

Evaluation eval(const TropPolynomial& f, const RationalVector& x) {
  if (x.size() != f.dim()) throw DimensionError("eval: point has wrong length");
  Evaluation result;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (m[i] != 0) v += m[i] * x[i];
    }
    if (first || better(v, result.value, f.orientation())) {
      result.value = v;
      result.argopt.clear();
      result.argopt.push_back(m);
      first = false;
    } else if (v == result.value) {
      result.argopt.push_back(m);
    }
  }
  return result;
}

bool vanishes(const TropPolynomial& f, const RationalVector& x) { return eval(f, x).argopt.size() >= 2; }

TropPolynomial poly_mul(const TropPolynomial& f, const TropPolynomial& g) {
  if (f.orientation() != g.orientation()) throw PreconditionError("poly_mul: orientation mismatch");
  if (f.dim() != g.dim()) throw DimensionError("poly_mul: dimension mismatch");
  std::vector<std::pair<ExponentVector, TropNum>> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      ExponentVector e(mf.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = mf[i] + mg[i];
      terms.emplace_back(std::move(e), TropNum(Rational(cf + cg)));
    }
  }
  return TropPolynomial::make(terms, f.orientation(), f.dim());
}

TropPolynomial linear_form(const TropVector& column, Orientation o) {
  const std::size_t d = column.size();
  std::vector<std::pair<ExponentVector, TropNum>> terms;
  for (std::size_t i = 0; i < d; ++i) {
    if (!column[i].is_finite()) {
      if (column[i].is_pos_inf()) continue;
      throw PreconditionError("linear_form: column entries must be finite or +inf");
    }
    ExponentVector e(d, 0);
    e[i] = 1;
    terms.emplace_back(std::move(e), o == Orientation::Max ? -column[i] : column[i]);
  }
  if (terms.empty()) throw PreconditionError("linear_form: column has no finite entry");
  return TropPolynomial::make(terms, o, d);
}

TropPolynomial arrangement_poly(const TropMatrix& v) {
  TropPolynomial acc = linear_form(v.column(0), Orientation::Max);
  for (std::size_t k = 1; k < v.cols(); ++k) acc = poly_mul(acc, linear_form(v.column(k), Orientation::Max));
  return acc;
}

std::size_t separate_variable_index(std::size_t i, std::size_t k, std::size_t cols) { return i * cols + k; }

TropPolynomial separate_variables_product(const TropMatrix& v) {
  const std::size_t d = v.rows();
  const std::size_t n = v.cols();
  const std::size_t vars = d * n;
  std::optional<TropPolynomial> acc;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::pair<ExponentVector, TropNum>> terms;
    for (std::size_t i = 0; i < d; ++i) {
      if (v(i, k).is_pos_inf()) continue;
      ExponentVector e(vars, 0);
      e[separate_variable_index(i, k, n)] = 1;
      terms.emplace_back(std::move(e), -v(i, k));
    }
    TropPolynomial factor = TropPolynomial::make(terms, Orientation::Max, vars);
    acc = acc ? poly_mul(*acc, factor) : factor;
  }
  return *acc;
}

TropPolynomial identify_separate_variables(const TropPolynomial& w, std::size_t rows, std::size_t cols) {
  if (w.dim() != rows * cols) throw DimensionError("identify_separate_variables: dimension mismatch");
  std::vector<std::pair<ExponentVector, TropNum>> terms;
  for (const auto& [m, c] : w.terms()) {
    ExponentVector e(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) e[i] += m[separate_variable_index(i, k, cols)];
    terms.emplace_back(std::move(e), TropNum(c));
  }
  return TropPolynomial::make(terms, w.orientation(), rows);
}

std::optional<long> is_homogeneous(const TropPolynomial& f) {
  std::optional<long> degree;
  for (const auto& [m, c] : f.terms()) {
    const long s = std::accumulate(m.begin(), m.end(), 0L);
    if (degree && *degree != s) return std::nullopt;
    degree = s;
  }
  return degree;
}

TropPolynomial negate_poly(const TropPolynomial& f) {
  std::vector<std::pair<ExponentVector, TropNum>> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, TropNum(Rational(-c)));
  return TropPolynomial::make(terms, flip(f.orientation()), f.dim());
}

}  // namespace tropcay
