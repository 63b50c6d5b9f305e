#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropcay/trop_core.hpp"

namespace tropcay {

using ExponentVector = std::vector<long>;

std::string to_string(const ExponentVector& e);

struct Evaluation {
  Rational value;
  std::vector<ExponentVector> argopt;  // every optimal exponent, sorted
};

// Tropical polynomial function in canonical form: exponents are unique and
// every stored coefficient is finite (the additive identity is dropped).
class TropPolynomial {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  // Merges duplicate exponents with t_add. Throws EmptySupportError when
  // nothing survives, OrientationError on an illegal coefficient.
  static TropPolynomial make(const std::vector<std::pair<ExponentVector, TropNum>>& term_list, Orientation o,
                             std::size_t dim);
  static TropPolynomial constant(const Rational& c, Orientation o, std::size_t dim);

  Orientation orientation() const { return orientation_; }
  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::vector<ExponentVector> support() const;
  // Coefficient or the additive identity when m is not in the support.
  TropNum coefficient(const ExponentVector& m) const;

  friend bool operator==(const TropPolynomial&, const TropPolynomial&) = default;

 private:
  TropPolynomial(Orientation o, std::size_t dim, Terms terms) : orientation_(o), dim_(dim), terms_(std::move(terms)) {}
  Orientation orientation_;
  std::size_t dim_;
  Terms terms_;
};

inline TropPolynomial make_poly(const std::vector<std::pair<ExponentVector, TropNum>>& term_list, Orientation o,
                                std::size_t dim) {
  return TropPolynomial::make(term_list, o, dim);
}

Evaluation eval(const TropPolynomial& f, const RationalVector& x);
bool vanishes(const TropPolynomial& f, const RationalVector& x);

// Throws PreconditionError on orientation or dimension mismatch.
TropPolynomial poly_mul(const TropPolynomial& f, const TropPolynomial& g);

// Degree-one homogeneous form of a matrix column. For max the coefficient of
// x_i is -v_i, for min it is v_i; +inf entries drop out of the support.
TropPolynomial linear_form(const TropVector& column, Orientation o);

// Max-product of the negated column forms of V.
TropPolynomial arrangement_poly(const TropMatrix& v);

// Product of the column forms of V in separate variables y_ik, where y_ik is
// variable number i * cols + k.
TropPolynomial separate_variables_product(const TropMatrix& v);
std::size_t separate_variable_index(std::size_t i, std::size_t k, std::size_t cols);

// Substitutes y_ik := x_i in a polynomial produced by
// separate_variables_product and merges colliding exponents.
TropPolynomial identify_separate_variables(const TropPolynomial& w, std::size_t rows, std::size_t cols);

std::optional<long> is_homogeneous(const TropPolynomial& f);

// Same support, coefficients negated, orientation flipped.
TropPolynomial negate_poly(const TropPolynomial& f);

}  // namespace tropcay
