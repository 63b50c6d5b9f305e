#include "tropcay/trop_core.hpp"

#include <algorithm>

#include "tropcay/errors.hpp"

namespace tropcay {

std::string to_string(Orientation o) { return o == Orientation::Min ? "min" : "max"; }

const Rational& TropNum::value() const {
  if (kind_ != Kind::Finite) throw PreconditionError("value() of an infinite tropical number");
  return value_;
}

TropNum TropNum::operator-() const {
  switch (kind_) {
    case Kind::PosInf:
      return neg_inf();
    case Kind::NegInf:
      return pos_inf();
    case Kind::Finite:
      break;
  }
  return TropNum(Rational(-value_));
}

bool operator==(const TropNum& a, const TropNum& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != TropNum::Kind::Finite || a.value_ == b.value_;
}

bool operator<(const TropNum& a, const TropNum& b) {
  using K = TropNum::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) return a.value_ < b.value_;
  if (a.kind_ == b.kind_) return false;
  return a.kind_ == K::NegInf || b.kind_ == K::PosInf;
}

std::string to_string(const TropNum& a) {
  if (a.is_pos_inf()) return "inf";
  if (a.is_neg_inf()) return "-inf";
  return to_string(a.value());
}

TropNum parse_tropnum(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "Infinity") return TropNum::pos_inf();
  if (text == "-inf" || text == "-Infinity") return TropNum::neg_inf();
  return TropNum(parse_rational(text));
}

TropNum t_add(const TropNum& a, const TropNum& b, Orientation o) {
  if (!a.legal_for(o) || !b.legal_for(o)) {
    throw OrientationError("infinity " + to_string(a.legal_for(o) ? b : a) + " is illegal in " + to_string(o) +
                           "-plus arithmetic");
  }
  if (o == Orientation::Min) return b < a ? b : a;
  return a < b ? b : a;
}

TropNum t_mul(const TropNum& a, const TropNum& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw UndefinedProductError("inf + (-inf) is undefined");
  }
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return TropNum(Rational(a.value() + b.value()));
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, std::vector<TropNum> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have at least one row and one column");
  if (entries_.size() != rows_ * cols_) throw DimensionError("matrix entry count does not match its shape");
  for (std::size_t k = 0; k < cols_; ++k) {
    bool finite = false;
    for (std::size_t i = 0; i < rows_; ++i) finite = finite || (*this)(i, k).is_finite();
    if (!finite) throw PreconditionError("column " + std::to_string(k + 1) + " has no finite entry");
  }
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropNum>>& rows) {
  if (rows.empty()) throw DimensionError("matrix must have at least one row");
  std::vector<TropNum> entries;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return TropMatrix(rows.size(), cols, std::move(entries));
}

TropVector TropMatrix::column(std::size_t k) const {
  TropVector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, k));
  return c;
}

TropVector TropMatrix::row(std::size_t i) const {
  return TropVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool TropMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const TropNum& a) { return a.is_finite(); });
}

std::vector<RationalVector> TropMatrix::finite_rows() const {
  if (!all_finite()) throw UnsupportedError("operation requires a matrix with finite entries");
  std::vector<RationalVector> out(rows_, RationalVector(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i][k] = (*this)(i, k).value();
  return out;
}

TropMatrix TropMatrix::transpose() const {
  std::vector<TropNum> t;
  t.reserve(entries_.size());
  for (std::size_t k = 0; k < cols_; ++k)
    for (std::size_t i = 0; i < rows_; ++i) t.push_back((*this)(i, k));
  return TropMatrix(cols_, rows_, std::move(t));
}

TropVector mat_vec(const TropMatrix& m, const TropVector& x, Orientation o) {
  if (x.size() != m.cols()) {
    throw DimensionError("mat_vec: vector length " + std::to_string(x.size()) + " does not match " +
                         std::to_string(m.cols()) + " columns");
  }
  TropVector out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    TropNum acc = TropNum::zero(o);
    for (std::size_t k = 0; k < m.cols(); ++k) acc = t_add(acc, t_mul(m(i, k), x[k]), o);
    out.push_back(acc);
  }
  return out;
}

RationalVector mat_vec(const TropMatrix& m, const RationalVector& x, Orientation o) {
  const TropVector r = mat_vec(m, to_tropnums(x), o);
  for (const auto& v : r) {
    if (!v.is_finite()) throw PreconditionError("mat_vec produced an infinite coordinate");
  }
  return to_rationals(r);
}

TropMatrix sharp(const TropMatrix& m) {
  std::vector<TropNum> t;
  t.reserve(m.rows() * m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) t.push_back(-m(i, k));
  return TropMatrix(m.cols(), m.rows(), std::move(t));
}

Rational hilbert_dist(const RationalVector& x, const RationalVector& y) {
  if (x.size() != y.size()) throw DimensionError("hilbert_dist: length mismatch");
  // max_{i,j} |(x-y)_i - (x-y)_j| is the spread of the difference vector.
  Rational best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      Rational v = x[i] + y[j] - x[j] - y[i];
      if (v > best) best = v;
    }
  }
  return best;
}

ProjectivePoint::ProjectivePoint(RationalVector raw) : coords_(std::move(raw)) {
  if (coords_.empty()) return;
  const Rational shift = coords_.front();
  for (auto& c : coords_) c -= shift;
}

RationalVector to_rationals(const TropVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(a.value());
  return out;
}

TropVector to_tropnums(const RationalVector& v) { return TropVector(v.begin(), v.end()); }

}  // namespace tropcay
