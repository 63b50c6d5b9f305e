#pragma once

// Extended-rational tropical arithmetic in min-plus and max-plus form.

#include <cstddef>
#include <string>
#include <vector>

#include "tropcay/rational.hpp"

namespace tropcay {

enum class Orientation { Min, Max };

inline Orientation flip(Orientation o) { return o == Orientation::Min ? Orientation::Max : Orientation::Min; }
std::string to_string(Orientation o);

// A rational number or one of the two infinities. Legality of an infinity
// depends on the orientation of the operation it enters, not on the value.
class TropNum {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  TropNum() = default;
  TropNum(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT implicit
  TropNum(long value) : kind_(Kind::Finite), value_(value) {}                 // NOLINT implicit
  TropNum(int value) : kind_(Kind::Finite), value_(value) {}                  // NOLINT implicit

  static TropNum pos_inf() { return TropNum(Kind::PosInf); }
  static TropNum neg_inf() { return TropNum(Kind::NegInf); }
  // Additive identity: +inf for min, -inf for max.
  static TropNum zero(Orientation o) { return o == Orientation::Min ? pos_inf() : neg_inf(); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  // Throws PreconditionError for an infinity.
  const Rational& value() const;

  bool legal_for(Orientation o) const {
    return o == Orientation::Min ? kind_ != Kind::NegInf : kind_ != Kind::PosInf;
  }

  TropNum operator-() const;
  friend bool operator==(const TropNum& a, const TropNum& b);
  friend bool operator<(const TropNum& a, const TropNum& b);

 private:
  explicit TropNum(Kind kind) : kind_(kind) {}
  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

inline bool operator!=(const TropNum& a, const TropNum& b) { return !(a == b); }
inline bool operator>(const TropNum& a, const TropNum& b) { return b < a; }
inline bool operator<=(const TropNum& a, const TropNum& b) { return !(b < a); }
inline bool operator>=(const TropNum& a, const TropNum& b) { return !(a < b); }

std::string to_string(const TropNum& a);
// Accepts everything parse_rational does plus "inf", "+inf", "-inf".
TropNum parse_tropnum(std::string_view text);

using TropVector = std::vector<TropNum>;

// Tropical addition: min or max. Throws OrientationError on an illegal infinity.
TropNum t_add(const TropNum& a, const TropNum& b, Orientation o);
// Tropical multiplication: extended addition. Throws UndefinedProductError for +inf + -inf.
TropNum t_mul(const TropNum& a, const TropNum& b);

// Dense row-major d x n matrix. Every column needs a finite entry.
class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols, std::vector<TropNum> entries);
  static TropMatrix from_rows(const std::vector<std::vector<TropNum>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const TropNum& operator()(std::size_t i, std::size_t k) const { return entries_[i * cols_ + k]; }
  TropVector column(std::size_t k) const;
  TropVector row(std::size_t i) const;
  bool all_finite() const;
  // Rational entries; throws UnsupportedError when an entry is infinite.
  std::vector<RationalVector> finite_rows() const;

  TropMatrix transpose() const;
  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropNum> entries_;
};

// result_i = (+)_k M_ik (.) x_k.
TropVector mat_vec(const TropMatrix& m, const TropVector& x, Orientation o);
RationalVector mat_vec(const TropMatrix& m, const RationalVector& x, Orientation o);

// Negated transpose. Involutive.
TropMatrix sharp(const TropMatrix& m);

// max_{i,j} |x_i + y_j - x_j - y_i|
Rational hilbert_dist(const RationalVector& x, const RationalVector& y);

// Representative of x + R1 with first coordinate zero.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(RationalVector raw);
  const RationalVector& coords() const { return coords_; }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ <=> b.coords_; }

 private:
  RationalVector coords_;
};

RationalVector to_rationals(const TropVector& v);
TropVector to_tropnums(const RationalVector& v);

}  // namespace tropcay
