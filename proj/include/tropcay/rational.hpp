#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropcay {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "7", "-3/4", "2.125", "-1e-3" exactly. Throws SchemaError.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational from_int(long value);

std::string to_string(const RationalVector& v);

}  // namespace tropcay
