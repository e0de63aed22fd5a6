#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hlab {

/// Exact rational. GMP keeps it in lowest terms with a positive denominator
/// as long as every value is canonicalized after construction from a pair.
using Scalar = mpq_class;

/// num/den in lowest terms. den must be non-zero.
Scalar rational(long num, long den = 1);

/// Parses "p/q" or "p" (optional leading '-'). Decimal and exponent forms are
/// rejected with InputError.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

/// Fixed-point rendering with `digits` fractional digits, round-half-even.
/// Presentation only (SVG coordinates).
std::string to_fixed(const Scalar& value, int digits);

}  // namespace hlab
