#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tqftdef {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Parses "p", "-p", "p/q" (q != 0). Whitespace is not accepted.
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_scalar(const Scalar& value);

/// value^exponent for any integer exponent; value must be nonzero when
/// exponent < 0.
Scalar power(const Scalar& value, long exponent);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace tqftdef
