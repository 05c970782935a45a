#pragma once

#include <gmpxx.h>

#include <string>

namespace cclab {

/// Exact non-negative integer count. All counting tables hold these; no
/// rounding ever happens on the exact side of the library.
using BigCount = mpz_class;

/// Decimal-string serialization (the JSON wire format for counts).
inline std::string to_decimal(const BigCount& v) { return v.get_str(10); }

inline BigCount from_decimal(const std::string& s) { return BigCount(s, 10); }

/// Natural log of a positive BigCount, computed from mantissa + exponent so
/// values far beyond double range stay finite.
double log_big(const BigCount& v);

/// num/den rendered to double through exact rational reduction.
double ratio_as_double(const BigCount& num, const BigCount& den);

} // namespace cclab
