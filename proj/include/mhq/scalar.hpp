#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mhq {

/// Working real scalar. Precision is a process-wide setting in decimal
/// digits, fixed once at startup via set_precision(); every value created
/// afterwards carries that precision.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

/// Exact integer used for binomials and classical Hermite coefficient
/// tables. Expression templates are off: converting an integer expression
/// template straight into an mpfr number miscompiles on boost 1.74, so all
/// integer results are materialized before they ever touch a Real.
using Int = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kMinPrecision = 30;
inline constexpr unsigned kDefaultPrecision = 64;
inline constexpr const char* kVersion = "1.0.0";

/// Set the working precision in decimal digits (clamped to >= 30). Call
/// once, before any Real is constructed; values created earlier keep the
/// precision they were born with.
void set_precision(unsigned digits);

/// Current working precision in decimal digits.
unsigned precision();

/// pi at the working precision.
Real pi();

/// 10^-(precision() - guard_digits); the standard tolerance shape used by
/// the numeric contracts.
Real tol_guard(int guard_digits);

/// Decimal-string form at `digits` significant digits (default: working
/// precision). Round-trips through parse_real to precision() - 1 digits.
std::string to_decimal_string(const Real& x, unsigned digits = 0);

/// Parse a decimal string at the working precision.
Real parse_real(const std::string& s);

}  // namespace mhq
