#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace jordan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Carrier for cancellation-heavy evaluations; results are rounded to double at the end.
using WideReal = boost::multiprecision::cpp_bin_float_100;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;

const WideReal& wide_pi();

// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

WideReal to_wide(const Rational& q);

}  // namespace jordan
