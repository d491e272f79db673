#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopbv {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" with q > 0, including integers ("2/1").
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p"; throws InputError on anything else or on q = 0.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

} // namespace loopbv
