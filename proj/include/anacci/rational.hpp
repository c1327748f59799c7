#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace anacci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a", "-a", "a/b" or a finite decimal such as "0.25" into an exact rational.
/// Throws Error(InvalidArgument) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact rational value of a finite double (every double is a dyadic rational).
Rational to_rational(double x);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace anacci
