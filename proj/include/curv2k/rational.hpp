#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace curv2k {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// Canonical fraction string: "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Parses "p", "p/q", or a decimal literal ("0.01", "-2.5e-6") into the
/// exact rational it denotes. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

}  // namespace curv2k
