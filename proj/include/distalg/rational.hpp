#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "distalg/errors.hpp"

namespace distalg {

/// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses the canonical form (optionally signed). Rejects anything else.
Rational parse_rational(const std::string& s);

double to_double(const Rational& q);

int sign(const Rational& q);

} // namespace distalg
