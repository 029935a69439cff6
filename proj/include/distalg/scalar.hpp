#pragma once

#include <string>

#include "distalg/rational.hpp"

namespace distalg {

/// Element of the field Q(sqrt2), stored as a + b*sqrt2 with exact
/// rational components. Equality is componentwise; the representation
/// is unique because sqrt2 is irrational.
struct Scalar {
    Rational a; // rational part
    Rational b; // coefficient of sqrt2

    Scalar() = default;
    Scalar(int v) : a(v) {}                                  // NOLINT(google-explicit-constructor)
    Scalar(Rational v) : a(std::move(v)) {}                  // NOLINT(google-explicit-constructor)
    Scalar(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    /// Exact sign of the real number a + b*sqrt2: -1, 0 or +1.
    int sign() const;

    Scalar operator-() const { return Scalar(-a, -b); }
    Scalar& operator+=(const Scalar& o) { a += o.a; b += o.b; return *this; }
    Scalar& operator-=(const Scalar& o) { a -= o.a; b -= o.b; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { l += r; return l; }
    friend Scalar operator-(Scalar l, const Scalar& r) { l -= r; return l; }
    friend Scalar operator*(Scalar l, const Scalar& r) { l *= r; return l; }
    friend Scalar operator/(Scalar l, const Scalar& r) { l /= r; return l; }
    friend bool operator==(const Scalar& l, const Scalar& r) { return l.a == r.a && l.b == r.b; }

    Scalar inverse() const;
    Scalar abs() const { return sign() >= 0 ? *this : -*this; }

    double to_double() const;
};

/// Canonical text form: "p/q", "r/s*sqrt2", "sqrt2" or "p/q+r/s*sqrt2"
/// (with "-" joining when the sqrt2 component is negative).
std::string to_string(const Scalar& s);

/// Parses exactly the forms produced by to_string.
Scalar parse_scalar(const std::string& s);

} // namespace distalg
