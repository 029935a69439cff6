#pragma once

#include <vector>

#include "distalg/poly.hpp"
#include "distalg/rational.hpp"

namespace distalg {

/// Compactly supported bump t(x) = exp(-1/(1-u^2)), u = (x-c)/r, for
/// |u| < 1 and 0 elsewhere. Derivatives of every order are available
/// in closed form: t^(j)(x) = P_j(u) / (1-u^2)^(2j) * exp(-1/(1-u^2))
/// with P_j generated symbolically from
///   P_0 = 1,  P_{j+1} = ((P_j'(1-u^2) + 4j u P_j)(1-u^2) - 2u P_j) / r.
class TestFunction {
public:
    TestFunction(Rational center, Rational radius);

    const Rational& center() const { return c_; }
    const Rational& radius() const { return r_; }
    Rational lo() const { return c_ - r_; }
    Rational hi() const { return c_ + r_; }

    double value(double x) const { return deriv(0, x); }
    double deriv(int j, double x) const;

private:
    const std::vector<double>& numer_coeffs(int j) const;

    Rational c_, r_;
    mutable std::vector<Poly> numer_;                 // exact P_j
    mutable std::vector<std::vector<double>> dnumer_; // floated coefficients
};

} // namespace distalg
