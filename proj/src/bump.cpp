#include "distalg/bump.hpp"

#include <cmath>

#include "distalg/errors.hpp"

namespace distalg {

TestFunction::TestFunction(Rational center, Rational radius)
    : c_(std::move(center)), r_(std::move(radius)) {
    if (r_ <= 0) throw precondition_error("bump radius must be positive");
    numer_.push_back(Poly(Scalar(1)));
    dnumer_.push_back(numer_[0].double_coeffs());
}

const std::vector<double>& TestFunction::numer_coeffs(int j) const {
    while (static_cast<int>(numer_.size()) <= j) {
        int k = static_cast<int>(numer_.size()) - 1;
        const Poly& p = numer_.back();
        Poly u = Poly::x();
        Poly one_minus_u2(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(-1)});
        Poly next = (p.diff() * one_minus_u2 + Scalar(Rational(4 * k)) * (u * p)) * one_minus_u2
                    - Scalar(2) * (u * p);
        next = Scalar(Rational(1) / r_) * next;
        numer_.push_back(next);
        dnumer_.push_back(next.double_coeffs());
    }
    return dnumer_[static_cast<std::size_t>(j)];
}

double TestFunction::deriv(int j, double x) const {
    if (j < 0) throw precondition_error("negative derivative order");
    double u = (x - to_double(c_)) / to_double(r_);
    double q = 1.0 - u * u;
    if (q <= 0.0) return 0.0;
    const std::vector<double>& coeffs = numer_coeffs(j);
    double num = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) num = num * u + *it;
    // P_j(u) * exp(-1/q) / q^(2j), with the powers folded into the
    // exponent so the tails underflow cleanly instead of dividing 0/0
    double expo = -1.0 / q - 2.0 * j * std::log(q);
    return num * std::exp(expo);
}

} // namespace distalg
