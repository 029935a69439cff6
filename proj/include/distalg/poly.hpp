#pragma once

#include <vector>

#include "distalg/scalar.hpp"

namespace distalg {

/// Polynomial in x over Q(sqrt2); dense coefficients, lowest degree
/// first, trailing zeros trimmed. The zero polynomial is the empty
/// coefficient sequence, so structural equality decides semantic
/// equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(Scalar c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(Scalar(1), 1); }
    static Poly monomial(Scalar c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Scalar(0);
    }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly l, const Poly& r) { l += r; return l; }
    friend Poly operator-(Poly l, const Poly& r) { l -= r; return l; }
    friend Poly operator*(const Poly& l, const Poly& r);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend bool operator==(const Poly& l, const Poly& r) { return l.coeffs_ == r.coeffs_; }

    Poly pow(int n) const;

    /// Formal derivative.
    Poly diff() const;
    /// Primitive with zero constant term; diff(antidiff(p)) == p.
    Poly antidiff() const;
    /// p(a*x + b), exact.
    Poly compose_affine(const Scalar& a, const Scalar& b) const;

    /// Exact Horner evaluation.
    Scalar eval(const Scalar& x0) const;
    double eval_double(double x0) const;

    /// Coefficients floated for numeric work, lowest degree first.
    std::vector<double> double_coeffs() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

} // namespace distalg
