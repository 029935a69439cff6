#include "distalg/poly.hpp"

namespace distalg {

Poly Poly::monomial(Scalar c, int degree) {
    if (c.is_zero()) return Poly();
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
    if (l.is_zero() || r.is_zero()) return Poly();
    std::vector<Scalar> out(l.coeffs_.size() + r.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
            out[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return Poly(std::move(out));
}

Poly operator*(const Scalar& c, const Poly& p) {
    if (c.is_zero()) return Poly();
    Poly r(p);
    for (auto& pc : r.coeffs_) pc = c * pc;
    r.trim();
    return r;
}

Poly Poly::pow(int n) const {
    Poly result(Scalar(1));
    for (int i = 0; i < n; ++i) result = result * *this;
    return result;
}

Poly Poly::diff() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Scalar> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = Scalar(Rational(i)) * coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::antidiff() const {
    if (is_zero()) return Poly();
    std::vector<Scalar> out(coeffs_.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + 1] = coeffs_[i] / Scalar(Rational(i + 1));
    return Poly(std::move(out));
}

Poly Poly::compose_affine(const Scalar& a, const Scalar& b) const {
    // Horner over the polynomial ring
    Poly arg(std::vector<Scalar>{b, a});
    Poly result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * arg + Poly(*it);
    return result;
}

Scalar Poly::eval(const Scalar& x0) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x0 + *it;
    return acc;
}

double Poly::eval_double(double x0) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x0 + it->to_double();
    return acc;
}

std::vector<double> Poly::double_coeffs() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_double());
    return out;
}

} // namespace distalg
