#include "distalg/scalar.hpp"

#include <cmath>

namespace distalg {

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a + b*s2)(c + d*s2) = (ac + 2bd) + (ad + bc)*s2
    Rational na = a * o.a + 2 * (b * o.b);
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

Scalar Scalar::inverse() const {
    // 1/(a + b*s2) = (a - b*s2) / (a^2 - 2 b^2); the norm vanishes only at 0
    Rational norm = a * a - 2 * (b * b);
    if (norm == 0) throw arithmetic_error("division by zero");
    return Scalar(a / norm, -b / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    *this *= o.inverse();
    return *this;
}

int Scalar::sign() const {
    if (b == 0) return a.sign();
    if (a == 0) return b.sign();
    int sa = a.sign();
    if (sa == b.sign()) return sa;
    // opposite signs: compare |a| with |b|*sqrt2 via squares
    Rational d = a * a - 2 * (b * b);
    return sa * d.sign();
}

double Scalar::to_double() const {
    return distalg::to_double(a) + distalg::to_double(b) * std::sqrt(2.0);
}

namespace {

std::string sqrt2_part(const Rational& b) {
    if (b == 1) return "sqrt2";
    if (b == -1) return "-sqrt2";
    return to_string(b) + "*sqrt2";
}

} // namespace

std::string to_string(const Scalar& s) {
    if (s.b == 0) return to_string(s.a);
    if (s.a == 0) return sqrt2_part(s.b);
    if (s.b > 0) return to_string(s.a) + "+" + sqrt2_part(s.b);
    return to_string(s.a) + "-" + sqrt2_part(-s.b);
}

Scalar parse_scalar(const std::string& s) {
    auto fail = [&]() -> Scalar {
        throw representation_error("invalid scalar: '" + s + "'");
    };

    // leading "sqrt2" / "-sqrt2"
    if (s == "sqrt2") return Scalar::sqrt2();
    if (s == "-sqrt2") return -Scalar::sqrt2();

    // leading signed rational
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits_begin = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i == digits_begin) return fail();
    Rational r1 = parse_rational(s.substr(0, i));

    if (i == s.size()) return Scalar(r1);
    if (s.compare(i, std::string::npos, "*sqrt2") == 0) return Scalar(Rational(0), r1);

    char op = s[i];
    if (op != '+' && op != '-') return fail();
    ++i;
    std::string rest = s.substr(i);
    Rational r2;
    if (rest == "sqrt2") {
        r2 = 1;
    } else if (rest.size() > 6 && rest.compare(rest.size() - 6, 6, "*sqrt2") == 0) {
        r2 = parse_rational(rest.substr(0, rest.size() - 6));
        if (r2 <= 0) return fail(); // sign lives in the joining operator
    } else {
        return fail();
    }
    if (op == '-') r2 = -r2;
    return Scalar(r1, r2);
}

} // namespace distalg
