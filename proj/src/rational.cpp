#include "distalg/rational.hpp"

#include <cctype>

namespace distalg {

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

Rational parse_rational(const std::string& s) {
    // grammar: '-'? digits ('/' digits)?
    using boost::multiprecision::cpp_int;
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && s[i] == '-') { neg = true; ++i; }
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw representation_error("invalid rational: '" + s + "'");
    cpp_int num(s.substr(num_begin, i - num_begin));
    cpp_int den = 1;
    if (i < s.size()) {
        if (s[i] != '/') throw representation_error("invalid rational: '" + s + "'");
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size())
            throw representation_error("invalid rational: '" + s + "'");
        den = cpp_int(s.substr(den_begin));
        if (den == 0) throw arithmetic_error("rational with zero denominator: '" + s + "'");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

int sign(const Rational& q) {
    return q.sign();
}

} // namespace distalg
