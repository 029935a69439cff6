#include "distalg/lang/printer.hpp"

#include "distalg/errors.hpp"
#include "distalg/json_io.hpp"

namespace distalg::lang {

namespace {

struct Term {
    int sign;        // +1 / -1
    std::string text; // magnitude, never starts with '-'
    bool bare_power = false; // text is exactly "x^k", k >= 2
};

std::string x_pow(int k) {
    if (k == 1) return "x";
    return "x^" + std::to_string(k);
}

// scalar as a multiplicative factor: parenthesized when it has two components
std::string scalar_factor(const Scalar& c) {
    std::string s = to_string(c);
    if (s.find('+') != std::string::npos || s.find('-') != std::string::npos) return "(" + s + ")";
    return s;
}

void poly_terms(const Poly& p, std::vector<Term>& out) {
    for (int k = p.degree(); k >= 0; --k) {
        Scalar c = p.coeff(k);
        if (c.is_zero()) continue;
        if (k == 0) {
            // constants split componentwise so no term text carries an
            // inner sign (joining would mis-parse "- -1+sqrt2")
            if (c.a != 0) out.push_back({c.a.sign(), to_string(abs(c.a)), false});
            if (c.b != 0) {
                Rational m = abs(c.b);
                out.push_back({c.b.sign(), m == 1 ? "sqrt2" : to_string(m) + "*sqrt2", false});
            }
            continue;
        }
        Term t;
        t.sign = c.sign();
        Scalar mag = t.sign < 0 ? -c : c;
        if (mag == Scalar(1)) {
            t.text = x_pow(k);
            t.bare_power = k >= 2;
        } else {
            t.text = scalar_factor(mag) + "*" + x_pow(k);
        }
        out.push_back(std::move(t));
    }
}

std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        if (i == 0) {
            if (t.sign < 0) {
                // "-x^2" would re-parse as (-x)^2; parenthesize the power
                out += t.bare_power ? "-(" + t.text + ")" : "-" + t.text;
            } else {
                out += t.text;
            }
        } else {
            out += t.sign < 0 ? " - " : " + ";
            out += t.text;
        }
    }
    return out;
}

std::string heaviside_arg(const Rational& a) {
    if (a == 0) return "x";
    if (a > 0) return "x-" + to_string(a);
    return "x+" + to_string(-a);
}

// polynomial as a multiplicative factor with its sign pulled out
Term poly_factor(const Poly& p, const std::string& suffix) {
    Term t;
    Scalar lead = p.coeff(p.degree());
    t.sign = lead.sign();
    Poly mag = t.sign < 0 ? -p : p;
    if (mag.degree() == 0) {
        Scalar c = mag.coeff(0);
        t.text = (c == Scalar(1)) ? suffix : scalar_factor(c) + "*" + suffix;
    } else if (mag == Poly::x()) {
        t.text = "x*" + suffix;
    } else {
        std::vector<Term> inner;
        poly_terms(mag, inner);
        t.text = "(" + join_terms(inner) + ")*" + suffix;
    }
    return t;
}

std::string delta_call(const Rational& point, int order) {
    std::string s = "delta(" + to_string(point);
    if (order > 0) s += "," + std::to_string(order);
    return s + ")";
}

std::string print_plain(const ADist& f) {
    std::vector<Term> terms;
    poly_terms(f.pieces().front(), terms);
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        const Rational& x = f.breakpoints()[i];
        Poly jump = f.pieces()[i + 1] - f.pieces()[i];
        if (!jump.is_zero())
            terms.push_back(poly_factor(jump, "H(" + heaviside_arg(x) + ")"));
        if (const DeltaComb* d = f.delta_at(x)) {
            for (std::size_t j = 0; j < d->coeffs.size(); ++j) {
                const Scalar& c = d->coeffs[j];
                if (c.is_zero()) continue;
                Term t;
                t.sign = c.sign();
                Scalar mag = t.sign < 0 ? -c : c;
                std::string call = delta_call(x, static_cast<int>(j));
                t.text = (mag == Scalar(1)) ? call : scalar_factor(mag) + "*" + call;
                terms.push_back(std::move(t));
            }
        }
    }
    return join_terms(terms);
}

// --- latex ---------------------------------------------------------

std::string latex_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    std::string s = numerator(q) < 0 ? "-" : "";
    boost::multiprecision::cpp_int num = abs(numerator(q));
    return s + "\\tfrac{" + num.str() + "}{" + denominator(q).str() + "}";
}

std::string latex_scalar(const Scalar& c) {
    if (c.b == 0) return latex_rational(c.a);
    std::string sq = (c.b == 1)    ? "\\sqrt{2}"
                     : (c.b == -1) ? "-\\sqrt{2}"
                                   : latex_rational(c.b) + "\\sqrt{2}";
    if (c.a == 0) return sq;
    if (c.b > 0) {
        std::string pos = (c.b == 1) ? "\\sqrt{2}" : latex_rational(c.b) + "\\sqrt{2}";
        return latex_rational(c.a) + "+" + pos;
    }
    std::string neg = (c.b == -1) ? "\\sqrt{2}" : latex_rational(-c.b) + "\\sqrt{2}";
    return latex_rational(c.a) + "-" + neg;
}

std::string latex_scalar_factor(const Scalar& c) {
    std::string s = latex_scalar(c);
    if (s.find('+') != std::string::npos || s.find('-') != std::string::npos)
        return "\\left(" + s + "\\right)";
    return s;
}

void latex_poly_terms(const Poly& p, std::vector<Term>& out) {
    for (int k = p.degree(); k >= 0; --k) {
        Scalar c = p.coeff(k);
        if (c.is_zero()) continue;
        if (k == 0) {
            if (c.a != 0) out.push_back({c.a.sign(), latex_rational(abs(c.a)), false});
            if (c.b != 0) {
                Rational m = abs(c.b);
                out.push_back({c.b.sign(),
                               m == 1 ? "\\sqrt{2}" : latex_rational(m) + "\\sqrt{2}", false});
            }
            continue;
        }
        Term t;
        t.sign = c.sign();
        Scalar mag = t.sign < 0 ? -c : c;
        std::string xs = (k == 1) ? "x" : "x^{" + std::to_string(k) + "}";
        if (mag == Scalar(1))
            t.text = xs;
        else
            t.text = latex_scalar_factor(mag) + " " + xs;
        out.push_back(std::move(t));
    }
}

std::string latex_delta(const Rational& point, int order) {
    std::string s = "\\delta";
    if (order > 0) s += "^{(" + std::to_string(order) + ")}";
    if (point != 0) s += "_{" + latex_rational(point) + "}";
    return s;
}

std::string latex_heaviside(const Rational& a) {
    if (a == 0) return "H(x)";
    if (a > 0) return "H(x - " + latex_rational(a) + ")";
    return "H(x + " + latex_rational(-a) + ")";
}

std::string print_latex(const ADist& f) {
    std::vector<Term> terms;
    latex_poly_terms(f.pieces().front(), terms);
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        const Rational& x = f.breakpoints()[i];
        Poly jump = f.pieces()[i + 1] - f.pieces()[i];
        if (!jump.is_zero()) {
            Term t;
            Scalar lead = jump.coeff(jump.degree());
            t.sign = lead.sign();
            Poly mag = t.sign < 0 ? -jump : jump;
            if (mag.degree() == 0) {
                Scalar c = mag.coeff(0);
                t.text = (c == Scalar(1)) ? latex_heaviside(x)
                                          : latex_scalar_factor(c) + "\\," + latex_heaviside(x);
            } else {
                std::vector<Term> inner;
                latex_poly_terms(mag, inner);
                t.text = "\\left(" + join_terms(inner) + "\\right)" + latex_heaviside(x);
            }
            terms.push_back(std::move(t));
        }
        if (const DeltaComb* d = f.delta_at(x)) {
            for (std::size_t j = 0; j < d->coeffs.size(); ++j) {
                const Scalar& c = d->coeffs[j];
                if (c.is_zero()) continue;
                Term t;
                t.sign = c.sign();
                Scalar mag = t.sign < 0 ? -c : c;
                std::string call = latex_delta(x, static_cast<int>(j));
                t.text = (mag == Scalar(1)) ? call : latex_scalar_factor(mag) + "\\," + call;
                terms.push_back(std::move(t));
            }
        }
    }
    return join_terms(terms);
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::Plain;
    if (name == "latex") return Format::Latex;
    if (name == "json") return Format::Json;
    throw type_error("unknown format '" + name + "' (expected plain, latex or json)");
}

std::string format_name(Format f) {
    switch (f) {
        case Format::Plain: return "plain";
        case Format::Latex: return "latex";
        case Format::Json: return "json";
    }
    return "plain";
}

std::string print_canonical(const ADist& f, Format format) {
    switch (format) {
        case Format::Plain: return print_plain(f);
        case Format::Latex: return print_latex(f);
        case Format::Json: return dump_canonical(to_json(f));
    }
    throw error("unreachable format");
}

std::string print_poly_plain(const Poly& p) {
    std::vector<Term> terms;
    poly_terms(p, terms);
    return join_terms(terms);
}

} // namespace distalg::lang
