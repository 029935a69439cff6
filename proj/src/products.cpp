#include "distalg/products.hpp"

#include <algorithm>
#include <functional>

#include "distalg/errors.hpp"

namespace distalg {

namespace {

// sum_n coeffs[n] * dual(xi, delta^(n)_a), accumulated into out
void accumulate_dual_delta(const Poly& xi, const Rational& a,
                           const std::vector<Scalar>& coeffs, std::vector<Scalar>& out) {
    if (out.size() < coeffs.size()) out.resize(coeffs.size(), Scalar(0));
    std::vector<Scalar> xi_derivs; // xi^(k)(a)
    Poly dk = xi;
    Scalar at(a);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        xi_derivs.push_back(dk.eval(at));
        dk = dk.diff();
    }
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].is_zero()) continue;
        Rational binom = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            Scalar term = Scalar(binom) * xi_derivs[k] * coeffs[n];
            if (k % 2 == 1) term = -term;
            out[n - k] += term;
            binom = binom * Rational(n - k) / Rational(k + 1);
        }
    }
}

// shared piece-product skeleton; pick_left decides, per singular
// point, whether a delta of one factor multiplies the other factor's
// left or right piece
ADist product_core(const ADist& f, const ADist& g,
                   const std::function<bool(const Rational&)>& f_delta_takes_right) {
    RawADist raw;
    raw.breakpoints = merged_breakpoints(f, g);
    for (const auto& b : raw.breakpoints)
        raw.pieces.push_back(f.piece_left_of(b) * g.piece_left_of(b));
    raw.pieces.push_back(f.pieces().back() * g.pieces().back());

    for (const auto& b : raw.breakpoints) {
        const DeltaComb* df = f.delta_at(b);
        const DeltaComb* dg = g.delta_at(b);
        if (!df && !dg) continue;
        bool right = f_delta_takes_right(b);
        DeltaComb nd{b, {}};
        if (df) {
            const Poly& xi = right ? g.piece_right_of(b) : g.piece_left_of(b);
            accumulate_dual_delta(xi, b, df->coeffs, nd.coeffs);
        }
        if (dg) {
            const Poly& xi = right ? f.piece_left_of(b) : f.piece_right_of(b);
            accumulate_dual_delta(xi, b, dg->coeffs, nd.coeffs);
        }
        raw.deltas.push_back(std::move(nd));
    }
    return normalize(std::move(raw));
}

} // namespace

ADist hormander(const ADist& f, const ADist& g) {
    std::vector<Rational> sf = singsupp(f);
    std::vector<Rational> sg = singsupp(g);
    std::vector<Rational> common;
    std::set_intersection(sf.begin(), sf.end(), sg.begin(), sg.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
        std::string pts;
        for (const auto& p : common) {
            if (!pts.empty()) pts += ", ";
            pts += to_string(p);
        }
        throw precondition_error("intersecting singular supports at {" + pts + "}");
    }
    // each delta sees a factor that is one polynomial near its point,
    // so the left/right choice is immaterial; use the right piece
    return product_core(f, g, [](const Rational&) { return true; });
}

ADist star(const ADist& f, const ADist& g) {
    return product_core(f, g, [](const Rational&) { return true; });
}

ADist star_m(const ADist& f, const ADist& g, const MSet& m) {
    return product_core(f, g, [&m](const Rational& b) { return m.member(b); });
}

ADist m_transform(const ADist& f, const MSet& m) {
    Scalar half_sqrt2(Rational(0), Rational(1, 2)); // sqrt2 / 2
    RawADist raw;
    raw.breakpoints = f.breakpoints();
    for (const auto& p : f.pieces()) raw.pieces.push_back(half_sqrt2 * p);
    for (const auto& d : f.deltas()) {
        if (!m.member(d.point)) continue;
        DeltaComb nd{d.point, d.coeffs};
        for (auto& c : nd.coeffs) c = Scalar::sqrt2() * c;
        raw.deltas.push_back(std::move(nd));
    }
    return normalize(std::move(raw));
}

} // namespace distalg
