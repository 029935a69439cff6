#include "distalg/calculus.hpp"

#include "distalg/errors.hpp"

namespace distalg {

namespace {

ADist derivative_once(const ADist& f) {
    RawADist raw;
    raw.breakpoints = f.breakpoints();
    for (const auto& p : f.pieces()) raw.pieces.push_back(p.diff());
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        const Rational& x = f.breakpoints()[i];
        // jump of the function part
        Scalar jump = f.pieces()[i + 1].eval(Scalar(x)) - f.pieces()[i].eval(Scalar(x));
        DeltaComb d{x, {}};
        if (!jump.is_zero()) d.coeffs.push_back(jump);
        if (const DeltaComb* fd = f.delta_at(x)) {
            // delta^(j) -> delta^(j+1)
            d.coeffs.resize(fd->coeffs.size() + 1, Scalar(0));
            for (std::size_t j = 0; j < fd->coeffs.size(); ++j) d.coeffs[j + 1] += fd->coeffs[j];
        }
        if (!d.coeffs.empty()) raw.deltas.push_back(std::move(d));
    }
    return normalize(std::move(raw));
}

} // namespace

ADist derivative(const ADist& f, int n) {
    if (n < 0) throw precondition_error("negative derivative order");
    ADist out = f;
    for (int i = 0; i < n; ++i) out = derivative_once(out);
    return out;
}

ADist antiderivative(const ADist& f) {
    RawADist raw;
    raw.breakpoints = f.breakpoints();
    raw.pieces.reserve(f.pieces().size());

    Poly cur = f.pieces().front().antidiff(); // leftmost: zero constant term
    raw.pieces.push_back(cur);
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        const Rational& x = f.breakpoints()[i];
        Scalar jump(0); // contributed by an order-0 delta
        if (const DeltaComb* fd = f.delta_at(x)) {
            jump = fd->coeffs[0];
            if (fd->coeffs.size() > 1) {
                DeltaComb d{x, std::vector<Scalar>(fd->coeffs.begin() + 1, fd->coeffs.end())};
                raw.deltas.push_back(std::move(d));
            }
        }
        Poly next = f.pieces()[i + 1].antidiff();
        Scalar c = cur.eval(Scalar(x)) + jump - next.eval(Scalar(x));
        next += Poly(c);
        raw.pieces.push_back(next);
        cur = std::move(next);
    }
    return normalize(std::move(raw));
}

ADist dual_product(const Poly& xi, const ADist& f) {
    RawADist raw;
    raw.breakpoints = f.breakpoints();
    for (const auto& p : f.pieces()) raw.pieces.push_back(xi * p);
    for (const auto& d : f.deltas()) {
        // xi * delta^(n)_a = sum_{k<=n} (-1)^k C(n,k) xi^(k)(a) delta^(n-k)_a
        std::vector<Scalar> xi_derivs_at_a; // xi^(k)(a)
        Poly dk = xi;
        Scalar a(d.point);
        for (std::size_t k = 0; k < d.coeffs.size(); ++k) {
            xi_derivs_at_a.push_back(dk.eval(a));
            dk = dk.diff();
        }
        DeltaComb nd{d.point, std::vector<Scalar>(d.coeffs.size(), Scalar(0))};
        for (std::size_t n = 0; n < d.coeffs.size(); ++n) {
            if (d.coeffs[n].is_zero()) continue;
            Rational binom = 1;
            for (std::size_t k = 0; k <= n; ++k) {
                Scalar term = Scalar(binom) * xi_derivs_at_a[k] * d.coeffs[n];
                if (k % 2 == 1) term = -term;
                nd.coeffs[n - k] += term;
                binom = binom * Rational(n - k) / Rational(k + 1);
            }
        }
        raw.deltas.push_back(std::move(nd));
    }
    return normalize(std::move(raw));
}

ADist restrict_to(const ADist& f, std::optional<Rational> lo, std::optional<Rational> hi) {
    if (lo && hi && *lo >= *hi) return ADist();
    RawADist out;
    std::vector<Rational> grid = f.breakpoints();
    if (lo) grid.push_back(*lo);
    if (hi) grid.push_back(*hi);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    out.breakpoints = grid;
    for (const auto& g : grid) {
        // the interval immediately left of g survives iff it lies in (lo, hi);
        // lo and hi are themselves grid points, so endpoint comparison suffices
        bool keep = (!lo || g > *lo) && (!hi || g <= *hi);
        out.pieces.push_back(keep ? f.piece_left_of(g) : Poly());
    }
    out.pieces.push_back(hi ? Poly() : f.pieces().back());
    for (const auto& d : f.deltas()) {
        if (lo && d.point <= *lo) continue;
        if (hi && d.point >= *hi) continue;
        out.deltas.push_back(d);
    }
    return normalize(std::move(out));
}

} // namespace distalg
