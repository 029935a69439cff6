#include "distalg/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "distalg/errors.hpp"
#include "distalg/products.hpp"

namespace distalg {

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half), QUADPACK dqk15
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

QuadResult gk15(const std::function<double(double)>& fn, double a, double b) {
    double half = 0.5 * (b - a);
    double mid = 0.5 * (a + b);
    double fc = fn(mid);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = half * kXgk[i];
        double fsum = fn(mid - dx) + fn(mid + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kron *= half;
    gauss *= half;
    // conservative estimate: |K15 - G7| overestimates the Kronrod error,
    // which buys headroom for the exactness bounds downstream
    return {kron, std::abs(kron - gauss)};
}

QuadResult adaptive_quad(const std::function<double(double)>& fn, double a, double b,
                         double tol, int depth = 0) {
    QuadResult r = gk15(fn, a, b);
    if (r.error <= tol || depth >= 40) return r;
    double mid = 0.5 * (a + b);
    QuadResult left = adaptive_quad(fn, a, mid, 0.5 * tol, depth + 1);
    QuadResult right = adaptive_quad(fn, mid, b, 0.5 * tol, depth + 1);
    return {left.value + right.value, left.error + right.error};
}

PairingResult pair_impl(const ADist& f, const TestFunction& t, int bump_order,
                        double quad_tol) {
    PairingResult res;
    // integration cells: piece boundaries of f clipped to the bump support
    std::vector<Rational> cuts;
    cuts.push_back(t.lo());
    for (const auto& b : f.breakpoints())
        if (b > t.lo() && b < t.hi()) cuts.push_back(b);
    cuts.push_back(t.hi());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        // no breakpoint lies strictly inside the cell, so the piece
        // left of its right endpoint covers it
        const Poly& piece = f.piece_left_of(cuts[i + 1]);
        if (piece.is_zero()) continue;
        double a = to_double(cuts[i]);
        double b = to_double(cuts[i + 1]);
        std::vector<double> pc = piece.double_coeffs();
        auto integrand = [&pc, &t, bump_order](double x) {
            double pv = 0.0;
            for (auto it = pc.rbegin(); it != pc.rend(); ++it) pv = pv * x + *it;
            return pv * t.deriv(bump_order, x);
        };
        QuadResult q = adaptive_quad(integrand, a, b, quad_tol);
        res.value += q.value;
        res.error_estimate += q.error;
    }
    for (const auto& d : f.deltas()) {
        double x = to_double(d.point);
        for (std::size_t j = 0; j < d.coeffs.size(); ++j) {
            if (d.coeffs[j].is_zero()) continue;
            double term = d.coeffs[j].to_double() * t.deriv(static_cast<int>(j) + bump_order, x);
            if (j % 2 == 1) term = -term;
            res.value += term;
        }
    }
    return res;
}

} // namespace

PairingResult pair(const ADist& f, const TestFunction& t, double quad_tol) {
    return pair_impl(f, t, 0, quad_tol);
}

PairingResult pair_deriv_bump(const ADist& f, const TestFunction& t, int k, double quad_tol) {
    return pair_impl(f, t, k, quad_tol);
}

ADist shift(const ADist& g, const Rational& eps) {
    RawADist raw;
    for (const auto& b : g.breakpoints()) raw.breakpoints.push_back(b - eps);
    for (const auto& p : g.pieces()) raw.pieces.push_back(p.compose_affine(Scalar(1), Scalar(eps)));
    for (const auto& d : g.deltas()) raw.deltas.push_back(DeltaComb{d.point - eps, d.coeffs});
    return normalize(std::move(raw));
}

PairingResult epsilon_limit_pair(const ADist& f, const ADist& g, const TestFunction& t,
                                 std::vector<Rational> eps_seq, const OracleOptions& opts) {
    if (eps_seq.empty()) throw precondition_error("empty epsilon sequence");

    // smallest positive gap between singular supports: below it the
    // Hormander products exist and breakpoint orderings are frozen
    std::optional<Rational> safe;
    for (const auto& ys : singsupp(g))
        for (const auto& xs : singsupp(f)) {
            Rational d = ys - xs;
            if (d > 0 && (!safe || d < *safe)) safe = d;
        }
    Rational prev = 0; // sentinel: first entry has no upper neighbour
    bool have_prev = false;
    for (auto& e : eps_seq) {
        if (e <= 0) throw precondition_error("epsilon entries must be positive");
        while ((safe && e >= *safe) || (have_prev && e >= prev)) e /= 2;
        prev = e;
        have_prev = true;
    }

    double quad_err = 0.0;
    std::vector<double> eps, vals;
    for (const auto& e : eps_seq) {
        PairingResult p = pair(hormander(f, shift(g, e)), t, opts.quad_tol);
        eps.push_back(to_double(e));
        vals.push_back(p.value);
        quad_err = std::max(quad_err, p.error_estimate);
    }

    // Neville extrapolation of (eps_k, v_k) to eps = 0, smallest shifts
    // first. Deep levels amplify quadrature noise, so keep the diagonal
    // entry whose successive difference bottoms out (the plateau).
    std::reverse(eps.begin(), eps.end());
    std::reverse(vals.begin(), vals.end());
    std::vector<double> tab = vals;
    double prev_diag = tab[0];
    double best_val = tab[0];
    double best_tail = tab.size() > 1 ? std::abs(vals[1] - vals[0]) : 0.0;
    for (std::size_t m = 1; m < tab.size(); ++m) {
        for (std::size_t i = 0; i + m < tab.size(); ++i) {
            double denom = eps[i] - eps[i + m];
            tab[i] = (eps[i] * tab[i + 1] - eps[i + m] * tab[i]) / denom;
        }
        double diag = tab[0];
        double diff = std::abs(diag - prev_diag);
        if (diff <= best_tail) {
            best_tail = diff;
            best_val = diag;
        }
        prev_diag = diag;
    }
    PairingResult out{best_val, best_tail + quad_err};
    if (!(out.error_estimate <= opts.tolerance))
        throw oracle_error("epsilon limit did not converge (tail estimate " +
                           std::to_string(out.error_estimate) + ")");
    return out;
}

PairingResult epsilon_limit_pair(const ADist& f, const ADist& g, const TestFunction& t,
                                 const OracleOptions& opts) {
    std::vector<Rational> seq;
    for (int k = opts.eps_k_min; k <= opts.eps_k_max; ++k) {
        boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << k;
        seq.push_back(Rational(1, den));
    }
    return epsilon_limit_pair(f, g, t, std::move(seq), opts);
}

bool weak_null_check(const std::vector<ADist>& seq, const Poly& xi, const MSet& m,
                     const TestFunction& t, double tol) {
    if (seq.empty()) return false;
    ADist xi_dist = from_smooth(xi);
    std::size_t window = std::min<std::size_t>(5, seq.size());
    std::vector<double> tailvals;
    for (std::size_t i = seq.size() - window; i < seq.size(); ++i)
        tailvals.push_back(std::abs(pair(star_m(xi_dist, seq[i], m), t).value));
    if (!(tailvals.back() <= tol)) return false;
    for (std::size_t i = 0; i + 1 < tailvals.size(); ++i)
        if (tailvals[i] < tailvals[i + 1]) return false;
    return true;
}

} // namespace distalg
