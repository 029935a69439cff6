#pragma once

#include <vector>

#include "distalg/poly.hpp"
#include "distalg/support_set.hpp"

namespace distalg {

/// Finite combination of Dirac delta derivatives at one point:
/// sum_j coeffs[j] * delta^(j)_point. Highest-order coefficient is
/// nonzero; an empty coefficient list means no delta content.
struct DeltaComb {
    Rational point;
    std::vector<Scalar> coeffs;

    friend bool operator==(const DeltaComb&, const DeltaComb&) = default;
};

/// Unnormalized input for ADist: breakpoints need not be sorted,
/// deduplicated or minimal, delta points need not be breakpoints.
/// pieces[i] sits immediately left of breakpoints[i] (after a stable
/// sort); pieces.back() is the rightmost piece.
struct RawADist {
    std::vector<Rational> breakpoints;
    std::vector<Poly> pieces; // breakpoints.size() + 1 entries
    std::vector<DeltaComb> deltas;
};

/// Canonical element of the distribution algebra: a piecewise
/// polynomial plus finite delta combinations at breakpoints.
///
/// Invariants: breakpoints strictly increasing; pieces has exactly
/// breakpoints.size()+1 entries (piece i lives on the open interval
/// between breakpoints i-1 and i, with infinite sentinels); deltas is
/// sorted by point, every delta point is a breakpoint, coefficient
/// lists are nonempty with nonzero leading entry; no breakpoint is
/// removable (equal neighbour pieces and no delta).
class ADist {
public:
    ADist() : pieces_(1) {} // the zero distribution

    const std::vector<Rational>& breakpoints() const { return bps_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    const std::vector<DeltaComb>& deltas() const { return deltas_; }

    bool is_zero() const;
    /// True when there is a single piece and no delta content.
    bool is_smooth() const { return bps_.empty(); }
    const Poly& smooth_piece() const { return pieces_.front(); }

    /// Piece valid immediately left / right of x.
    const Poly& piece_left_of(const Rational& x) const;
    const Poly& piece_right_of(const Rational& x) const;
    /// Delta combination at x, nullptr when absent.
    const DeltaComb* delta_at(const Rational& x) const;

    friend bool operator==(const ADist&, const ADist&) = default;

    friend ADist operator+(const ADist& l, const ADist& r);
    friend ADist operator-(const ADist& l, const ADist& r);
    ADist operator-() const;
    friend ADist operator*(const Scalar& c, const ADist& f);

private:
    friend ADist normalize(RawADist raw);

    std::vector<Rational> bps_;
    std::vector<Poly> pieces_;
    std::vector<DeltaComb> deltas_;
};

/// Canonicalizes raw data (sort, dedupe, merge removable seams, drop
/// zero delta coefficients; idempotent). Throws representation_error
/// on malformed input, e.g. a duplicated breakpoint whose in-between
/// piece matches neither neighbour.
ADist normalize(RawADist raw);

ADist from_smooth(Poly p);
ADist from_scalar(const Scalar& c);
/// H(x - a)
ADist heaviside(const Rational& a);
/// H(a - x)
ADist mirrored_heaviside(const Rational& a);
/// delta_a^(n)
ADist delta_dist(const Rational& a, int order = 0);
/// |x - s|
ADist abs_shift(const Rational& s);

ADist add(const ADist& l, const ADist& r);
ADist scale(const Scalar& c, const ADist& f);
bool equals(const ADist& l, const ADist& r);

SupportSet support(const ADist& f);
std::vector<Rational> singsupp(const ADist& f);

/// Union of both singular supports; shared helper for the products.
std::vector<Rational> merged_breakpoints(const ADist& l, const ADist& r);

} // namespace distalg
