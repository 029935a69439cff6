#include "distalg/adist.hpp"

#include <algorithm>
#include <map>

#include "distalg/errors.hpp"

namespace distalg {

namespace {

void trim_delta(std::vector<Scalar>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

} // namespace

ADist normalize(RawADist raw) {
    if (raw.pieces.size() != raw.breakpoints.size() + 1)
        throw representation_error("piece count must be breakpoint count + 1");

    // sort breakpoints, carrying each one's left piece along
    std::vector<std::size_t> order(raw.breakpoints.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return raw.breakpoints[a] < raw.breakpoints[b];
    });

    std::vector<Rational> bps;
    std::vector<Poly> pieces;
    for (std::size_t k = 0; k < order.size(); ++k) {
        bps.push_back(raw.breakpoints[order[k]]);
        pieces.push_back(raw.pieces[order[k]]);
    }
    pieces.push_back(raw.pieces.back());

    // collapse duplicated breakpoints; the piece sandwiched between two
    // copies sits on an empty interval and must agree with a neighbour
    for (std::size_t i = 0; i + 1 < bps.size();) {
        if (bps[i] == bps[i + 1]) {
            const Poly& between = pieces[i + 1];
            if (between != pieces[i] && between != pieces[i + 2])
                throw representation_error("conflicting pieces at duplicate breakpoint " +
                                           to_string(bps[i]));
            bps.erase(bps.begin() + static_cast<std::ptrdiff_t>(i + 1));
            pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i + 1));
        } else {
            ++i;
        }
    }

    // gather delta content; drop zero coefficients
    std::map<Rational, std::vector<Scalar>> deltas;
    for (auto& d : raw.deltas) {
        auto& acc = deltas[d.point];
        if (d.coeffs.size() > acc.size()) acc.resize(d.coeffs.size(), Scalar(0));
        for (std::size_t j = 0; j < d.coeffs.size(); ++j) acc[j] += d.coeffs[j];
    }
    for (auto it = deltas.begin(); it != deltas.end();) {
        trim_delta(it->second);
        it = it->second.empty() ? deltas.erase(it) : std::next(it);
    }

    // every delta point becomes a breakpoint (splitting the piece it lands on)
    for (const auto& [pt, coeffs] : deltas) {
        auto it = std::lower_bound(bps.begin(), bps.end(), pt);
        if (it != bps.end() && *it == pt) continue;
        std::size_t idx = static_cast<std::size_t>(it - bps.begin());
        bps.insert(it, pt);
        Poly cover = pieces[idx];
        pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(idx), std::move(cover));
    }

    // drop removable seams
    for (std::size_t i = 0; i < bps.size();) {
        if (pieces[i] == pieces[i + 1] && !deltas.count(bps[i])) {
            bps.erase(bps.begin() + static_cast<std::ptrdiff_t>(i));
            pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }

    ADist out;
    out.bps_ = std::move(bps);
    out.pieces_ = std::move(pieces);
    for (auto& [pt, coeffs] : deltas)
        out.deltas_.push_back(DeltaComb{pt, std::move(coeffs)});
    return out;
}

bool ADist::is_zero() const {
    return bps_.empty() && deltas_.empty() && pieces_.front().is_zero();
}

const Poly& ADist::piece_left_of(const Rational& x) const {
    auto it = std::lower_bound(bps_.begin(), bps_.end(), x);
    return pieces_[static_cast<std::size_t>(it - bps_.begin())];
}

const Poly& ADist::piece_right_of(const Rational& x) const {
    auto it = std::upper_bound(bps_.begin(), bps_.end(), x);
    return pieces_[static_cast<std::size_t>(it - bps_.begin())];
}

const DeltaComb* ADist::delta_at(const Rational& x) const {
    auto it = std::lower_bound(deltas_.begin(), deltas_.end(), x,
                               [](const DeltaComb& d, const Rational& v) { return d.point < v; });
    if (it != deltas_.end() && it->point == x) return &*it;
    return nullptr;
}

std::vector<Rational> merged_breakpoints(const ADist& l, const ADist& r) {
    std::vector<Rational> out;
    std::set_union(l.breakpoints().begin(), l.breakpoints().end(),
                   r.breakpoints().begin(), r.breakpoints().end(),
                   std::back_inserter(out));
    return out;
}

ADist add(const ADist& l, const ADist& r) {
    RawADist raw;
    raw.breakpoints = merged_breakpoints(l, r);
    raw.pieces.reserve(raw.breakpoints.size() + 1);
    // piece on the interval left of each merged breakpoint, then the tail
    for (const auto& b : raw.breakpoints)
        raw.pieces.push_back(l.piece_left_of(b) + r.piece_left_of(b));
    raw.pieces.push_back(l.pieces().back() + r.pieces().back());
    raw.deltas = l.deltas();
    raw.deltas.insert(raw.deltas.end(), r.deltas().begin(), r.deltas().end());
    return normalize(std::move(raw));
}

ADist scale(const Scalar& c, const ADist& f) {
    if (c.is_zero()) return ADist();
    RawADist raw;
    raw.breakpoints = f.breakpoints();
    for (const auto& p : f.pieces()) raw.pieces.push_back(c * p);
    for (const auto& d : f.deltas()) {
        DeltaComb nd{d.point, d.coeffs};
        for (auto& coef : nd.coeffs) coef = c * coef;
        raw.deltas.push_back(std::move(nd));
    }
    return normalize(std::move(raw));
}

bool equals(const ADist& l, const ADist& r) { return l == r; }

ADist operator+(const ADist& l, const ADist& r) { return add(l, r); }
ADist operator-(const ADist& l, const ADist& r) { return add(l, scale(Scalar(-1), r)); }
ADist ADist::operator-() const { return scale(Scalar(-1), *this); }
ADist operator*(const Scalar& c, const ADist& f) { return scale(c, f); }

ADist from_smooth(Poly p) {
    RawADist raw;
    raw.pieces.push_back(std::move(p));
    return normalize(std::move(raw));
}

ADist from_scalar(const Scalar& c) { return from_smooth(Poly(c)); }

ADist heaviside(const Rational& a) {
    RawADist raw;
    raw.breakpoints = {a};
    raw.pieces = {Poly(), Poly(Scalar(1))};
    return normalize(std::move(raw));
}

ADist mirrored_heaviside(const Rational& a) {
    RawADist raw;
    raw.breakpoints = {a};
    raw.pieces = {Poly(Scalar(1)), Poly()};
    return normalize(std::move(raw));
}

ADist delta_dist(const Rational& a, int order) {
    if (order < 0) throw precondition_error("negative delta order");
    RawADist raw;
    raw.pieces.push_back(Poly());
    std::vector<Scalar> coeffs(static_cast<std::size_t>(order) + 1, Scalar(0));
    coeffs.back() = Scalar(1);
    raw.deltas.push_back(DeltaComb{a, std::move(coeffs)});
    return normalize(std::move(raw));
}

ADist abs_shift(const Rational& s) {
    // |x - s|: (s - x) left of s, (x - s) right of s
    Poly right(std::vector<Scalar>{Scalar(-s), Scalar(1)});
    RawADist raw;
    raw.breakpoints = {s};
    raw.pieces = {-right, right};
    return normalize(std::move(raw));
}

SupportSet support(const ADist& f) {
    std::vector<SupportSet::Interval> ivs;
    std::vector<Rational> pts;
    const auto& bps = f.breakpoints();
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
        if (f.pieces()[i].is_zero()) continue;
        // closure of the open interval; a nonzero polynomial vanishes
        // only on a finite set, so the closure is the whole interval
        SupportSet::Interval iv;
        if (i > 0) iv.lo = bps[i - 1];
        if (i < bps.size()) iv.hi = bps[i];
        ivs.push_back(std::move(iv));
    }
    for (const auto& d : f.deltas()) pts.push_back(d.point);
    return SupportSet::of(std::move(ivs), std::move(pts));
}

std::vector<Rational> singsupp(const ADist& f) {
    std::vector<Rational> out;
    const auto& bps = f.breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
        // polynomials agreeing to all orders at a point are identical,
        // so expression equality is exactly the smooth-gluing test
        if (f.pieces()[i] != f.pieces()[i + 1] || f.delta_at(bps[i]) != nullptr)
            out.push_back(bps[i]);
    }
    return out;
}

} // namespace distalg
