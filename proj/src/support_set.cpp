#include "distalg/support_set.hpp"

#include <algorithm>

namespace distalg {

namespace {

// -infinity sorts before every rational
bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b.has_value();
    if (!b) return false;
    return *a < *b;
}

bool interval_contains(const SupportSet::Interval& iv, const Rational& x) {
    if (iv.lo && x < *iv.lo) return false;
    if (iv.hi && x > *iv.hi) return false;
    return true;
}

// closed intervals touch or overlap -> their union is an interval
bool mergeable(const SupportSet::Interval& a, const SupportSet::Interval& b) {
    // requires a.lo <= b.lo in the sort order
    if (!a.hi) return true;
    if (!b.lo) return true;
    return *b.lo <= *a.hi;
}

} // namespace

SupportSet SupportSet::whole_line() {
    SupportSet s;
    s.intervals_.push_back({std::nullopt, std::nullopt});
    return s;
}

SupportSet SupportSet::point(Rational p) {
    SupportSet s;
    s.points_.push_back(std::move(p));
    return s;
}

SupportSet SupportSet::interval(std::optional<Rational> lo, std::optional<Rational> hi) {
    return of({Interval{std::move(lo), std::move(hi)}}, {});
}

SupportSet SupportSet::of(std::vector<Interval> intervals, std::vector<Rational> points) {
    SupportSet s;
    // degenerate intervals become points; invalid ones are dropped
    std::vector<Interval> ivs;
    for (auto& iv : intervals) {
        if (iv.lo && iv.hi) {
            if (*iv.lo > *iv.hi) continue;
            if (*iv.lo == *iv.hi) {
                points.push_back(*iv.lo);
                continue;
            }
        }
        ivs.push_back(std::move(iv));
    }
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return lo_less(a.lo, b.lo);
        // wider first so the merge pass keeps the maximal one
        if (!a.hi) return b.hi.has_value();
        if (!b.hi) return false;
        return *a.hi > *b.hi;
    });
    for (auto& iv : ivs) {
        if (!s.intervals_.empty() && mergeable(s.intervals_.back(), iv)) {
            auto& last = s.intervals_.back();
            if (last.hi && (!iv.hi || *iv.hi > *last.hi)) last.hi = iv.hi;
        } else {
            s.intervals_.push_back(std::move(iv));
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (auto& p : points) {
        bool covered = false;
        for (const auto& iv : s.intervals_)
            if (interval_contains(iv, p)) { covered = true; break; }
        if (!covered) s.points_.push_back(std::move(p));
    }
    return s;
}

bool SupportSet::contains(const Rational& x) const {
    for (const auto& iv : intervals_)
        if (interval_contains(iv, x)) return true;
    return std::binary_search(points_.begin(), points_.end(), x);
}

bool SupportSet::subset_of(const SupportSet& other) const {
    for (const auto& p : points_)
        if (!other.contains(p)) return false;
    // a closed interval is connected, so it must fit inside a single
    // interval of the (maximal, disjoint) other cover
    for (const auto& iv : intervals_) {
        bool fits = false;
        for (const auto& ov : other.intervals_) {
            bool lo_ok = !ov.lo || (iv.lo && *iv.lo >= *ov.lo);
            bool hi_ok = !ov.hi || (iv.hi && *iv.hi <= *ov.hi);
            if (lo_ok && hi_ok) { fits = true; break; }
        }
        if (!fits) return false;
    }
    return true;
}

SupportSet SupportSet::intersect(const SupportSet& other) const {
    std::vector<Interval> ivs;
    std::vector<Rational> pts;
    for (const auto& a : intervals_) {
        for (const auto& b : other.intervals_) {
            Interval r;
            r.lo = (!a.lo) ? b.lo : (!b.lo ? a.lo : std::optional<Rational>(std::max(*a.lo, *b.lo)));
            r.hi = (!a.hi) ? b.hi : (!b.hi ? a.hi : std::optional<Rational>(std::min(*a.hi, *b.hi)));
            if (r.lo && r.hi && *r.lo > *r.hi) continue;
            ivs.push_back(std::move(r));
        }
    }
    for (const auto& p : points_)
        if (other.contains(p)) pts.push_back(p);
    for (const auto& p : other.points_)
        if (contains(p)) pts.push_back(p);
    return of(std::move(ivs), std::move(pts));
}

std::string SupportSet::to_string() const {
    if (is_empty()) return "{}";
    std::string out;
    auto emit = [&out](const std::string& s) {
        if (!out.empty()) out += " U ";
        out += s;
    };
    std::size_t pi = 0;
    auto flush_points_before = [&](const std::optional<Rational>& bound) {
        while (pi < points_.size() && (!bound || points_[pi] < *bound)) {
            emit("{" + distalg::to_string(points_[pi]) + "}");
            ++pi;
        }
    };
    for (const auto& iv : intervals_) {
        flush_points_before(iv.lo);
        std::string lo = iv.lo ? distalg::to_string(*iv.lo) : "-inf";
        std::string hi = iv.hi ? distalg::to_string(*iv.hi) : "+inf";
        emit((iv.lo ? "[" : "(") + lo + ", " + hi + (iv.hi ? "]" : ")"));
    }
    flush_points_before(std::nullopt);
    return out;
}

} // namespace distalg
