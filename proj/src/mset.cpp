#include "distalg/mset.hpp"

#include <algorithm>

#include "distalg/errors.hpp"

namespace distalg {

namespace {

bool lo_before(const MSet::Interval& a, const MSet::Interval& b) {
    if (!a.lo) {
        if (!b.lo) return a.lo_closed && !b.lo_closed;
        return true;
    }
    if (!b.lo) return false;
    if (*a.lo != *b.lo) return *a.lo < *b.lo;
    return a.lo_closed && !b.lo_closed;
}

// union of a and b is a single interval (a sorted before b)
bool mergeable(const MSet::Interval& a, const MSet::Interval& b) {
    if (!a.hi) return true;
    if (!b.lo) return true;
    if (*b.lo < *a.hi) return true;
    return *b.lo == *a.hi && (b.lo_closed || a.hi_closed);
}

bool contains(const MSet::Interval& iv, const Rational& x) {
    if (iv.lo) {
        if (x < *iv.lo) return false;
        if (x == *iv.lo && !iv.lo_closed) return false;
    }
    if (iv.hi) {
        if (x > *iv.hi) return false;
        if (x == *iv.hi && !iv.hi_closed) return false;
    }
    return true;
}

void erase_point(std::vector<Rational>& v, const Rational& p) {
    v.erase(std::remove(v.begin(), v.end(), p), v.end());
}

} // namespace

MSet MSet::all() {
    MSet m;
    m.intervals_.push_back({std::nullopt, std::nullopt, false, false});
    return m;
}

MSet MSet::points(std::vector<Rational> pts) {
    return of({}, std::move(pts));
}

MSet MSet::interval(std::optional<Rational> lo, std::optional<Rational> hi,
                    bool lo_closed, bool hi_closed) {
    return of({Interval{std::move(lo), std::move(hi), lo_closed, hi_closed}});
}

MSet MSet::of(std::vector<Interval> intervals,
              std::vector<Rational> added, std::vector<Rational> removed) {
    MSet m;
    std::vector<Interval> ivs;
    for (auto& iv : intervals) {
        if (!iv.lo) iv.lo_closed = false;
        if (!iv.hi) iv.hi_closed = false;
        if (iv.lo && iv.hi) {
            if (*iv.lo > *iv.hi) continue;
            if (*iv.lo == *iv.hi) {
                if (iv.lo_closed && iv.hi_closed) added.push_back(*iv.lo);
                continue;
            }
        }
        ivs.push_back(std::move(iv));
    }
    std::sort(ivs.begin(), ivs.end(), lo_before);
    for (auto& iv : ivs) {
        if (!m.intervals_.empty() && mergeable(m.intervals_.back(), iv)) {
            auto& last = m.intervals_.back();
            if (last.hi) {
                if (!iv.hi) {
                    last.hi = std::nullopt;
                    last.hi_closed = false;
                } else if (*iv.hi > *last.hi) {
                    last.hi = iv.hi;
                    last.hi_closed = iv.hi_closed;
                } else if (*iv.hi == *last.hi) {
                    last.hi_closed = last.hi_closed || iv.hi_closed;
                }
            }
        } else {
            m.intervals_.push_back(std::move(iv));
        }
    }

    auto canon = [](std::vector<Rational>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    canon(added);
    canon(removed);
    for (const auto& p : added)
        if (std::binary_search(removed.begin(), removed.end(), p))
            throw representation_error("point " + distalg::to_string(p) +
                                       " both added and removed");
    for (auto& p : added)
        if (!m.in_intervals(p)) m.added_.push_back(std::move(p));
    for (auto& p : removed)
        if (m.in_intervals(p)) m.removed_.push_back(std::move(p));
    return m;
}

bool MSet::in_intervals(const Rational& x) const {
    for (const auto& iv : intervals_)
        if (contains(iv, x)) return true;
    return false;
}

bool MSet::member(const Rational& x) const {
    if (std::binary_search(added_.begin(), added_.end(), x)) return true;
    if (std::binary_search(removed_.begin(), removed_.end(), x)) return false;
    return in_intervals(x);
}

MSet MSet::complement() const {
    // gaps of the interval union, with flipped endpoint flags
    std::vector<Interval> gaps;
    std::vector<Rational> gap_points;
    std::optional<Rational> cur;
    bool cur_closed = false;
    bool open_ended = false;
    for (const auto& iv : intervals_) {
        if (iv.lo) {
            if (!cur || *cur < *iv.lo) {
                gaps.push_back({cur, iv.lo, cur_closed, !iv.lo_closed});
            } else if (*cur == *iv.lo && cur_closed && !iv.lo_closed) {
                gap_points.push_back(*cur);
            }
        }
        if (!iv.hi) { open_ended = true; break; }
        cur = iv.hi;
        cur_closed = !iv.hi_closed;
    }
    if (!open_ended) gaps.push_back({cur, std::nullopt, cur_closed, false});

    MSet c = of(std::move(gaps));
    // fix membership at every correction candidate
    std::vector<Rational> candidates = gap_points;
    candidates.insert(candidates.end(), added_.begin(), added_.end());
    candidates.insert(candidates.end(), removed_.begin(), removed_.end());
    std::vector<Rational> add2, rem2;
    for (const auto& p : candidates) {
        bool want = !member(p);
        bool have = c.in_intervals(p);
        if (want && !have) add2.push_back(p);
        if (!want && have) rem2.push_back(p);
    }
    return of(c.intervals_, std::move(add2), std::move(rem2));
}

MSet MSet::with_interval(Interval iv) const {
    std::vector<Rational> rem = removed_;
    rem.erase(std::remove_if(rem.begin(), rem.end(),
                             [&](const Rational& p) { return contains(iv, p); }),
              rem.end());
    std::vector<Rational> add = added_;
    std::vector<Interval> ivs = intervals_;
    ivs.push_back(std::move(iv));
    return of(std::move(ivs), std::move(add), std::move(rem));
}

MSet MSet::with_point(const Rational& p) const {
    std::vector<Rational> add = added_;
    std::vector<Rational> rem = removed_;
    erase_point(rem, p);
    add.push_back(p);
    return of(intervals_, std::move(add), std::move(rem));
}

MSet MSet::without_point(const Rational& p) const {
    std::vector<Rational> add = added_;
    std::vector<Rational> rem = removed_;
    erase_point(add, p);
    rem.push_back(p);
    return of(intervals_, std::move(add), std::move(rem));
}

std::string MSet::to_string() const {
    if (intervals_.empty() && added_.empty() && removed_.empty()) return "empty";
    if (intervals_.size() == 1 && !intervals_[0].lo && !intervals_[0].hi &&
        added_.empty() && removed_.empty())
        return "R";
    std::string out;
    for (const auto& iv : intervals_) {
        if (!out.empty()) out += " + ";
        if (!iv.lo && !iv.hi) {
            out += "R";
            continue;
        }
        out += iv.lo_closed ? "[" : "(";
        out += iv.lo ? distalg::to_string(*iv.lo) : "-inf";
        out += ", ";
        out += iv.hi ? distalg::to_string(*iv.hi) : "inf";
        out += iv.hi_closed ? "]" : ")";
    }
    auto emit_points = [&out](const std::vector<Rational>& pts, const char* op) {
        if (pts.empty()) return;
        if (!out.empty()) out += op;
        out += "{";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out += ", ";
            out += distalg::to_string(pts[i]);
        }
        out += "}";
    };
    emit_points(added_, out.empty() ? "" : " + ");
    emit_points(removed_, " - ");
    return out;
}

} // namespace distalg
