#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distalg/rational.hpp"

namespace distalg {

/// Closed subset of R described as a finite union of closed intervals
/// (endpoints rational or infinite) and isolated points. Normal form:
/// intervals sorted, disjoint and maximal; points sorted and outside
/// every interval; degenerate intervals stored as points.
class SupportSet {
public:
    struct Interval {
        std::optional<Rational> lo; // nullopt = -infinity
        std::optional<Rational> hi; // nullopt = +infinity
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    SupportSet() = default;

    static SupportSet empty() { return SupportSet(); }
    static SupportSet whole_line();
    static SupportSet point(Rational p);
    static SupportSet interval(std::optional<Rational> lo, std::optional<Rational> hi);

    /// Builds the normal form from arbitrary pieces.
    static SupportSet of(std::vector<Interval> intervals, std::vector<Rational> points);

    bool is_empty() const { return intervals_.empty() && points_.empty(); }
    bool contains(const Rational& x) const;
    bool subset_of(const SupportSet& other) const;
    SupportSet intersect(const SupportSet& other) const;

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& points() const { return points_; }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;

    /// e.g. "(-inf, 0] U {2} U [3, +inf)"; "{}" when empty.
    std::string to_string() const;

private:
    std::vector<Interval> intervals_;
    std::vector<Rational> points_;
};

} // namespace distalg
