#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distalg/rational.hpp"

namespace distalg {

/// Finitely describable subset of R: a union of generalized intervals
/// with rational (or infinite) endpoints and open/closed flags, plus
/// finite point corrections. Membership is exactly decidable, which is
/// all the product family needs -- any product evaluation consults the
/// set at finitely many singular points.
///
/// Normal form: intervals sorted and merged; added points lie outside
/// the interval union; removed points lie inside it; the two point
/// sets are disjoint.
class MSet {
public:
    struct Interval {
        std::optional<Rational> lo; // nullopt = -infinity (then lo_closed is false)
        std::optional<Rational> hi; // nullopt = +infinity
        bool lo_closed = false;
        bool hi_closed = false;
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    MSet() = default; // empty set

    static MSet all();
    static MSet empty_set() { return MSet(); }
    static MSet of(std::vector<Interval> intervals,
                   std::vector<Rational> added = {},
                   std::vector<Rational> removed = {});
    static MSet points(std::vector<Rational> pts);
    static MSet interval(std::optional<Rational> lo, std::optional<Rational> hi,
                         bool lo_closed, bool hi_closed);

    /// chi_M(x).
    bool member(const Rational& x) const;

    MSet complement() const;

    /// Set union with another interval (normalizing).
    MSet with_interval(Interval iv) const;
    /// Point corrections; the later correction wins.
    MSet with_point(const Rational& p) const;
    MSet without_point(const Rational& p) const;

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& added_points() const { return added_; }
    const std::vector<Rational>& removed_points() const { return removed_; }

    friend bool operator==(const MSet&, const MSet&) = default;

    /// e.g. "[0, 1) + {2} - {1/2}"; "R"; "empty".
    std::string to_string() const;

private:
    bool in_intervals(const Rational& x) const;

    std::vector<Interval> intervals_;
    std::vector<Rational> added_;
    std::vector<Rational> removed_;
};

} // namespace distalg
