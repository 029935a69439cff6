#pragma once

#include "distalg/adist.hpp"
#include "distalg/mset.hpp"

namespace distalg {

/// Product of distributions with disjoint singular supports: pieces
/// multiply pointwise and each delta is dual-multiplied by the other
/// factor's (locally smooth) polynomial. Throws precondition_error
/// naming the common points when the singular supports intersect.
ADist hormander(const ADist& f, const ADist& g);

/// The closed-form product: piece products plus, at each singular
/// point, the right piece of g against f's deltas and the left piece
/// of f against g's deltas.
ADist star(const ADist& f, const ADist& g);

/// The product family: acts as star(f,g) at singular points inside m
/// and as star(g,f) outside. star_m(f,g,R) == star(f,g) and
/// star_m(f,g,empty) == star(g,f).
ADist star_m(const ADist& f, const ADist& g, const MSet& m);

/// f_M: function part scaled by sqrt2/2, deltas at points of m scaled
/// by sqrt2, deltas elsewhere dropped.
ADist m_transform(const ADist& f, const MSet& m);

} // namespace distalg
