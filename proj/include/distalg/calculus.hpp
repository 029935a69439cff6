#pragma once

#include <optional>

#include "distalg/adist.hpp"

namespace distalg {

/// n-th distributional derivative: classical derivative of each piece,
/// a jump delta at each breakpoint, and every delta promoted one order.
ADist derivative(const ADist& f, int n = 1);

/// A primitive: derivative(antiderivative(f)) == f. Deltas drop one
/// order, order-0 deltas become unit jumps, the function part is glued
/// continuously left to right with a zero constant term on the
/// leftmost piece.
ADist antiderivative(const ADist& f);

/// Product of a globally smooth function with a distribution; deltas
/// expand via xi * delta^(n)_a = sum_k (-1)^k C(n,k) xi^(k)(a) delta^(n-k)_a.
ADist dual_product(const Poly& xi, const ADist& f);

/// Restriction to the open interval (lo, hi) (nullopt = unbounded),
/// extended by zero outside. Deltas on the boundary are dropped.
ADist restrict_to(const ADist& f, std::optional<Rational> lo, std::optional<Rational> hi);

} // namespace distalg
