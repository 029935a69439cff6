#pragma once

#include <vector>

#include "distalg/adist.hpp"
#include "distalg/bump.hpp"
#include "distalg/mset.hpp"

namespace distalg {

struct PairingResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

struct OracleOptions {
    double tolerance = 1e-6;  // acceptable extrapolation tail
    int eps_k_min = 4;        // first epsilon is 2^-k_min
    int eps_k_max = 12;       // depth of the epsilon sequence
    double quad_tol = 1e-10;  // absolute quadrature tolerance per interval
};

/// <F, t>: adaptive quadrature of each piece against the bump plus
/// sum_ij F_ij (-1)^j t^(j)(x_i).
PairingResult pair(const ADist& f, const TestFunction& t, double quad_tol = 1e-10);

/// <F, t^(k)>: pairing against a derivative of the bump (used by the
/// adjoint identity <D_x F, t> = -<F, t'>).
PairingResult pair_deriv_bump(const ADist& f, const TestFunction& t, int k,
                              double quad_tol = 1e-10);

/// G(x + eps): exact translate by -eps.
ADist shift(const ADist& g, const Rational& eps);

/// Weak limit of <F(x) G(x+eps), t> as eps -> 0, via the Hormander
/// product at each eps and Richardson (Neville) extrapolation.
/// Entries are halved until they are below every positive gap between
/// the singular supports, so the products exist and the orderings are
/// stable over the whole sampled range. Throws oracle_error when the
/// extrapolation tail stays above the tolerance.
PairingResult epsilon_limit_pair(const ADist& f, const ADist& g, const TestFunction& t,
                                 std::vector<Rational> eps_seq, const OracleOptions& opts = {});

/// Default sequence 2^-k, k = eps_k_min .. eps_k_max.
PairingResult epsilon_limit_pair(const ADist& f, const ADist& g, const TestFunction& t,
                                 const OracleOptions& opts = {});

/// True iff |<xi *_M seq_n, t>| is below tol at the last index and
/// non-increasing over the trailing window (5 indices).
bool weak_null_check(const std::vector<ADist>& seq, const Poly& xi, const MSet& m,
                     const TestFunction& t, double tol = 1e-4);

} // namespace distalg
