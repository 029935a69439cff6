#include <doctest.h>

#include <cmath>

#include "distalg/calculus.hpp"
#include "distalg/pairing.hpp"
#include "distalg/products.hpp"
#include "generators.hpp"

using namespace distalg;

namespace {

// regression constants, pinned by 40-digit quadrature/differentiation
// of exp(-1/(1-u^2)) before this suite was written
constexpr double kBumpMass = 0.4439938161680794378;   // integral over [-1,1]
constexpr double kBumpAtZero = 0.3678794411714423216; // e^{-1}
constexpr double kBumpD2AtZero = -0.7357588823428846432;
constexpr double kBumpD1AtHalf = -0.4686171344279587024;
constexpr double kBumpD2AtHalf = -1.3537828327918806957;
constexpr double kBumpD3AtQuarter = -1.2105775194433257650;
constexpr double kBumpX2Mass = 0.0702014767529754100; // integral of u^2 t(u)

double central_diff(const TestFunction& t, int j, double x, double h) {
    // central difference of the (j-1)-th derivative
    return (t.deriv(j - 1, x + h) - t.deriv(j - 1, x - h)) / (2 * h);
}

} // namespace

TEST_CASE("bump values and derivatives") {
    TestFunction t(Rational(0), Rational(1));
    CHECK(t.value(0.0) == doctest::Approx(kBumpAtZero).epsilon(1e-14));
    CHECK(t.value(1.0) == 0.0);
    CHECK(t.value(2.5) == 0.0);
    CHECK(t.deriv(1, 0.0) == doctest::Approx(0.0).epsilon(1e-14)); // even function
    CHECK(t.deriv(2, 0.0) == doctest::Approx(kBumpD2AtZero).epsilon(1e-12));
    CHECK(t.deriv(1, 0.5) == doctest::Approx(kBumpD1AtHalf).epsilon(1e-12));
    CHECK(t.deriv(2, 0.5) == doctest::Approx(kBumpD2AtHalf).epsilon(1e-12));
    CHECK(t.deriv(3, 0.25) == doctest::Approx(kBumpD3AtQuarter).epsilon(1e-12));
}

TEST_CASE("bump second derivative agrees with finite differences") {
    TestFunction t(Rational(0), Rational(1));
    double fd = central_diff(t, 2, 0.0, 1e-4);
    CHECK(std::abs(t.deriv(2, 0.0) - fd) / std::abs(fd) < 1e-6);

    // scaled and shifted bump
    TestFunction s(Rational(1, 2), Rational(3, 2));
    for (double x : {0.2, 0.5, 1.1, -0.6}) {
        double fd1 = central_diff(s, 1, x, 1e-5);
        CHECK(s.deriv(1, x) == doctest::Approx(fd1).epsilon(1e-7));
        double fd3 = central_diff(s, 3, x, 1e-5);
        CHECK(s.deriv(3, x) == doctest::Approx(fd3).epsilon(1e-6));
    }
}

TEST_CASE("pairing examples") {
    TestFunction t(Rational(0), Rational(1));

    Rational a(1, 4);
    CHECK(pair(delta_dist(a), t).value ==
          doctest::Approx(t.value(to_double(a))).epsilon(1e-14));
    CHECK(pair(delta_dist(a, 1), t).value ==
          doctest::Approx(-t.deriv(1, to_double(a))).epsilon(1e-14));

    PairingResult mass = pair(from_scalar(Scalar(1)), t);
    CHECK(mass.value == doctest::Approx(kBumpMass).epsilon(1e-10));
    CHECK(mass.error_estimate >= 0.0);

    CHECK(pair(from_smooth(Poly::x().pow(2)), t).value ==
          doctest::Approx(kBumpX2Mass).epsilon(1e-10));

    // scaled bump integrates to r * mass
    TestFunction wide(Rational(-3), Rational(5, 2));
    CHECK(pair(from_scalar(Scalar(1)), wide).value ==
          doctest::Approx(2.5 * kBumpMass).epsilon(1e-10));
}

TEST_CASE("shift examples") {
    Rational eps(1, 8);
    CHECK(shift(delta_dist(Rational(0)), eps) == delta_dist(-eps));
    CHECK(shift(heaviside(Rational(0)), eps) == heaviside(-eps));

    Poly x2 = Poly::x().pow(2);
    Poly expect(std::vector<Scalar>{Scalar(Rational(1, 64)), Scalar(Rational(1, 4)), Scalar(1)});
    CHECK(shift(from_smooth(x2), eps) == from_smooth(expect));

    // shifting forth and back is the identity
    testing::Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        ADist f = testing::random_adist(rng);
        CHECK(shift(shift(f, eps), -eps) == f);
    }
}

TEST_CASE("pairing is linear") {
    testing::Rng rng(22);
    TestFunction t(Rational(0), Rational(2));
    for (int i = 0; i < 60; ++i) {
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        double lhs = pair(f + g, t).value;
        double rhs = pair(f, t).value + pair(g, t).value;
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("derivative pairing is the adjoint of bump differentiation") {
    testing::Rng rng(23);
    TestFunction t(Rational(1, 3), Rational(2));
    for (int i = 0; i < 60; ++i) {
        ADist f = testing::random_adist(rng);
        double lhs = pair(derivative(f), t).value;
        double rhs = -pair_deriv_bump(f, t, 1).value;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("epsilon limit reproduces the one-sided products") {
    TestFunction t(Rational(0), Rational(1));
    ADist h = heaviside(Rational(0));
    ADist d = delta_dist(Rational(0));

    PairingResult dh = epsilon_limit_pair(d, h, t);
    CHECK(dh.value == doctest::Approx(t.value(0.0)).epsilon(1e-9));

    PairingResult hd = epsilon_limit_pair(h, d, t);
    CHECK(std::abs(hd.value) < 1e-9);

    ADist a = abs_shift(Rational(0));
    PairingResult aa = epsilon_limit_pair(a, a, t);
    double x2 = pair(from_smooth(Poly::x().pow(2)), t).value;
    CHECK(aa.value == doctest::Approx(x2).epsilon(1e-8));
}

TEST_CASE("epsilon limit agrees with star on random pairs, both orders") {
    testing::Rng rng(24);
    OracleOptions opts;
    for (int i = 0; i < 12; ++i) {
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        TestFunction t(testing::random_rational(rng, 1, 2), Rational(2));
        double exact = pair(star(f, g), t).value;
        double approx = epsilon_limit_pair(f, g, t, opts).value;
        CHECK(std::abs(approx - exact) <= 1e-6 * (1.0 + std::abs(exact)));

        double exact_rev = pair(star(g, f), t).value;
        double approx_rev = epsilon_limit_pair(g, f, t, opts).value;
        CHECK(std::abs(approx_rev - exact_rev) <= 1e-6 * (1.0 + std::abs(exact_rev)));
    }
}

TEST_CASE("epsilon sequence entries shrink below singular collisions") {
    // G's singularity sits 1/32 right of F's: naive eps = 1/16 collides
    ADist f = delta_dist(Rational(0));
    ADist g = heaviside(Rational(1, 32));
    TestFunction t(Rational(0), Rational(1));
    PairingResult r = epsilon_limit_pair(f, g, t);
    // delta_0 * H(x - 1/32) = 0 (the jump sits right of the delta)
    CHECK(std::abs(r.value - pair(star(f, g), t).value) < 1e-9);
    CHECK(std::abs(r.value) < 1e-9);
}

TEST_CASE("weak null check accepts vanishing sequences and rejects constants") {
    TestFunction t(Rational(0), Rational(1));
    MSet m = MSet::all();

    std::vector<ADist> deltas_in;
    std::vector<ADist> decay;
    std::vector<ADist> constant;
    for (int n = 1; n <= 2000; ++n) {
        deltas_in.push_back(delta_dist(Rational(1, n)) - delta_dist(Rational(0)));
        decay.push_back(scale(Scalar(Rational(1, n)), delta_dist(Rational(0), 1)));
        constant.push_back(delta_dist(Rational(0)));
    }
    CHECK(weak_null_check(deltas_in, Poly::x() * Poly::x(), m, t));
    CHECK(weak_null_check(deltas_in, Poly(Scalar(1)), m, t));
    CHECK(weak_null_check(decay, Poly(Scalar(1)), m, t));
    CHECK_FALSE(weak_null_check(constant, Poly(Scalar(1)), m, t));
}

TEST_CASE("oracle failure is reported, not swallowed") {
    // force an impossible tolerance
    ADist a = abs_shift(Rational(0));
    TestFunction t(Rational(0), Rational(1));
    OracleOptions strict;
    strict.tolerance = 1e-18;
    CHECK_THROWS_AS(epsilon_limit_pair(a, a, t, strict), oracle_error);
}
