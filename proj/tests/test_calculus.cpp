#include <doctest.h>

#include <cmath>

#include "distalg/bump.hpp"
#include "distalg/calculus.hpp"
#include "generators.hpp"

using namespace distalg;

namespace {

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

TEST_CASE("derivative examples") {
    Rational a(7, 3);
    CHECK(derivative(heaviside(a)) == delta_dist(a));

    // D^2 |x - s| = 2 delta_s
    Rational s(-1, 2);
    CHECK(derivative(abs_shift(s), 2) == scale(Scalar(2), delta_dist(s)));

    // D |x| = 2H(x) - 1
    ADist expect = scale(Scalar(2), heaviside(Rational(0))) - from_scalar(Scalar(1));
    CHECK(derivative(abs_shift(Rational(0))) == expect);

    // delta orders promote
    CHECK(derivative(delta_dist(Rational(1)), 3) == delta_dist(Rational(1), 3));
}

TEST_CASE("antiderivative examples") {
    Rational a(1, 4);
    CHECK(antiderivative(delta_dist(a)) == heaviside(a));
    CHECK(antiderivative(delta_dist(Rational(0), 1)) == delta_dist(Rational(0)));

    // AD(H(x)) = x restricted to the right half line, continuous at 0
    ADist adh = antiderivative(heaviside(Rational(0)));
    CHECK(adh.breakpoints() == std::vector<Rational>{Rational(0)});
    CHECK(adh.pieces()[0] == Poly());
    CHECK(adh.pieces()[1] == Poly::x());
    CHECK(adh.deltas().empty());
}

TEST_CASE("derivative inverts antiderivative on random inputs") {
    testing::Rng rng(1001);
    testing::ADistSpec spec;
    spec.max_degree = 4;
    spec.max_delta_order = 4;
    for (int i = 0; i < 500; ++i) {
        ADist f = testing::random_adist(rng, spec);
        CHECK(derivative(antiderivative(f)) == f);
    }
}

TEST_CASE("dual product delta expansion matches the classical x^n delta^(m) table") {
    // gate: the binomial expansion must reproduce the printed formula
    //   x^n d^(m) = 0                          for m < n
    //   x^n d^(m) = (-1)^n m!/(m-n)! d^(m-n)   for m >= n
    // for all n, m <= 6 before anything else relies on it
    for (int n = 0; n <= 6; ++n) {
        Poly xn = Poly::x().pow(n);
        for (int m = 0; m <= 6; ++m) {
            ADist lhs = dual_product(xn, delta_dist(Rational(0), m));
            if (m < n) {
                CHECK(lhs.is_zero());
            } else {
                Scalar c(factorial(m) / factorial(m - n));
                if (n % 2 == 1) c = -c;
                CHECK(lhs == scale(c, delta_dist(Rational(0), m - n)));
            }
        }
    }
}

TEST_CASE("dual product inversion identity") {
    // d^(j) = (-1)^n j!/(j+n)! x^n d^(j+n) for all j, n <= 4
    for (int j = 0; j <= 4; ++j) {
        for (int n = 0; n <= 4; ++n) {
            ADist rhs = dual_product(Poly::x().pow(n), delta_dist(Rational(0), j + n));
            Scalar c(factorial(j) / factorial(j + n));
            if (n % 2 == 1) c = -c;
            CHECK(scale(c, rhs) == delta_dist(Rational(0), j));
        }
    }
}

TEST_CASE("dual product examples") {
    Poly x = Poly::x();
    CHECK(dual_product(x, delta_dist(Rational(0))).is_zero());
    CHECK(dual_product(x, delta_dist(Rational(0), 1)) == scale(Scalar(-1), delta_dist(Rational(0))));
    CHECK(dual_product(x * x, delta_dist(Rational(0), 2)) == scale(Scalar(2), delta_dist(Rational(0))));

    // (x+1) delta' = delta' - delta
    ADist lhs = dual_product(x + Poly(Scalar(1)), delta_dist(Rational(0), 1));
    ADist rhs = delta_dist(Rational(0), 1) - delta_dist(Rational(0));
    CHECK(lhs == rhs);
}

TEST_CASE("dual product of a delta agrees with a finite-difference pairing oracle") {
    // independent route for <xi d^(n)_a, t> = (-1)^n (d/dx)^n [xi t](a):
    // differentiate the product xi*t numerically, no binomial rule involved
    TestFunction t(Rational(1, 5), Rational(2));
    Poly xi(std::vector<Scalar>{Scalar(1), Scalar(1)}); // x + 1
    auto product_at = [&](double x) { return xi.eval_double(x) * t.value(x); };

    double h = 1e-5;
    double a = 0.0;
    // first derivative of xi*t at a, central difference
    double d1 = (product_at(a + h) - product_at(a - h)) / (2 * h);
    double expect = -d1; // <xi delta', t> = -(xi t)'(0)

    ADist lhs = dual_product(xi, delta_dist(Rational(0), 1));
    // pair lhs = c1 delta' + c0 delta against t directly
    double got = 0.0;
    for (const auto& d : lhs.deltas())
        for (std::size_t j = 0; j < d.coeffs.size(); ++j)
            got += d.coeffs[j].to_double() * (j % 2 ? -1.0 : 1.0) *
                   t.deriv(static_cast<int>(j), to_double(d.point));
    CHECK(std::abs(got - expect) < 1e-6);
}

TEST_CASE("dual product satisfies the Leibniz rule") {
    testing::Rng rng(1313);
    for (int i = 0; i < 300; ++i) {
        Poly xi = testing::random_poly(rng, 3);
        ADist f = testing::random_adist(rng);
        CHECK(derivative(dual_product(xi, f)) ==
              dual_product(xi.diff(), f) + dual_product(xi, derivative(f)));
    }
}

TEST_CASE("dual product and derivative are linear; identity acts trivially") {
    testing::Rng rng(1414);
    for (int i = 0; i < 200; ++i) {
        Poly xi = testing::random_poly(rng, 3);
        Poly eta = testing::random_poly(rng, 3);
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        Scalar c = testing::random_scalar(rng);
        CHECK(dual_product(xi + eta, f) == dual_product(xi, f) + dual_product(eta, f));
        CHECK(dual_product(xi, f + g) == dual_product(xi, f) + dual_product(xi, g));
        CHECK(dual_product(xi, scale(c, f)) == scale(c, dual_product(xi, f)));
        CHECK(derivative(f + g) == derivative(f) + derivative(g));
        CHECK(derivative(scale(c, f)) == scale(c, derivative(f)));
        CHECK(dual_product(Poly(Scalar(1)), f) == f);
    }
}

TEST_CASE("restriction examples") {
    CHECK(restrict_to(delta_dist(Rational(0)), Rational(0), std::nullopt).is_zero());

    ADist clipped = restrict_to(heaviside(Rational(0)), Rational(-1), Rational(1));
    CHECK(clipped.breakpoints() == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(clipped.pieces()[0] == Poly());
    CHECK(clipped.pieces()[1] == Poly(Scalar(1)));
    CHECK(clipped.pieces()[2] == Poly());

    ADist f = from_smooth(Poly::x() * Poly::x()) + delta_dist(Rational(2));
    ADist r = restrict_to(f, Rational(1), Rational(3));
    CHECK(r.breakpoints() == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK(r.delta_at(Rational(2)) != nullptr);
    CHECK(r.pieces()[0].is_zero());
    CHECK(r.pieces()[1] == Poly::x() * Poly::x());

    // boundary deltas vanish under open restriction
    CHECK(restrict_to(delta_dist(Rational(1)), Rational(-1), Rational(1)).is_zero());
}
