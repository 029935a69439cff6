#include <doctest.h>

#include "distalg/calculus.hpp"
#include "distalg/products.hpp"
#include "generators.hpp"

using namespace distalg;

TEST_CASE("hormander product examples") {
    CHECK(hormander(heaviside(Rational(0)), delta_dist(Rational(1))) == delta_dist(Rational(1)));
    CHECK(hormander(delta_dist(Rational(0)), heaviside(Rational(1))).is_zero());
    CHECK(hormander(from_smooth(Poly::x().pow(2)), delta_dist(Rational(0), 2)) ==
          scale(Scalar(2), delta_dist(Rational(0))));
}

TEST_CASE("hormander product rejects intersecting singular supports") {
    try {
        hormander(heaviside(Rational(1, 2)), delta_dist(Rational(1, 2)));
        FAIL("expected precondition_error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("1/2") != std::string::npos);
    }
}

TEST_CASE("star product examples") {
    ADist h = heaviside(Rational(0));
    ADist d = delta_dist(Rational(0));
    CHECK(star(d, h) == d);
    CHECK(star(h, d).is_zero());

    for (Rational s : {Rational(0), Rational(1, 2), Rational(-2, 3)}) {
        Poly xs = Poly::x() - Poly(Scalar(s));
        CHECK(star(abs_shift(s), abs_shift(s)) == from_smooth(xs * xs));
    }

    // x H(x) has zero left piece at 0, so its product with delta' dies
    ADist xh = dual_product(Poly::x(), heaviside(Rational(0)));
    CHECK(star(xh, delta_dist(Rational(0), 1)).is_zero());
}

TEST_CASE("non-commutativity witness") {
    ADist h = heaviside(Rational(0));
    ADist d = delta_dist(Rational(0));
    CHECK(star(d, h) == d);
    CHECK(star(h, d).is_zero());
    CHECK(star(d, h) != star(h, d));
}

TEST_CASE("star_m dispatches on membership") {
    Rational t(1, 3);
    MSet with_t = MSet::points({t});
    MSet without_t = with_t.complement();

    ADist dt = delta_dist(t);
    ADist ht = heaviside(t);
    CHECK(star_m(dt, ht, with_t) == dt);
    CHECK(star_m(dt, ht, without_t).is_zero());

    // H(x-t) *_M delta_t^(2) = (1 - chi_M(t)) delta_t^(2)
    ADist dt2 = delta_dist(t, 2);
    CHECK(star_m(ht, dt2, with_t).is_zero());
    CHECK(star_m(ht, dt2, without_t) == dt2);

    // disjoint points are M-independent
    for (const MSet& m : {MSet::all(), MSet::empty_set(), with_t}) {
        CHECK(star_m(heaviside(Rational(1)), delta_dist(Rational(0)), m).is_zero());
        CHECK(star_m(heaviside(Rational(0)), delta_dist(Rational(1)), m) ==
              delta_dist(Rational(1)));
    }
}

TEST_CASE("star_m at R and empty reduces to the two star orders") {
    testing::Rng rng(4040);
    for (int i = 0; i < 200; ++i) {
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        CHECK(star_m(f, g, MSet::all()) == star(f, g));
        CHECK(star_m(f, g, MSet::empty_set()) == star(g, f));
    }
}

TEST_CASE("delta combinations annihilate") {
    testing::Rng rng(5050);
    for (int i = 0; i < 50; ++i) {
        MSet m = testing::random_mset(rng);
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= 3; ++k) {
                CHECK(star_m(delta_dist(Rational(0), n), delta_dist(Rational(0), k), m).is_zero());
                CHECK(star_m(delta_dist(Rational(-1), n), delta_dist(Rational(1, 2), k), m)
                          .is_zero());
            }
    }
}

TEST_CASE("m transform examples") {
    Scalar half_sqrt2(Rational(0), Rational(1, 2));
    CHECK(m_transform(heaviside(Rational(0)), MSet::all()) ==
          scale(half_sqrt2, heaviside(Rational(0))));

    ADist d = delta_dist(Rational(0));
    CHECK(m_transform(d, MSet::points({Rational(0)})) == scale(Scalar::sqrt2(), d));
    CHECK(m_transform(d, MSet::points({Rational(1)})).is_zero());
    CHECK(m_transform(ADist(), MSet::all()).is_zero());
}

TEST_CASE("compact form identity") {
    // F *_M G = F_M * G_M + G_{R\M} * F_{R\M}
    testing::Rng rng(6060);
    for (int i = 0; i < 500; ++i) {
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        MSet m = testing::random_mset(rng);
        MSet mc = m.complement();
        ADist lhs = star_m(f, g, m);
        ADist rhs = star(m_transform(f, m), m_transform(g, m)) +
                    star(m_transform(g, mc), m_transform(f, mc));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("algebra laws on random triples") {
    testing::Rng rng(7070);
    for (int i = 0; i < 300; ++i) {
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        ADist j = testing::random_adist(rng);
        MSet m = testing::random_mset(rng);

        CHECK(star_m(star_m(f, g, m), j, m) == star_m(f, star_m(g, j, m), m));
        CHECK(star_m(f + g, j, m) == star_m(f, j, m) + star_m(g, j, m));
        CHECK(star_m(j, f + g, m) == star_m(j, f, m) + star_m(j, g, m));
        CHECK(derivative(star_m(f, g, m)) ==
              star_m(derivative(f), g, m) + star_m(f, derivative(g), m));

        ADist one = from_scalar(Scalar(1));
        CHECK(star_m(one, f, m) == f);
        CHECK(star_m(f, one, m) == f);
    }
}

TEST_CASE("smooth factors act by the dual product on both sides") {
    testing::Rng rng(8080);
    for (int i = 0; i < 200; ++i) {
        Poly xi = testing::random_poly(rng, 3);
        ADist f = testing::random_adist(rng);
        MSet m = testing::random_mset(rng);
        ADist xid = from_smooth(xi);
        ADist expect = dual_product(xi, f);
        CHECK(star_m(xid, f, m) == expect);
        CHECK(star_m(f, xid, m) == expect);
    }
}

TEST_CASE("continuous functions multiply pointwise, independent of M") {
    testing::Rng rng(9090);
    testing::ADistSpec spec;
    spec.allow_deltas = false;
    for (int i = 0; i < 200; ++i) {
        // antiderivatives of delta-free distributions are continuous
        ADist f = antiderivative(testing::random_adist(rng, spec));
        ADist g = antiderivative(testing::random_adist(rng, spec));
        MSet m = testing::random_mset(rng);
        ADist prod = star_m(f, g, m);
        CHECK(prod == star_m(f, g, MSet::all()));
        CHECK(prod.deltas().empty());
        // pointwise product of the pieces at sample points off the grid
        for (const Rational& probe :
             {Rational(-17, 16), Rational(1, 16), Rational(3, 4), Rational(2)}) {
            Scalar expect = f.piece_left_of(probe).eval(Scalar(probe)) *
                            g.piece_left_of(probe).eval(Scalar(probe));
            CHECK(prod.piece_left_of(probe).eval(Scalar(probe)) == expect);
        }
    }
}

TEST_CASE("heaviside algebra: H(x-s) *_M H(x-t) = H(x-max(s,t))") {
    testing::Rng rng(1100);
    const auto& pool = testing::breakpoint_pool();
    for (const auto& s : pool)
        for (const auto& t : pool)
            for (int i = 0; i < 4; ++i) {
                MSet m = testing::random_mset(rng);
                CHECK(star_m(heaviside(s), heaviside(t), m) == heaviside(std::max(s, t)));
            }
}

TEST_CASE("support of a product shrinks to the intersection") {
    testing::Rng rng(1200);
    for (int i = 0; i < 300; ++i) {
        ADist f = testing::random_adist(rng);
        ADist g = testing::random_adist(rng);
        MSet m = testing::random_mset(rng);
        SupportSet cap = support(f).intersect(support(g));
        CHECK(support(star_m(f, g, m)).subset_of(cap));
    }
}

TEST_CASE("c_t dichotomy: the one-sided products split delta^(n)") {
    testing::Rng rng(1300);
    for (const auto& t : testing::breakpoint_pool()) {
        for (int n = 0; n <= 3; ++n) {
            for (int i = 0; i < 6; ++i) {
                MSet m = testing::random_mset(rng);
                ADist h = heaviside(t);
                ADist d = delta_dist(t, n);
                ADist hd = star_m(h, d, m); // (1 - chi_M(t)) delta
                ADist dh = star_m(d, h, m); // chi_M(t) delta
                CHECK(hd + dh == d);
                if (m.member(t)) {
                    CHECK(dh == d);
                    CHECK(hd.is_zero());
                } else {
                    CHECK(dh.is_zero());
                    CHECK(hd == d);
                }
            }
        }
    }
}

TEST_CASE("squared absolute value differentiates to the classical identity") {
    for (Rational s : {Rational(0), Rational(1, 2)}) {
        ADist a = abs_shift(s);
        Poly xs = Poly::x() - Poly(Scalar(s));
        ADist sq = star(a, a);
        CHECK(sq == from_smooth(xs * xs));

        // second derivative of both sides
        CHECK(derivative(sq, 2) == from_scalar(Scalar(2)));

        // Leibniz expansion: delta_s * |x-s| + D|x-s| * D|x-s| + |x-s| * delta_s = 1
        ADist ds = delta_dist(s);
        ADist da = derivative(a);
        CHECK(star(ds, a).is_zero());
        CHECK(star(a, ds).is_zero());
        CHECK(star(ds, a) + star(da, da) + star(a, ds) == from_scalar(Scalar(1)));

        // and (2H(x-s) - 1)^2 = 1
        ADist w = scale(Scalar(2), heaviside(s)) - from_scalar(Scalar(1));
        CHECK(star(w, w) == from_scalar(Scalar(1)));
    }
}
