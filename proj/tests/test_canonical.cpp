#include <doctest.h>

#include <cmath>
#include <random>

#include "minkprod/canonical.hpp"

using namespace minkprod;

TEST_SUITE("canonical") {

TEST_CASE("canonical frame of K(i, 1+i)") {
    // by Prop-2.4 arithmetic: numerator 2i, denominator 2, omega = i;
    // (1+i)/i = 1-i gives the interval [-1, 0]
    const CanonicalSegment f = canonicalize_segment(Segment(Complex(0, 1), Complex(1, 1)));
    CHECK(std::abs(f.omega - Complex(0, 1)) < 1e-12);
    CHECK(f.a_lo == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(f.a_hi == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("already-canonical segment") {
    const CanonicalSegment f = canonicalize_segment(Segment(Complex(1, -1), Complex(1, 1)));
    CHECK(std::abs(f.omega - Complex(1, 0)) < 1e-12);
    CHECK(f.a_lo == doctest::Approx(-1.0));
    CHECK(f.a_hi == doctest::Approx(1.0));
}

TEST_CASE("degenerate frames raise") {
    CHECK_THROWS_AS(canonicalize_segment(Segment(Complex(1, 0), Complex(2, 0))),
                    DegenerateFrame);
    CHECK_THROWS_AS(canonicalize_segment(Segment(Complex(1, 1), Complex(1, 1))), InvalidInput);
}

TEST_CASE("reconstruction is the identity on endpoints") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const Segment s(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        try {
            const CanonicalSegment f = canonicalize_segment(s);
            const Complex lo = f.lo_endpoint();
            const Complex hi = f.hi_endpoint();
            const bool match = (std::abs(lo - s.p) < 1e-9 && std::abs(hi - s.q) < 1e-9) ||
                               (std::abs(lo - s.q) < 1e-9 && std::abs(hi - s.p) < 1e-9);
            CHECK(match);
        } catch (const Error&) {
            // degenerate draws are fine
        }
    }
}

TEST_CASE("omega is the closest point of the supporting line") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const Segment s(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        try {
            const CanonicalSegment f = canonicalize_segment(s);
            const double w = std::abs(f.omega);
            for (int k = -50; k <= 50; ++k) {
                const Complex line_pt = s.p + (k / 10.0) * (s.q - s.p);
                CHECK(std::abs(line_pt) >= w - 1e-9);
            }
        } catch (const Error&) {
        }
    }
}

TEST_CASE("rotate_support places lines onto Re(z) = 1") {
    SUBCASE("C=1, D=1+i, P=e^{i pi/8}") {
        const Complex C(1, 0), D(1, 1), P = std::polar(1.0, M_PI / 8);
        const RotateSupport rs = rotate_support(C, D, P);
        CHECK(std::abs((rs.xi1 * C).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi1 * P).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi2 * D).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi2 * P).real() - 1.0) < 1e-9);
    }
    SUBCASE("C=1-i, D=1+i, P=1") {
        const RotateSupport rs = rotate_support(Complex(1, -1), Complex(1, 1), Complex(1, 0));
        CHECK(std::abs((rs.xi1 * Complex(1, -1)).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi1 * Complex(1, 0)).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi2 * Complex(1, 1)).real() - 1.0) < 1e-9);
    }
    SUBCASE("Re(P) <= 1 sign conclusion") {
        const RotateSupport rs = rotate_support(Complex(1, -1), Complex(1, 1), Complex(0.5, 0));
        CHECK(rs.theta2 <= 1e-12);
        CHECK(rs.theta1 >= -1e-12);
    }
    SUBCASE("Re(P) >= 1 sign conclusion") {
        const RotateSupport rs = rotate_support(Complex(1, -1), Complex(1, 1), Complex(1.5, 0));
        CHECK(rs.theta1 <= 1e-12);
        CHECK(rs.theta2 >= -1e-12);
    }
}

TEST_CASE("rotate_support contract on random configurations") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ang(-1.2, 1.2);
    std::uniform_real_distribution<double> rad(0.2, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        double tc = ang(rng), tp = ang(rng), td = ang(rng);
        if (tc > tp) std::swap(tc, tp);
        if (tp > td) std::swap(tp, td);
        if (tc > tp) std::swap(tc, tp);
        if (td - tc < 1e-3 || tp - tc < 1e-4 || td - tp < 1e-4) continue;
        const Complex C(1, std::tan(tc)), D(1, std::tan(td));
        const Complex P = std::polar(rad(rng), tp);
        // the construction needs P vertically between C and D
        if (P.imag() <= C.imag() + 1e-3 || P.imag() >= D.imag() - 1e-3) continue;
        const RotateSupport rs = rotate_support(C, D, P);
        CHECK(std::abs((rs.xi1 * C).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi1 * P).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi2 * D).real() - 1.0) < 1e-9);
        CHECK(std::abs((rs.xi2 * P).real() - 1.0) < 1e-9);
        // tangent identities from the construction
        CHECK(std::abs((rs.xi1 * C).imag() - std::tan(tc - rs.theta1)) < 1e-8);
        CHECK(std::abs((rs.xi2 * D).imag() - std::tan(td - rs.theta2)) < 1e-8);
        if (P.real() <= 1.0) {
            CHECK(rs.theta2 <= 1e-10);
            CHECK(rs.theta1 >= -1e-10);
        } else {
            CHECK(rs.theta1 <= 1e-10);
            CHECK(rs.theta2 >= -1e-10);
        }
    }
}

TEST_CASE("rotate_support degenerate inputs") {
    CHECK_THROWS_AS(rotate_support(Complex(1, 0), Complex(1, 1), Complex(2, 0)), InvalidInput);
    CHECK_THROWS_AS(rotate_support(Complex(1, -1), Complex(1, 1), Complex(0, 0)), InvalidInput);
}

}  // TEST_SUITE
