#include <doctest.h>

#include <cmath>
#include <random>

#include "minkprod/geometry.hpp"

using namespace minkprod;

TEST_SUITE("geom") {

TEST_CASE("convex hull drops interior and collinear points") {
    const ConvexPolygon h =
        convex_hull({Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(0.2, 0.2)});
    REQUIRE(h.size() == 3);
    for (Complex v : {Complex(0, 0), Complex(1, 0), Complex(0, 1)}) {
        bool found = false;
        for (Complex w : h.vertices) found = found || std::abs(v - w) < 1e-12;
        CHECK(found);
    }

    CHECK(convex_hull({Complex(1, 1)}).size() == 1);

    const ConvexPolygon col = convex_hull({Complex(1, 0), Complex(2, 0), Complex(3, 0)});
    REQUIRE(col.size() == 2);
    CHECK(std::abs(col.vertices[0] - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(col.vertices[1] - Complex(3, 0)) < 1e-12);

    CHECK_THROWS_AS(convex_hull({}), InvalidInput);
}

TEST_CASE("convex hull is idempotent") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> pts;
        for (int i = 0; i < 40; ++i) pts.emplace_back(u(rng), u(rng));
        const ConvexPolygon h1 = convex_hull(pts);
        const ConvexPolygon h2 = convex_hull(h1.vertices);
        REQUIRE(h1.size() == h2.size());
        for (int i = 0; i < h1.size(); ++i)
            CHECK(std::abs(h1.vertices[size_t(i)] - h2.vertices[size_t(i)]) < 1e-9);
    }
}

TEST_CASE("hull orientation is counter-clockwise") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> pts;
        for (int i = 0; i < 12; ++i) pts.emplace_back(u(rng), u(rng));
        const ConvexPolygon h = convex_hull(pts);
        if (h.size() < 3) continue;
        double area2 = 0;
        for (int i = 0; i < h.size(); ++i)
            area2 += cross(h.vertices[size_t(i)], h.vertices[size_t((i + 1) % h.size())]);
        CHECK(area2 > 0);
    }
}

TEST_CASE("contains_point spec examples") {
    CHECK(contains_point(ConvexBody(Disk(Complex(1, 0), 0.5)), Complex(1.4, 0), 1e-9));
    CHECK_FALSE(contains_point(ConvexBody(ConvexPolygon({Complex(0, 0), Complex(1, 0), Complex(0, 1)})),
                               Complex(0.6, 0.6), 1e-9));
    CHECK(contains_point(ConvexBody(Segment(Complex(1, -1), Complex(1, 1))), Complex(1, 0), 1e-9));
}

TEST_CASE("contains_point agrees with rejection sampling") {
    // bodies vs a dense random sample against independent geometric tests
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-2, 2);

    const Disk d(Complex(0.3, -0.4), 0.9);
    const ConvexPolygon poly({Complex(-1, -1), Complex(1.5, -0.5), Complex(0.8, 1.2), Complex(-0.9, 0.8)});
    const Segment seg(Complex(-1, 0.5), Complex(1, -0.25));

    int agree = 0, total = 0;
    for (int i = 0; i < 1000000; ++i) {
        const Complex z(u(rng), u(rng));
        // disk: direct modulus
        const bool disk_ref = std::abs(z - d.center) <= d.radius;
        if (contains_point(ConvexBody(d), z, 0.0) == disk_ref) ++agree;
        ++total;
        if (i % 3 == 0) {
            // polygon: half-plane conjunction reference
            bool in = true;
            for (int k = 0; k < poly.size(); ++k)
                in = in && orient(poly.vertices[size_t(k)],
                                  poly.vertices[size_t((k + 1) % poly.size())], z) >= 0;
            if (contains_point(ConvexBody(poly), z, 0.0) == in) ++agree;
            ++total;
        }
        if (i % 5 == 0) {
            const bool seg_ref = dist_point_segment(z, seg) <= 1e-7;
            if (contains_point(ConvexBody(seg), z, 1e-7) == seg_ref) ++agree;
            ++total;
        }
    }
    CHECK(agree == total);
}

TEST_CASE("boundary piece evaluation") {
    CHECK(std::abs(eval_boundary_piece(ParaArc{1.0, 0.0, 1.0}, 1.0) - Complex(0, 2)) < 1e-12);
    CHECK(std::abs(eval_boundary_piece(ParaArc{1.0, -1.0, 1.0}, 0.5) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(eval_boundary_piece(LineSeg{Complex(0, 0), Complex(2, 0)}, 0.25) -
                   Complex(0.5, 0)) < 1e-12);
    CHECK_THROWS_AS(eval_boundary_piece(LineSeg{Complex(0, 0), Complex(1, 0)}, 1.5), InvalidInput);
}

TEST_CASE("parabolic arc satisfies the canonical parabola relation") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Complex omega(u(rng), u(rng));
        if (std::abs(omega) < 0.1) omega += 1.0;
        double lo = u(rng), hi = u(rng);
        if (lo > hi) std::swap(lo, hi);
        const ParaArc arc{omega, lo, hi};
        for (int k = 0; k <= 16; ++k) {
            const Complex z = eval_boundary_piece(arc, k / 16.0);
            const Complex w = z / omega;
            CHECK(std::abs(w.real() - (1.0 - w.imag() * w.imag() / 4.0)) < 1e-9);
        }
    }
}

TEST_CASE("segment/polygon conversions are lossless") {
    const Segment s(Complex(0, 1), Complex(2, 3));
    const ConvexPolygon p = segment_to_polygon(s);
    const auto back = polygon_to_segment(p);
    REQUIRE(back.has_value());
    const bool same = (std::abs(back->p - s.p) < 1e-12 && std::abs(back->q - s.q) < 1e-12) ||
                      (std::abs(back->p - s.q) < 1e-12 && std::abs(back->q - s.p) < 1e-12);
    CHECK(same);
    CHECK_FALSE(polygon_to_segment(ConvexPolygon({Complex(0, 0), Complex(1, 0), Complex(0, 1)})));
}

TEST_CASE("finiteness is enforced") {
    CHECK_THROWS_AS(Disk(Complex(0, 0), -1.0), InvalidInput);
    CHECK_THROWS_AS(Segment(Complex(std::nan(""), 0), Complex(0, 0)), InvalidInput);
}

TEST_CASE("polygon clipping intersects convex polygons") {
    const ConvexPolygon a({Complex(0, 0), Complex(2, 0), Complex(2, 2), Complex(0, 2)});
    const ConvexPolygon b({Complex(1, 1), Complex(3, 1), Complex(3, 3), Complex(1, 3)});
    const auto inter = polygon_intersection(a, b);
    REQUIRE_FALSE(inter.empty());
    const ConvexPolygon h = convex_hull(inter);
    REQUIRE(h.size() == 4);
    for (Complex v : h.vertices) {
        CHECK(contains_point(ConvexBody(a), v, 1e-9));
        CHECK(contains_point(ConvexBody(b), v, 1e-9));
    }
    // disjoint case
    const ConvexPolygon c({Complex(10, 10), Complex(11, 10), Complex(10, 11)});
    CHECK(polygon_intersection(a, c).empty());
}

}  // TEST_SUITE
