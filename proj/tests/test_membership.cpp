#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "minkprod/membership.hpp"

using namespace minkprod;

namespace {

std::mt19937& rng() {
    static std::mt19937 gen(777);
    return gen;
}

Complex rand_c(double lo = -3, double hi = 3) {
    std::uniform_real_distribution<double> u(lo, hi);
    return Complex(u(rng()), u(rng()));
}

/// Circle through three points via perpendicular bisectors.
std::pair<Complex, double> circle_through(Complex a, Complex b, Complex c) {
    const double d = 2.0 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                            c.real() * (a.imag() - b.imag()));
    const double ux = (std::norm(a) * (b.imag() - c.imag()) + std::norm(b) * (c.imag() - a.imag()) +
                       std::norm(c) * (a.imag() - b.imag())) /
                      d;
    const double uy = (std::norm(a) * (c.real() - b.real()) + std::norm(b) * (a.real() - c.real()) +
                       std::norm(c) * (b.real() - a.real())) /
                      d;
    const Complex center(ux, uy);
    return {center, std::abs(a - center)};
}

ConvexPolygon example31_triangle() {
    return ConvexPolygon({std::polar(1.0, M_PI / 3), std::polar(1.0, -M_PI / 3),
                          std::polar(0.95, M_PI / 4)});
}

}  // namespace

TEST_SUITE("membership") {

TEST_CASE("member_exact spec probes") {
    const ConvexBody d{Segment(Complex(1, -1), Complex(1, 1))};
    CHECK(member_exact(d, d, Complex(2, 0), 1e-9));

    const ConvexBody p1{ConvexPolygon({Complex(1, 0), Complex(2, 0), Complex(2, 1)})};
    const ConvexBody p2{ConvexPolygon({Complex(1, 0), Complex(1, 1)})};
    CHECK(member_exact(p1, p2, Complex(1, 0), 1e-9));

    const ConvexBody tri{example31_triangle()};
    CHECK_FALSE(member_exact(tri, tri, Complex(0.5, 0.45125), 1e-7));
    CHECK(member_exact(tri, tri, Complex(1, 0), 1e-9));
    CHECK(member_exact(tri, tri, Complex(0, 0.9025), 1e-9));
}

TEST_CASE("inverted edges match a three-point circle fit") {
    for (int trial = 0; trial < 60; ++trial) {
        Complex b1 = rand_c(), b2 = rand_c();
        const Segment edge(b1, b2);
        if (edge.is_point(1e-6) || collinear_with_origin(edge, 1e-6)) continue;
        Complex z = rand_c();
        if (std::abs(z) < 0.2) z += Complex(1, 0);

        const ArcRegion region = invert_body(ConvexBody(edge), z);
        REQUIRE(region.boundary.size() == 1);
        const auto* arc = std::get_if<CircArc>(&region.boundary.front());
        REQUIRE(arc != nullptr);

        const auto [fit_center, fit_radius] =
            circle_through(z / b1, z / (0.5 * (b1 + b2)), z / b2);
        CHECK(std::abs(arc->center - fit_center) < 1e-7 * std::max(1.0, fit_radius));
        CHECK(std::abs(arc->radius - fit_radius) < 1e-7 * std::max(1.0, fit_radius));

        // endpoint interpolation to 1e-9
        CHECK(std::abs(eval_boundary_piece(region.boundary.front(), 0.0) - z / b1) < 1e-9);
        CHECK(std::abs(eval_boundary_piece(region.boundary.front(), 1.0) - z / b2) < 1e-9);

        // the arc is exactly the image of the edge: mapping samples back
        // through b = z / u lands on the edge (correct circle AND sweep)
        for (int k = 0; k <= 8; ++k) {
            const Complex pt = eval_boundary_piece(region.boundary.front(), k / 8.0);
            CHECK(dist_point_segment(z / pt, edge) < 1e-9 * std::max(1.0, std::abs(b1)));
        }
    }
}

TEST_CASE("edges collinear with 0 invert to segments") {
    const ArcRegion region =
        invert_body(ConvexBody(Segment(Complex(1, 0), Complex(2, 0))), Complex(0, 1));
    REQUIRE(region.boundary.size() == 1);
    CHECK(std::get_if<LineSeg>(&region.boundary.front()) != nullptr);
    CHECK(std::abs(eval_boundary_piece(region.boundary.front(), 0.0) - Complex(0, 1)) < 1e-12);
    CHECK(std::abs(eval_boundary_piece(region.boundary.front(), 1.0) - Complex(0, 0.5)) < 1e-12);
}

TEST_CASE("member_exact is symmetric and scale-equivariant") {
    const std::vector<ConvexBody> bodies = {
        ConvexBody(Segment(Complex(1, -1), Complex(1, 1))),
        ConvexBody(ConvexPolygon({Complex(1, 0), Complex(2, 0.5), Complex(1.5, 1.5)})),
        ConvexBody(Disk(Complex(2, 1), 0.7)),
        ConvexBody(ConvexPolygon({Complex(-1, -1), Complex(1, -1), Complex(1, 1), Complex(-1, 1)})),
    };
    for (int trial = 0; trial < 200; ++trial) {
        const ConvexBody& k1 = bodies[static_cast<size_t>(trial) % bodies.size()];
        const ConvexBody& k2 = bodies[static_cast<size_t>(trial / 2) % bodies.size()];
        const Complex z = rand_c(-5, 5);
        const bool m = member_exact(k1, k2, z, 1e-9);
        CHECK(member_exact(k2, k1, z, 1e-9) == m);
        Complex c = rand_c(-2, 2);
        if (std::abs(c) < 0.2) c += Complex(1.5, 0);
        CHECK(member_exact(scale_body(k1, c), k2, c * z, 1e-9 * std::abs(c)) == m);
    }
}

TEST_CASE("convex products agree with hull membership") {
    // Prop-4.2(2) shape: a positive-real segment times anything is convex
    const ConvexBody seg{Segment(Complex(1, 0), Complex(2, 0))};
    const ConvexBody poly{ConvexPolygon({Complex(0, 1), Complex(1, 1), Complex(0.5, 2)})};
    std::vector<Complex> cloud;
    for (int i = 0; i <= 24; ++i)
        for (int j = 0; j < 48; ++j)
            cloud.push_back(boundary_point(seg, i / 24.0) * boundary_point(poly, j / 48.0));
    const ConvexPolygon hull = convex_hull(cloud);
    for (int i = 0; i < 400; ++i) {
        const Complex z = rand_c(-1, 4);
        const bool in_hull = contains_point(ConvexBody(hull), z, 1e-6);
        const bool in_hull_strict = contains_point(ConvexBody(hull), z, -1e-3);
        if (in_hull != in_hull_strict) continue;  // hull-sampling boundary band
        CHECK(member_exact(seg, poly, z, 1e-7) == in_hull);
    }
}

TEST_CASE("raster oracle on a point pair occupies a single spot") {
    const ConvexBody one{Segment(Complex(1, 0), Complex(1, 0))};
    const RasterGrid g = raster_product(one, one, 64, 64);
    CHECK(g.occupied(Complex(1, 0)));
    int occupied = 0;
    for (std::uint8_t c : g.occ) occupied += c;
    CHECK(occupied <= 9);
}

TEST_CASE("raster oracle matches the square-region membership") {
    const ConvexBody d{Segment(Complex(1, -1), Complex(1, 1))};
    const RasterGrid g = raster_product(d, d, 256, 256);
    std::uniform_real_distribution<double> ux(g.x_min, g.x_max);
    std::uniform_real_distribution<double> uy(g.y_min, g.y_max);
    int agree = 0, total = 0;
    for (int i = 0; i < 20000; ++i) {
        const Complex z(ux(rng()), uy(rng()));
        if (g.near_boundary(z, 2)) continue;
        ++total;
        if (g.occupied(z) == member_square_canonical(-1, 1, z, 1e-9)) ++agree;
    }
    REQUIRE(total > 5000);
    CHECK(static_cast<double>(agree) / total >= 0.999);
}

TEST_CASE("raster determinism and seeding") {
    const ConvexBody poly{ConvexPolygon({Complex(1, 0), Complex(2, 0.5), Complex(1.5, 1.5)})};
    const ConvexBody disk{Disk(Complex(1, 1), 0.4)};
    const RasterGrid a = raster_product(poly, disk, 128, 64, 0);
    const RasterGrid b = raster_product(poly, disk, 128, 64, 0);
    CHECK(a.occ == b.occ);
    const RasterGrid c = raster_product(poly, disk, 128, 64, 42);
    CHECK(a.occ != c.occ);
}

TEST_CASE("pgm serialization") {
    const ConvexBody d{Segment(Complex(1, -1), Complex(1, 1))};
    const RasterGrid g = raster_product(d, d, 64, 64);
    const std::string path = "test_raster.pgm";
    write_pgm(g, path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string magic;
    int w = 0, h = 0, maxval = -1;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P5");
    CHECK(w == 64);
    CHECK(h == 64);
    CHECK(maxval == 1);
    in.get();
    std::vector<char> data(static_cast<size_t>(w) * h);
    in.read(data.data(), static_cast<std::streamsize>(data.size()));
    CHECK(in.gcount() == static_cast<std::streamsize>(data.size()));
    size_t occupied = 0;
    for (char ch : data) occupied += static_cast<unsigned char>(ch);
    size_t expect = 0;
    for (std::uint8_t v : g.occ) expect += v;
    CHECK(occupied == expect);
    std::remove(path.c_str());
}

TEST_CASE("check_star_center verdicts") {
    const ConvexBody s1{Segment(Complex(1, -2), Complex(1, 2))};
    const ConvexBody s2{Segment(Complex(1, -1), Complex(1, 1))};
    CHECK(check_star_center(s1, s2, Complex(2, 0), 720, 64, 1e-7).ok);
    CHECK_THROWS_AS(check_star_center(s1, s2, Complex(2.5, 0), 720, 64, 1e-7), NotAMember);

    const ConvexBody tri{example31_triangle()};
    const StarCheckResult chk = check_star_center(tri, tri, Complex(1, 0), 900, 64, 1e-7);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.witness.has_value());
    CHECK_FALSE(member_exact(tri, tri, chk.witness->z, 1e-7));
}

TEST_CASE("zero-in-both-factors falls back to the raster oracle") {
    const ConvexBody a{ConvexPolygon({Complex(0, 0), Complex(1, 0), Complex(0, 1)})};
    const ConvexBody b{ConvexPolygon({Complex(0, 0), Complex(-1, 0), Complex(0, -1)})};
    CHECK(member_exact(a, b, Complex(0, 0), 1e-9));
    // (1,0)*(-1,0) = -1 is in the product; 1.5 is beyond the hull bound
    CHECK(member_exact(a, b, Complex(-0.9, 0.0), 2e-2));
    CHECK_FALSE(member_exact(a, b, Complex(1.5, 0), 1e-2));
}

TEST_CASE("zero strictly inside one factor uses the exact inversion path") {
    const ConvexBody box{
        ConvexPolygon({Complex(-1, -1), Complex(1, -1), Complex(1, 1), Complex(-1, 1)})};
    const ConvexBody tri{ConvexPolygon({Complex(2, 0), Complex(3, 0), Complex(2, 1)})};
    // product = {ab}: includes 0 (a=0), includes 3 (1*3), excludes far points
    CHECK(member_exact(box, tri, Complex(0, 0), 1e-9));
    CHECK(member_exact(box, tri, Complex(3, 0), 1e-7));
    CHECK(member_exact(box, tri, Complex(-3, 0), 1e-7));
    CHECK_FALSE(member_exact(box, tri, Complex(5.2, 0), 1e-7));
    // scaled-sample spot check against the direct definition
    for (int i = 0; i < 200; ++i) {
        const Complex a = boundary_point(box, i / 200.0);
        const Complex b = boundary_point(tri, (i * 7 % 200) / 200.0);
        CHECK(member_exact(box, tri, a * b, 1e-6));
    }
}

TEST_CASE("enclosed empty components") {
    RasterGrid g;
    g.n = 16;
    g.x_min = g.y_min = 0;
    g.x_max = g.y_max = 1;
    g.occ.assign(256, 0);
    // draw a square ring
    for (int i = 4; i <= 12; ++i) {
        g.at(i, 4) = g.at(i, 12) = 1;
        g.at(4, i) = g.at(12, i) = 1;
    }
    Complex where;
    CHECK(enclosed_empty_components(g, &where) == 1);
    CHECK(where.real() > 0.25);
    CHECK(where.real() < 0.81);
    // fill the ring: no enclosed component
    for (int j = 4; j <= 12; ++j)
        for (int i = 4; i <= 12; ++i) g.at(i, j) = 1;
    CHECK(enclosed_empty_components(g) == 0);
}

}  // TEST_SUITE
