#include "minkprod/paper_examples.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "minkprod/disk_product.hpp"
#include "minkprod/polygon_product.hpp"
#include "minkprod/seg_convex.hpp"
#include "minkprod/seg_seg.hpp"

namespace minkprod {

namespace {

std::string fmt(Complex z) {
    std::ostringstream ss;
    ss.precision(12);
    ss << "(" << z.real() << ", " << z.imag() << ")";
    return ss.str();
}

ConvexPolygon example31_triangle() {
    return ConvexPolygon({std::polar(1.0, M_PI / 3), std::polar(1.0, -M_PI / 3),
                          std::polar(0.95, M_PI / 4)});
}

ConvexPolygon example32_quad() {
    return ConvexPolygon({std::polar(1.0, M_PI / 3), std::polar(1.0, -M_PI / 3),
                          std::polar(0.95, M_PI / 4), std::polar(0.95, -M_PI / 4)});
}

ExampleResult run_thm24a() {
    ExampleResult res{"thm2.4a", false, ""};
    const Segment s1(Complex(1, -1), Complex(1, 0));   // canonical [-1, 0]
    const Segment s2(Complex(1, 1), Complex(1, 2));    // canonical [1, 2]
    const SegProductRegion region = product_seg_seg(s1, s2);
    std::ostringstream detail;
    detail << "case tag " << static_cast<int>(region.case_tag) << " (expected QuadA), chain "
           << (chain_closes(region.boundary) ? "closes" : "open");
    bool ok = region.case_tag == SegSegCase::QuadA && chain_closes(region.boundary);
    for (Complex corner : {s1.p * s2.p, s1.p * s2.q, s1.q * s2.p, s1.q * s2.q}) {
        bool hit = false;
        for (const BoundaryPiece& piece : region.boundary)
            if (std::abs(piece_start(piece) - corner) < 1e-9) hit = true;
        ok = ok && hit;
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_thm24b() {
    ExampleResult res{"thm2.4b", false, ""};
    const double a1 = -1, a2 = 1, b1 = 0, b2 = 2;
    const Segment s1(Complex(1, a1), Complex(1, a2));
    const Segment s2(Complex(1, b1), Complex(1, b2));
    const SegProductRegion region = product_seg_seg(s1, s2);
    const ParaArc* arc = nullptr;
    for (const BoundaryPiece& piece : region.boundary)
        if (const auto* p = std::get_if<ParaArc>(&piece)) arc = p;
    std::ostringstream detail;
    bool ok = region.case_tag == SegSegCase::CaseB && arc != nullptr &&
              chain_closes(region.boundary);
    if (arc) {
        const Complex lo = eval_boundary_piece(*arc, 0.0);
        const Complex hi = eval_boundary_piece(*arc, 1.0);
        const Complex want_lo = Complex(1, b1) * Complex(1, b1);
        const Complex want_hi = Complex(1, a2) * Complex(1, a2);
        detail << "arc endpoints " << fmt(lo) << " -> " << fmt(hi) << ", expected "
               << fmt(want_lo) << " -> " << fmt(want_hi);
        ok = ok && std::abs(lo - want_lo) <= 1e-9 && std::abs(hi - want_hi) <= 1e-9;
    } else {
        detail << "no parabolic arc found";
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_thm24c() {
    ExampleResult res{"thm2.4c", false, ""};
    const Segment s1(Complex(1, -2), Complex(1, 2));
    const Segment s2(Complex(1, -1), Complex(1, 1));
    const SegProductRegion region = product_seg_seg(s1, s2);
    const Complex expect = Complex(1, -1) * Complex(1, 1);  // beta1 beta2 = 2
    std::ostringstream detail;
    bool ok = region.case_tag == SegSegCase::CaseC &&
              region.star_centers.kind == StarCenterSet::Kind::Point &&
              std::abs(region.star_centers.point - expect) <= 1e-9;
    detail << "star center " << fmt(region.star_centers.point) << ", expected " << fmt(expect);
    if (ok) {
        const StarCheckResult chk =
            check_star_center(ConvexBody(s1), ConvexBody(s2), expect, 720, 64, 1e-7);
        detail << ", verification " << (chk.ok ? "ok" : "failed");
        ok = chk.ok;
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_thm24b_centers() {
    ExampleResult res{"thm2.4b-centers", false, ""};
    const Segment s1(Complex(1, -1), Complex(1, 1));
    const Segment s2(Complex(1, 0), Complex(1, 2));
    const SegProductRegion region = product_seg_seg(s1, s2);
    std::ostringstream detail;
    bool ok = region.case_tag == SegSegCase::CaseB &&
              region.star_centers.kind == StarCenterSet::Kind::Convex;
    detail << "star-center set:";
    for (Complex c : region.star_centers.representatives()) {
        const StarCheckResult chk =
            check_star_center(ConvexBody(s1), ConvexBody(s2), c, 720, 64, 1e-7);
        detail << " " << fmt(c) << (chk.ok ? " ok" : " FAILED");
        ok = ok && chk.ok;
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_ex31() {
    ExampleResult res{"ex3.1", false, ""};
    const ConvexPolygon tri = example31_triangle();
    std::ostringstream detail;

    const StarReport report = check_star_polygon_product(tri, tri);
    bool ok = report.verdict == StarReport::Verdict::NotStarShaped && report.witness;
    detail << "verdict "
           << (report.verdict == StarReport::Verdict::NotStarShaped ? "NotStarShaped"
                                                                    : "other");
    if (report.witness)
        detail << ", witness z=" << fmt(report.witness->z) << " t=" << report.witness->t;

    const Complex alpha2_sq = std::polar(0.95, M_PI / 4) * std::polar(0.95, M_PI / 4);
    for (double t : {0.1, 0.2, 0.3}) {
        const Complex z = (1 - t) + t * alpha2_sq;
        const bool member = member_exact(ConvexBody(tri), ConvexBody(tri), z, 1e-7);
        detail << ", member(t=" << t << ")=" << member;
        ok = ok && !member;
    }

    const std::vector<HalfPlane> cons = star_center_constraints(tri, tri);
    const std::optional<Complex> z_star = min_norm_point(cons);
    if (z_star) {
        detail << ", constraint point " << fmt(*z_star);
        ok = ok && std::abs(*z_star - Complex(1.0, 0.0)) <= 1e-6;
    } else {
        detail << ", constraints infeasible";
        ok = false;
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_ex32() {
    ExampleResult res{"ex3.2", false, ""};
    const ConvexPolygon quad = example32_quad();
    std::ostringstream detail;
    const StarReport report = check_star_polygon_product(quad, quad);
    bool ok = report.verdict == StarReport::Verdict::NotStarShaped && report.witness;
    detail << "verdict "
           << (report.verdict == StarReport::Verdict::NotStarShaped ? "NotStarShaped"
                                                                    : "other");

    // conjugate symmetry of membership for the conjugate-symmetric input
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(-1.1, 1.1);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const Complex z(ux(rng), ux(rng));
        const bool m1 = member_exact(ConvexBody(quad), ConvexBody(quad), z, 1e-7);
        const bool m2 = member_exact(ConvexBody(quad), ConvexBody(quad), std::conj(z), 1e-7);
        if (m1 != m2) {
            detail << ", symmetry broke at " << fmt(z);
            ok = false;
            break;
        }
        ++checked;
    }
    detail << ", conjugate-symmetric on " << checked << " samples";
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_cor34() {
    ExampleResult res{"cor3.4", false, ""};
    std::mt19937 rng(20250810);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    std::uniform_real_distribution<double> ui(0.1, 2.0);
    std::ostringstream detail;
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const double r = ur(rng);
        const Complex a(ur(rng), (trial % 2 ? -1 : 1) * ui(rng));
        try {
            const Complex center = star_center_symmetric_triangle(r, a, 1e-7);
            const ConvexBody tri{ConvexPolygon({Complex(r, 0), a, std::conj(a)})};
            const StarCheckResult chk = check_star_center(tri, tri, center, 720, 64, 1e-7);
            if (!chk.ok) {
                ok = false;
                detail << "trial " << trial << " (r=" << r << ", a=" << fmt(a)
                       << ") verification failed";
            }
        } catch (const Error& e) {
            ok = false;
            detail << "trial " << trial << " threw: " << e.what();
        }
    }
    if (ok) detail << "20 random symmetric triangles: |a|^2 verified in every trial";
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_thmb() {
    ExampleResult res{"thmb", false, ""};
    std::ostringstream detail;
    bool ok = true;
    const std::pair<Complex, double> cases[] = {
        {Complex(1, 2), 0.5}, {Complex(2, 0), 1.0}, {Complex(1, 0.1), 0.25}};
    for (const auto& [b, r] : cases) {
        const DiskProductCert cert = star_center_segment_disk(b, r, 1e-7);
        const StarCheckResult chk = check_star_center(
            ConvexBody(Segment(Complex(1, 0), b)), ConvexBody(Disk(Complex(1, 0), r)),
            Complex(1, 0), 720, 64, 1e-7);
        detail << " (b=" << fmt(b) << ", r=" << r << "): cert "
               << (cert.verified ? "ok" : "FAILED") << ", star check "
               << (chk.ok ? "ok" : "FAILED") << ";";
        ok = ok && cert.verified && chk.ok;

        // proof inequality |t z + (1-t) - (1 + t s delta)| <= |1 + t s delta| r
        // on a 100 x 100 (s, t) grid, z on the slice boundary
        const Complex delta = b - 1.0;
        double worst = -1e300;
        for (int is = 0; is < 100; ++is) {
            const double s = is / 99.0;
            const Complex c = 1.0 + s * delta;
            for (int it = 0; it < 100; ++it) {
                const double t = it / 99.0;
                const Complex ct = 1.0 + t * s * delta;
                for (double phi : {0.0, 1.7, 3.9}) {
                    const Complex z = c + std::abs(c) * r * std::polar(1.0, phi);
                    const double lhs = std::abs(t * z + (1 - t) - ct);
                    const double rhs = std::abs(ct) * r;
                    worst = std::max(worst, lhs - rhs);
                }
            }
        }
        detail << " max inequality violation " << worst << ";";
        ok = ok && worst <= 1e-12;
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_thm51() {
    ExampleResult res{"thm5.1", false, ""};
    std::ostringstream detail;
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool ok = true;

    for (double r : {0.1, 0.5, 1.0}) {
        double worst_pos = -1e300, worst_id = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double rad = r * std::sqrt(uni(rng));
            const Complex b = 1.0 + rad * std::polar(1.0, 2 * M_PI * uni(rng));
            const double lhs = std::norm(b - (1 - r * r)) - std::norm(b) * r * r;
            const double rhs =
                (1 - r * r) * (((b - 1.0) * (std::conj(b) - 1.0)).real() - r * r);
            worst_pos = std::max(worst_pos, lhs);
            worst_id = std::max(worst_id, std::abs(lhs - rhs));
        }
        detail << " r=" << r << ": max identity residual " << worst_id << ", max sign "
               << worst_pos << ";";
        ok = ok && worst_id <= 1e-12 && worst_pos <= 1e-12;
    }

    std::uniform_real_distribution<double> um(-3.0, 3.0);
    for (int trial = 0; trial < 10 && ok; ++trial) {
        Complex mu(um(rng), um(rng));
        if (std::abs(mu) < 1.0) mu += Complex(2.0, 0.0);
        const double R = 0.8 * std::abs(mu) * uni(rng);
        std::vector<Complex> subset;
        for (int i = 0; i < 40; ++i)
            subset.push_back(mu + R * uni(rng) * std::polar(1.0, 2 * M_PI * uni(rng)));
        const DiskProductCert cert = star_center_disk_subset(mu, R, subset, 1e-7);
        if (!cert.verified) {
            ok = false;
            detail << " subset trial " << trial << " failed";
        }
    }
    if (ok) detail << " 10 random disk subsets certified";
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

ExampleResult run_fig10() {
    ExampleResult res{"fig10", false, ""};
    std::ostringstream detail;
    const PieceSet star{{ConvexBody(Segment(Complex(1, 0), std::polar(2.0, 11 * M_PI / 12))),
                         ConvexBody(Segment(Complex(1, 0), std::polar(2.0, -11 * M_PI / 12)))}};
    const Disk disk(Complex(1, 0), 0.5);

    const StarSetCertResult cert =
        star_shaped_times_disk(star, Complex(1, 0), disk.center, disk.radius, 1e-7);
    detail << "cert " << (cert.cert.verified ? "verified (unexpected)" : "refused")
           << ", oracle hole " << (cert.oracle_hole_detected ? "detected" : "missed");
    if (cert.hole_location) detail << " near " << fmt(*cert.hole_location);

    std::vector<std::pair<ConvexBody, ConvexBody>> pairs;
    for (const ConvexBody& piece : star.pieces) pairs.emplace_back(piece, ConvexBody(disk));
    const RasterGrid grid = raster_union(pairs, 1024, 512);
    const int holes = enclosed_empty_components(grid);
    detail << ", raster holes " << holes;

    // convex control: a convex factor never produces a hole
    const ConvexBody control{ConvexPolygon({Complex(1, 0), Complex(1, 1), Complex(2, 0)})};
    const RasterGrid control_grid = raster_product(control, ConvexBody(disk), 1024, 512);
    const int control_holes = enclosed_empty_components(control_grid);
    detail << ", convex control holes " << control_holes;

    res.pass = !cert.cert.verified && cert.oracle_hole_detected && holes >= 1 &&
               control_holes == 0;
    res.detail = detail.str();
    return res;
}

}  // namespace

std::vector<std::string> paper_example_ids() {
    return {"thm2.4a", "thm2.4b", "thm2.4c", "thm2.4b-centers", "ex3.1",
            "ex3.2",   "cor3.4",  "thmb",    "thm5.1",          "fig10"};
}

ExampleResult run_paper_example(const std::string& id) {
    if (id == "thm2.4a") return run_thm24a();
    if (id == "thm2.4b") return run_thm24b();
    if (id == "thm2.4c") return run_thm24c();
    if (id == "thm2.4b-centers") return run_thm24b_centers();
    if (id == "ex3.1") return run_ex31();
    if (id == "ex3.2") return run_ex32();
    if (id == "cor3.4") return run_cor34();
    if (id == "thmb") return run_thmb();
    if (id == "thm5.1") return run_thm51();
    if (id == "fig10") return run_fig10();
    throw InvalidInput("run_paper_example: unknown id " + id);
}

}  // namespace minkprod
