#include "minkprod/seg_seg.hpp"

#include <algorithm>
#include <cmath>

namespace minkprod {

namespace {

Complex canon_pt(double a) { return Complex(1.0, a); }

std::vector<Complex> four_products(Complex a1, Complex a2, Complex b1, Complex b2) {
    return {a1 * b1, a1 * b2, a2 * b1, a2 * b2};
}

/// Boundary chain of a convex hull polygon (handles 1- and 2-vertex hulls).
std::vector<BoundaryPiece> hull_chain(const ConvexPolygon& hull) {
    std::vector<BoundaryPiece> chain;
    const int n = hull.size();
    if (n == 1) {
        chain.push_back(LineSeg{hull.vertices[0], hull.vertices[0]});
        return chain;
    }
    for (int i = 0; i < n; ++i)
        chain.push_back(
            LineSeg{hull.vertices[static_cast<size_t>(i)], hull.vertices[static_cast<size_t>((i + 1) % n)]});
    if (n == 2) {
        // out-and-back so the chain closes
        return chain;
    }
    return chain;
}

void push_seg(std::vector<BoundaryPiece>& chain, Complex a, Complex b, double tol) {
    if (std::abs(a - b) > tol) chain.push_back(LineSeg{a, b});
}

/// Sub-interval of a canonical factor, [lo, hi] with lo <= hi.
struct Part {
    double lo, hi;
};

bool quad_member(Complex a1, Complex a2, Complex b1, Complex b2, Complex w, double tol) {
    return contains_point(ConvexBody(ConvexPolygon(four_products(a1, a2, b1, b2))), w, tol);
}

}  // namespace

// ---------------------------------------------------------------------------
// StarCenterSet
// ---------------------------------------------------------------------------

StarCenterSet StarCenterSet::none() { return {}; }

StarCenterSet StarCenterSet::of_point(Complex p) {
    StarCenterSet s;
    s.kind = Kind::Point;
    s.point = p;
    return s;
}

StarCenterSet StarCenterSet::of_segment(const Segment& seg) {
    StarCenterSet s;
    s.kind = Kind::Seg;
    s.segment = seg;
    return s;
}

StarCenterSet StarCenterSet::of_region(const ConvexPolygon& r) {
    StarCenterSet s;
    s.kind = Kind::Convex;
    s.region = r;
    return s;
}

StarCenterSet StarCenterSet::all() {
    StarCenterSet s;
    s.kind = Kind::All;
    return s;
}

StarCenterSet StarCenterSet::from_hull(const std::vector<Complex>& pts) {
    const ConvexPolygon hull = convex_hull(pts);
    if (hull.size() == 1) return of_point(hull.vertices[0]);
    if (hull.size() == 2) return of_segment(Segment(hull.vertices[0], hull.vertices[1]));
    return of_region(hull);
}

bool StarCenterSet::contains(Complex z, double tol) const {
    switch (kind) {
        case Kind::Empty:
            return false;
        case Kind::Point:
            return std::abs(z - point) <= tol;
        case Kind::Seg:
            return contains_point(segment, z, tol);
        case Kind::Convex:
            return contains_point(region, z, tol);
        case Kind::All:
            return true;
    }
    return false;
}

std::vector<Complex> StarCenterSet::representatives() const {
    switch (kind) {
        case Kind::Empty:
        case Kind::All:
            return {};
        case Kind::Point:
            return {point};
        case Kind::Seg:
            return {segment.p, segment.q, segment.at(0.5)};
        case Kind::Convex: {
            std::vector<Complex> out = region.vertices;
            out.push_back(region.centroid());
            return out;
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Square-product region (canonical)
// ---------------------------------------------------------------------------

bool member_square_canonical(double a1, double a2, Complex w, double tol) {
    const double x = w.real();
    const double y = w.imag();
    if (y < 2.0 * a1 - tol || y > 2.0 * a2 + tol) return false;
    const double lower = 1.0 - y * y / 4.0;
    const double upper = std::min(1.0 - a1 * (y - a1), 1.0 - a2 * (y - a2));
    return x >= lower - tol && x <= upper + tol;
}

SegProductRegion seg_square_region(double a1, double a2) {
    if (!(a1 <= a2)) throw InvalidInput("seg_square_region: need a1 <= a2");
    SegProductRegion out;
    out.case_tag = SegSegCase::CaseB;
    const Complex p1 = canon_pt(a1);
    const Complex p2 = canon_pt(a2);
    const Complex corner = p1 * p2;
    const double tol = kDefaultTol * std::max(1.0, std::norm(p2));

    out.boundary.push_back(ParaArc{1.0, a1, a2});
    push_seg(out.boundary, p2 * p2, corner, tol);
    push_seg(out.boundary, corner, p1 * p1, tol);
    out.star_centers = StarCenterSet::of_point(corner);
    return out;
}

// ---------------------------------------------------------------------------
// Classification helpers
// ---------------------------------------------------------------------------

namespace {

struct GeneralFrames {
    CanonicalSegment f1, f2;  // ordered so (a_lo, a_hi) <=lex (b_lo, b_hi)
    Complex omega;            // f1.omega * f2.omega
};

GeneralFrames general_frames(const Segment& s1, const Segment& s2) {
    GeneralFrames g;
    g.f1 = canonicalize_segment(s1);
    g.f2 = canonicalize_segment(s2);
    const bool swap = (g.f2.a_lo < g.f1.a_lo) ||
                      (g.f2.a_lo == g.f1.a_lo && g.f2.a_hi < g.f1.a_hi);
    if (swap) std::swap(g.f1, g.f2);
    g.omega = g.f1.omega * g.f2.omega;
    return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// product_seg_seg
// ---------------------------------------------------------------------------

SegProductRegion product_seg_seg(const Segment& s1, const Segment& s2) {
    const double scale = std::max({std::abs(s1.p), std::abs(s1.q), std::abs(s2.p), std::abs(s2.q), 1.0});
    const double tol = kDefaultTol * scale;
    SegProductRegion out;

    // Zero-length factor: scalar multiplication.
    if (s1.is_point(tol) || s2.is_point(tol)) {
        out.case_tag = SegSegCase::Collinear;
        const ConvexPolygon hull = convex_hull(four_products(s1.p, s1.q, s2.p, s2.q));
        out.boundary = hull_chain(hull);
        out.star_centers = StarCenterSet::all();
        return out;
    }

    const bool col1 = collinear_with_origin(s1);
    const bool col2 = collinear_with_origin(s2);

    if (col1 && col2) {
        out.case_tag = SegSegCase::Collinear;
        const ConvexPolygon hull = convex_hull(four_products(s1.p, s1.q, s2.p, s2.q));
        out.boundary = hull_chain(hull);
        out.star_centers = StarCenterSet::all();
        return out;
    }

    if (col1 || col2) {
        const Segment& c = col1 ? s1 : s2;   // collinear-with-0 factor
        const Segment& o = col1 ? s2 : s1;   // the other
        if (contains_point(c, Complex(0.0), tol)) {
            out.case_tag = SegSegCase::ZeroInSegment;
            // union of K(0, a1 b1, a1 b2) and K(0, a2 b1, a2 b2), meeting at 0
            push_seg(out.boundary, 0.0, c.p * o.p, tol);
            push_seg(out.boundary, c.p * o.p, c.p * o.q, tol);
            push_seg(out.boundary, c.p * o.q, 0.0, tol);
            push_seg(out.boundary, 0.0, c.q * o.p, tol);
            push_seg(out.boundary, c.q * o.p, c.q * o.q, tol);
            push_seg(out.boundary, c.q * o.q, 0.0, tol);
            out.star_centers = StarCenterSet::of_point(0.0);
            return out;
        }
        out.case_tag = SegSegCase::RayScaled;
        const ConvexPolygon hull = convex_hull(four_products(s1.p, s1.q, s2.p, s2.q));
        out.boundary = hull_chain(hull);
        out.star_centers = StarCenterSet::all();
        return out;
    }

    // General position.
    const GeneralFrames g = general_frames(s1, s2);
    const double a1 = g.f1.a_lo, a2 = g.f1.a_hi;
    const double b1 = g.f2.a_lo, b2 = g.f2.a_hi;
    const Complex w = g.omega;
    const Complex A1 = canon_pt(a1), A2 = canon_pt(a2), B1 = canon_pt(b1), B2 = canon_pt(b2);
    const double ceps = kDefaultTol * std::max({std::abs(a1), std::abs(a2), std::abs(b1), std::abs(b2), 1.0});
    const double ptol = tol * std::max(1.0, std::abs(w));

    if (a2 <= b1 + ceps) {
        // (a): disjoint (or touching) intervals, convex quadrilateral.
        out.case_tag = SegSegCase::QuadA;
        const ConvexPolygon hull = convex_hull({w * A1 * B1, w * A1 * B2, w * A2 * B1, w * A2 * B2});
        out.boundary = hull_chain(hull);
        out.star_centers = StarCenterSet::all();
        return out;
    }

    if (a2 <= b2 + ceps) {
        // (b): overlapping intervals, neither strictly inside the other.
        out.case_tag = SegSegCase::CaseB;
        out.boundary.push_back(ParaArc{w, b1, std::min(a2, b2)});
        const Complex arc_hi = w * canon_pt(std::min(a2, b2)) * canon_pt(std::min(a2, b2));
        push_seg(out.boundary, arc_hi, w * A2 * B2, ptol);
        push_seg(out.boundary, w * A2 * B2, w * A1 * B2, ptol);
        push_seg(out.boundary, w * A1 * B2, w * A1 * B1, ptol);
        push_seg(out.boundary, w * A1 * B1, w * B1 * B1, ptol);
        out.star_centers =
            StarCenterSet::from_hull({w * A1 * A2, w * A1 * B2, w * B1 * A2, w * B1 * B2});
        return out;
    }

    // (c): [b1, b2] strictly inside [a1, a2]; unique star center b1 b2.
    out.case_tag = SegSegCase::CaseC;
    out.boundary.push_back(ParaArc{w, b1, b2});
    push_seg(out.boundary, w * B2 * B2, w * A2 * B2, ptol);
    push_seg(out.boundary, w * A2 * B2, w * A2 * B1, ptol);
    push_seg(out.boundary, w * A2 * B1, w * B1 * B2, ptol);
    push_seg(out.boundary, w * B1 * B2, w * A1 * B2, ptol);
    push_seg(out.boundary, w * A1 * B2, w * A1 * B1, ptol);
    push_seg(out.boundary, w * A1 * B1, w * B1 * B1, ptol);
    out.star_centers = StarCenterSet::of_point(w * B1 * B2);
    return out;
}

// ---------------------------------------------------------------------------
// member_seg_seg
// ---------------------------------------------------------------------------

bool member_seg_seg(const Segment& s1, const Segment& s2, Complex z, double tol) {
    const double scale = std::max({std::abs(s1.p), std::abs(s1.q), std::abs(s2.p), std::abs(s2.q), 1.0});
    const double dtol = kDefaultTol * scale;

    if (s1.is_point(dtol))
        return dist_point_segment(z, Segment(s1.p * s2.p, s1.p * s2.q)) <= tol;
    if (s2.is_point(dtol))
        return dist_point_segment(z, Segment(s2.p * s1.p, s2.p * s1.q)) <= tol;

    const bool col1 = collinear_with_origin(s1);
    const bool col2 = collinear_with_origin(s2);

    if (col1 && col2)
        return contains_point(ConvexBody(convex_hull(four_products(s1.p, s1.q, s2.p, s2.q))), z, tol);

    if (col1 || col2) {
        const Segment& c = col1 ? s1 : s2;
        const Segment& o = col1 ? s2 : s1;
        if (contains_point(c, Complex(0.0), dtol)) {
            return contains_point(ConvexBody(convex_hull({Complex(0.0), c.p * o.p, c.p * o.q})), z, tol) ||
                   contains_point(ConvexBody(convex_hull({Complex(0.0), c.q * o.p, c.q * o.q})), z, tol);
        }
        return contains_point(ConvexBody(convex_hull(four_products(s1.p, s1.q, s2.p, s2.q))), z, tol);
    }

    const GeneralFrames g = general_frames(s1, s2);
    const double a1 = g.f1.a_lo, a2 = g.f1.a_hi;
    const double b1 = g.f2.a_lo, b2 = g.f2.a_hi;
    const Complex w = z / g.omega;
    const double wtol = tol / std::abs(g.omega);

    const double c1 = std::max(a1, b1);
    const double c2 = std::min(a2, b2);

    if (c2 < c1) {
        // disjoint canonical intervals: convex quadrilateral
        return quad_member(canon_pt(a1), canon_pt(a2), canon_pt(b1), canon_pt(b2), w, wtol);
    }

    // Split each factor at the common interval C = [c1, c2]; the product is a
    // union of sub-products, with the C*C block the only non-convex one.
    std::vector<Part> parts1, parts2;
    if (a1 < c1) parts1.push_back({a1, c1});
    parts1.push_back({c1, c2});
    if (c2 < a2) parts1.push_back({c2, a2});
    if (b1 < c1) parts2.push_back({b1, c1});
    parts2.push_back({c1, c2});
    if (c2 < b2) parts2.push_back({c2, b2});

    for (const Part& x : parts1) {
        for (const Part& y : parts2) {
            const bool both_c = (x.lo == c1 && x.hi == c2 && y.lo == c1 && y.hi == c2);
            if (both_c) {
                if (member_square_canonical(c1, c2, w, wtol)) return true;
            } else {
                if (quad_member(canon_pt(x.lo), canon_pt(x.hi), canon_pt(y.lo), canon_pt(y.hi), w,
                                wtol))
                    return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// star_centers_general_position
// ---------------------------------------------------------------------------

StarCenterSet star_centers_general_position(const Segment& s1, const Segment& s2) {
    const CanonicalSegment f1 = canonicalize_segment(s1);
    const CanonicalSegment f2 = canonicalize_segment(s2);
    const Complex w = f1.omega * f2.omega;
    const double eps = kDefaultTol *
                       std::max({std::abs(f1.a_lo), std::abs(f1.a_hi), std::abs(f2.a_lo),
                                 std::abs(f2.a_hi), 1.0});

    const bool one_in_two = f2.a_lo <= f1.a_lo + eps && f1.a_hi <= f2.a_hi + eps;
    const bool two_in_one = f1.a_lo <= f2.a_lo + eps && f2.a_hi <= f1.a_hi + eps;

    if (one_in_two)  // xi * K1 inside K2: unique star center xi a1 a2
        return StarCenterSet::of_point(w * canon_pt(f1.a_lo) * canon_pt(f1.a_hi));
    if (two_in_one)
        return StarCenterSet::of_point(w * canon_pt(f2.a_lo) * canon_pt(f2.a_hi));

    const double c1 = std::max(f1.a_lo, f2.a_lo);
    const double c2 = std::min(f1.a_hi, f2.a_hi);
    if (c2 <= c1 + eps) {
        // disjoint/touching intervals: the product is convex
        return StarCenterSet::all();
    }

    // Proper overlap: the star-center set is the product
    // K(alpha1, beta1) K(alpha2, beta2) (a quadrilateral, segment or point).
    const double lo1 = std::min(f1.a_lo, f2.a_lo), lo2 = std::max(f1.a_lo, f2.a_lo);
    const double hi1 = std::min(f1.a_hi, f2.a_hi), hi2 = std::max(f1.a_hi, f2.a_hi);
    return StarCenterSet::from_hull({w * canon_pt(lo1) * canon_pt(hi1), w * canon_pt(lo1) * canon_pt(hi2),
                                     w * canon_pt(lo2) * canon_pt(hi1),
                                     w * canon_pt(lo2) * canon_pt(hi2)});
}

}  // namespace minkprod
