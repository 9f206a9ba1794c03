#pragma once

#include "minkprod/canonical.hpp"
#include "minkprod/geometry.hpp"

namespace minkprod {

/// Which structural case a segment-segment product falls into.
enum class SegSegCase {
    Collinear,      // both factors on lines through 0: product is a segment
    ZeroInSegment,  // one factor on a line through 0 containing 0: two triangles
    RayScaled,      // one factor on a line through 0, not containing 0: quadrilateral
    QuadA,          // canonical intervals disjoint/touching: convex quadrilateral
    CaseB,          // canonical intervals overlap: parabola + 4 tangent/edge segments
    CaseC,          // one canonical interval strictly inside the other
};

/// Set of star centers of a product region.
struct StarCenterSet {
    enum class Kind { Empty, Point, Seg, Convex, All };

    Kind kind = Kind::Empty;
    Complex point;
    Segment segment;
    ConvexPolygon region;

    static StarCenterSet none();
    static StarCenterSet of_point(Complex p);
    static StarCenterSet of_segment(const Segment& s);
    static StarCenterSet of_region(const ConvexPolygon& r);
    static StarCenterSet all();
    /// Classify a point cloud's hull into Point / Seg / Convex.
    static StarCenterSet from_hull(const std::vector<Complex>& pts);

    /// Membership (Kind::All contains everything).
    bool contains(Complex z, double tol = kDefaultTol) const;
    /// Representative points for verification sampling; empty for Kind::All.
    std::vector<Complex> representatives() const;
};

/// Exact product region of two segments: closed boundary chain, case tag and
/// star-center set.
struct SegProductRegion {
    SegSegCase case_tag = SegSegCase::Collinear;
    std::vector<BoundaryPiece> boundary;
    StarCenterSet star_centers;
};

/// Full case analysis of K(s1) * K(s2). Total: every degenerate input is
/// routed to its case.
SegProductRegion product_seg_seg(const Segment& s1, const Segment& s2);

/// The square-product region S of K(1+i a1, 1+i a2) with itself, bounded by
/// the parabolic arc and two tangent segments meeting at (1+i a1)(1+i a2).
SegProductRegion seg_square_region(double a1, double a2);

/// Exact membership z in K(s1)K(s2) by decomposition into overlap /
/// non-overlap sub-segment products.
bool member_seg_seg(const Segment& s1, const Segment& s2, Complex z, double tol = kDefaultTol);

/// Membership in the canonical square-product region of [a1, a2] for the
/// already-normalized point w (the product scale divided out).
bool member_square_canonical(double a1, double a2, Complex w, double tol = kDefaultTol);

/// Star centers for segments in general position (neither collinear with 0);
/// throws DegenerateFrame otherwise.
StarCenterSet star_centers_general_position(const Segment& s1, const Segment& s2);

}  // namespace minkprod
