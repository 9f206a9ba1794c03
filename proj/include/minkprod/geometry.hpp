#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace minkprod {

using Complex = std::complex<double>;

/// Default tolerance for geometric predicates. Every predicate that takes a
/// tolerance accepts an override; this is the library-wide default.
inline constexpr double kDefaultTol = 1e-9;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments: empty point sets, out-of-range parameters, violated
/// preconditions.
struct InvalidInput : Error {
    using Error::Error;
};

/// A construction that needs a proper frame met a degenerate configuration
/// (segment collinear with the origin, coincident rotation targets, ...).
struct DegenerateFrame : Error {
    using Error::Error;
};

/// The angular support cone of a set from the origin is not a proper cone.
struct ConeUndefined : Error {
    using Error::Error;
};

/// A point asserted to lie in a product set does not.
struct NotAMember : Error {
    using Error::Error;
};

/// An iterative numeric routine failed to converge.
struct NumericalFailure : Error {
    using Error::Error;
};

/// A verified-before-return check failed; carries the failing sample in the
/// message.
struct InternalInconsistency : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

bool is_finite(Complex z);

/// 2D cross product Im(conj(a) * b); positive when b is counter-clockwise
/// from a.
inline double cross(Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

/// 2D dot product Re(conj(a) * b).
inline double dot(Complex a, Complex b) {
    return a.real() * b.real() + a.imag() * b.imag();
}

/// Orientation of c relative to the directed line a->b.
inline double orient(Complex a, Complex b, Complex c) {
    return cross(b - a, c - a);
}

/// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

// ---------------------------------------------------------------------------
// Bodies
// ---------------------------------------------------------------------------

/// Closed line segment K(p, q). p == q is allowed and represents a point.
struct Segment {
    Complex p;
    Complex q;

    Segment() = default;
    Segment(Complex p_, Complex q_);

    bool is_point(double tol = kDefaultTol) const;
    Complex at(double t) const { return p + t * (q - p); }
    double length() const { return std::abs(q - p); }
};

/// Convex polygon stored as CCW vertices, normalized on construction:
/// duplicates and collinear interior vertices removed. One vertex is a
/// point, two vertices a segment.
struct ConvexPolygon {
    std::vector<Complex> vertices;

    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Complex> pts);

    int size() const { return static_cast<int>(vertices.size()); }
    Complex centroid() const;
    double perimeter() const;
};

/// Closed disk D(center, radius), radius >= 0.
struct Disk {
    Complex center;
    double radius = 0.0;

    Disk() = default;
    Disk(Complex c, double r);
};

using ConvexBody = std::variant<Segment, ConvexPolygon, Disk>;

/// Convex hull (CCW, collinear interior points removed) of a nonempty point
/// set. Collinear inputs give a 2-vertex polygon, a single repeated point a
/// 1-vertex polygon.
ConvexPolygon convex_hull(std::vector<Complex> pts);

// ---------------------------------------------------------------------------
// Boundary pieces
// ---------------------------------------------------------------------------

struct LineSeg {
    Complex a;
    Complex b;
};

/// Parabolic arc {scale * (1+is)^2 : s in [s_lo, s_hi]}.
struct ParaArc {
    Complex scale;
    double s_lo = 0.0;
    double s_hi = 0.0;
};

/// Circular arc of the circle |z - center| = radius, from angle theta_start
/// sweeping by `sweep` (signed, |sweep| <= 2pi).
struct CircArc {
    Complex center;
    double radius = 0.0;
    double theta_start = 0.0;
    double sweep = 0.0;
};

using BoundaryPiece = std::variant<LineSeg, ParaArc, CircArc>;

/// Point on a piece at normalized parameter t in [0, 1].
Complex eval_boundary_piece(const BoundaryPiece& piece, double t);

Complex piece_start(const BoundaryPiece& piece);
Complex piece_end(const BoundaryPiece& piece);

/// Chain closure check: end of each piece meets the start of the next (and
/// the last wraps to the first) within tol.
bool chain_closes(const std::vector<BoundaryPiece>& chain, double tol = 1e-7);

// ---------------------------------------------------------------------------
// Predicates and measures
// ---------------------------------------------------------------------------

double dist_point_segment(Complex z, const Segment& s);
double dist_point_polygon(Complex z, const ConvexPolygon& p);  // 0 inside
double dist_point_body(Complex z, const ConvexBody& body);

/// dist(z, body) <= tol.
bool contains_point(const ConvexBody& body, Complex z, double tol = kDefaultTol);
bool contains_point(const ConvexPolygon& poly, Complex z, double tol = kDefaultTol);
bool contains_point(const Disk& d, Complex z, double tol = kDefaultTol);
bool contains_point(const Segment& s, Complex z, double tol = kDefaultTol);

/// Support value max{ Re(conj(dir) * z) : z in body } for a unit direction.
double support(const ConvexBody& body, Complex dir);

/// max{ |z - w| : z in body }.
double farthest_distance(const ConvexBody& body, Complex w);

/// A representative interior-ish point (centroid of vertices / disk center /
/// segment midpoint).
Complex body_anchor(const ConvexBody& body);

/// Extreme points: polygon vertices, segment endpoints, disk boundary is
/// reported as empty (no finitely many extreme points).
std::vector<Complex> body_vertices(const ConvexBody& body);

/// Point of the topological boundary at parameter u in [0,1). For a segment
/// the boundary is the segment itself; for a polygon the perimeter
/// (arc-length parametrized); for a disk the circle.
Complex boundary_point(const ConvexBody& body, double u);

/// Deterministic stratified samples: `n_boundary` boundary points plus
/// `n_interior` interior points (bbox grid filtered by membership).
std::vector<Complex> sample_body(const ConvexBody& body, int n_boundary, int n_interior);

ConvexBody scale_body(const ConvexBody& body, Complex c);
ConvexBody conj_body(const ConvexBody& body);

/// Lossless Segment <-> 2-vertex polygon conversions.
ConvexPolygon segment_to_polygon(const Segment& s);
std::optional<Segment> polygon_to_segment(const ConvexPolygon& p);

/// View any body as a segment when it is one- or two-point shaped.
std::optional<Segment> as_segment(const ConvexBody& body, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Convex polygon clipping
// ---------------------------------------------------------------------------

/// Clip a convex polygon (as a vertex list, CCW) by the half-plane
/// { z : dot(normal, z) >= offset }. Returns the clipped vertex list (may be
/// empty).
std::vector<Complex> clip_halfplane(const std::vector<Complex>& poly, Complex normal,
                                    double offset);

/// Intersection of two convex polygons; empty vector when disjoint.
std::vector<Complex> polygon_intersection(const ConvexPolygon& a, const ConvexPolygon& b);

/// Union of convex bodies; the pieces need not be disjoint. Used for
/// star-shaped (not necessarily convex) sets given as explicit unions.
struct PieceSet {
    std::vector<ConvexBody> pieces;
};

bool contains_point(const PieceSet& s, Complex z, double tol = kDefaultTol);
std::vector<Complex> sample_pieces(const PieceSet& s, int n_boundary_per_piece,
                                   int n_interior_per_piece);

}  // namespace minkprod
