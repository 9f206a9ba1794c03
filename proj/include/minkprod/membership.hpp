#pragma once

#include <cstdint>
#include <utility>

#include "minkprod/geometry.hpp"
#include "minkprod/seg_seg.hpp"

namespace minkprod {

// ---------------------------------------------------------------------------
// Inversion image z / K
// ---------------------------------------------------------------------------

/// Boundary of the set {z / b : b in K} for a polygon or segment divisor K
/// whose boundary stays away from 0. Each polygon edge maps to a circular
/// arc (or a line segment when the edge's supporting line passes through 0).
struct ArcRegion {
    std::vector<BoundaryPiece> boundary;  // LineSeg and CircArc only
};

/// Build the inversion image boundary of z / K. Requires z != 0 and the
/// boundary of K at positive distance from 0.
ArcRegion invert_body(const ConvexBody& divisor, Complex z);

// ---------------------------------------------------------------------------
// Exact membership
// ---------------------------------------------------------------------------

/// Exact membership z in K1 * K2 = {ab}. Total; decides via closed forms:
/// segment pairs through the canonical case analysis, a disk factor through
/// the Apollonius reduction, polygon divisors through inversion geometry.
/// Falls back to a raster query only when 0 sits on both factor boundaries.
bool member_exact(const ConvexBody& k1, const ConvexBody& k2, Complex z,
                  double tol = kDefaultTol);

/// Membership with a disk divisor: z in K1 * D(c, r), via the Apollonius
/// region {a : |z - a c| <= r |a|} (a disk, half-plane or disk complement).
bool member_disk_factor(const ConvexBody& k1, const Disk& d, Complex z,
                        double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Raster oracle
// ---------------------------------------------------------------------------

/// Axis-aligned occupancy grid over a bounding box, n x n cells.
struct RasterGrid {
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    int n = 0;
    std::vector<std::uint8_t> occ;

    double cell_w() const { return (x_max - x_min) / n; }
    double cell_h() const { return (y_max - y_min) / n; }
    int ix(double x) const;
    int iy(double y) const;
    bool occupied(Complex z) const;
    std::uint8_t& at(int i, int j) { return occ[static_cast<size_t>(j) * n + i]; }
    std::uint8_t at(int i, int j) const { return occ[static_cast<size_t>(j) * n + i]; }

    /// True when the cell at z, or any cell within Chebyshev distance `band`,
    /// differs from the cell's own occupancy (occupancy boundary band).
    bool near_boundary(Complex z, int band) const;
};

/// Brute-force product image of a single convex pair: products of stratified
/// factor samples, boundary chords drawn solid, interior closed by an
/// outside flood fill (sound for convex factors: the product is simply
/// connected).
RasterGrid raster_product(const ConvexBody& k1, const ConvexBody& k2, int n, int m,
                          unsigned seed = 0);

/// Same oracle for a union of convex pairs sharing one grid (each pair is
/// filled separately, then OR-ed, so genuine holes of the union survive).
RasterGrid raster_union(const std::vector<std::pair<ConvexBody, ConvexBody>>& pairs, int n,
                        int m, unsigned seed = 0);

/// Number of empty 4-connected components fully enclosed by occupied cells;
/// `where` (optional) receives a point inside the largest one.
int enclosed_empty_components(const RasterGrid& grid, Complex* where = nullptr);

/// Serialize as binary PGM (P5, maxval 1).
void write_pgm(const RasterGrid& grid, const std::string& path);

// ---------------------------------------------------------------------------
// Star-center verification
// ---------------------------------------------------------------------------

struct StarCheckWitness {
    Complex a;  // boundary point of K1
    Complex b;  // boundary point of K2
    double t;   // failing parameter on the segment p -> a b
    Complex z;  // the failing point itself
};

struct StarCheckResult {
    bool ok = false;
    std::optional<StarCheckWitness> witness;
};

/// Sampled star-center verification: p is accepted when every sampled point
/// of every segment from p to a boundary product a*b is a member. Witnesses
/// are refined by bisection to parameter resolution 1e-6. Throws NotAMember
/// when p itself is not in the product.
StarCheckResult check_star_center(const ConvexBody& k1, const ConvexBody& k2, Complex p,
                                  int boundary_samples = 720, int seg_samples = 64,
                                  double tol = 1e-7);

}  // namespace minkprod
