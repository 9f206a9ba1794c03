#pragma once

#include "minkprod/membership.hpp"
#include "minkprod/seg_seg.hpp"

namespace minkprod {

/// Outcome of a star-shapedness decision.
struct StarReport {
    enum class Verdict { StarShaped, NotStarShaped, Unknown };

    Verdict verdict = Verdict::Unknown;
    std::optional<Complex> center;             // present iff StarShaped
    std::optional<StarCheckWitness> witness;   // present iff NotStarShaped
    int candidates_tested = 0;
};

/// Decide star-shapedness of P1 * P2 through the vertex-pair criterion: p is
/// a star center iff every segment from p to a vertex product stays in the
/// product. Candidates are auto-generated when none are given. A negative
/// verdict is only returned when the tangent-line constraint analysis
/// provably pins all possible centers down to a region that fails; otherwise
/// Unknown.
StarReport check_star_polygon_product(const ConvexPolygon& p1, const ConvexPolygon& p2,
                                      std::vector<Complex> candidates = {},
                                      double tol = 1e-7);

/// Star center |a|^2 of K(r, a, conj(a)) * itself (triangle symmetric about
/// the real axis, a not real). Verified before returning.
Complex star_center_symmetric_triangle(double r, Complex a, double tol = 1e-7);

/// Star center 0 of K1 * K2 when K1 is star-shaped about 0 (caller-asserted;
/// spot-verified on samples).
Complex zero_center_product(const PieceSet& k1, const PieceSet& k2, double tol = 1e-7);

/// Star center of a multi-factor product K1 * ... * Ks via the zero, disk-
/// subset and half-plane shortcuts; Unknown when none applies.
StarReport multi_product_star_center(const std::vector<ConvexBody>& factors,
                                     double tol = 1e-7);

// ---------------------------------------------------------------------------
// Radial envelope helpers (exposed for tests)
// ---------------------------------------------------------------------------

/// Smallest r > 0 with r e^{i theta} on the given boundary chain; nullopt
/// when the ray misses it.
std::optional<double> ray_min_hit(const std::vector<BoundaryPiece>& chain, double theta);

/// Half-plane constraint dot(normal, z) >= offset.
struct HalfPlane {
    Complex normal;
    double offset = 0.0;
};

/// Tangent-line constraints a star center of P1 * P2 must satisfy, derived
/// from parabolic boundary arcs that realize the radial lower envelope of
/// the product (the Example-3.1 exclusion pattern).
std::vector<HalfPlane> star_center_constraints(const ConvexPolygon& p1,
                                               const ConvexPolygon& p2);

/// Minimum-norm point of the intersection of half-planes; nullopt when the
/// intersection is empty.
std::optional<Complex> min_norm_point(const std::vector<HalfPlane>& constraints);

}  // namespace minkprod
