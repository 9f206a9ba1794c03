#pragma once

#include "minkprod/membership.hpp"

namespace minkprod {

/// Which disk theorem a certificate claims.
enum class DiskTheorem { Subset51, SegmentThmB, StarSetThmS };

/// A star-center claim for a disk-factor product, with its verification
/// status. verified == true means the sampled segment check passed.
struct DiskProductCert {
    Complex center_claimed;
    DiskTheorem theorem = DiskTheorem::Subset51;
    double r_canonical = 0.0;
    bool verified = false;
};

/// D(c, r) * {b} = D(b c, |b| r).
Disk disk_times_point(const Disk& d, Complex b);

/// Star center mu^2 (1 - r^2), r = R/|mu|, of D(mu, R) * S for any nonempty
/// subset S of D(mu, R) (given as sample points). Requires |mu| > R.
DiskProductCert star_center_disk_subset(Complex mu, double R,
                                        const std::vector<Complex>& subset_samples,
                                        double tol = 1e-7);

/// Membership in K(1, b) * D(1, r): the quadratic slice minimum of
/// |z - c(s)|^2 - r^2 |c(s)|^2 over c(s) = 1 + s(b - 1), s in [0, 1].
bool member_segment_disk(Complex b, double r, Complex z, double tol = kDefaultTol);

/// Star center 1 of K(1, b) * D(1, r) for r in (0, 1], Re(b) >= 1.
DiskProductCert star_center_segment_disk(Complex b, double r, double tol = 1e-7);

/// Result of certifying a star-shaped-set times disk product. When the
/// sampled verification fails (e.g. the product is not simply connected) the
/// certificate is refused and the raster-oracle verdict is attached.
struct StarSetCertResult {
    DiskProductCert cert;
    bool oracle_hole_detected = false;
    std::optional<Complex> hole_location;
};

/// Star center s*a of S * D(a, r) for S star-shaped about s with
/// |s| <= |z| for all z in S (hypothesis spot-checked; certificate refused
/// with an oracle verdict when verification fails). S is a union of convex
/// pieces.
StarSetCertResult star_shaped_times_disk(const PieceSet& s_set, Complex star_center,
                                         Complex a, double r, double tol = 1e-7);

}  // namespace minkprod
