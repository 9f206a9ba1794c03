#pragma once

#include "minkprod/geometry.hpp"

namespace minkprod {

/// A segment factored as omega * K(1 + i*a_lo, 1 + i*a_hi), with omega the
/// foot of the perpendicular from 0 to the segment's supporting line.
struct CanonicalSegment {
    Complex omega;
    double a_lo = 0.0;
    double a_hi = 0.0;

    Complex lo_endpoint() const { return omega * Complex(1.0, a_lo); }
    Complex hi_endpoint() const { return omega * Complex(1.0, a_hi); }
};

/// True when 0, s.p, s.q are collinear (scale-relative test
/// |Im(conj(p) q)| <= tol * max(|p||q|, 1)).
bool collinear_with_origin(const Segment& s, double tol = kDefaultTol);

/// Put a segment into canonical position on the vertical line Re(z) = 1.
/// Throws DegenerateFrame when the segment's line passes through 0 and
/// InvalidInput for zero-length segments.
CanonicalSegment canonicalize_segment(const Segment& s, double tol = kDefaultTol);

/// Output of the rotation-support construction: for C, D on Re(z)=1 and P
/// strictly between them in angle, xi1 maps the line through C and P onto
/// Re(z)=1 (xi2 likewise for D and P).
struct RotateSupport {
    Complex xi1;
    Complex xi2;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

/// Rotation-support helper. Preconditions: C = 1 + i tan(thC),
/// D = 1 + i tan(thD), P = r e^{i thP} with -pi/2 < thC < thP < thD < pi/2
/// and r > 0. Throws DegenerateFrame when P is collinear with C or with D.
RotateSupport rotate_support(Complex C, Complex D, Complex P);

}  // namespace minkprod
