#include "minkprod/canonical.hpp"

#include <cmath>

namespace minkprod {

bool collinear_with_origin(const Segment& s, double tol) {
    const double c = std::abs(cross(s.p, s.q));
    return c <= tol * std::max(std::abs(s.p) * std::abs(s.q), 1.0);
}

CanonicalSegment canonicalize_segment(const Segment& s, double tol) {
    const Complex a1 = s.p;
    const Complex a2 = s.q;
    if (std::abs(a2 - a1) <= tol * std::max({std::abs(a1), std::abs(a2), 1.0}))
        throw InvalidInput("canonicalize_segment: zero-length segment");
    if (collinear_with_origin(s, tol))
        throw DegenerateFrame("canonicalize_segment: segment lies on a line through 0");

    // omega = (a1 conj(a2) - a2 conj(a1)) / (2 (conj(a2) - conj(a1))), the
    // point of the supporting line closest to 0.
    const Complex omega =
        (a1 * std::conj(a2) - a2 * std::conj(a1)) / (2.0 * (std::conj(a2) - std::conj(a1)));

    const Complex w1 = a1 / omega;
    const Complex w2 = a2 / omega;
    if (std::abs(w1.real() - 1.0) > 1e-6 || std::abs(w2.real() - 1.0) > 1e-6)
        throw NumericalFailure("canonicalize_segment: frame residual too large");

    CanonicalSegment out;
    out.omega = omega;
    out.a_lo = std::min(w1.imag(), w2.imag());
    out.a_hi = std::max(w1.imag(), w2.imag());
    return out;
}

RotateSupport rotate_support(Complex C, Complex D, Complex P) {
    const double tol = kDefaultTol;
    if (std::abs(C.real() - 1.0) > 1e-7 || std::abs(D.real() - 1.0) > 1e-7)
        throw InvalidInput("rotate_support: C and D must lie on Re(z) = 1");
    if (std::abs(P) <= tol) throw InvalidInput("rotate_support: P must be nonzero");

    const double thC = std::atan2(C.imag(), C.real());
    const double thD = std::atan2(D.imag(), D.real());
    const double thP = std::atan2(P.imag(), P.real());
    if (!(thC < thP && thP < thD))
        throw InvalidInput("rotate_support: need arg(C) < arg(P) < arg(D)");

    const Complex pc = P - C;
    const Complex pd = P - D;
    if (std::abs(pc) <= tol * std::max(std::abs(P), std::abs(C)))
        throw DegenerateFrame("rotate_support: P coincides with C");
    if (std::abs(pd) <= tol * std::max(std::abs(P), std::abs(D)))
        throw DegenerateFrame("rotate_support: P coincides with D");

    const Complex e1 = Complex(0.0, -1.0) * pc / std::abs(pc);
    const Complex e2 = Complex(0.0, 1.0) * pd / std::abs(pd);
    const double th1 = std::atan2(e1.imag(), e1.real());
    const double th2 = std::atan2(e2.imag(), e2.real());
    if (std::abs(th1) >= M_PI / 2 - 1e-12 || std::abs(th2) >= M_PI / 2 - 1e-12)
        throw DegenerateFrame("rotate_support: P collinear with C or D");

    RotateSupport out;
    out.theta1 = th1;
    out.theta2 = th2;
    out.xi1 = std::cos(thC) / std::cos(thC - th1) * std::exp(Complex(0.0, -th1));
    out.xi2 = std::cos(thD) / std::cos(thD - th2) * std::exp(Complex(0.0, -th2));
    return out;
}

}  // namespace minkprod
