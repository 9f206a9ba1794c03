#include "minkprod/seg_convex.hpp"

#include <algorithm>
#include <cmath>

namespace minkprod {

namespace {

Complex canon_pt(double t) { return Complex(1.0, t); }

/// A point of (K/p) ∩ (K/q) if nonempty: the set of xi with xi*p and xi*q in
/// K, i.e. xi * K(p, q) ⊆ K by convexity.
std::optional<Complex> similarity_witness(const Segment& s, const ConvexBody& k, double tol) {
    const Complex p = s.p, q = s.q;
    if (std::abs(p) <= tol || std::abs(q) <= tol) return std::nullopt;  // 0 shortcut owns this

    if (const auto* seg_k = std::get_if<Segment>(&k)) {
        // segment into segment: reduce to canonical interval containment
        try {
            const CanonicalSegment f1 = canonicalize_segment(s, tol);
            const CanonicalSegment f2 = canonicalize_segment(*seg_k, tol);
            if (f2.a_lo <= f1.a_lo + tol && f1.a_hi <= f2.a_hi + tol)
                return f2.omega / f1.omega;
        } catch (const Error&) {
        }
        return std::nullopt;
    }

    if (const auto* d = std::get_if<Disk>(&k)) {
        const Disk d1(d->center / p, d->radius / std::abs(p));
        const Disk d2(d->center / q, d->radius / std::abs(q));
        const double dist = std::abs(d2.center - d1.center);
        if (dist > d1.radius + d2.radius + tol) return std::nullopt;
        Complex candidates[4];
        int nc = 0;
        if (dist <= 1e-15) {
            candidates[nc++] = d1.center;
        } else {
            const double t = (dist * dist + d1.radius * d1.radius - d2.radius * d2.radius) /
                             (2.0 * dist * dist);
            candidates[nc++] = d1.center + t * (d2.center - d1.center);
            candidates[nc++] = d1.center;
            candidates[nc++] = d2.center;
            candidates[nc++] = d1.center + (d1.radius / dist) * (d2.center - d1.center);
        }
        for (int i = 0; i < nc; ++i) {
            if (contains_point(d1, candidates[i], tol) && contains_point(d2, candidates[i], tol))
                return candidates[i];
        }
        return std::nullopt;
    }

    const auto& poly = std::get<ConvexPolygon>(k);
    std::vector<Complex> v1, v2;
    v1.reserve(poly.vertices.size());
    v2.reserve(poly.vertices.size());
    for (Complex v : poly.vertices) {
        v1.push_back(v / p);
        v2.push_back(v / q);
    }
    const ConvexPolygon a(v1), b(v2);
    const std::vector<Complex> inter = polygon_intersection(a, b);
    if (inter.empty()) return std::nullopt;
    Complex sum = 0.0;
    for (Complex z : inter) sum += z;
    const Complex xi = sum / static_cast<double>(inter.size());
    if (contains_point(ConvexBody(a), xi, tol) && contains_point(ConvexBody(b), xi, tol))
        return xi;
    return inter.front();
}

struct Cone {
    Complex lo_anchor;  // element of K at the smallest angle from 0
    Complex hi_anchor;  // element at the largest angle
    double width = 0.0;
};

Cone support_cone(const ConvexBody& k) {
    Cone cone;
    if (const auto* d = std::get_if<Disk>(&k)) {
        const double dist = std::abs(d->center);
        if (dist <= d->radius)
            throw ConeUndefined("support_cone: 0 inside the disk");
        const double phi = std::asin(std::min(1.0, d->radius / dist));
        const Complex rot_lo = std::polar(std::cos(phi), -phi);
        const Complex rot_hi = std::polar(std::cos(phi), phi);
        cone.lo_anchor = d->center * rot_lo;  // tangent touch points from 0
        cone.hi_anchor = d->center * rot_hi;
        cone.width = 2.0 * phi;
        return cone;
    }
    const std::vector<Complex> vs = body_vertices(k);
    if (vs.empty()) throw InvalidInput("support_cone: empty body");
    const Complex ref = body_anchor(k);
    if (std::abs(ref) <= 1e-12) throw ConeUndefined("support_cone: anchor at 0");
    const double base = std::atan2(ref.imag(), ref.real());
    double lo = 1e300, hi = -1e300;
    Complex lo_v = vs[0], hi_v = vs[0];
    for (Complex v : vs) {
        if (std::abs(v) <= 1e-15) throw ConeUndefined("support_cone: vertex at 0");
        const double delta = wrap_angle(std::atan2(v.imag(), v.real()) - base);
        if (delta < lo) {
            lo = delta;
            lo_v = v;
        }
        if (delta > hi) {
            hi = delta;
            hi_v = v;
        }
    }
    cone.lo_anchor = lo_v;
    cone.hi_anchor = hi_v;
    cone.width = hi - lo;
    return cone;
}

/// Solve Re(xi * lo) = 1, Re(xi * hi) = 1 for xi.
Complex solve_frame(Complex lo, Complex hi) {
    const double det = -lo.real() * hi.imag() + lo.imag() * hi.real();
    if (std::abs(det) <= 1e-15 * std::max(std::abs(lo) * std::abs(hi), 1.0))
        throw DegenerateFrame("solve_frame: cone anchors collinear with 0");
    // [lo_x  -lo_y] [u]   [1]
    // [hi_x  -hi_y] [v] = [1]
    const double u = (-hi.imag() + lo.imag()) / det;
    const double v = (-hi.real() + lo.real()) / det;
    return Complex(u, v);
}

}  // namespace

SegConvexClassification classify_seg_convex(const Segment& s, const ConvexBody& k,
                                            double tol) {
    if (const auto* p = std::get_if<ConvexPolygon>(&k))
        if (p->size() == 0) throw InvalidInput("classify_seg_convex: empty polygon");

    const double scale =
        std::max({std::abs(s.p), std::abs(s.q), farthest_distance(k, Complex(0.0)), 1.0});
    const double dtol = std::max(tol, kDefaultTol) * scale;

    SegConvexClassification out;
    if (contains_point(s, Complex(0.0), dtol) || contains_point(k, Complex(0.0), dtol)) {
        out.config = SegConvexConfig::ZeroShortcut;
        return out;
    }
    if (collinear_with_origin(s) || s.is_point(dtol)) {
        out.config = SegConvexConfig::PositiveRay;
        return out;
    }
    if (const auto seg_k = as_segment(k)) {
        if (collinear_with_origin(*seg_k) || seg_k->is_point(dtol)) {
            // the convex factor spans a ray from 0: the product is convex
            out.config = SegConvexConfig::PositiveRay;
            return out;
        }
    }
    if (const auto xi = similarity_witness(s, k, dtol)) {
        out.config = SegConvexConfig::SimilarityContained;
        out.similarity_xi = *xi;
        return out;
    }

    const Cone cone = support_cone(k);
    if (cone.width >= M_PI - 1e-9)
        throw ConeUndefined("classify_seg_convex: support cone spans >= pi");

    const CanonicalSegment cs = canonicalize_segment(s, tol);
    out.xi1 = 1.0 / cs.omega;
    out.a = cs.a_lo;
    out.b = cs.a_hi;
    out.xi2 = solve_frame(cone.lo_anchor, cone.hi_anchor);
    out.c = (out.xi2 * cone.lo_anchor).imag();
    out.d = (out.xi2 * cone.hi_anchor).imag();
    if (out.c > out.d) std::swap(out.c, out.d);

    const double ctol =
        kDefaultTol * std::max({std::abs(out.a), std::abs(out.b), std::abs(out.c),
                                std::abs(out.d), 1.0});
    const double a = out.a, b = out.b, c = out.c, d = out.d;
    if (b <= c + ctol) {
        out.config = SegConvexConfig::A;
    } else if (a <= c + ctol && b <= d + ctol) {
        out.config = SegConvexConfig::B;
    } else if (a <= c + ctol && d <= b + ctol) {
        out.config = SegConvexConfig::C;
    } else if (c <= a + ctol && a <= d + ctol && d <= b + ctol) {
        out.config = SegConvexConfig::D;
    } else if (d <= a + ctol) {
        out.config = SegConvexConfig::E;
    } else {
        // c < a <= b < d: the chord K(1+ic, 1+id) of K certifies containment
        out.config = SegConvexConfig::SimilarityContained;
        out.similarity_xi = out.xi1 / out.xi2;
    }
    return out;
}

namespace {

StarReport verified_report(const ConvexBody& k1, const ConvexBody& k2, Complex center,
                           double tol, int tested) {
    const StarCheckResult chk = check_star_center(k1, k2, center, 720, 64, tol);
    if (!chk.ok) {
        const auto& w = *chk.witness;
        throw InternalInconsistency(
            "star_center_seg_convex: center failed verification at a=(" +
            std::to_string(w.a.real()) + "," + std::to_string(w.a.imag()) + ") b=(" +
            std::to_string(w.b.real()) + "," + std::to_string(w.b.imag()) +
            ") t=" + std::to_string(w.t));
    }
    StarReport report;
    report.verdict = StarReport::Verdict::StarShaped;
    report.center = center;
    report.candidates_tested = tested;
    return report;
}

}  // namespace

StarReport star_center_seg_convex(const Segment& s, const ConvexBody& k, double tol) {
    const ConvexBody k1{s};
    SegConvexClassification cls;
    try {
        cls = classify_seg_convex(s, k, kDefaultTol);
    } catch (const ConeUndefined&) {
        // fall back to a small verified candidate search
        std::vector<Complex> candidates;
        for (Complex v : body_vertices(k)) {
            candidates.push_back(s.p * v);
            candidates.push_back(s.q * v);
        }
        candidates.push_back(body_anchor(k1) * body_anchor(k));
        int tested = 0;
        for (Complex cand : candidates) {
            ++tested;
            try {
                return verified_report(k1, k, cand, tol, tested);
            } catch (const Error&) {
            }
        }
        StarReport report;
        report.verdict = StarReport::Verdict::Unknown;
        report.candidates_tested = tested;
        return report;
    }

    switch (cls.config) {
        case SegConvexConfig::ZeroShortcut:
            return verified_report(k1, k, 0.0, tol, 1);
        case SegConvexConfig::PositiveRay:
            return verified_report(k1, k, body_anchor(k1) * body_anchor(k), tol, 1);
        case SegConvexConfig::SimilarityContained:
            return verified_report(k1, k, cls.similarity_xi * s.p * s.q, tol, 1);
        case SegConvexConfig::A:
        case SegConvexConfig::B:
            return verified_report(
                k1, k, canon_pt(cls.b) * canon_pt(cls.c) / (cls.xi1 * cls.xi2), tol, 1);
        case SegConvexConfig::C:
            return verified_report(
                k1, k, canon_pt(cls.c) * canon_pt(cls.d) / (cls.xi1 * cls.xi2), tol, 1);
        case SegConvexConfig::D:
        case SegConvexConfig::E:
            return verified_report(
                k1, k, canon_pt(cls.a) * canon_pt(cls.d) / (cls.xi1 * cls.xi2), tol, 1);
    }
    throw InternalInconsistency("star_center_seg_convex: unreachable configuration");
}

Complex star_center_triangle_lemma(TriangleLemma which, double a, double b, double c,
                                   double d, Complex p, double tol) {
    if (std::abs(p) <= kDefaultTol) throw InvalidInput("triangle lemma: p must be nonzero");
    // p must lie in the cone spanned by 1+ic and 1+id
    double t1, t2;
    if (std::abs(d - c) > 1e-14) {
        t1 = (d * p.real() - p.imag()) / (d - c);
        t2 = (p.imag() - c * p.real()) / (d - c);
    } else {
        t1 = p.real();
        t2 = 0.0;
        if (std::abs(p.imag() - c * p.real()) > 1e-9 * std::max(1.0, std::abs(p)))
            throw InvalidInput("triangle lemma: p outside the degenerate cone");
    }
    if (t1 < -1e-9 || t2 < -1e-9)
        throw InvalidInput("triangle lemma: p outside the cone of 1+ic, 1+id");

    Segment k1;
    Complex center;
    if (which == TriangleLemma::L01) {
        if (!(a <= c && c <= d)) throw InvalidInput("L01 requires a <= c <= d");
        k1 = Segment(canon_pt(a), canon_pt(d));
        center = canon_pt(c) * canon_pt(d);
    } else {
        if (!(a < b && b <= c && c < d)) throw InvalidInput("L02 requires a < b <= c < d");
        k1 = Segment(canon_pt(a), canon_pt(b));
        const auto xi = similarity_witness(
            k1, ConvexBody(ConvexPolygon({canon_pt(c), canon_pt(d), p})), kDefaultTol);
        if (xi)
            throw InvalidInput("L02 requires that no xi K1 fits inside K2");
        center = canon_pt(b) * canon_pt(c);
    }

    const ConvexBody k2{ConvexPolygon({canon_pt(c), canon_pt(d), p})};
    // the one nontrivial containment from the proofs: K(center, (1+ia) p)
    const Complex far = canon_pt(a) * p;
    for (int i = 0; i <= 128; ++i) {
        const double t = i / 128.0;
        const Complex z = center + t * (far - center);
        if (!member_exact(ConvexBody(k1), k2, z, tol))
            throw InternalInconsistency("triangle lemma: containment check failed at t=" +
                                        std::to_string(t));
    }
    return center;
}

}  // namespace minkprod
