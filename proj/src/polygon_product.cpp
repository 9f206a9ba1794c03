#include "minkprod/polygon_product.hpp"

#include <algorithm>
#include <cmath>

#include "minkprod/disk_product.hpp"

namespace minkprod {

namespace {

std::vector<Segment> polygon_edges(const ConvexPolygon& p) {
    std::vector<Segment> out;
    const int n = p.size();
    if (n == 1) {
        out.emplace_back(p.vertices[0], p.vertices[0]);
    } else if (n == 2) {
        out.emplace_back(p.vertices[0], p.vertices[1]);
    } else {
        for (int i = 0; i < n; ++i)
            out.emplace_back(p.vertices[static_cast<size_t>(i)],
                             p.vertices[static_cast<size_t>((i + 1) % n)]);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Radial envelope
// ---------------------------------------------------------------------------

std::optional<double> ray_min_hit(const std::vector<BoundaryPiece>& chain, double theta) {
    const Complex dir = std::polar(1.0, theta);
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    const auto consider = [&](double r) {
        if (r >= -1e-12) {
            best = std::min(best, std::max(r, 0.0));
            found = true;
        }
    };

    for (const BoundaryPiece& piece : chain) {
        if (const auto* ls = std::get_if<LineSeg>(&piece)) {
            const Complex a = ls->a, b = ls->b;
            const double denom = cross(dir, b - a);
            const double ca = cross(dir, a);
            if (std::abs(denom) <= 1e-14 * std::max(1.0, std::abs(b - a))) {
                if (std::abs(ca) <= 1e-12 * std::max(1.0, std::abs(a))) {
                    consider(dot(dir, a));
                    consider(dot(dir, b));
                }
                continue;
            }
            const double t = -ca / denom;
            if (t >= -1e-12 && t <= 1.0 + 1e-12) consider(dot(dir, a + t * (b - a)));
        } else if (const auto* pa = std::get_if<ParaArc>(&piece)) {
            // solve Im(g (1+is)^2) = 0 with g = scale / dir
            const Complex g = pa->scale * std::conj(dir);
            const double u = g.real(), v = g.imag();
            double roots[2];
            int nr = 0;
            if (std::abs(v) <= 1e-14 * std::max(1.0, std::abs(g))) {
                roots[nr++] = 0.0;
            } else {
                const double h = std::hypot(u, v);
                roots[nr++] = (u + h) / v;
                roots[nr++] = (u - h) / v;
            }
            for (int i = 0; i < nr; ++i) {
                const double s = roots[i];
                if (s < pa->s_lo - 1e-12 || s > pa->s_hi + 1e-12) continue;
                const Complex w(1.0, s);
                consider((g * w * w).real());
            }
        }
        // CircArc pieces do not occur in segment-product chains
    }
    if (!found) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// Tangent-line constraints from exposed parabolic arcs
// ---------------------------------------------------------------------------

std::vector<HalfPlane> star_center_constraints(const ConvexPolygon& p1,
                                               const ConvexPolygon& p2) {
    std::vector<HalfPlane> constraints;
    const std::vector<Segment> e1 = polygon_edges(p1);
    const std::vector<Segment> e2 = polygon_edges(p2);

    if (e1.size() * e2.size() > 400) return constraints;  // cost cap

    // exact regions of every edge-pair product; a factor edge through 0
    // makes the region's radial minimum 0 on every ray it meets
    std::vector<SegProductRegion> regions;
    std::vector<char> zero_inside;
    regions.reserve(e1.size() * e2.size());
    for (const Segment& a : e1) {
        for (const Segment& b : e2) {
            regions.push_back(product_seg_seg(a, b));
            zero_inside.push_back(contains_point(a, Complex(0.0), kDefaultTol) ||
                                  contains_point(b, Complex(0.0), kDefaultTol));
        }
    }

    double scale = 1.0;
    for (Complex v : p1.vertices)
        for (Complex w : p2.vertices) scale = std::max(scale, std::abs(v * w));

    const auto global_rho0 = [&](double theta) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < regions.size(); ++i) {
            if (const auto hit = ray_min_hit(regions[i].boundary, theta))
                best = std::min(best, zero_inside[i] ? 0.0 : *hit);
        }
        return best;
    };

    const double band = 1e-6 * scale;
    for (const SegProductRegion& region : regions) {
        for (const BoundaryPiece& piece : region.boundary) {
            const auto* arc = std::get_if<ParaArc>(&piece);
            if (!arc || arc->s_hi - arc->s_lo <= 1e-9) continue;

            const auto exposed_at = [&](double s) {
                const Complex w(1.0, s);
                const Complex q = arc->scale * w * w;
                const double r = std::abs(q);
                if (r <= 1e-12 * scale) return false;
                return global_rho0(std::atan2(q.imag(), q.real())) >= r - band;
            };

            const int ns = 65;
            std::vector<char> exposed(ns);
            std::vector<double> svals(ns);
            for (int k = 0; k < ns; ++k) {
                svals[static_cast<size_t>(k)] =
                    arc->s_lo + (k + 0.5) * (arc->s_hi - arc->s_lo) / ns;
                exposed[static_cast<size_t>(k)] = exposed_at(svals[static_cast<size_t>(k)]);
            }
            const double endprobe = 1e-9 * (arc->s_hi - arc->s_lo);

            int k = 0;
            while (k < ns) {
                if (!exposed[static_cast<size_t>(k)]) {
                    ++k;
                    continue;
                }
                int j = k;
                while (j + 1 < ns && exposed[static_cast<size_t>(j + 1)]) ++j;
                if (j - k + 1 >= 5) {
                    // extend to the true arc ends when exposure reaches them
                    double s_lo_c = svals[static_cast<size_t>(k)];
                    double s_hi_c = svals[static_cast<size_t>(j)];
                    if (k == 0 && exposed_at(arc->s_lo + endprobe)) s_lo_c = arc->s_lo;
                    if (j == ns - 1 && exposed_at(arc->s_hi - endprobe)) s_hi_c = arc->s_hi;
                    for (double s : {s_lo_c, s_hi_c}) {
                        // chord from a center to the arc point (1+is)^2 stays on
                        // the outer side of the tangent there: in product
                        // coordinates dot(scale*(1+is), z) >= (1+s^2)|scale|^2
                        const Complex n = arc->scale * Complex(1.0, s);
                        constraints.push_back(
                            HalfPlane{n, (1.0 + s * s) * std::norm(arc->scale)});
                    }
                }
                k = j + 1;
            }
        }
    }
    return constraints;
}

// ---------------------------------------------------------------------------
// check_star_polygon_product
// ---------------------------------------------------------------------------

namespace {

struct CandidateCheck {
    bool ok = false;
    StarCheckWitness witness;
};

/// Vertex-pair criterion for one candidate with bisection refinement.
CandidateCheck verify_polygon_candidate(const ConvexBody& k1, const ConvexBody& k2,
                                        const std::vector<Complex>& vps, Complex p,
                                        double tol, int base_samples) {
    CandidateCheck out;
    if (!member_exact(k1, k2, p, tol)) {
        out.witness = StarCheckWitness{0.0, 0.0, 0.0, p};
        return out;
    }
    for (Complex q : vps) {
        double t_prev = 0.0;
        for (int k = 1; k <= base_samples; ++k) {
            const double t = static_cast<double>(k) / base_samples;
            if (!member_exact(k1, k2, p + t * (q - p), tol)) {
                double lo = t_prev, hi = t;
                for (int depth = 0; depth < 20 && hi - lo > 1e-6; ++depth) {
                    const double mid = 0.5 * (lo + hi);
                    if (member_exact(k1, k2, p + mid * (q - p), tol))
                        lo = mid;
                    else
                        hi = mid;
                }
                out.witness = StarCheckWitness{0.0, q, hi, p + hi * (q - p)};
                return out;
            }
            t_prev = t;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace

std::optional<Complex> min_norm_point(const std::vector<HalfPlane>& hp) {
    const auto feasible = [&](Complex z) {
        for (const HalfPlane& h : hp) {
            const double slack = 1e-9 * (std::abs(h.offset) + std::abs(h.normal) * std::abs(z) + 1.0);
            if (dot(h.normal, z) < h.offset - slack) return false;
        }
        return true;
    };
    if (feasible(0.0)) return Complex(0.0);
    std::optional<Complex> best;
    const auto consider = [&](Complex z) {
        if (!feasible(z)) return;
        if (!best || std::abs(z) < std::abs(*best)) best = z;
    };
    const size_t m = hp.size();
    for (size_t i = 0; i < m; ++i) {
        const double n2 = std::norm(hp[i].normal);
        if (n2 <= 1e-30) continue;
        consider(hp[i].offset * hp[i].normal / n2);
        for (size_t j = i + 1; j < m; ++j) {
            const Complex a = hp[i].normal, b = hp[j].normal;
            const double det = a.real() * b.imag() - a.imag() * b.real();
            if (std::abs(det) <= 1e-14 * std::max(1.0, std::abs(a) * std::abs(b))) continue;
            const double x = (hp[i].offset * b.imag() - hp[j].offset * a.imag()) / det;
            const double y = (hp[j].offset * a.real() - hp[i].offset * b.real()) / det;
            consider(Complex(x, y));
        }
    }
    return best;
}

StarReport check_star_polygon_product(const ConvexPolygon& p1, const ConvexPolygon& p2,
                                      std::vector<Complex> candidates, double tol) {
    if (p1.size() == 0 || p2.size() == 0)
        throw InvalidInput("check_star_polygon_product: empty polygon");

    const ConvexBody k1{p1}, k2{p2};
    std::vector<Complex> vps;
    double r_max = 0.0;
    for (Complex a : p1.vertices) {
        for (Complex b : p2.vertices) {
            vps.push_back(a * b);
            r_max = std::max(r_max, std::abs(a * b));
        }
    }

    StarReport report;
    const auto test_candidate = [&](Complex cand) -> bool {
        ++report.candidates_tested;
        const CandidateCheck chk = verify_polygon_candidate(k1, k2, vps, cand, tol, 128);
        if (chk.ok) {
            report.verdict = StarReport::Verdict::StarShaped;
            report.center = cand;
            return true;
        }
        report.witness = chk.witness;
        return false;
    };

    // Constraint analysis first: every star center must satisfy the exposed
    // tangent half-planes and |z| <= r_max.
    const std::vector<HalfPlane> constraints = star_center_constraints(p1, p2);
    bool pinched = false;
    Complex pinch_candidate = 0.0;
    bool infeasible = false;

    if (!constraints.empty()) {
        const std::optional<Complex> z_star = min_norm_point(constraints);
        const double pinch_tol = std::max(1e-6, 1e-9 * r_max);
        if (!z_star || std::abs(*z_star) > r_max + pinch_tol) {
            infeasible = true;
            if (z_star) pinch_candidate = *z_star * (r_max / std::abs(*z_star));
        } else {
            const double diam =
                2.0 * std::sqrt(std::max(0.0, r_max * r_max - std::norm(*z_star)));
            if (diam <= pinch_tol) {
                pinched = true;
                pinch_candidate = *z_star;
            }
        }
    }

    if (pinched || infeasible) {
        // the feasible set is (at most) a single point; test it and decide
        if (test_candidate(pinch_candidate)) return report;
        report.verdict = StarReport::Verdict::NotStarShaped;
        return report;
    }

    // Generic candidate testing.
    if (candidates.empty()) {
        candidates = vps;
        for (const Segment& ea : polygon_edges(p1)) {
            for (const Segment& eb : polygon_edges(p2)) {
                try {
                    const StarCenterSet set = star_centers_general_position(ea, eb);
                    for (Complex c : set.representatives()) candidates.push_back(c);
                } catch (const Error&) {
                }
            }
        }
        const ConvexPolygon hull = convex_hull(vps);
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for (Complex v : hull.vertices) {
            xmin = std::min(xmin, v.real());
            xmax = std::max(xmax, v.real());
            ymin = std::min(ymin, v.imag());
            ymax = std::max(ymax, v.imag());
        }
        for (int i = 0; i < 33; ++i)
            for (int j = 0; j < 33; ++j) {
                const Complex z(xmin + (i + 0.5) * (xmax - xmin) / 33,
                                ymin + (j + 0.5) * (ymax - ymin) / 33);
                if (contains_point(hull, z, 0.0)) candidates.push_back(z);
            }
    }

    // Sound filter: candidates violating a constraint cannot be centers.
    const auto admissible = [&](Complex z) {
        if (std::abs(z) > r_max * (1.0 + 1e-9) + 1e-12) return false;
        for (const HalfPlane& h : constraints) {
            const double slack = 1e-7 * (std::abs(h.offset) + std::abs(h.normal) * std::abs(z) + 1.0);
            if (dot(h.normal, z) < h.offset - slack) return false;
        }
        return true;
    };

    for (Complex cand : candidates) {
        if (!admissible(cand)) continue;
        if (test_candidate(cand)) return report;
    }
    report.verdict = StarReport::Verdict::Unknown;
    report.witness.reset();
    return report;
}

// ---------------------------------------------------------------------------
// Symmetric triangle
// ---------------------------------------------------------------------------

Complex star_center_symmetric_triangle(double r, Complex a, double tol) {
    const ConvexPolygon tri({Complex(r, 0.0), a, std::conj(a)});
    const ConvexBody body{tri};
    const Complex center = std::norm(a);

    // the five segment containments from the proof
    const Complex targets[5] = {r * r, r * a, r * std::conj(a), a * a,
                                std::conj(a) * std::conj(a)};
    for (Complex q : targets) {
        for (int k = 0; k <= 128; ++k) {
            const double t = k / 128.0;
            const Complex z = center + t * (q - center);
            if (!member_exact(body, body, z, tol))
                throw InternalInconsistency(
                    "star_center_symmetric_triangle: containment failed at t=" +
                    std::to_string(t));
        }
    }
    return center;
}

// ---------------------------------------------------------------------------
// Zero-center products
// ---------------------------------------------------------------------------

Complex zero_center_product(const PieceSet& k1, const PieceSet& k2, double tol) {
    if (k1.pieces.empty() || k2.pieces.empty())
        throw InvalidInput("zero_center_product: empty factor");
    double scale = 1.0;
    for (const ConvexBody& piece : k1.pieces)
        scale = std::max(scale, farthest_distance(piece, Complex(0.0)));
    const double stol = tol * scale;
    if (!contains_point(k1, Complex(0.0), stol))
        throw InvalidInput("zero_center_product: 0 is not in K1");

    // spot-check the asserted 0-star-shapedness of K1 on samples
    const std::vector<Complex> samples = sample_pieces(k1, 16, 5);
    for (size_t i = 0; i < samples.size(); i += std::max<size_t>(1, samples.size() / 32)) {
        for (double t : {0.25, 0.5, 0.75}) {
            if (!contains_point(k1, t * samples[i], stol))
                throw InvalidInput(
                    "zero_center_product: K1 is not 0-star-shaped on sampled points");
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Multi-factor products
// ---------------------------------------------------------------------------

namespace {

/// Deterministic sample cloud of a product of bodies, thinned to <= cap.
std::vector<Complex> product_cloud(const std::vector<ConvexBody>& factors, size_t cap) {
    std::vector<Complex> cloud{Complex(1.0, 0.0)};
    for (const ConvexBody& f : factors) {
        const std::vector<Complex> pts = sample_body(f, 16, 9);
        std::vector<Complex> next;
        next.reserve(cloud.size() * pts.size());
        for (Complex c : cloud)
            for (Complex p : pts) next.push_back(c * p);
        if (next.size() > cap) {
            std::vector<Complex> thin;
            thin.reserve(cap);
            const double stride = static_cast<double>(next.size()) / cap;
            for (size_t i = 0; i < cap; ++i)
                thin.push_back(next[static_cast<size_t>(i * stride)]);
            next = std::move(thin);
        }
        cloud = std::move(next);
    }
    return cloud;
}

std::optional<Complex> fit_in_disk(const std::vector<Complex>& hull_pts, double r) {
    // feasible mu has |mu v - 1| <= r for every v: intersect the disks
    // D(1/v, r/|v|) by minimizing the largest deficit (Nelder-Mead, 2D).
    const auto g = [&](Complex mu) {
        double worst = -1e300;
        for (Complex v : hull_pts) worst = std::max(worst, std::abs(mu * v - 1.0) - r);
        return worst;
    };
    Complex best = 1.0;
    double best_val = g(best);
    Complex anchor_inv = 0.0;
    {
        Complex sum = 0.0;
        for (Complex v : hull_pts) sum += v;
        sum /= static_cast<double>(hull_pts.size());
        if (std::abs(sum) > 1e-12) anchor_inv = 1.0 / sum;
    }
    if (std::abs(anchor_inv) > 0 && g(anchor_inv) < best_val) {
        best = anchor_inv;
        best_val = g(best);
    }
    // coordinate-descent refinement
    double step = 0.5 * std::max(std::abs(best), 1e-3);
    for (int iter = 0; iter < 200 && step > 1e-12; ++iter) {
        bool improved = false;
        for (Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
            const Complex trial = best + step * dir;
            const double val = g(trial);
            if (val < best_val) {
                best = trial;
                best_val = val;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    if (best_val <= -1e-9) return best;
    return std::nullopt;
}

std::optional<Complex> fit_in_halfplane(const std::vector<Complex>& hull_pts) {
    // feasible mu with Re(mu v) >= 1 for all v; try mu = 1 first, then scan
    // rotation angles for a positive minimum of Re(e^{i phi} v).
    const auto min_re = [&](Complex mu) {
        double worst = 1e300;
        for (Complex v : hull_pts) worst = std::min(worst, (mu * v).real());
        return worst;
    };
    if (min_re(1.0) >= 1.0 - 1e-12) return Complex(1.0);
    double best_phi = 0.0, best_m = -1e300;
    for (int k = 0; k <= 720; ++k) {
        const double phi = -M_PI + 2.0 * M_PI * k / 720;
        const double m = min_re(std::polar(1.0, phi));
        if (m > best_m) {
            best_m = m;
            best_phi = phi;
        }
    }
    if (best_m <= 1e-12) return std::nullopt;
    return std::polar(1.0 / best_m * (1.0 + 1e-12), best_phi);
}

}  // namespace

StarReport multi_product_star_center(const std::vector<ConvexBody>& factors, double tol) {
    if (factors.size() < 2)
        throw InvalidInput("multi_product_star_center: need at least 2 factors");

    StarReport report;

    // case 1: a factor containing 0 makes 0 a star center
    for (const ConvexBody& f : factors) {
        const double scale = std::max(1.0, farthest_distance(f, Complex(0.0)));
        if (contains_point(f, Complex(0.0), tol * scale)) {
            report.verdict = StarReport::Verdict::StarShaped;
            report.center = 0.0;
            report.candidates_tested = 1;
            return report;
        }
    }

    // case 2: a disk factor normalized to D(1, r), r < 1
    for (size_t di = 0; di < factors.size(); ++di) {
        const auto* disk = std::get_if<Disk>(&factors[di]);
        if (!disk) continue;
        if (std::abs(disk->center) <= disk->radius) continue;
        const Complex mu1 = 1.0 / disk->center;
        const double r = disk->radius / std::abs(disk->center);

        std::vector<ConvexBody> rest;
        for (size_t j = 0; j < factors.size(); ++j)
            if (j != di) rest.push_back(factors[j]);
        const std::vector<Complex> cloud = product_cloud(rest, 2048);
        const ConvexPolygon hull = convex_hull(cloud);
        const std::vector<Complex>& hv = hull.vertices;

        // (2.a) mu * rest inside D(1, r): sound for any subset by the disk
        // subset theorem.
        if (r > 0.0 && r < 1.0) {
            if (const auto mu = fit_in_disk(hv, r)) {
                bool ok = true;
                for (Complex v : cloud)
                    if (std::abs(*mu * v - 1.0) > r + 1e-7) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    report.verdict = StarReport::Verdict::StarShaped;
                    report.center = (1.0 - r * r) / (mu1 * *mu);
                    report.candidates_tested += 1;
                    return report;
                }
            }
        }

        // (2.b) mu * rest inside {Re >= 1}; the slice argument additionally
        // needs K(1, mu v) inside mu * rest, which is checkable exactly only
        // for a single remaining factor.
        if (rest.size() == 1) {
            if (const auto mu = fit_in_halfplane(hv)) {
                bool ok = true;
                const std::vector<Complex> rest_samples = sample_body(rest[0], 48, 16);
                for (size_t i = 0; i < rest_samples.size() && ok; ++i) {
                    const Complex mv = *mu * rest_samples[i];
                    if (mv.real() < 1.0 - 1e-9) {
                        ok = false;
                        break;
                    }
                    for (int k = 0; k <= 16; ++k) {
                        const double t = k / 16.0;
                        const Complex ct = 1.0 + t * (mv - 1.0);
                        if (!contains_point(rest[0], ct / *mu, tol)) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) {
                    report.verdict = StarReport::Verdict::StarShaped;
                    report.center = 1.0 / (mu1 * *mu);
                    report.candidates_tested += 1;
                    return report;
                }
            }
        }
    }

    report.verdict = StarReport::Verdict::Unknown;
    return report;
}

}  // namespace minkprod
