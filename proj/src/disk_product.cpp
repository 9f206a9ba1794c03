#include "minkprod/disk_product.hpp"

#include <algorithm>
#include <cmath>

namespace minkprod {

Disk disk_times_point(const Disk& d, Complex b) {
    return Disk(b * d.center, std::abs(b) * d.radius);
}

DiskProductCert star_center_disk_subset(Complex mu, double R,
                                        const std::vector<Complex>& subset_samples,
                                        double tol) {
    if (!(R >= 0.0)) throw InvalidInput("star_center_disk_subset: R must be >= 0");
    if (std::abs(mu) <= R)
        throw InvalidInput(
            "star_center_disk_subset: 0 in D(mu, R); use the zero-center shortcut");
    if (subset_samples.empty())
        throw InvalidInput("star_center_disk_subset: empty subset sample");

    const double r = R / std::abs(mu);
    DiskProductCert cert;
    cert.theorem = DiskTheorem::Subset51;
    cert.r_canonical = r;
    cert.center_claimed = mu * mu * (1.0 - r * r);

    const Disk k1(mu, R);
    const double spot = tol * std::max(1.0, std::abs(mu) + R);
    for (Complex s : subset_samples)
        if (!contains_point(k1, s, spot))
            throw InvalidInput("star_center_disk_subset: sample outside D(mu, R)");

    // Every segment from the center to s*d stays inside the single disk
    // s * D(mu, R); checked on sampled s, boundary d and segment points.
    const size_t stride = std::max<size_t>(1, subset_samples.size() / 64);
    bool ok = true;
    for (size_t i = 0; i < subset_samples.size() && ok; i += stride) {
        const Complex s = subset_samples[i];
        const Disk slice = disk_times_point(k1, s);
        const double slack = tol * std::max(1.0, std::abs(s) * (std::abs(mu) + R));
        if (std::abs(cert.center_claimed - slice.center) > slice.radius + slack) {
            ok = false;
            break;
        }
        for (int k = 0; k < 64 && ok; ++k) {
            const Complex d = mu + R * std::polar(1.0, 2.0 * M_PI * (k + 0.5) / 64);
            const Complex q = s * d;
            for (int j = 0; j <= 32; ++j) {
                const double t = j / 32.0;
                const Complex w = cert.center_claimed + t * (q - cert.center_claimed);
                if (std::abs(w - slice.center) > slice.radius + slack) {
                    ok = false;
                    break;
                }
            }
        }
    }
    cert.verified = ok;
    return cert;
}

bool member_segment_disk(Complex b, double r, Complex z, double tol) {
    const Complex delta = b - 1.0;
    const double A = std::norm(delta) * (1.0 - r * r);
    const double B = -2.0 * dot(delta, z - 1.0) - 2.0 * r * r * delta.real();
    const double C = std::norm(z - 1.0) - r * r;

    auto f = [&](double s) { return A * s * s + B * s + C; };
    double fmin = std::min(f(0.0), f(1.0));
    if (A > 1e-300) {
        const double sv = -B / (2.0 * A);
        if (sv > 0.0 && sv < 1.0) fmin = std::min(fmin, f(sv));
    }
    // f is |z - c(s)|^2 - r^2 |c(s)|^2; scale tolerance accordingly
    const double slack = 2.0 * tol * (std::abs(z) + std::abs(b) + 1.0);
    return fmin <= slack;
}

DiskProductCert star_center_segment_disk(Complex b, double r, double tol) {
    if (!(r > 0.0 && r <= 1.0))
        throw InvalidInput("star_center_segment_disk: r must be in (0, 1]");
    if (b.real() < 1.0 - kDefaultTol)
        throw InvalidInput("star_center_segment_disk: Re(b) >= 1 required");

    DiskProductCert cert;
    cert.theorem = DiskTheorem::SegmentThmB;
    cert.r_canonical = r;
    cert.center_claimed = 1.0;

    // Sampled product points z = c(s) (1 + r e^{i phi}); every t z + (1 - t)
    // must stay a member.
    const Complex delta = b - 1.0;
    bool ok = true;
    for (int is = 0; is <= 16 && ok; ++is) {
        const Complex c = 1.0 + (is / 16.0) * delta;
        for (int ip = 0; ip < 16 && ok; ++ip) {
            const Complex z = c * (1.0 + r * std::polar(1.0, 2.0 * M_PI * ip / 16));
            for (int it = 0; it <= 16; ++it) {
                const double t = it / 16.0;
                if (!member_segment_disk(b, r, t * z + (1.0 - t), tol)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    cert.verified = ok;
    return cert;
}

StarSetCertResult star_shaped_times_disk(const PieceSet& s_set, Complex star_center,
                                         Complex a, double r, double tol) {
    if (s_set.pieces.empty()) throw InvalidInput("star_shaped_times_disk: empty set");
    if (!(r >= 0.0)) throw InvalidInput("star_shaped_times_disk: r must be >= 0");

    StarSetCertResult out;
    out.cert.theorem = DiskTheorem::StarSetThmS;

    const Disk disk(a, r);
    const double scale = std::max(1.0, std::abs(a) + r);

    if (std::abs(a) <= r + kDefaultTol * scale) {
        // 0 in the disk: zero-center shortcut
        out.cert.center_claimed = 0.0;
        out.cert.r_canonical = 1.0;
    } else {
        out.cert.center_claimed = star_center * a;
        out.cert.r_canonical = r / std::abs(a);
    }

    const auto member = [&](Complex w) {
        for (const ConvexBody& piece : s_set.pieces)
            if (member_exact(piece, ConvexBody(disk), w, tol)) return true;
        return false;
    };

    const std::vector<Complex> samples = sample_pieces(s_set, 24, 8);
    bool ok = contains_point(s_set, star_center, tol * scale);
    const Complex p = out.cert.center_claimed;
    for (size_t i = 0; i < samples.size() && ok; ++i) {
        const Complex z = samples[i];
        for (int k = 0; k < 16 && ok; ++k) {
            const Complex d = a + r * std::polar(1.0, 2.0 * M_PI * (k + 0.5) / 16);
            const Complex q = z * d;
            for (int j = 1; j <= 24; ++j) {
                const double t = j / 24.0;
                if (!member(p + t * (q - p))) {
                    ok = false;
                    break;
                }
            }
        }
    }
    out.cert.verified = ok;

    if (!ok) {
        // refused: attach the raster-oracle verdict on the union
        std::vector<std::pair<ConvexBody, ConvexBody>> pairs;
        pairs.reserve(s_set.pieces.size());
        for (const ConvexBody& piece : s_set.pieces) pairs.emplace_back(piece, ConvexBody(disk));
        const RasterGrid grid = raster_union(pairs, 512, 256);
        Complex hole;
        const int holes = enclosed_empty_components(grid, &hole);
        out.oracle_hole_detected = holes > 0;
        if (holes > 0) out.hole_location = hole;
    }
    return out;
}

}  // namespace minkprod
