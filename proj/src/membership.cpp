#include "minkprod/membership.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <random>

#include "parallel.hpp"

namespace minkprod {

namespace {

constexpr double kTiny = 1e-14;

double body_extent(const ConvexBody& b) { return farthest_distance(b, Complex(0.0)); }

/// Distance from 0 to the topological boundary of a segment/polygon body.
double origin_boundary_clearance(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return dist_point_segment(Complex(0.0), b);
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                const int n = b.size();
                if (n == 1) return std::abs(b.vertices[0]);
                double d = std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i)
                    d = std::min(d, dist_point_segment(
                                        Complex(0.0),
                                        Segment(b.vertices[static_cast<size_t>(i)],
                                                b.vertices[static_cast<size_t>((i + 1) % std::max(n, 2))])));
                return d;
            } else {
                return std::abs(std::abs(b.center) - b.radius);
            }
        },
        body);
}

// -------------------------------------------------------------------------
// Small intersection predicates
// -------------------------------------------------------------------------

bool segments_close(Complex a, Complex b, Complex c, Complex d, double tol) {
    const double d1 = orient(a, b, c), d2 = orient(a, b, d);
    const double d3 = orient(c, d, a), d4 = orient(c, d, b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    const Segment ab(a, b), cd(c, d);
    return dist_point_segment(c, ab) <= tol || dist_point_segment(d, ab) <= tol ||
           dist_point_segment(a, cd) <= tol || dist_point_segment(b, cd) <= tol;
}

/// Circle |p - c| = r against the (infinite) line through a, b; returns hit
/// points and the line parameter of each (a + t (b - a)).
int circle_line(Complex c, double r, Complex a, Complex b, double tol, Complex pts[2],
                double ts[2]) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 <= kTiny) return 0;
    const double t0 = dot(d, c - a) / len2;
    const Complex foot = a + t0 * d;
    const double h = std::abs(foot - c);
    if (h > r + tol) return 0;
    const double off2 = std::max(0.0, r * r - h * h);
    const double off = std::sqrt(off2) / std::sqrt(len2);
    int k = 0;
    pts[k] = a + (t0 - off) * d;
    ts[k++] = t0 - off;
    if (off > kTiny) {
        pts[k] = a + (t0 + off) * d;
        ts[k++] = t0 + off;
    }
    return k;
}

int circle_circle(Complex c1, double r1, Complex c2, double r2, double tol, Complex pts[2]) {
    const double d = std::abs(c2 - c1);
    if (d <= kTiny) return 0;  // concentric; caller handles coincident circles
    if (d > r1 + r2 + tol) return 0;
    if (d < std::abs(r1 - r2) - tol) return 0;
    const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double h2 = r1 * r1 - a * a;
    const double h = std::sqrt(std::max(0.0, h2));
    const Complex u = (c2 - c1) / d;
    const Complex iu(-u.imag(), u.real());
    int k = 0;
    pts[k++] = c1 + a * u + h * iu;
    if (h > kTiny) pts[k++] = c1 + a * u - h * iu;
    return k;
}

bool arc_contains_angle(const CircArc& arc, double phi, double ang_tol) {
    const double two_pi = 2.0 * M_PI;
    double rel = phi - arc.theta_start;
    if (arc.sweep >= 0.0) {
        rel = std::fmod(rel, two_pi);
        if (rel < 0) rel += two_pi;
        return rel <= arc.sweep + ang_tol || two_pi - rel <= ang_tol;
    }
    rel = std::fmod(-rel, two_pi);
    if (rel < 0) rel += two_pi;
    return rel <= -arc.sweep + ang_tol || two_pi - rel <= ang_tol;
}

bool point_on_arc(const CircArc& arc, Complex p, double tol) {
    if (std::abs(std::abs(p - arc.center) - arc.radius) > tol) return false;
    const double phi = std::atan2((p - arc.center).imag(), (p - arc.center).real());
    const double ang_tol = std::min(1.0, tol / std::max(arc.radius, kTiny));
    return arc_contains_angle(arc, phi, ang_tol);
}

bool arc_hits_segment(const CircArc& arc, Complex a, Complex b, double tol) {
    Complex pts[2];
    double ts[2];
    const int k = circle_line(arc.center, arc.radius, a, b, tol, pts, ts);
    const double len = std::abs(b - a);
    const double t_slack = len > kTiny ? tol / len : 0.0;
    for (int i = 0; i < k; ++i) {
        if (ts[i] < -t_slack || ts[i] > 1.0 + t_slack) continue;
        if (point_on_arc(arc, pts[i], 4.0 * tol + 1e-12)) return true;
    }
    return false;
}

bool arc_hits_circle(const CircArc& arc, Complex c, double r, double tol) {
    if (std::abs(arc.center - c) <= tol && std::abs(arc.radius - r) <= tol)
        return true;  // coincident circles: the whole arc lies on it
    Complex pts[2];
    const int k = circle_circle(arc.center, arc.radius, c, r, tol, pts);
    for (int i = 0; i < k; ++i)
        if (point_on_arc(arc, pts[i], 4.0 * tol + 1e-12)) return true;
    return false;
}

bool segment_hits_circle(Complex a, Complex b, Complex c, double r, double tol) {
    const double lo = dist_point_segment(c, Segment(a, b));
    const double hi = std::max(std::abs(a - c), std::abs(b - c));
    return lo <= r + tol && hi >= r - tol;
}

std::vector<Segment> body_edges(const ConvexBody& body) {
    std::vector<Segment> out;
    if (const auto* s = std::get_if<Segment>(&body)) {
        out.push_back(*s);
        return out;
    }
    if (const auto* p = std::get_if<ConvexPolygon>(&body)) {
        const int n = p->size();
        if (n == 1) {
            out.emplace_back(p->vertices[0], p->vertices[0]);
        } else if (n == 2) {
            out.emplace_back(p->vertices[0], p->vertices[1]);
        } else {
            for (int i = 0; i < n; ++i)
                out.emplace_back(p->vertices[static_cast<size_t>(i)],
                                 p->vertices[static_cast<size_t>((i + 1) % n)]);
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Inversion image
// ---------------------------------------------------------------------------

ArcRegion invert_body(const ConvexBody& divisor, Complex z) {
    if (std::abs(z) <= kTiny) throw InvalidInput("invert_body: z must be nonzero");
    const double scale = std::max(body_extent(divisor), 1.0);

    std::vector<Complex> vs = body_vertices(divisor);
    if (std::get_if<Disk>(&divisor))
        throw InvalidInput("invert_body: disk divisors use the Apollonius path");
    for (Complex v : vs)
        if (std::abs(v) <= kDefaultTol * scale)
            throw InvalidInput("invert_body: divisor boundary touches 0");

    ArcRegion out;
    const bool closed = vs.size() >= 3;
    const size_t nedges = closed ? vs.size() : vs.size() - 1;
    for (size_t e = 0; e < std::max<size_t>(nedges, 1); ++e) {
        const Complex ba = vs[e];
        const Complex bb = vs[(e + 1) % vs.size()];
        if (std::abs(bb - ba) <= kDefaultTol * scale) {
            if (vs.size() == 1) out.boundary.push_back(LineSeg{z / ba, z / ba});
            continue;
        }
        const Complex dir = (bb - ba) / std::abs(bb - ba);
        const Complex n_hat(-dir.imag(), dir.real());
        const double h = dot(n_hat, ba);  // distance of the edge line from 0
        if (std::abs(h) <= kDefaultTol * scale) {
            // edge line through 0: inversion keeps it straight
            out.boundary.push_back(LineSeg{z / ba, z / bb});
            continue;
        }
        // b -> 1/b maps the line to a circle through 0 centered at
        // conj(n)/(2h); the z factor rotates and scales it.
        const Complex center = z * std::conj(n_hat) / (2.0 * h);
        const double radius = std::abs(z) / (2.0 * std::abs(h));
        const Complex pa = z / ba;
        const Complex pb = z / bb;
        const Complex pm = z / (0.5 * (ba + bb));
        const double th_s = std::atan2((pa - center).imag(), (pa - center).real());
        const double th_e = std::atan2((pb - center).imag(), (pb - center).real());
        const double th_m = std::atan2((pm - center).imag(), (pm - center).real());
        const double two_pi = 2.0 * M_PI;
        double ccw = std::fmod(th_e - th_s, two_pi);
        if (ccw < 0) ccw += two_pi;
        double mid = std::fmod(th_m - th_s, two_pi);
        if (mid < 0) mid += two_pi;
        const double sweep = (mid <= ccw + 1e-9) ? ccw : ccw - two_pi;
        out.boundary.push_back(CircArc{center, radius, th_s, sweep});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Apollonius path (disk divisor)
// ---------------------------------------------------------------------------

bool member_disk_factor(const ConvexBody& k1, const Disk& d, Complex z, double tol) {
    const double scale = std::max({body_extent(k1), std::abs(d.center) + d.radius, 1.0});
    if (std::abs(z) == 0.0)
        return contains_point(k1, Complex(0.0), tol) || contains_point(d, Complex(0.0), tol);

    const Complex c2 = d.center;
    const double r2 = d.radius;
    if (r2 <= kDefaultTol * scale) {
        // point divisor
        if (std::abs(c2) <= kDefaultTol * scale) return std::abs(z) <= tol;
        return contains_point(k1, z / c2, tol / std::abs(c2));
    }

    const double D = std::norm(c2) - r2 * r2;
    const double cls = kDefaultTol * (std::abs(c2) + r2) * (std::abs(c2) + r2);

    if (std::abs(D) <= cls) {
        // 0 on the divisor circle: the Apollonius set is the half-plane
        // dot(u, a) >= |z|^2 / 2 with u = z * conj(c2).
        const Complex u = z * std::conj(c2);
        const double slack = tol * (std::abs(z) + 1.0 + body_extent(k1) * std::abs(c2));
        return support(k1, u) >= 0.5 * std::norm(z) - slack;
    }
    const Complex wc = z * std::conj(c2) / D;
    const double rho = r2 * std::abs(z) / std::abs(D);
    if (D > 0.0) {
        const double atol = tol / std::max(std::abs(c2) - r2, kTiny);
        return dist_point_body(wc, k1) <= rho + atol;
    }
    const double atol = tol / std::max(r2 - std::abs(c2), kTiny);
    return farthest_distance(k1, wc) >= rho - atol;
}

// ---------------------------------------------------------------------------
// Inversion path
// ---------------------------------------------------------------------------

namespace {

/// K1 intersects {z / b : b in divisor}? Requires z != 0 and the divisor
/// boundary away from 0.
bool hits_inversion_region(const ConvexBody& k1, const ConvexBody& divisor, Complex z,
                           double tol) {
    const auto in_region = [&](Complex a) {
        const double am = std::abs(a);
        if (am <= kTiny) return false;
        return contains_point(divisor, z / a, tol / am);
    };

    // vertex and anchor probes (cover mutual containment)
    for (Complex b : body_vertices(divisor)) {
        const double bm = std::abs(b);
        if (bm <= kTiny) continue;
        if (contains_point(k1, z / b, tol / bm)) return true;
    }
    for (Complex v : body_vertices(k1))
        if (in_region(v)) return true;
    {
        const Complex a1 = body_anchor(k1);
        if (std::abs(a1) > kTiny && in_region(a1)) return true;
        const Complex a2 = body_anchor(divisor);
        const double am = std::abs(a2);
        if (am > kTiny && contains_point(k1, z / a2, tol / am)) return true;
    }

    // boundary-boundary crossings
    const ArcRegion region = invert_body(divisor, z);
    const Disk* disk1 = std::get_if<Disk>(&k1);
    const std::vector<Segment> edges = disk1 ? std::vector<Segment>{} : body_edges(k1);

    for (const BoundaryPiece& piece : region.boundary) {
        if (const auto* ls = std::get_if<LineSeg>(&piece)) {
            if (disk1) {
                if (segment_hits_circle(ls->a, ls->b, disk1->center, disk1->radius, tol))
                    return true;
            } else {
                for (const Segment& e : edges)
                    if (segments_close(ls->a, ls->b, e.p, e.q, tol)) return true;
            }
        } else if (const auto* arc = std::get_if<CircArc>(&piece)) {
            if (disk1) {
                if (arc_hits_circle(*arc, disk1->center, disk1->radius, tol)) return true;
            } else {
                for (const Segment& e : edges)
                    if (arc_hits_segment(*arc, e.p, e.q, tol)) return true;
            }
        }
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// member_exact
// ---------------------------------------------------------------------------

bool member_exact(const ConvexBody& k1, const ConvexBody& k2, Complex z, double tol) {
    const double scale = std::max({body_extent(k1), body_extent(k2), 1.0});
    const double dtol = kDefaultTol * scale;

    if (std::abs(z) == 0.0)
        return contains_point(k1, Complex(0.0), tol) || contains_point(k2, Complex(0.0), tol);

    const auto s1 = as_segment(k1);
    const auto s2 = as_segment(k2);
    if (s1 && s2) return member_seg_seg(*s1, *s2, z, tol);
    if (s1 && s1->is_point(dtol)) {
        const Complex a = s1->p;
        if (std::abs(a) <= dtol) return std::abs(z) <= tol;
        return contains_point(k2, z / a, tol / std::abs(a));
    }
    if (s2 && s2->is_point(dtol)) {
        const Complex b = s2->p;
        if (std::abs(b) <= dtol) return std::abs(z) <= tol;
        return contains_point(k1, z / b, tol / std::abs(b));
    }

    if (const auto* d2 = std::get_if<Disk>(&k2)) return member_disk_factor(k1, *d2, z, tol);
    if (const auto* d1 = std::get_if<Disk>(&k1)) return member_disk_factor(k2, *d1, z, tol);

    // Both factors are segments/polygons and at least one is a true polygon.
    const bool zero_in_1 = contains_point(k1, Complex(0.0), dtol);
    const bool zero_in_2 = contains_point(k2, Complex(0.0), dtol);
    const double clear_1 = origin_boundary_clearance(k1);
    const double clear_2 = origin_boundary_clearance(k2);

    if (!zero_in_2) return hits_inversion_region(k1, k2, z, tol);
    if (!zero_in_1) return hits_inversion_region(k2, k1, z, tol);
    // 0 in both; a strictly interior origin still inverts cleanly
    if (clear_2 > 16.0 * dtol) return hits_inversion_region(k1, k2, z, tol);
    if (clear_1 > 16.0 * dtol) return hits_inversion_region(k2, k1, z, tol);

    // 0 on (or near) both boundaries: raster fallback at a tol-scaled grid.
    const RasterGrid grid = raster_product(k1, k2, 512, 256);
    return grid.occupied(z);
}

// ---------------------------------------------------------------------------
// Raster oracle
// ---------------------------------------------------------------------------

int RasterGrid::ix(double x) const {
    const int i = static_cast<int>(std::floor((x - x_min) / (x_max - x_min) * n));
    return std::clamp(i, 0, n - 1);
}

int RasterGrid::iy(double y) const {
    const int j = static_cast<int>(std::floor((y - y_min) / (y_max - y_min) * n));
    return std::clamp(j, 0, n - 1);
}

bool RasterGrid::occupied(Complex z) const {
    if (z.real() < x_min || z.real() > x_max || z.imag() < y_min || z.imag() > y_max)
        return false;
    return at(ix(z.real()), iy(z.imag())) != 0;
}

bool RasterGrid::near_boundary(Complex z, int band) const {
    if (z.real() < x_min || z.real() > x_max || z.imag() < y_min || z.imag() > y_max)
        return false;
    const int i0 = ix(z.real());
    const int j0 = iy(z.imag());
    const std::uint8_t own = at(i0, j0);
    for (int dj = -band; dj <= band; ++dj) {
        for (int di = -band; di <= band; ++di) {
            const int i = i0 + di;
            const int j = j0 + dj;
            const std::uint8_t v =
                (i < 0 || i >= n || j < 0 || j >= n) ? std::uint8_t{0} : at(i, j);
            if (v != own) return true;
        }
    }
    return false;
}

namespace {

struct FactorSamples {
    std::vector<Complex> boundary;
    std::vector<Complex> interior;
};

FactorSamples sample_factor(const ConvexBody& body, int m, unsigned seed, unsigned salt) {
    FactorSamples out;
    const int nb = std::max(4, m / 2);
    const int ni = std::max(0, m - nb);
    std::mt19937 rng(seed * 77001u + salt);
    std::uniform_real_distribution<double> uni(-0.49, 0.49);
    for (int i = 0; i < nb; ++i) {
        const double jitter = seed == 0 ? 0.0 : uni(rng);
        out.boundary.push_back(boundary_point(body, (i + 0.5 + jitter) / nb));
    }
    out.interior = sample_body(body, 0, ni);
    return out;
}

void draw_segment(RasterGrid& g, Complex a, Complex b) {
    const double cell = std::min(g.cell_w(), g.cell_h());
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / (0.45 * cell))));
    for (int k = 0; k <= steps; ++k) {
        const Complex z = a + (static_cast<double>(k) / steps) * (b - a);
        if (z.real() < g.x_min || z.real() > g.x_max || z.imag() < g.y_min || z.imag() > g.y_max)
            continue;
        g.at(g.ix(z.real()), g.iy(z.imag())) = 1;
    }
}

/// Flood from the border through empty cells; everything unreachable becomes
/// occupied (valid closure for a simply connected pair product).
void close_interior(RasterGrid& g) {
    const int n = g.n;
    std::vector<std::uint8_t> outside(static_cast<size_t>(n) * n, 0);
    std::deque<std::pair<int, int>> queue;
    auto push = [&](int i, int j) {
        if (i < 0 || i >= n || j < 0 || j >= n) return;
        const size_t idx = static_cast<size_t>(j) * n + i;
        if (outside[idx] || g.occ[idx]) return;
        outside[idx] = 1;
        queue.emplace_back(i, j);
    };
    for (int i = 0; i < n; ++i) {
        push(i, 0);
        push(i, n - 1);
        push(0, i);
        push(n - 1, i);
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        push(i - 1, j);
        push(i + 1, j);
        push(i, j - 1);
        push(i, j + 1);
    }
    for (size_t idx = 0; idx < g.occ.size(); ++idx)
        g.occ[idx] = outside[idx] ? std::uint8_t{0} : std::uint8_t{1};
}

void fill_pair(RasterGrid& layer, const ConvexBody& k1, const ConvexBody& k2, int m,
               unsigned seed) {
    const FactorSamples sa = sample_factor(k1, m, seed, 1);
    const FactorSamples sb = sample_factor(k2, m, seed, 2);
    const int na = static_cast<int>(sa.boundary.size());
    const int nb = static_cast<int>(sb.boundary.size());

    // boundary-times-boundary chords, drawn solid in both sweep directions
    detail::parallel_blocks(na, [&](int i, int) {
        const Complex a = sa.boundary[static_cast<size_t>(i)];
        for (int k = 0; k < nb; ++k)
            draw_segment(layer, a * sb.boundary[static_cast<size_t>(k)],
                         a * sb.boundary[static_cast<size_t>((k + 1) % nb)]);
    });
    for (int k = 0; k < nb; ++k) {
        const Complex b = sb.boundary[static_cast<size_t>(k)];
        for (int i = 0; i < na; ++i)
            draw_segment(layer, sa.boundary[static_cast<size_t>(i)] * b,
                         sa.boundary[static_cast<size_t>((i + 1) % na)] * b);
    }

    // thinned interior scatter (true product points; the fill does the rest)
    const size_t nia = sa.interior.size(), nib = sb.interior.size();
    if (nia > 0 && nib > 0) {
        const size_t total = nia * nib;
        const size_t stride = std::max<size_t>(1, total / 200000);
        for (size_t idx = 0; idx < total; idx += stride) {
            const Complex z = sa.interior[idx / nib] * sb.interior[idx % nib];
            if (z.real() < layer.x_min || z.real() > layer.x_max || z.imag() < layer.y_min ||
                z.imag() > layer.y_max)
                continue;
            layer.at(layer.ix(z.real()), layer.iy(z.imag())) = 1;
        }
    }
    close_interior(layer);
}

}  // namespace

RasterGrid raster_union(const std::vector<std::pair<ConvexBody, ConvexBody>>& pairs, int n,
                        int m, unsigned seed) {
    if (pairs.empty()) throw InvalidInput("raster_union: no factor pairs");
    n = std::max(n, 16);
    m = std::max(m, 16);

    // bounding box over products of boundary samples and vertices, 5% padded
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& [k1, k2] : pairs) {
        std::vector<Complex> ea = body_vertices(k1);
        std::vector<Complex> eb = body_vertices(k2);
        for (int i = 0; i < 64; ++i) {
            ea.push_back(boundary_point(k1, i / 64.0));
            eb.push_back(boundary_point(k2, i / 64.0));
        }
        for (Complex a : ea) {
            for (Complex b : eb) {
                const Complex z = a * b;
                xmin = std::min(xmin, z.real());
                xmax = std::max(xmax, z.real());
                ymin = std::min(ymin, z.imag());
                ymax = std::max(ymax, z.imag());
            }
        }
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double pad = 0.05 * span;

    RasterGrid grid;
    grid.n = n;
    grid.x_min = xmin - pad;
    grid.x_max = xmax + pad;
    grid.y_min = ymin - pad;
    grid.y_max = ymax + pad;
    grid.occ.assign(static_cast<size_t>(n) * n, 0);

    for (const auto& [k1, k2] : pairs) {
        RasterGrid layer = grid;
        layer.occ.assign(static_cast<size_t>(n) * n, 0);
        fill_pair(layer, k1, k2, m, seed);
        for (size_t i = 0; i < grid.occ.size(); ++i) grid.occ[i] |= layer.occ[i];
    }
    return grid;
}

RasterGrid raster_product(const ConvexBody& k1, const ConvexBody& k2, int n, int m,
                          unsigned seed) {
    return raster_union({{k1, k2}}, n, m, seed);
}

int enclosed_empty_components(const RasterGrid& grid, Complex* where) {
    const int n = grid.n;
    // 0 = unvisited empty, 1 = occupied, 2 = outside empty, 3 = hole
    std::vector<std::uint8_t> state(grid.occ.size());
    for (size_t i = 0; i < grid.occ.size(); ++i) state[i] = grid.occ[i] ? 1 : 0;

    std::deque<std::pair<int, int>> queue;
    auto push_outside = [&](int i, int j) {
        if (i < 0 || i >= n || j < 0 || j >= n) return;
        const size_t idx = static_cast<size_t>(j) * n + i;
        if (state[idx] != 0) return;
        state[idx] = 2;
        queue.emplace_back(i, j);
    };
    for (int i = 0; i < n; ++i) {
        push_outside(i, 0);
        push_outside(i, n - 1);
        push_outside(0, i);
        push_outside(n - 1, i);
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        push_outside(i - 1, j);
        push_outside(i + 1, j);
        push_outside(i, j - 1);
        push_outside(i, j + 1);
    }

    int components = 0;
    size_t best_size = 0;
    std::pair<int, int> best_cell{0, 0};
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (state[static_cast<size_t>(j) * n + i] != 0) continue;
            ++components;
            size_t size = 0;
            std::deque<std::pair<int, int>> comp{{i, j}};
            state[static_cast<size_t>(j) * n + i] = 3;
            while (!comp.empty()) {
                auto [ci, cj] = comp.front();
                comp.pop_front();
                ++size;
                if (size == 1 || size > best_size) best_cell = {ci, cj};
                const int di[4] = {-1, 1, 0, 0};
                const int dj[4] = {0, 0, -1, 1};
                for (int d = 0; d < 4; ++d) {
                    const int ni_ = ci + di[d];
                    const int nj_ = cj + dj[d];
                    if (ni_ < 0 || ni_ >= n || nj_ < 0 || nj_ >= n) continue;
                    const size_t idx = static_cast<size_t>(nj_) * n + ni_;
                    if (state[idx] == 0) {
                        state[idx] = 3;
                        comp.emplace_back(ni_, nj_);
                    }
                }
            }
            if (size > best_size) best_size = size;
        }
    }
    if (where && components > 0) {
        *where = Complex(grid.x_min + (best_cell.first + 0.5) * grid.cell_w(),
                         grid.y_min + (best_cell.second + 0.5) * grid.cell_h());
    }
    return components;
}

void write_pgm(const RasterGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_pgm: cannot open " + path);
    out << "P5\n" << grid.n << " " << grid.n << "\n1\n";
    // top row first
    for (int j = grid.n - 1; j >= 0; --j)
        out.write(reinterpret_cast<const char*>(&grid.occ[static_cast<size_t>(j) * grid.n]),
                  grid.n);
    if (!out) throw Error("write_pgm: write failed for " + path);
}

// ---------------------------------------------------------------------------
// Star-center verification
// ---------------------------------------------------------------------------

StarCheckResult check_star_center(const ConvexBody& k1, const ConvexBody& k2, Complex p,
                                  int boundary_samples, int seg_samples, double tol) {
    if (boundary_samples < 1 || seg_samples < 2)
        throw InvalidInput("check_star_center: need >= 1 boundary and >= 2 segment samples");
    if (!member_exact(k1, k2, p, tol))
        throw NotAMember("check_star_center: p is not in the product");

    const int na = std::max(1, static_cast<int>(std::lround(std::sqrt(boundary_samples))));
    const int nb = std::max(1, (boundary_samples + na - 1) / na);

    StarCheckResult result;
    for (int i = 0; i < na; ++i) {
        const Complex a = boundary_point(k1, (i + 0.5) / na);
        for (int j = 0; j < nb; ++j) {
            const Complex b = boundary_point(k2, (j + 0.5) / nb);
            const Complex q = a * b;
            double t_prev = 0.0;
            for (int k = 1; k <= seg_samples; ++k) {
                const double t = static_cast<double>(k) / seg_samples;
                const Complex zc = p + t * (q - p);
                if (!member_exact(k1, k2, zc, tol)) {
                    // refine the failing parameter by bisection
                    double lo = t_prev, hi = t;
                    while (hi - lo > 1e-6) {
                        const double mid = 0.5 * (lo + hi);
                        if (member_exact(k1, k2, p + mid * (q - p), tol))
                            lo = mid;
                        else
                            hi = mid;
                    }
                    result.ok = false;
                    result.witness = StarCheckWitness{a, b, hi, p + hi * (q - p)};
                    return result;
                }
                t_prev = t;
            }
        }
    }
    result.ok = true;
    return result;
}

}  // namespace minkprod
