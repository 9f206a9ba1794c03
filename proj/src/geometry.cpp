#include "minkprod/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace minkprod {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double wrap_angle(double a) {
    const double two_pi = 2.0 * M_PI;
    a = std::fmod(a, two_pi);
    if (a <= -M_PI) a += two_pi;
    if (a > M_PI) a -= two_pi;
    return a;
}

namespace {

void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw InvalidInput(std::string(what) + ": non-finite coordinate");
}

double scale_of(const std::vector<Complex>& pts) {
    double s = 1.0;
    for (Complex p : pts) s = std::max(s, std::abs(p));
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bodies
// ---------------------------------------------------------------------------

Segment::Segment(Complex p_, Complex q_) : p(p_), q(q_) {
    require_finite(p, "Segment");
    require_finite(q, "Segment");
}

bool Segment::is_point(double tol) const { return std::abs(q - p) <= tol; }

ConvexPolygon::ConvexPolygon(std::vector<Complex> pts) {
    *this = convex_hull(std::move(pts));
}

Complex ConvexPolygon::centroid() const {
    Complex s = 0.0;
    for (Complex v : vertices) s += v;
    return s / static_cast<double>(vertices.size());
}

double ConvexPolygon::perimeter() const {
    const int n = size();
    if (n < 2) return 0.0;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += std::abs(vertices[(i + 1) % n] - vertices[i]);
    return total;
}

Disk::Disk(Complex c, double r) : center(c), radius(r) {
    require_finite(c, "Disk");
    if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidInput("Disk: radius must be finite and >= 0");
}

ConvexPolygon convex_hull(std::vector<Complex> pts) {
    if (pts.empty()) throw InvalidInput("convex_hull: empty point set");
    for (Complex p : pts) require_finite(p, "convex_hull");

    const double scale = scale_of(pts);
    const double tol = kDefaultTol * scale;

    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [tol](Complex a, Complex b) { return std::abs(a - b) <= tol; }),
              pts.end());

    ConvexPolygon out;
    if (pts.size() == 1) {
        out.vertices = pts;
        return out;
    }

    // Andrew monotone chain; the strict (> tol) turn test drops collinear
    // interior points. Area tolerance is scale^2-relative.
    const double area_tol = kDefaultTol * scale * scale;
    std::vector<Complex> hull(2 * pts.size());
    int k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= area_tol) --k;
        hull[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = static_cast<int>(pts.size()) - 2; i >= 0; --i) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= area_tol) --k;
        hull[k++] = pts[static_cast<size_t>(i)];
    }
    hull.resize(static_cast<size_t>(k - 1));
    if (hull.size() == 2 && std::abs(hull[0] - hull[1]) <= tol) hull.resize(1);
    out.vertices = std::move(hull);
    return out;
}

// ---------------------------------------------------------------------------
// Boundary pieces
// ---------------------------------------------------------------------------

Complex eval_boundary_piece(const BoundaryPiece& piece, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("eval_boundary_piece: t outside [0,1]");
    return std::visit(
        [t](const auto& p) -> Complex {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LineSeg>) {
                return p.a + t * (p.b - p.a);
            } else if constexpr (std::is_same_v<T, ParaArc>) {
                const double s = p.s_lo + t * (p.s_hi - p.s_lo);
                const Complex u(1.0, s);
                return p.scale * u * u;
            } else {
                const double th = p.theta_start + t * p.sweep;
                return p.center + p.radius * Complex(std::cos(th), std::sin(th));
            }
        },
        piece);
}

Complex piece_start(const BoundaryPiece& piece) { return eval_boundary_piece(piece, 0.0); }
Complex piece_end(const BoundaryPiece& piece) { return eval_boundary_piece(piece, 1.0); }

bool chain_closes(const std::vector<BoundaryPiece>& chain, double tol) {
    if (chain.empty()) return false;
    for (size_t i = 0; i < chain.size(); ++i) {
        const Complex e = piece_end(chain[i]);
        const Complex s = piece_start(chain[(i + 1) % chain.size()]);
        if (std::abs(e - s) > tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Predicates and measures
// ---------------------------------------------------------------------------

double dist_point_segment(Complex z, const Segment& s) {
    const Complex d = s.q - s.p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - s.p);
    double t = dot(d, z - s.p) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (s.p + t * d));
}

double dist_point_polygon(Complex z, const ConvexPolygon& poly) {
    const int n = poly.size();
    if (n == 0) throw InvalidInput("dist_point_polygon: empty polygon");
    if (n == 1) return std::abs(z - poly.vertices[0]);
    if (n == 2) return dist_point_segment(z, Segment(poly.vertices[0], poly.vertices[1]));
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const Complex a = poly.vertices[static_cast<size_t>(i)];
        const Complex b = poly.vertices[static_cast<size_t>((i + 1) % n)];
        if (orient(a, b, z) < 0.0) inside = false;
        best = std::min(best, dist_point_segment(z, Segment(a, b)));
    }
    return inside ? 0.0 : best;
}

double dist_point_body(Complex z, const ConvexBody& body) {
    return std::visit(
        [z](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return dist_point_segment(z, b);
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                return dist_point_polygon(z, b);
            } else {
                return std::max(0.0, std::abs(z - b.center) - b.radius);
            }
        },
        body);
}

bool contains_point(const ConvexBody& body, Complex z, double tol) {
    if (tol < 0.0) throw InvalidInput("contains_point: tol must be >= 0");
    return dist_point_body(z, body) <= tol;
}

bool contains_point(const ConvexPolygon& poly, Complex z, double tol) {
    return dist_point_polygon(z, poly) <= tol;
}

bool contains_point(const Disk& d, Complex z, double tol) {
    return std::abs(z - d.center) <= d.radius + tol;
}

bool contains_point(const Segment& s, Complex z, double tol) {
    return dist_point_segment(z, s) <= tol;
}

double support(const ConvexBody& body, Complex dir) {
    return std::visit(
        [dir](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return std::max(dot(dir, b.p), dot(dir, b.q));
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                double m = -std::numeric_limits<double>::infinity();
                for (Complex v : b.vertices) m = std::max(m, dot(dir, v));
                return m;
            } else {
                return dot(dir, b.center) + b.radius * std::abs(dir);
            }
        },
        body);
}

double farthest_distance(const ConvexBody& body, Complex w) {
    return std::visit(
        [w](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return std::max(std::abs(b.p - w), std::abs(b.q - w));
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                double m = 0.0;
                for (Complex v : b.vertices) m = std::max(m, std::abs(v - w));
                return m;
            } else {
                return std::abs(b.center - w) + b.radius;
            }
        },
        body);
}

Complex body_anchor(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> Complex {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return 0.5 * (b.p + b.q);
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                return b.centroid();
            } else {
                return b.center;
            }
        },
        body);
}

std::vector<Complex> body_vertices(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> std::vector<Complex> {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return {b.p, b.q};
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                return b.vertices;
            } else {
                return {};
            }
        },
        body);
}

Complex boundary_point(const ConvexBody& body, double u) {
    u -= std::floor(u);
    return std::visit(
        [u](const auto& b) -> Complex {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return b.p + u * (b.q - b.p);
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                const int n = b.size();
                if (n == 1) return b.vertices[0];
                if (n == 2) {
                    // out-and-back so u covers the whole (degenerate) boundary
                    const double t = u < 0.5 ? 2.0 * u : 2.0 * (1.0 - u);
                    return b.vertices[0] + t * (b.vertices[1] - b.vertices[0]);
                }
                const double total = b.perimeter();
                double want = u * total;
                for (int i = 0; i < n; ++i) {
                    const Complex a = b.vertices[static_cast<size_t>(i)];
                    const Complex c = b.vertices[static_cast<size_t>((i + 1) % n)];
                    const double len = std::abs(c - a);
                    if (want <= len || i == n - 1) return a + (len > 0 ? want / len : 0.0) * (c - a);
                    want -= len;
                }
                return b.vertices[0];
            } else {
                const double th = 2.0 * M_PI * u;
                return b.center + b.radius * Complex(std::cos(th), std::sin(th));
            }
        },
        body);
}

std::vector<Complex> sample_body(const ConvexBody& body, int n_boundary, int n_interior) {
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(std::max(0, n_boundary) + std::max(0, n_interior)));
    for (int i = 0; i < n_boundary; ++i)
        out.push_back(boundary_point(body, (i + 0.5) / n_boundary));

    if (n_interior > 0) {
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Segment>) {
                    for (int i = 0; i < n_interior; ++i)
                        out.push_back(b.at((i + 0.5) / n_interior));
                } else if constexpr (std::is_same_v<T, Disk>) {
                    // concentric rings, sqrt spacing for near-uniform density
                    const int rings = std::max(1, static_cast<int>(std::sqrt(n_interior)));
                    int made = 0;
                    for (int r = 0; r < rings && made < n_interior; ++r) {
                        const double rad = b.radius * std::sqrt((r + 0.5) / rings);
                        const int per = std::max(1, (n_interior - made) / (rings - r));
                        for (int k = 0; k < per && made < n_interior; ++k, ++made) {
                            const double th = 2.0 * M_PI * (k + 0.5 * (r % 2)) / per;
                            out.push_back(b.center + rad * Complex(std::cos(th), std::sin(th)));
                        }
                    }
                } else {
                    if (b.size() <= 2) {
                        for (int i = 0; i < n_interior; ++i)
                            out.push_back(boundary_point(ConvexBody(b), (i + 0.5) / n_interior));
                        return;
                    }
                    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
                    for (Complex v : b.vertices) {
                        xmin = std::min(xmin, v.real());
                        xmax = std::max(xmax, v.real());
                        ymin = std::min(ymin, v.imag());
                        ymax = std::max(ymax, v.imag());
                    }
                    // grid over the bbox, filtered; grow the grid until enough
                    int side = std::max(2, static_cast<int>(std::sqrt(2.0 * n_interior)));
                    int made = 0;
                    for (int attempt = 0; attempt < 6 && made < n_interior; ++attempt) {
                        made = 0;
                        std::vector<Complex> got;
                        for (int i = 0; i < side && made < n_interior; ++i) {
                            for (int j = 0; j < side && made < n_interior; ++j) {
                                const Complex z(xmin + (i + 0.5) * (xmax - xmin) / side,
                                                ymin + (j + 0.5) * (ymax - ymin) / side);
                                if (contains_point(b, z, 0.0)) {
                                    got.push_back(z);
                                    ++made;
                                }
                            }
                        }
                        if (made >= n_interior || attempt == 5) {
                            out.insert(out.end(), got.begin(), got.end());
                            break;
                        }
                        side *= 2;
                    }
                }
            },
            body);
    }
    return out;
}

ConvexBody scale_body(const ConvexBody& body, Complex c) {
    return std::visit(
        [c](const auto& b) -> ConvexBody {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return Segment(c * b.p, c * b.q);
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                std::vector<Complex> vs;
                vs.reserve(b.vertices.size());
                for (Complex v : b.vertices) vs.push_back(c * v);
                return ConvexPolygon(std::move(vs));
            } else {
                return Disk(c * b.center, std::abs(c) * b.radius);
            }
        },
        body);
}

ConvexBody conj_body(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> ConvexBody {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return Segment(std::conj(b.p), std::conj(b.q));
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                std::vector<Complex> vs;
                vs.reserve(b.vertices.size());
                for (Complex v : b.vertices) vs.push_back(std::conj(v));
                return ConvexPolygon(std::move(vs));
            } else {
                return Disk(std::conj(b.center), b.radius);
            }
        },
        body);
}

ConvexPolygon segment_to_polygon(const Segment& s) {
    return ConvexPolygon({s.p, s.q});
}

std::optional<Segment> polygon_to_segment(const ConvexPolygon& p) {
    if (p.size() == 1) return Segment(p.vertices[0], p.vertices[0]);
    if (p.size() == 2) return Segment(p.vertices[0], p.vertices[1]);
    return std::nullopt;
}

std::optional<Segment> as_segment(const ConvexBody& body, double tol) {
    if (const auto* s = std::get_if<Segment>(&body)) return *s;
    if (const auto* p = std::get_if<ConvexPolygon>(&body)) return polygon_to_segment(*p);
    if (const auto* d = std::get_if<Disk>(&body)) {
        if (d->radius <= tol) return Segment(d->center, d->center);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Clipping
// ---------------------------------------------------------------------------

std::vector<Complex> clip_halfplane(const std::vector<Complex>& poly, Complex normal,
                                    double offset) {
    std::vector<Complex> out;
    const int n = static_cast<int>(poly.size());
    if (n == 0) return out;
    if (n == 1) {
        if (dot(normal, poly[0]) >= offset) out.push_back(poly[0]);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        const Complex a = poly[static_cast<size_t>(i)];
        const Complex b = poly[static_cast<size_t>((i + 1) % n)];
        const double da = dot(normal, a) - offset;
        const double db = dot(normal, b) - offset;
        if (da >= 0.0) out.push_back(a);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
            const double t = da / (da - db);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

std::vector<Complex> polygon_intersection(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.size() == 0 || b.size() == 0) return {};
    // Clip a's vertex cycle by each edge half-plane of b. Degenerate b (point
    // or segment) is handled by membership checks instead of clipping.
    if (b.size() <= 2) {
        std::vector<Complex> out;
        for (Complex v : b.vertices)
            if (contains_point(ConvexBody(a), v, kDefaultTol)) out.push_back(v);
        if (b.size() == 2) {
            // segment ∩ polygon could be a sub-segment even if no endpoint is
            // inside; probe midpoints of the clip against a's edges
            const Segment s(b.vertices[0], b.vertices[1]);
            for (int k = 1; k < 16; ++k) {
                const Complex z = s.at(k / 16.0);
                if (contains_point(ConvexBody(a), z, kDefaultTol)) out.push_back(z);
            }
        }
        return out;
    }
    std::vector<Complex> cur = a.vertices;
    if (a.size() == 2) cur = {a.vertices[0], a.vertices[1]};  // open polyline as thin cycle
    const int nb = b.size();
    for (int i = 0; i < nb && !cur.empty(); ++i) {
        const Complex p = b.vertices[static_cast<size_t>(i)];
        const Complex q = b.vertices[static_cast<size_t>((i + 1) % nb)];
        const Complex edge = q - p;
        const Complex inward(-edge.imag(), edge.real());  // CCW interior normal
        cur = clip_halfplane(cur, inward, dot(inward, p));
    }
    return cur;
}

bool contains_point(const PieceSet& s, Complex z, double tol) {
    for (const ConvexBody& piece : s.pieces)
        if (contains_point(piece, z, tol)) return true;
    return false;
}

std::vector<Complex> sample_pieces(const PieceSet& s, int n_boundary_per_piece,
                                   int n_interior_per_piece) {
    std::vector<Complex> out;
    for (const ConvexBody& piece : s.pieces) {
        auto part = sample_body(piece, n_boundary_per_piece, n_interior_per_piece);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace minkprod
