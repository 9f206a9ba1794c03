#include "minkprod/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace minkprod {

std::string format_csv_points(const std::vector<Complex>& pts) {
    std::string out;
    char buf[80];
    for (Complex p : pts) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.real(), p.imag());
        out += buf;
    }
    return out;
}

void write_csv_points(const std::vector<Complex>& pts, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_csv_points: cannot open " + path);
    out << format_csv_points(pts);
    if (!out) throw Error("write_csv_points: write failed for " + path);
}

std::vector<Complex> read_csv_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("read_csv_points: cannot open " + path);
    std::vector<Complex> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x = 0, y = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) != 2)
            throw InvalidInput("read_csv_points: bad line '" + line + "'");
        pts.emplace_back(x, y);
    }
    return pts;
}

std::vector<Complex> sample_chain(const std::vector<BoundaryPiece>& chain,
                                  int samples_per_piece) {
    std::vector<Complex> pts;
    for (const BoundaryPiece& piece : chain) {
        for (int k = 0; k < samples_per_piece; ++k)
            pts.push_back(eval_boundary_piece(piece, static_cast<double>(k) / samples_per_piece));
    }
    return pts;
}

std::vector<Complex> body_outline(const ConvexBody& body, int circle_samples) {
    std::vector<Complex> out;
    if (const auto* s = std::get_if<Segment>(&body)) {
        out = {s->p, s->q};
    } else if (const auto* p = std::get_if<ConvexPolygon>(&body)) {
        out = p->vertices;
    } else {
        const auto& d = std::get<Disk>(body);
        for (int k = 0; k < circle_samples; ++k)
            out.push_back(d.center +
                          d.radius * std::polar(1.0, 2.0 * M_PI * k / circle_samples));
    }
    return out;
}

namespace {

// SVG y axis points down; mirror world coordinates explicitly.
void fmt_pt(std::string& s, Complex p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g %.10g", p.real(), -p.imag());
    s += buf;
}

void append_chain_path(std::string& svg, const std::vector<BoundaryPiece>& chain) {
    if (chain.empty()) return;
    std::string d = "M ";
    fmt_pt(d, piece_start(chain.front()));
    for (const BoundaryPiece& piece : chain) {
        if (const auto* ls = std::get_if<LineSeg>(&piece)) {
            d += " L ";
            fmt_pt(d, ls->b);
        } else if (const auto* pa = std::get_if<ParaArc>(&piece)) {
            // a parabola segment is exactly a quadratic Bezier: control point
            // from the endpoint tangent w'(s_lo) = 2 i scale (1 + i s_lo)
            const Complex p0 = piece_start(piece);
            const Complex p2 = piece_end(piece);
            const Complex deriv = Complex(0.0, 2.0) * pa->scale * Complex(1.0, pa->s_lo);
            const Complex ctrl = p0 + 0.5 * (pa->s_hi - pa->s_lo) * deriv;
            d += " Q ";
            fmt_pt(d, ctrl);
            d += " ";
            fmt_pt(d, p2);
        } else if (const auto* arc = std::get_if<CircArc>(&piece)) {
            // split so each SVG arc spans at most pi
            const int parts = std::max(1, static_cast<int>(std::ceil(std::abs(arc->sweep) / M_PI)));
            for (int k = 1; k <= parts; ++k) {
                const double th = arc->theta_start + arc->sweep * k / parts;
                const Complex end = arc->center + arc->radius * std::polar(1.0, th);
                char buf[128];
                // mirrored y flips the sweep direction
                std::snprintf(buf, sizeof(buf), " A %.10g %.10g 0 0 %d ", arc->radius,
                              arc->radius, arc->sweep > 0 ? 0 : 1);
                d += buf;
                fmt_pt(d, end);
            }
        }
    }
    d += " Z";
    svg += "  <path d=\"" + d +
           "\" fill=\"#4d79ff\" fill-opacity=\"0.35\" stroke=\"#1a3399\" "
           "stroke-width=\"0.5%\"/>\n";
}

void append_raster(std::string& svg, const RasterGrid& g) {
    // row run-length rectangles
    const double cw = g.cell_w();
    const double ch = g.cell_h();
    char buf[256];
    for (int j = 0; j < g.n; ++j) {
        int i = 0;
        while (i < g.n) {
            if (!g.at(i, j)) {
                ++i;
                continue;
            }
            int k = i;
            while (k < g.n && g.at(k, j)) ++k;
            const double x = g.x_min + i * cw;
            const double y_top = g.y_min + (j + 1) * ch;
            std::snprintf(buf, sizeof(buf),
                          "  <rect x=\"%.10g\" y=\"%.10g\" width=\"%.10g\" height=\"%.10g\" "
                          "fill=\"#4d79ff\" fill-opacity=\"0.6\"/>\n",
                          x, -y_top, (k - i) * cw, ch);
            svg += buf;
            i = k;
        }
    }
}

}  // namespace

void write_product_svg(const SvgProduct& spec, const std::string& path) {
    const double w = spec.view_x_max - spec.view_x_min;
    const double h = spec.view_y_max - spec.view_y_min;
    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.10g %.10g %.10g "
                  "%.10g\">\n",
                  spec.view_x_min, -spec.view_y_max, w, h);
    svg += buf;

    if (spec.raster) append_raster(svg, *spec.raster);
    if (spec.exact_chain) append_chain_path(svg, *spec.exact_chain);

    for (const std::vector<Complex>& outline : spec.factor_outlines) {
        if (outline.empty()) continue;
        std::string d = "M ";
        fmt_pt(d, outline.front());
        for (size_t i = 1; i < outline.size(); ++i) {
            d += " L ";
            fmt_pt(d, outline[i]);
        }
        d += " Z";
        svg += "  <path d=\"" + d +
               "\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"0.5%\"/>\n";
    }
    svg += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_product_svg: cannot open " + path);
    out << svg;
    if (!out) throw Error("write_product_svg: write failed for " + path);
}

}  // namespace minkprod
