#pragma once

#include <string>

#include "minkprod/membership.hpp"

namespace minkprod {

/// Write points as "x,y" lines, 17 significant digits (lossless round trip).
void write_csv_points(const std::vector<Complex>& pts, const std::string& path);
std::vector<Complex> read_csv_points(const std::string& path);
std::string format_csv_points(const std::vector<Complex>& pts);

/// Uniformly sampled points along a boundary chain (per-piece parameter
/// grid, endpoints deduplicated).
std::vector<Complex> sample_chain(const std::vector<BoundaryPiece>& chain,
                                  int samples_per_piece);

/// Deterministic SVG of a product: factor outlines plus either an exact
/// boundary chain (lines, quadratic Beziers for parabolic arcs, SVG arcs for
/// circular ones) or a raster fill. The viewBox is the hull bound of the
/// vertex products padded 5%.
struct SvgProduct {
    std::vector<std::vector<Complex>> factor_outlines;  // closed polylines
    const std::vector<BoundaryPiece>* exact_chain = nullptr;
    const RasterGrid* raster = nullptr;
    double view_x_min = 0, view_x_max = 1, view_y_min = 0, view_y_max = 1;
};

void write_product_svg(const SvgProduct& svg, const std::string& path);

/// Closed outline polyline of a body (for SVG factor display).
std::vector<Complex> body_outline(const ConvexBody& body, int circle_samples = 128);

}  // namespace minkprod
