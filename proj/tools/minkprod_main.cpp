#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "minkprod/emit.hpp"
#include "minkprod/paper_examples.hpp"
#include "minkprod/scene.hpp"
#include "minkprod/seg_seg.hpp"

namespace {

using namespace minkprod;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIoError = 3;

/// View box from the hull bound of the factor vertex/boundary products,
/// padded 5%.
void product_view_box(const ConvexBody& k1, const ConvexBody& k2, SvgProduct& svg) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    const auto extremes = [](const ConvexBody& b) {
        std::vector<Complex> pts = body_vertices(b);
        for (int i = 0; i < 64; ++i) pts.push_back(boundary_point(b, i / 64.0));
        return pts;
    };
    for (Complex a : extremes(k1)) {
        for (Complex b : extremes(k2)) {
            const Complex z = a * b;
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymin = std::min(ymin, z.imag());
            ymax = std::max(ymax, z.imag());
        }
    }
    const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
    svg.view_x_min = xmin - pad;
    svg.view_x_max = xmax + pad;
    svg.view_y_min = ymin - pad;
    svg.view_y_max = ymax + pad;
}

int run_product(const ConvexBody& k1, const ConvexBody& k2, const std::string& out_svg,
                const std::string& out_csv, int grid, int samples, unsigned seed) {
    SvgProduct svg;
    svg.factor_outlines = {body_outline(k1), body_outline(k2)};
    product_view_box(k1, k2, svg);

    std::vector<BoundaryPiece> chain;
    RasterGrid raster;
    std::vector<Complex> boundary_samples;

    const auto s1 = as_segment(k1);
    const auto s2 = as_segment(k2);
    if (s1 && s2) {
        chain = product_seg_seg(*s1, *s2).boundary;
        svg.exact_chain = &chain;
        boundary_samples = sample_chain(chain, std::max(2, samples / std::max<int>(1, chain.size())));
    } else {
        raster = raster_product(k1, k2, grid, samples, seed);
        svg.raster = &raster;
        for (int j = 0; j < raster.n; ++j) {
            for (int i = 0; i < raster.n; ++i) {
                if (!raster.at(i, j)) continue;
                const bool edge = i == 0 || j == 0 || i == raster.n - 1 || j == raster.n - 1 ||
                                  !raster.at(i - 1, j) || !raster.at(i + 1, j) ||
                                  !raster.at(i, j - 1) || !raster.at(i, j + 1);
                if (edge)
                    boundary_samples.emplace_back(raster.x_min + (i + 0.5) * raster.cell_w(),
                                                  raster.y_min + (j + 0.5) * raster.cell_h());
            }
        }
    }

    try {
        if (!out_svg.empty()) write_product_svg(svg, out_svg);
        if (!out_csv.empty()) write_csv_points(boundary_samples, out_csv);
    } catch (const Error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}

int cmd_product(const std::string& scene_path, const std::string& id1, const std::string& id2,
                const std::string& out_svg, const std::string& out_csv, int grid, int samples,
                unsigned seed) {
    Scene scene;
    try {
        scene = load_scene(scene_path);
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    for (const std::string& id : {id1, id2}) {
        if (scene.bodies.find(id) == scene.bodies.end()) {
            std::cerr << "input error: unknown set id '" << id << "'\n";
            return kExitInputError;
        }
    }
    return run_product(scene.bodies.at(id1), scene.bodies.at(id2), out_svg, out_csv, grid,
                       samples, seed);
}

int cmd_numrange(const std::string& matrix_path, const std::string& product_path, int angles,
                 const std::string& out_svg, const std::string& out_csv, int grid) {
    ComplexMatrix a;
    try {
        a = load_matrix(matrix_path);
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        const ConvexPolygon w1 = numerical_range_boundary(a, angles);
        if (product_path.empty()) {
            if (!out_csv.empty()) write_csv_points(w1.vertices, out_csv);
            if (!out_svg.empty()) {
                SvgProduct svg;
                svg.factor_outlines = {w1.vertices};
                double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
                for (Complex v : w1.vertices) {
                    xmin = std::min(xmin, v.real());
                    xmax = std::max(xmax, v.real());
                    ymin = std::min(ymin, v.imag());
                    ymax = std::max(ymax, v.imag());
                }
                const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
                svg.view_x_min = xmin - pad;
                svg.view_x_max = xmax + pad;
                svg.view_y_min = ymin - pad;
                svg.view_y_max = ymax + pad;
                write_product_svg(svg, out_svg);
            }
            return kExitOk;
        }
        ComplexMatrix b;
        try {
            b = load_matrix(product_path);
        } catch (const Error& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return kExitInputError;
        }
        const ConvexPolygon w2 = numerical_range_boundary(b, angles);
        return run_product(ConvexBody(w1), ConvexBody(w2), out_svg, out_csv, grid, 512, 0);
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
}

int cmd_verify_paper(const std::string& id) {
    std::vector<std::string> ids;
    if (id == "all") {
        ids = paper_example_ids();
    } else {
        const auto known = paper_example_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            std::cerr << "input error: unknown example id '" << id << "'\n";
            return kExitInputError;
        }
        ids.push_back(id);
    }
    bool all_pass = true;
    for (const std::string& one : ids) {
        const ExampleResult res = run_paper_example(one);
        std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.id << ": " << res.detail
                  << "\n";
        all_pass = all_pass && res.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_run(const std::string& scene_path, unsigned seed) {
    Scene scene;
    try {
        scene = load_scene(scene_path);
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    for (const SceneOp& op : scene.ops) {
        int rc = kExitInputError;
        if (op.op == "product" && op.ids.size() >= 2) {
            rc = run_product(scene.bodies.at(op.ids[0]), scene.bodies.at(op.ids[1]), op.out_svg,
                             op.out_csv, op.grid, op.samples, seed);
        } else if (op.op == "numrange" && op.ids.size() >= 1) {
            const ComplexMatrix& a = scene.matrices.at(op.ids[0]);
            const ConvexPolygon w = numerical_range_boundary(a, op.samples);
            try {
                if (!op.out_csv.empty()) write_csv_points(w.vertices, op.out_csv);
                rc = kExitOk;
            } catch (const Error& e) {
                std::cerr << "I/O error: " << e.what() << "\n";
                rc = kExitIoError;
            }
        } else {
            std::cerr << "input error: bad op '" << op.op << "'\n";
        }
        if (rc != kExitOk) return rc;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minkowski products of planar convex sets and numerical ranges"};
    app.require_subcommand(1);

    double tol = 1e-7;
    app.add_option("--tol", tol, "membership tolerance")->capture_default_str();

    // product
    auto* product = app.add_subcommand("product", "product of two scene bodies");
    std::string scene_path, id1, id2, out_svg, out_csv;
    int grid = 1024, samples = 720;
    unsigned seed = 0;
    product->add_option("--scene", scene_path, "scene JSON file")->required();
    product->add_option("--k1", id1, "first factor id")->required();
    product->add_option("--k2", id2, "second factor id")->required();
    product->add_option("--svg", out_svg, "output SVG path");
    product->add_option("--csv", out_csv, "output CSV path");
    product->add_option("--grid", grid, "raster cells per axis")->capture_default_str();
    product->add_option("--samples", samples, "samples per factor")->capture_default_str();
    product->add_option("--seed", seed, "sampling jitter seed (0 = deterministic)")
        ->capture_default_str();

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "reproduce a registered scenario");
    std::string example_id = "all";
    verify->add_option("id", example_id, "scenario id or 'all'");

    // numrange
    auto* numrange = app.add_subcommand("numrange", "numerical range boundary");
    std::string matrix_path, product_matrix;
    int angles = 360;
    std::string nr_svg, nr_csv;
    numrange->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    numrange->add_option("--angles", angles, "support directions")->capture_default_str();
    numrange->add_option("--product", product_matrix, "second matrix for W(A)W(B)");
    numrange->add_option("--svg", nr_svg, "output SVG path");
    numrange->add_option("--csv", nr_csv, "output CSV path");
    numrange->add_option("--grid", grid, "raster cells per axis for products")
        ->capture_default_str();

    // run
    auto* runner = app.add_subcommand("run", "execute the ops listed in a scene file");
    std::string run_scene;
    runner->add_option("scene", run_scene, "scene JSON file")->required();
    runner->add_option("--seed", seed, "sampling jitter seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (product->parsed())
            return cmd_product(scene_path, id1, id2, out_svg, out_csv, grid, samples, seed);
        if (verify->parsed()) return cmd_verify_paper(example_id);
        if (numrange->parsed())
            return cmd_numrange(matrix_path, product_matrix, angles, nr_svg, nr_csv, grid);
        if (runner->parsed()) return cmd_run(run_scene, seed);
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitInputError;
}
