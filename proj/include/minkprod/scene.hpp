#pragma once

#include <map>
#include <string>

#include "minkprod/geometry.hpp"
#include "minkprod/numerical_range.hpp"

namespace minkprod {

/// One requested operation from a scene file's "ops" list.
struct SceneOp {
    std::string op;                            // "product" | "numrange"
    std::vector<std::string> ids;              // referenced set ids
    std::string out_svg;                       // optional output paths
    std::string out_csv;
    int grid = 1024;
    int samples = 720;
};

/// Named bodies and matrices plus requested operations.
struct Scene {
    std::map<std::string, ConvexBody> bodies;
    std::map<std::string, ComplexMatrix> matrices;
    std::vector<SceneOp> ops;

    bool has(const std::string& id) const {
        return bodies.count(id) > 0 || matrices.count(id) > 0;
    }
};

/// Parse a scene from JSON text. Validates that op ids resolve and that no
/// two ops write the same output path.
Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);

/// Matrix JSON: {"n": int, "entries": [[[re,im],...],...]} row-major.
ComplexMatrix parse_matrix(const std::string& json_text);
ComplexMatrix load_matrix(const std::string& path);

}  // namespace minkprod
