#include "minkprod/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace minkprod {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInput("scene: expected [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ComplexMatrix parse_matrix_json(const json& j) {
    const int n = j.at("n").get<int>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InvalidInput("matrix: entries row count != n");
    std::vector<Complex> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InvalidInput("matrix: entries column count != n");
        for (const json& cell : row) entries.push_back(parse_complex(cell));
    }
    return ComplexMatrix(n, std::move(entries));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Scene parse_scene(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("scene: JSON parse error: ") + e.what());
    }

    Scene scene;
    for (const json& entry : j.at("sets")) {
        const std::string id = entry.at("id").get<std::string>();
        if (scene.has(id)) throw InvalidInput("scene: duplicate id " + id);
        const std::string kind = entry.at("kind").get<std::string>();
        if (kind == "segment") {
            scene.bodies.emplace(
                id, Segment(parse_complex(entry.at("p")), parse_complex(entry.at("q"))));
        } else if (kind == "polygon") {
            std::vector<Complex> vs;
            for (const json& v : entry.at("vertices")) vs.push_back(parse_complex(v));
            scene.bodies.emplace(id, ConvexPolygon(vs));
        } else if (kind == "disk") {
            scene.bodies.emplace(id, Disk(parse_complex(entry.at("center")),
                                          entry.at("radius").get<double>()));
        } else if (kind == "matrix") {
            scene.matrices.emplace(id, parse_matrix_json(entry));
        } else {
            throw InvalidInput("scene: unknown kind " + kind);
        }
    }

    std::set<std::string> outputs;
    if (j.contains("ops")) {
        for (const json& entry : j.at("ops")) {
            SceneOp op;
            op.op = entry.at("op").get<std::string>();
            for (const char* key : {"k1", "k2", "a", "b"})
                if (entry.contains(key)) op.ids.push_back(entry.at(key).get<std::string>());
            if (entry.contains("svg")) op.out_svg = entry.at("svg").get<std::string>();
            if (entry.contains("csv")) op.out_csv = entry.at("csv").get<std::string>();
            if (entry.contains("grid")) op.grid = entry.at("grid").get<int>();
            if (entry.contains("samples")) op.samples = entry.at("samples").get<int>();
            for (const std::string& id : op.ids)
                if (!scene.has(id)) throw InvalidInput("scene: op references unknown id " + id);
            for (const std::string& path : {op.out_svg, op.out_csv}) {
                if (path.empty()) continue;
                if (!outputs.insert(path).second)
                    throw InvalidInput("scene: two ops write " + path);
            }
            scene.ops.push_back(std::move(op));
        }
    }
    return scene;
}

Scene load_scene(const std::string& path) { return parse_scene(read_file(path)); }

ComplexMatrix parse_matrix(const std::string& json_text) {
    try {
        return parse_matrix_json(json::parse(json_text));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("matrix: JSON parse error: ") + e.what());
    }
}

ComplexMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

}  // namespace minkprod
