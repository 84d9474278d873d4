#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sphtile/errors.hpp"
#include "sphtile/mesh.hpp"

namespace sphtile {

namespace {
constexpr const char* kFormat = "sphtile-tiling/1";

const char* label_word(CornerLabel l) {
    switch (l) {
        case CornerLabel::Alpha: return "alpha";
        case CornerLabel::Beta: return "beta";
        default: return "gamma";
    }
}

CornerLabel word_label(const std::string& w) {
    if (w == "alpha") return CornerLabel::Alpha;
    if (w == "beta") return CornerLabel::Beta;
    if (w == "gamma") return CornerLabel::Gamma;
    throw ParseError("unknown corner label: " + w);
}
}  // namespace

std::string to_json(const Tiling& t) {
    nlohmann::ordered_json doc;
    doc["format"] = kFormat;
    doc["num_vertices"] = t.vertex_count();
    auto faces = nlohmann::ordered_json::array();
    for (int f = 0; f < t.face_count(); ++f) {
        nlohmann::ordered_json face;
        face["kind"] = t.face_kind(f) == FaceKind::Square ? "square" : "rhombus";
        auto loop = nlohmann::ordered_json::array();
        for (int k = 0; k < 4; ++k) loop.push_back(4 * f + k);
        face["half_edges"] = std::move(loop);
        faces.push_back(std::move(face));
    }
    doc["faces"] = std::move(faces);
    auto edges = nlohmann::ordered_json::array();
    for (int h = 0; h < t.half_edge_count(); ++h) {
        nlohmann::ordered_json he;
        he["origin"] = t.origin(h);
        he["twin"] = t.twin(h);
        he["label"] = label_word(t.label(h));
        edges.push_back(std::move(he));
    }
    doc["half_edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

Tiling tiling_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kFormat)
            throw ParseError("unsupported format: " + doc.at("format").get<std::string>());
        const auto& faces = doc.at("faces");
        const auto& edges = doc.at("half_edges");
        std::vector<FaceSpec> specs;
        specs.reserve(faces.size());
        for (std::size_t f = 0; f < faces.size(); ++f) {
            FaceSpec spec;
            const std::string kind = faces[f].at("kind").get<std::string>();
            if (kind == "square") spec.kind = FaceKind::Square;
            else if (kind == "rhombus") spec.kind = FaceKind::Rhombus;
            else throw ParseError("unknown face kind: " + kind);
            const auto& loop = faces[f].at("half_edges");
            if (loop.size() != 4) throw ParseError("face loop must have 4 half-edges");
            for (int k = 0; k < 4; ++k) {
                const int h = loop[k].get<int>();
                if (h != static_cast<int>(4 * f) + k)
                    throw ParseError("half-edge ids must be consecutive per face");
                spec.corners[k] = edges.at(h).at("origin").get<int>();
                spec.labels[k] = word_label(edges.at(h).at("label").get<std::string>());
            }
            specs.push_back(spec);
        }
        // Twin hints from the file are redundant; assemble() rebuilds and
        // validates them, so a tampered file cannot smuggle a broken mesh in.
        Tiling t = Tiling::assemble(specs);
        for (int h = 0; h < t.half_edge_count(); ++h) {
            if (edges.at(h).at("twin").get<int>() != t.twin(h))
                throw ParseError("twin table disagrees with face loops");
        }
        if (doc.at("num_vertices").get<int>() != t.vertex_count())
            throw ParseError("vertex count disagrees with face loops");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed tiling document: ") + e.what());
    }
}

void write_tiling(const Tiling& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << to_json(t);
}

Tiling read_tiling(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return tiling_from_json(buffer.str());
}

}  // namespace sphtile
