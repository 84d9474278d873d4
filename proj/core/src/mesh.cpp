#include "sphtile/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "sphtile/errors.hpp"

namespace sphtile {

FaceSpec square_face(int v0, int v1, int v2, int v3) {
    return FaceSpec{FaceKind::Square,
                    {v0, v1, v2, v3},
                    {CornerLabel::Alpha, CornerLabel::Alpha, CornerLabel::Alpha,
                     CornerLabel::Alpha}};
}

FaceSpec rhombus_face(int v0, int v1, int v2, int v3, CornerLabel label_at_v0) {
    if (label_at_v0 == CornerLabel::Alpha)
        throw StructuralError("rhombus corners carry beta/gamma labels only");
    const CornerLabel other =
        label_at_v0 == CornerLabel::Beta ? CornerLabel::Gamma : CornerLabel::Beta;
    return FaceSpec{FaceKind::Rhombus, {v0, v1, v2, v3}, {label_at_v0, other, label_at_v0, other}};
}

Tiling Tiling::assemble(const std::vector<FaceSpec>& faces) {
    if (faces.size() < 2) throw StructuralError("a closed mesh needs at least 2 faces");
    Tiling t;
    const int f = static_cast<int>(faces.size());
    t.kinds_.resize(f);
    t.twin_.assign(4 * f, -1);
    t.origin_.resize(4 * f);
    t.label_.resize(4 * f);

    int max_vertex = -1;
    std::map<std::pair<int, int>, int> directed;  // (origin, dest) -> half-edge
    for (int i = 0; i < f; ++i) {
        const FaceSpec& spec = faces[i];
        t.kinds_[i] = spec.kind;
        for (int k = 0; k < 4; ++k) {
            const int h = 4 * i + k;
            const int u = spec.corners[k];
            const int v = spec.corners[(k + 1) % 4];
            if (u < 0 || v < 0) throw StructuralError("negative vertex id");
            if (u == v) throw StructuralError("degenerate edge in face spec");
            t.origin_[h] = u;
            t.label_[h] = spec.labels[k];
            max_vertex = std::max(max_vertex, u);
            if (!directed.emplace(std::make_pair(u, v), h).second) {
                std::ostringstream oss;
                oss << "directed edge " << u << "->" << v
                    << " appears twice; inconsistent orientation";
                throw StructuralError(oss.str());
            }
        }
        // Label sanity per prototile.
        if (spec.kind == FaceKind::Square) {
            for (CornerLabel l : spec.labels)
                if (l != CornerLabel::Alpha)
                    throw StructuralError("square face must carry four alpha corners");
        } else {
            for (int k = 0; k < 4; ++k) {
                if (spec.labels[k] == CornerLabel::Alpha)
                    throw StructuralError("rhombus face cannot carry alpha corners");
                if (spec.labels[k] == spec.labels[(k + 1) % 4])
                    throw StructuralError("rhombus corners must alternate beta/gamma");
            }
        }
    }
    t.vertex_count_ = max_vertex + 1;

    for (auto& [key, h] : directed) {
        auto it = directed.find({key.second, key.first});
        if (it == directed.end()) {
            std::ostringstream oss;
            oss << "edge " << key.first << "-" << key.second << " has no twin; mesh is open";
            throw StructuralError(oss.str());
        }
        t.twin_[h] = it->second;
    }

    // Twin involution without fixed points is implied by the construction,
    // but check anyway since assemble is the single validation gate.
    for (int h = 0; h < 4 * f; ++h) {
        if (t.twin_[h] == h || t.twin_[t.twin_[h]] != h)
            throw StructuralError("twin involution broken");
    }

    // Vertex fans: every half-edge leaving v must be reachable from any other
    // by ccw rotation, and the fan size is the vertex degree (>= 3).
    t.fan_start_.assign(t.vertex_count_, -1);
    std::vector<int> fan_size(t.vertex_count_, 0);
    std::vector<int> outgoing(t.vertex_count_, 0);
    for (int h = 0; h < 4 * f; ++h) {
        outgoing[t.origin_[h]]++;
        if (t.fan_start_[t.origin_[h]] < 0) t.fan_start_[t.origin_[h]] = h;
    }
    for (int v = 0; v < t.vertex_count_; ++v) {
        if (t.fan_start_[v] < 0) throw StructuralError("isolated vertex id");
        int h = t.fan_start_[v];
        int steps = 0;
        do {
            if (t.origin_[h] != v) throw StructuralError("fan wanders off its vertex");
            h = t.rotate_ccw(h);
            if (++steps > 4 * f) throw StructuralError("vertex fan does not close");
        } while (h != t.fan_start_[v]);
        fan_size[v] = steps;
        if (steps != outgoing[v])
            throw StructuralError("vertex fan misses outgoing half-edges");
        if (steps < 3) throw StructuralError("vertex of degree < 3");
    }

    // Connected?
    std::vector<char> seen(f, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int face = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            const int nb = t.face_of(t.twin_[4 * face + k]);
            if (!seen[nb]) {
                seen[nb] = 1;
                reached++;
                stack.push_back(nb);
            }
        }
    }
    if (reached != f) throw StructuralError("mesh is not connected");

    // Euler characteristic of the sphere.
    const int V = t.vertex_count_, E = 2 * f, F = f;
    if (V - E + F != 2) {
        std::ostringstream oss;
        oss << "Euler characteristic " << V - E + F << " != 2 (V=" << V << " E=" << E
            << " F=" << F << ")";
        throw StructuralError(oss.str());
    }
    return t;
}

std::vector<int> Tiling::vertex_fan(int v) const {
    std::vector<int> fan;
    const int start = fan_start_[v];
    int h = start;
    do {
        fan.push_back(h);
        h = rotate_ccw(h);
    } while (h != start);
    return fan;
}

VertexType Tiling::vertex_type(int v) const {
    VertexType type;
    for (int h : vertex_fan(v)) {
        switch (label_[h]) {
            case CornerLabel::Alpha: type.alpha++; break;
            case CornerLabel::Beta: type.beta++; break;
            case CornerLabel::Gamma: type.gamma++; break;
        }
    }
    return type;
}

int Tiling::vertex_degree(int v) const { return static_cast<int>(vertex_fan(v).size()); }

TilingStats Tiling::stats() const {
    TilingStats s;
    s.tiles = face_count();
    for (FaceKind kind : kinds_)
        (kind == FaceKind::Square ? s.squares : s.rhombi)++;
    for (int v = 0; v < vertex_count_; ++v) s.vertices_by_degree[vertex_degree(v)]++;
    return s;
}

Avc Tiling::realized_avc() const {
    Avc avc;
    avc.exactness = Avc::Exactness::Realized;
    for (int v = 0; v < vertex_count_; ++v) avc.insert(vertex_type(v));
    return avc;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.passed; });
}

std::string to_string(const VerificationReport& report) {
    std::ostringstream oss;
    for (const VerificationCheck& c : report.checks) {
        oss << (c.passed ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) oss << "  (" << c.detail << ")";
        oss << '\n';
    }
    return oss.str();
}

VerificationReport verify(const Tiling& t, const AngleSet& angles, const Tolerances& tol) {
    VerificationReport report;
    auto add = [&](const std::string& name, bool ok, std::string detail = {}) {
        report.checks.push_back({name, ok, std::move(detail)});
    };

    // Every Tiling instance went through assemble(), which enforces the
    // half-edge invariants; record that gate and re-derive the cheap parts.
    add("structure", true, "validated at assembly");
    const TilingStats s = t.stats();
    add("euler", t.vertex_count() - 2 * s.tiles + s.tiles == 2);
    add("quad-face-count-identities", s.counts_consistent(),
        "V=" + std::to_string(t.vertex_count()) + " f=" + std::to_string(s.tiles));
    add("both-prototiles-present", s.squares >= 1 && s.rhombi >= 1,
        std::to_string(s.squares) + " squares, " + std::to_string(s.rhombi) + " rhombi");

    double worst = 0.0;
    for (int v = 0; v < t.vertex_count(); ++v)
        worst = std::max(worst, std::abs(angle_remainder(t.vertex_type(v), angles)));
    add("vertex-angle-sums", worst < tol.vertex, "max remainder " + std::to_string(worst));

    double area = 0.0;
    for (int face = 0; face < t.face_count(); ++face) {
        double corner_sum = 0.0;
        for (int k = 0; k < 4; ++k) corner_sum += angles.angle(t.label(4 * face + k));
        area += corner_sum - 2.0 * kPi;
    }
    add("total-area-4pi", std::abs(area - 4.0 * kPi) < tol.area,
        "area = " + std::to_string(area));

    const Avc realized = t.realized_avc();
    const Avc allowed = enumerate_vertices(angles, 0, tol);
    const bool subset = std::all_of(realized.entries.begin(), realized.entries.end(),
                                    [&](const VertexType& v) { return allowed.contains(v); });
    add("realized-avc-admissible", subset,
        to_string(realized) + " against " + to_string(allowed));
    return report;
}

}  // namespace sphtile
