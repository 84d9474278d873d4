#include "sphtile/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "sphtile/errors.hpp"
#include "sphtile/geometry.hpp"

namespace sphtile {

namespace {

constexpr CornerLabel kGamma = CornerLabel::Gamma;
constexpr CornerLabel kBeta = CornerLabel::Beta;

// ---------------------------------------------------------------------------
// Earth map family (the cube is the same construction at c = 1).
//
// Four strips of 2c-1 rhombi wind between two squares. Strip a has c "upper"
// rhombi fanning their gamma corners at the north square's corner v_a and
// c-1 "lower" rhombi fanning at the south square's corner w_{a+1}; the joints
// between consecutive rhombi are the beta^2 gamma vertices.
// ---------------------------------------------------------------------------

struct EarthMapIds {
    int c;
    int v(int a) const { return a & 3; }
    int w(int a) const { return 4 + (a & 3); }
    // joint between upper rhombi i and i+1 of strip a, 1 <= i <= c-1
    int t(int a, int i) const { return 8 + (a & 3) * (c - 1) + (i - 1); }
    // bottom corner of upper rhombus i of strip a, 2 <= i <= c; g(a,1) is w(a)
    int g(int a, int i) const {
        if (i == 1) return w(a);
        return 8 + 4 * (c - 1) + (a & 3) * (c - 1) + (i - 2);
    }
};

std::vector<FaceSpec> earth_map_faces(int c) {
    const EarthMapIds id{c};
    std::vector<FaceSpec> faces;
    faces.push_back(square_face(id.v(0), id.v(1), id.v(2), id.v(3)));
    faces.push_back(square_face(id.w(3), id.w(2), id.w(1), id.w(0)));
    for (int a = 0; a < 4; ++a) {
        for (int i = 1; i <= c; ++i) {
            const int r = (i == 1) ? id.g(a + 3, c) : id.t(a, i - 1);
            const int g = id.g(a, i);
            const int l = (i == c) ? id.v(a + 1) : id.t(a, i);
            faces.push_back(rhombus_face(id.v(a), r, g, l, kGamma));
        }
        for (int i = 1; i <= c - 1; ++i) {
            faces.push_back(
                rhombus_face(id.w(a + 1), id.g(a, i + 1), id.t(a, i), id.g(a, i), kGamma));
        }
    }
    return faces;
}

// ---------------------------------------------------------------------------
// Sporadic tilings, 10 squares and 4 rhombi each, transcribed corner tables.
//
// The first one nests a square inside a ring of four squares, four diagonal
// rhombi, four outer squares and an antipodal square. In the second one the
// rhombi sit asymmetrically: two squares touch a rhombus along an edge and
// two further rhombi only at corners.
// ---------------------------------------------------------------------------

std::vector<FaceSpec> sporadic1_faces() {
    // vertices: inner corners v0..v3 (0..3), side betas p0..p3 (4..7) and
    // q0..q3 (8..11), outer corners w0..w3 (12..15)
    auto v = [](int a) { return a & 3; };
    auto p = [](int a) { return 4 + (a & 3); };
    auto q = [](int a) { return 8 + (a & 3); };
    auto w = [](int a) { return 12 + (a & 3); };
    std::vector<FaceSpec> faces;
    faces.push_back(square_face(v(0), v(1), v(2), v(3)));
    for (int a = 0; a < 4; ++a) faces.push_back(square_face(v(a + 1), v(a), p(a), q(a)));
    for (int a = 0; a < 4; ++a)
        faces.push_back(rhombus_face(v(a), q(a + 3), w(a), p(a), kGamma));
    for (int a = 0; a < 4; ++a) faces.push_back(square_face(q(a), p(a), w(a), w(a + 1)));
    faces.push_back(square_face(w(3), w(2), w(1), w(0)));
    return faces;
}

std::vector<FaceSpec> sporadic2_faces() {
    // Corner table with vertices numbered 0..15.
    std::vector<FaceSpec> faces;
    faces.push_back(square_face(5, 1, 0, 4));
    faces.push_back(square_face(1, 3, 2, 0));
    faces.push_back(square_face(4, 0, 6, 8));
    faces.push_back(square_face(7, 9, 3, 1));
    faces.push_back(square_face(3, 11, 10, 2));
    faces.push_back(square_face(4, 13, 15, 5));
    faces.push_back(rhombus_face(0, 2, 10, 6, kGamma));
    faces.push_back(rhombus_face(1, 5, 15, 7, kGamma));
    faces.push_back(rhombus_face(9, 12, 11, 3, kBeta));
    faces.push_back(rhombus_face(8, 14, 13, 4, kBeta));
    faces.push_back(square_face(12, 9, 7, 15));
    faces.push_back(square_face(14, 8, 6, 10));
    faces.push_back(square_face(10, 11, 12, 14));
    faces.push_back(square_face(15, 13, 14, 12));
    return faces;
}

// ---------------------------------------------------------------------------
// Seed polyhedra. Orientation is computed numerically: corners of a face are
// sorted counterclockwise about its outward normal, which avoids hand-written
// sign tables.
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0, y = 0, z = 0;
};
Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Vec3 normalized(Vec3 a) {
    const double n = std::sqrt(dot(a, a));
    return {a.x / n, a.y / n, a.z / n};
}

// Sorts `items` counterclockwise (seen from outside, i.e. from +axis) around
// `center` by angle about `axis`.
template <typename Id>
void ccw_sort(std::vector<Id>& items, const std::function<Vec3(Id)>& position,
              Vec3 center, Vec3 axis) {
    axis = normalized(axis);
    Vec3 ref = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(ref - dot(ref, axis) * axis);
    const Vec3 e2 = cross(axis, e1);
    auto angle = [&](Id id) {
        const Vec3 d = position(id) - center;
        return std::atan2(dot(d, e2), dot(d, e1));
    };
    std::sort(items.begin(), items.end(),
              [&](Id a, Id b) { return angle(a) < angle(b); });
}

// A face soup of arbitrary polygon sizes, with a twin-pairing validity check.
struct PolyMesh {
    std::vector<std::vector<int>> faces;  // ccw vertex cycles
    int vertex_count = 0;

    void check_closed() const {
        std::set<std::pair<int, int>> seen;
        for (const auto& loop : faces) {
            for (std::size_t k = 0; k < loop.size(); ++k) {
                const int u = loop[k], v = loop[(k + 1) % loop.size()];
                if (!seen.insert({u, v}).second)
                    throw StructuralError("seed polyhedron: repeated directed edge");
            }
        }
        for (auto [u, v] : seen)
            if (!seen.count({v, u}))
                throw StructuralError("seed polyhedron: unmatched edge");
    }
};

// Snub cube: per cube face one rotated square; per directed cube boundary step
// one edge triangle; per cube corner one corner triangle. The chirality is
// fixed by attaching the edge triangle of face F at cube edge e to the corner
// triangle at the head of e as traversed by F.
struct SnubCube {
    PolyMesh mesh;
    std::vector<int> square_faces;                     // indices into mesh.faces
    std::map<std::pair<int, int>, int> edge_triangle;  // (face, head corner) -> face index
    std::map<int, int> corner_triangle;                // cube corner -> face index
    // cube corner id <-> snub vertex (face, corner) numbering helpers
    std::map<std::pair<int, int>, int> snub_vertex;    // (face, cube corner) -> id
};

Vec3 cube_corner_pos(int corner) {
    return {corner & 4 ? 1.0 : -1.0, corner & 2 ? 1.0 : -1.0, corner & 1 ? 1.0 : -1.0};
}

SnubCube build_snub_cube() {
    // Cube faces: axis (0=x, 1=y, 2=z) and sign.
    struct CubeFace {
        Vec3 normal;
        std::vector<int> cycle;  // ccw corner ids
    };
    std::vector<CubeFace> cube(6);
    for (int f = 0; f < 6; ++f) {
        const int axis = f / 2;
        const double sign = f % 2 == 0 ? 1.0 : -1.0;
        Vec3 n{0, 0, 0};
        (axis == 0 ? n.x : axis == 1 ? n.y : n.z) = sign;
        cube[f].normal = n;
        for (int corner = 0; corner < 8; ++corner)
            if (dot(cube_corner_pos(corner), n) > 0.5) cube[f].cycle.push_back(corner);
        std::function<Vec3(int)> pos = cube_corner_pos;
        ccw_sort(cube[f].cycle, pos, n, n);
    }
    auto face_of_edge_other = [&](int f, int u, int v) {
        for (int g = 0; g < 6; ++g) {
            if (g == f) continue;
            const auto& cyc = cube[g].cycle;
            if (std::count(cyc.begin(), cyc.end(), u) && std::count(cyc.begin(), cyc.end(), v))
                return g;
        }
        throw StructuralError("cube edge without second face");
    };

    SnubCube snub;
    int next_vertex = 0;
    auto vertex = [&](int f, int corner) {
        auto [it, inserted] = snub.snub_vertex.try_emplace({f, corner}, next_vertex);
        if (inserted) ++next_vertex;
        return it->second;
    };

    for (int f = 0; f < 6; ++f) {
        std::vector<int> loop;
        for (int corner : cube[f].cycle) loop.push_back(vertex(f, corner));
        snub.square_faces.push_back(static_cast<int>(snub.mesh.faces.size()));
        snub.mesh.faces.push_back(std::move(loop));
    }
    for (int f = 0; f < 6; ++f) {
        for (int k = 0; k < 4; ++k) {
            const int tail = cube[f].cycle[k];
            const int head = cube[f].cycle[(k + 1) % 4];
            const int g = face_of_edge_other(f, tail, head);
            snub.edge_triangle[{f, head}] = static_cast<int>(snub.mesh.faces.size());
            snub.mesh.faces.push_back({vertex(f, head), vertex(f, tail), vertex(g, head)});
        }
    }
    for (int corner = 0; corner < 8; ++corner) {
        std::vector<int> around;
        for (int f = 0; f < 6; ++f)
            if (std::count(cube[f].cycle.begin(), cube[f].cycle.end(), corner))
                around.push_back(f);
        std::function<Vec3(int)> pos = [&](int f) { return cube[f].normal; };
        ccw_sort(around, pos, Vec3{0, 0, 0}, cube_corner_pos(corner));
        snub.corner_triangle[corner] = static_cast<int>(snub.mesh.faces.size());
        snub.mesh.faces.push_back(
            {vertex(around[0], corner), vertex(around[1], corner), vertex(around[2], corner)});
    }
    snub.mesh.vertex_count = next_vertex;
    snub.mesh.check_closed();
    return snub;
}

// Fuses matched triangle pairs of the snub cube into rhombi. `matching` is a
// perfect matching of the eight cube corners along cube edges; matched edges
// fuse their two edge triangles into the adjacent corner triangles, unmatched
// edges fuse their edge-triangle pair.
Tiling fuse_snub_cube(const std::vector<std::pair<int, int>>& matching) {
    const SnubCube snub = build_snub_cube();

    std::set<int> matched_corners;
    std::set<std::pair<int, int>> matched_edges;
    for (auto [u, v] : matching) {
        if (!matched_corners.insert(u).second || !matched_corners.insert(v).second)
            throw DomainError("fusion matching reuses a cube corner");
        const int diff = u ^ v;
        if (diff != 1 && diff != 2 && diff != 4)
            throw DomainError("fusion matching pair is not a cube edge");
        matched_edges.insert({std::min(u, v), std::max(u, v)});
    }
    if (matched_corners.size() != 8) throw DomainError("fusion matching must cover all corners");

    // Pair up triangle faces.
    std::vector<std::pair<int, int>> pairs;
    std::set<std::pair<int, int>> edges_seen;
    for (const auto& [key, tri] : snub.edge_triangle) {
        const auto [f, head] = key;
        // Recover the cube edge: tri vertices are (f,head),(f,tail),(g,head).
        // Find tail via the stored face: second vertex belongs to (f, tail).
        int tail = -1, g = -1;
        for (const auto& [fv, id] : snub.snub_vertex) {
            if (id == snub.mesh.faces[tri][1]) tail = fv.second;
            if (id == snub.mesh.faces[tri][2]) g = fv.first;
        }
        const auto edge = std::minmax(head, tail);
        if (matched_edges.count({edge.first, edge.second})) {
            pairs.emplace_back(tri, snub.corner_triangle.at(head));
        } else {
            if (!edges_seen.insert({edge.first, edge.second}).second) continue;
            pairs.emplace_back(tri, snub.edge_triangle.at({g, tail}));
        }
    }

    std::set<int> used;
    for (auto [a, b] : pairs) {
        if (!used.insert(a).second || !used.insert(b).second)
            throw DomainError("fusion matching does not induce a perfect triangle pairing");
    }
    if (used.size() != 32) throw DomainError("fusion pairing left triangles uncovered");

    std::vector<FaceSpec> faces;
    for (int sq : snub.square_faces) {
        const auto& loop = snub.mesh.faces[sq];
        faces.push_back(square_face(loop[0], loop[1], loop[2], loop[3]));
    }
    for (auto [ta, tb] : pairs) {
        const auto& tri1 = snub.mesh.faces[ta];
        const auto& tri2 = snub.mesh.faces[tb];
        // Locate the shared directed edge u -> v in tri1.
        int shared = -1;
        for (int k = 0; k < 3; ++k) {
            const int u = tri1[k], v = tri1[(k + 1) % 3];
            for (int j = 0; j < 3; ++j)
                if (tri2[j] == v && tri2[(j + 1) % 3] == u) shared = k;
        }
        if (shared < 0) throw StructuralError("fused triangles do not share an edge");
        const int x1 = tri1[(shared + 2) % 3];
        const int u = tri1[shared];
        const int v = tri1[(shared + 1) % 3];
        int x2 = -1;
        for (int j = 0; j < 3; ++j)
            if (tri2[j] != u && tri2[j] != v) x2 = tri2[j];
        faces.push_back(rhombus_face(x1, u, x2, v, kGamma));
    }
    return Tiling::assemble(faces);
}

// The three matchings used by the catalog and its tests.
std::vector<std::pair<int, int>> fusion1_matching() {
    // Two x-direction edges and two z-direction edges.
    auto corner = [](int sx, int sy, int sz) { return sx * 4 + sy * 2 + sz; };
    return {{corner(1, 1, 1), corner(0, 1, 1)},
            {corner(1, 0, 1), corner(1, 0, 0)},
            {corner(0, 0, 1), corner(0, 0, 0)},
            {corner(1, 1, 0), corner(0, 1, 0)}};
}

std::vector<std::pair<int, int>> fusion2_matching() {
    // All four edges parallel to z.
    auto corner = [](int sx, int sy, int sz) { return sx * 4 + sy * 2 + sz; };
    std::vector<std::pair<int, int>> m;
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy) m.push_back({corner(sx, sy, 1), corner(sx, sy, 0)});
    return m;
}

std::vector<std::pair<int, int>> fusion_fourth_matching() {
    // Two y-direction edges on top, two x-direction edges below: a different
    // mixed matching, equivalent to fusion1 up to a symmetry of the sphere.
    auto corner = [](int sx, int sy, int sz) { return sx * 4 + sy * 2 + sz; };
    return {{corner(1, 1, 1), corner(1, 0, 1)},
            {corner(0, 1, 1), corner(0, 0, 1)},
            {corner(1, 1, 0), corner(0, 1, 0)},
            {corner(1, 0, 0), corner(0, 0, 0)}};
}

// Quadrilateral subdivision of the truncated octahedron: each hexagon is cut
// into three rhombi around a new central vertex joined to alternate corners.
Tiling build_quad_subdivision() {
    const Vec3 axes[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    auto adjacent = [&](int a, int b) { return std::abs(dot(axes[a], axes[b])) < 0.5; };

    std::map<std::pair<int, int>, int> corner_id;  // P(A,B), point near A on edge {A,B}
    int next_vertex = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (adjacent(a, b)) corner_id[{a, b}] = next_vertex++;
    auto corner_pos = [&](std::pair<int, int> key) {
        return (2.0 / 3.0) * axes[key.first] + (1.0 / 3.0) * axes[key.second];
    };

    std::vector<FaceSpec> faces;
    // Squares at the six octahedron vertices.
    for (int v = 0; v < 6; ++v) {
        std::vector<std::pair<int, int>> corners;
        for (int w = 0; w < 6; ++w)
            if (adjacent(v, w)) corners.push_back({v, w});
        std::function<Vec3(std::pair<int, int>)> pos = corner_pos;
        ccw_sort(corners, pos, Vec3{0, 0, 0}, axes[v]);
        faces.push_back(square_face(corner_id[corners[0]], corner_id[corners[1]],
                                    corner_id[corners[2]], corner_id[corners[3]]));
    }
    // Three rhombi per octahedron face.
    for (int sx = -1; sx <= 1; sx += 2)
        for (int sy = -1; sy <= 1; sy += 2)
            for (int sz = -1; sz <= 1; sz += 2) {
                const int A = sx > 0 ? 0 : 1;
                const int B = sy > 0 ? 2 : 3;
                const int C = sz > 0 ? 4 : 5;
                std::vector<int> tri = {A, B, C};
                const Vec3 normal{double(sx), double(sy), double(sz)};
                std::function<Vec3(int)> pos = [&](int v) { return axes[v]; };
                ccw_sort(tri, pos, Vec3{0, 0, 0}, normal);
                const int center = next_vertex++;
                for (int k = 0; k < 3; ++k) {
                    const int p = tri[k], q = tri[(k + 1) % 3], r = tri[(k + 2) % 3];
                    // entry corner P(p,q), exit corner P(q,p), then P(q,r)
                    faces.push_back(rhombus_face(center, corner_id[{p, q}], corner_id[{q, p}],
                                                 corner_id[{q, r}], kBeta));
                }
            }
    return Tiling::assemble(faces);
}

}  // namespace

FamilyId FamilyId::parse(const std::string& text) {
    FamilyId id;
    if (text == "cube") { id.tag = Tag::Cube; return id; }
    if (text == "fusion:1") { id.tag = Tag::Fusion1; return id; }
    if (text == "fusion:2") { id.tag = Tag::Fusion2; return id; }
    if (text == "quad-subdivision") { id.tag = Tag::QuadSubdivision; return id; }
    if (text == "sporadic:1") { id.tag = Tag::Sporadic1; return id; }
    if (text == "sporadic:2") { id.tag = Tag::Sporadic2; return id; }
    if (text.rfind("earth-map:", 0) == 0) {
        id.tag = Tag::EarthMap;
        try {
            id.c = std::stoi(text.substr(10));
        } catch (const std::exception&) {
            throw DomainError("bad earth-map parameter in id: " + text);
        }
        if (id.c < 2) throw DomainError("earth-map needs c >= 2");
        return id;
    }
    throw DomainError("unknown family id: " + text);
}

std::string FamilyId::to_string() const {
    switch (tag) {
        case Tag::Cube: return "cube";
        case Tag::EarthMap: return "earth-map:" + std::to_string(c);
        case Tag::Fusion1: return "fusion:1";
        case Tag::Fusion2: return "fusion:2";
        case Tag::QuadSubdivision: return "quad-subdivision";
        case Tag::Sporadic1: return "sporadic:1";
        case Tag::Sporadic2: return "sporadic:2";
    }
    return "?";
}

FamilyCase FamilyId::family_case() const {
    switch (tag) {
        case Tag::Cube: return FamilyCase::Cube;
        case Tag::EarthMap: return FamilyCase::EarthMap;
        case Tag::Fusion1:
        case Tag::Fusion2: return FamilyCase::Fusion;
        case Tag::QuadSubdivision: return FamilyCase::QuadSubdivision;
        case Tag::Sporadic1:
        case Tag::Sporadic2: return FamilyCase::Sporadic;
    }
    throw DomainError("bad family id");
}

int FamilyId::expected_tiles() const {
    switch (tag) {
        case Tag::Cube: return 6;
        case Tag::EarthMap: return 8 * c - 2;
        case Tag::Fusion1:
        case Tag::Fusion2: return 22;
        case Tag::QuadSubdivision: return 30;
        case Tag::Sporadic1:
        case Tag::Sporadic2: return 14;
    }
    throw DomainError("bad family id");
}

Tiling build(const FamilyId& id) {
    switch (id.tag) {
        case FamilyId::Tag::Cube: return Tiling::assemble(earth_map_faces(1));
        case FamilyId::Tag::EarthMap:
            if (id.c < 2) throw DomainError("earth-map needs c >= 2");
            return Tiling::assemble(earth_map_faces(id.c));
        case FamilyId::Tag::Fusion1: return fuse_snub_cube(fusion1_matching());
        case FamilyId::Tag::Fusion2: return fuse_snub_cube(fusion2_matching());
        case FamilyId::Tag::QuadSubdivision: return build_quad_subdivision();
        case FamilyId::Tag::Sporadic1: return Tiling::assemble(sporadic1_faces());
        case FamilyId::Tag::Sporadic2: return Tiling::assemble(sporadic2_faces());
    }
    throw DomainError("bad family id");
}

Tiling build_fusion_fourth_grouping() { return fuse_snub_cube(fusion_fourth_matching()); }

AngleSet catalog_angles(const FamilyId& id, const Tolerances& tol) {
    if (id.tag == FamilyId::Tag::Cube) {
        // Any point of the one-parameter family embeds the cube; fix one.
        const double gamma = 0.55 * kPi;
        auto residual = [&](double alpha) {
            return compatibility_residual(alpha, 2.0 * kPi - alpha - gamma, gamma);
        };
        const double alpha = find_root(residual, 0.60 * kPi, 0.72 * kPi, tol.root);
        AngleSet a;
        a.alpha = alpha;
        a.beta = 2.0 * kPi - alpha - gamma;
        a.gamma = gamma;
        a.edge = edge_length(alpha);
        return a;
    }
    if (id.tag == FamilyId::Tag::EarthMap) return earth_map_angles(id.c);
    const SolutionSet sol = angles_for_family(id.family_case(), 0, tol);
    if (sol.kind != SolutionSet::Kind::Point || sol.points.size() != 1)
        throw IllConditioned("catalog angle system did not give a unique point");
    return sol.points.front();
}

TimezoneStrip timezone_strip(int c) {
    if (c < 2) throw DomainError("timezone_strip needs c >= 2");
    // Strip-local ids: apex 0 carries the gamma^c fan, lower apex 1 the
    // gamma^(c-1) fan, then the joints t_i, the bottoms g_i and the two side
    // corners of the first and last upper rhombus.
    TimezoneStrip strip;
    strip.gamma_c_end = 0;
    strip.gamma_c_minus_1_end = 1;
    auto t = [&](int i) { return 2 + (i - 1); };            // 1..c-1
    auto g = [&](int i) { return 2 + (c - 1) + (i - 1); };  // 1..c
    const int side_r = 2 + (c - 1) + c;
    const int side_l = side_r + 1;
    for (int i = 1; i <= c; ++i) {
        const int r = (i == 1) ? side_r : t(i - 1);
        const int l = (i == c) ? side_l : t(i);
        strip.faces.push_back(rhombus_face(0, r, g(i), l, kGamma));
    }
    for (int i = 1; i <= c - 1; ++i)
        strip.faces.push_back(rhombus_face(1, g(i + 1), t(i), g(i), kGamma));
    strip.vertex_count = side_l + 1;
    return strip;
}

std::vector<FamilyId> catalog_ids(int max_tiles) {
    std::vector<FamilyId> ids;
    auto push = [&](FamilyId id) {
        if (id.expected_tiles() <= max_tiles) ids.push_back(id);
    };
    push(FamilyId{FamilyId::Tag::Cube, 0});
    for (int c = 2; 8 * c - 2 <= max_tiles; ++c) push(FamilyId{FamilyId::Tag::EarthMap, c});
    push(FamilyId{FamilyId::Tag::Sporadic1, 0});
    push(FamilyId{FamilyId::Tag::Sporadic2, 0});
    push(FamilyId{FamilyId::Tag::Fusion1, 0});
    push(FamilyId{FamilyId::Tag::Fusion2, 0});
    push(FamilyId{FamilyId::Tag::QuadSubdivision, 0});
    return ids;
}

}  // namespace sphtile
