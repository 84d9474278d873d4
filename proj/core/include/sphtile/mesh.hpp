#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphtile/vertex.hpp"

namespace sphtile {

enum class FaceKind : std::uint8_t { Square = 0, Rhombus = 1 };

// Raw face soup used to assemble meshes: each face is a counterclockwise
// (seen from outside the sphere) cycle of vertex ids plus per-corner labels.
struct FaceSpec {
    FaceKind kind;
    std::array<int, 4> corners;       // vertex ids, ccw
    std::array<CornerLabel, 4> labels;  // label at corners[i] inside this face
};

FaceSpec square_face(int v0, int v1, int v2, int v3);
FaceSpec rhombus_face(int v0, int v1, int v2, int v3, CornerLabel label_at_v0);

// A closed, labelled half-edge mesh on the topological sphere with
// quadrilateral faces. Half-edge h of face f occupies slot h - 4*f of the face
// loop; next(h) is the ccw successor inside the face. The corner label of h is
// the face angle at origin(h). Immutable after construction.
class Tiling {
  public:
    // An empty placeholder; only assemble() produces a usable mesh.
    Tiling() = default;

    // Builds and validates; throws StructuralError on any violation.
    static Tiling assemble(const std::vector<FaceSpec>& faces);

    int face_count() const { return static_cast<int>(kinds_.size()); }
    int half_edge_count() const { return 4 * face_count(); }
    int vertex_count() const { return vertex_count_; }

    FaceKind face_kind(int face) const { return kinds_[face]; }
    int face_of(int h) const { return h / 4; }
    int next(int h) const { return (h & ~3) | ((h + 1) & 3); }
    int prev(int h) const { return (h & ~3) | ((h + 3) & 3); }
    int twin(int h) const { return twin_[h]; }
    int origin(int h) const { return origin_[h]; }
    int dest(int h) const { return origin_[next(h)]; }
    CornerLabel label(int h) const { return label_[h]; }

    // Counterclockwise successor of h in the fan of half-edges leaving origin(h).
    int rotate_ccw(int h) const { return twin_[prev(h)]; }

    // All half-edges leaving vertex v, in ccw fan order.
    std::vector<int> vertex_fan(int v) const;
    VertexType vertex_type(int v) const;
    int vertex_degree(int v) const;

    TilingStats stats() const;
    Avc realized_avc() const;

  private:
    std::vector<FaceKind> kinds_;
    std::vector<int> twin_;
    std::vector<int> origin_;
    std::vector<CornerLabel> label_;
    std::vector<int> fan_start_;  // one outgoing half-edge per vertex
    int vertex_count_ = 0;
};

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_passed() const;
};

std::string to_string(const VerificationReport& report);

// Runs the full battery: structure, Euler count identities, per-vertex angle
// sums, total spherical area, and realized AVC against the enumerated one.
VerificationReport verify(const Tiling& t, const AngleSet& angles,
                          const Tolerances& tol = {});

// Starting-point independent serialization of the labelled mesh; equal byte
// strings certify isomorphism with reflections allowed.
std::string canonical_code(const Tiling& t);
std::string canonical_code_oriented(const Tiling& t);  // reflections distinguished

bool is_isomorphic(const Tiling& a, const Tiling& b, bool allow_reflection);

// True when the tiling is not isomorphic to its mirror image.
bool is_chiral(const Tiling& t);

// JSON round trip ("sphtile-tiling/1").
std::string to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);  // throws ParseError
void write_tiling(const Tiling& t, const std::string& path);
Tiling read_tiling(const std::string& path);

}  // namespace sphtile
