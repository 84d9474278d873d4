#include "sphtile/embed.hpp"

#include <cmath>
#include <deque>
#include <optional>
#include <sstream>

#include "sphtile/errors.hpp"

namespace sphtile {

namespace {

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(const Vec3& a) { return scale(1.0 / norm(a), a); }

Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return add(add(scale(c, v), scale(s, cross(axis, v))),
               scale(dot(axis, v) * (1.0 - c), axis));
}

double angular_distance(const Vec3& a, const Vec3& b) {
    // atan2 form is accurate for both tiny and near-pi separations.
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

// Unit tangent at `at` pointing along the great circle towards `towards`.
Vec3 tangent_towards(const Vec3& at, const Vec3& towards) {
    const Vec3 t = sub(towards, scale(dot(towards, at), at));
    return normalized(t);
}

// Walk a geodesic: start point, unit tangent, arc length.
Vec3 geodesic_step(const Vec3& from, const Vec3& direction, double arc) {
    return add(scale(std::cos(arc), from), scale(std::sin(arc), direction));
}

}  // namespace

Embedding embed(const Tiling& t, const AngleSet& angles, const Tolerances& tol,
                const Pose& pose) {
    Embedding out;
    out.coordinates.assign(t.vertex_count(), Vec3{0, 0, 0});
    std::vector<char> placed(t.vertex_count(), 0);

    auto place = [&](int v, const Vec3& p, int face) {
        if (!placed[v]) {
            placed[v] = 1;
            out.coordinates[v] = p;
            return;
        }
        const double gap = angular_distance(out.coordinates[v], p);
        out.closure_residual = std::max(out.closure_residual, gap);
        if (gap > tol.embed) {
            std::ostringstream oss;
            oss << "vertex " << v << " reached twice, positions disagree by " << gap
                << " rad (face " << face << ")";
            throw ClosureFailure(oss.str(), gap);
        }
    };

    // Seed: face 0 with its first corner on the pose z-axis and the first edge
    // leaving in the pose x-z plane.
    const Vec3 p0 = pose.axis_z;
    const Vec3 d0 = pose.axis_x;
    place(t.origin(0), p0, 0);
    place(t.origin(1), geodesic_step(p0, d0, angles.edge), 0);

    // Given two consecutive placed corners of a face, walk the rest of the
    // loop: at each corner turn by the interior angle. For a counterclockwise
    // loop seen from outside, the interior lies clockwise of the reversed
    // incoming edge when rotating about the outward vertex normal.
    auto solve_face = [&](int entry) {
        const int face = t.face_of(entry);
        int h = entry;
        for (int k = 0; k < 2; ++k) {
            const Vec3 a = out.coordinates[t.origin(h)];
            const Vec3 b = out.coordinates[t.origin(t.next(h))];
            const double interior = angles.angle(t.label(t.next(h)));
            const Vec3 back = tangent_towards(b, a);
            const Vec3 dir = rotate_about(back, b, -interior);
            place(t.origin(t.next(t.next(h))), geodesic_step(b, dir, angles.edge), face);
            h = t.next(h);
        }
    };

    // BFS over faces from face 0; each face is entered through a half-edge
    // whose endpoints are already placed.
    std::vector<char> visited(t.face_count(), 0);
    std::deque<int> queue;
    visited[0] = 1;
    solve_face(0);
    for (int k = 0; k < 4; ++k) queue.push_back(t.twin(k));
    while (!queue.empty()) {
        const int entry = queue.front();
        queue.pop_front();
        const int face = t.face_of(entry);
        if (visited[face]) continue;
        visited[face] = 1;
        solve_face(entry);
        for (int k = 0; k < 4; ++k) queue.push_back(t.twin(4 * face + k));
    }

    // Residual sweep: edge lengths, corner angles, unit norms.
    for (int v = 0; v < t.vertex_count(); ++v) {
        out.coordinates[v] = normalized(out.coordinates[v]);
    }
    for (int h = 0; h < t.half_edge_count(); ++h) {
        const Vec3& a = out.coordinates[t.origin(h)];
        const Vec3& b = out.coordinates[t.dest(h)];
        out.max_edge_residual =
            std::max(out.max_edge_residual, std::abs(angular_distance(a, b) - angles.edge));
        const Vec3& c = out.coordinates[t.origin(t.prev(h))];
        const double measured =
            std::acos(std::clamp(dot(tangent_towards(a, b), tangent_towards(a, c)), -1.0, 1.0));
        out.max_angle_residual = std::max(
            out.max_angle_residual, std::abs(measured - angles.angle(t.label(h))));
    }
    return out;
}

std::string export_csv_cgamma(double gamma_lo, double gamma_hi, int steps) {
    if (!(gamma_lo > 0.0 && gamma_hi < kPi / 2.0 && gamma_lo < gamma_hi))
        throw DomainError("export_csv_cgamma: grid must lie inside (0, pi/2)");
    if (steps < 2) throw DomainError("export_csv_cgamma: need at least 2 steps");
    std::ostringstream oss;
    oss << "gamma_over_pi,c_value\n";
    oss.precision(12);
    for (int i = 0; i < steps; ++i) {
        const double gamma = gamma_lo + (gamma_hi - gamma_lo) * i / (steps - 1);
        oss << gamma / kPi << ',' << earth_map_count(gamma) << '\n';
    }
    return oss.str();
}

}  // namespace sphtile
