#pragma once

#include <array>
#include <string>
#include <vector>

#include "sphtile/mesh.hpp"

namespace sphtile {

using Vec3 = std::array<double, 3>;

// Unit-sphere coordinates for every vertex of a tiling, with the residuals
// accumulated while propagating from the seed face.
struct Embedding {
    std::vector<Vec3> coordinates;  // indexed by vertex id, all unit norm
    double closure_residual = 0.0;  // max disagreement at a revisited vertex
    double max_angle_residual = 0.0;  // measured corner angle vs label
    double max_edge_residual = 0.0;   // measured edge length vs x
};

// Optional seed pose: an orthonormal frame applied to the default pose.
struct Pose {
    Vec3 axis_x{1, 0, 0};
    Vec3 axis_y{0, 1, 0};
    Vec3 axis_z{0, 0, 1};
};

// Lays the seed face at a fixed pose and walks the mesh breadth-first,
// solving each face from its entry edge. Throws ClosureFailure when a
// revisited vertex disagrees by more than tol.embed.
Embedding embed(const Tiling& t, const AngleSet& angles, const Tolerances& tol = {},
                const Pose& pose = {});

// Stereographic rendering: squares shaded, rhombi unshaded, geodesic edges
// sampled as polylines. The projection pole must stay clear of all vertices.
std::string export_svg(const Embedding& e, const Tiling& t);
std::string export_svg(const Embedding& e, const Tiling& t, const Vec3& pole);

// Flat-faced OFF model (chordal quadrilaterals, not spherical patches).
std::string export_off(const Embedding& e, const Tiling& t);

// CSV of the earth-map existence curve: gamma_over_pi,c_value rows.
std::string export_csv_cgamma(double gamma_lo, double gamma_hi, int steps);

}  // namespace sphtile
