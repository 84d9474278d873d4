#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sphtile/errors.hpp"
#include "sphtile/vertex_type.hpp"

namespace sphtile {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Tolerances used throughout; every one can be overridden from the CLI.
struct Tolerances {
    double compat = 1e-9;   // compatibility residual accepted for solver outputs
    double printed = 1e-3;  // when checking values printed to 5 decimals
    double vertex = 1e-6;   // radians, on a vertex angle-sum remainder
    double root = 1e-10;    // residual of a 1-D root solve
    double embed = 1e-8;    // coordinate agreement in an embedding
    double area = 1e-6;     // total spherical area defect
};

// The four continuous parameters of the two prototiles: the square corner
// angle alpha, the rhombus corners beta > gamma, and the common edge length x.
// All in radians.
struct AngleSet {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double edge = 0.0;  // x

    double angle(CornerLabel label) const;
};

// Why an AngleSet candidate was rejected; empty string means it is admissible.
std::string angle_set_violation(const AngleSet& a, double tol_compat = 1e-9);
bool angle_set_admissible(const AngleSet& a, double tol_compat = 1e-9);

// x = arccos(cot^2(alpha/2)); requires pi/2 < alpha < pi, yields x in (0, pi/2).
double edge_length(double alpha);

// tan^2(alpha/2) - tan(beta/2) tan(gamma/2): zero exactly when a square and a
// rhombus with these corners share one edge length. Angles must be in (0, pi).
double compatibility_residual(double alpha, double beta, double gamma);

// Result of solving vertex angle-sum equations together with the
// compatibility relation. A one-equation system generically leaves one degree
// of freedom (kind == Curve); two independent equations pin isolated points.
struct SolutionSet {
    enum class Kind { Empty, Point, Curve };

    Kind kind = Kind::Empty;
    std::vector<AngleSet> points;

    // Curve data: gamma is the free variable on (gamma_lo, gamma_hi);
    // sample(gamma) produces the angle set on the curve.
    double gamma_lo = 0.0;
    double gamma_hi = 0.0;
    std::function<std::optional<AngleSet>(double)> sample;
    std::string parameterization;  // human-readable description
};

// Solves { a_i*alpha + b_i*beta + c_i*gamma = 2*pi } for the supplied vertex
// types (one or two), together with the compatibility relation and the
// admissibility inequalities. Infeasibility is reported as Kind::Empty.
SolutionSet solve_vertex_system(const std::vector<VertexType>& equations,
                                const Tolerances& tol = {});

// Earth-map existence analysis. earth_map_count is the continuous count c(gamma)
// of gamma corners at the mixed vertex that keeps the angle system consistent;
// it is strictly decreasing from +inf to about 1.228 on (0, pi/2). The
// underlying tangent equation has further solution branches, but all of them
// leave (0, pi/2) or stay below count 2, so only this branch is represented.
double earth_map_half_supplement(double gamma);       // T(gamma) = (pi - alpha)/2
double earth_map_count(double gamma);                 // c(gamma)
double earth_map_gamma(int count);                    // unique gamma with c(gamma) = count, count >= 2
AngleSet earth_map_angles(int count);                 // full AngleSet for that gamma

// The classified angle systems, dispatched to solve_vertex_system.
enum class FamilyCase {
    Cube,             // {alpha beta gamma}, one-parameter curve
    EarthMap,         // {beta^2 gamma, alpha beta gamma^c}, point per integer c >= 2
    Fusion,           // {alpha beta^2, alpha beta gamma^2}
    QuadSubdivision,  // {beta^3, alpha beta gamma^2}
    Sporadic,         // {alpha^2 beta, alpha^3 gamma}
};

SolutionSet angles_for_family(FamilyCase family, int earth_map_c = 0,
                              const Tolerances& tol = {});

// A generic bracketed 1-D root finder: bisection with a secant refinement
// step, no derivatives. f(lo) and f(hi) must have opposite signs.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol_residual, int max_iter = 200);

}  // namespace sphtile
