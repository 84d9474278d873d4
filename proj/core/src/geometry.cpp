#include "sphtile/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sphtile {

double AngleSet::angle(CornerLabel label) const {
    switch (label) {
        case CornerLabel::Alpha: return alpha;
        case CornerLabel::Beta: return beta;
        default: return gamma;
    }
}

std::string angle_set_violation(const AngleSet& a, double tol_compat) {
    if (!(a.gamma > 0.0 && a.gamma < a.alpha && a.alpha < a.beta && a.beta < kPi))
        return "ordering pi > beta > alpha > gamma > 0 violated";
    if (!(a.alpha > kPi / 2.0))
        return "square angle sum needs alpha > pi/2";
    if (!(a.beta + a.gamma > kPi))
        return "rhombus angle sum needs beta + gamma > pi";
    const double res = compatibility_residual(a.alpha, a.beta, a.gamma);
    if (std::abs(res) > tol_compat) {
        std::ostringstream oss;
        oss << "compatibility residual " << res << " exceeds " << tol_compat;
        return oss.str();
    }
    if (!(a.edge > 0.0 && a.edge < kPi / 2.0))
        return "edge length outside (0, pi/2)";
    const double cos_edge = 1.0 / std::pow(std::tan(a.alpha / 2.0), 2);
    if (std::abs(std::cos(a.edge) - cos_edge) > 1e-9)
        return "edge length does not match cos x = cot^2(alpha/2)";
    return {};
}

bool angle_set_admissible(const AngleSet& a, double tol_compat) {
    return angle_set_violation(a, tol_compat).empty();
}

double edge_length(double alpha) {
    if (!(alpha > kPi / 2.0 && alpha < kPi)) {
        std::ostringstream oss;
        oss << "edge_length: alpha = " << alpha << " outside (pi/2, pi)";
        throw DomainError(oss.str());
    }
    const double c = 1.0 / std::tan(alpha / 2.0);
    return std::acos(c * c);
}

double compatibility_residual(double alpha, double beta, double gamma) {
    for (double t : {alpha, beta, gamma}) {
        if (!(t > 0.0 && t < kPi))
            throw DomainError("compatibility_residual: angle outside (0, pi)");
    }
    const double ta = std::tan(alpha / 2.0);
    return ta * ta - std::tan(beta / 2.0) * std::tan(gamma / 2.0);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol_residual, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw IllConditioned("find_root: endpoints do not bracket a sign change");
    double best = lo, fbest = flo;
    for (int it = 0; it < max_iter; ++it) {
        // Secant proposal, clamped; fall back to the midpoint when degenerate.
        double mid = 0.5 * (lo + hi);
        if (fhi != flo) {
            const double sec = hi - fhi * (hi - lo) / (fhi - flo);
            if (sec > lo && sec < hi) mid = 0.5 * (mid + sec);
        }
        const double fmid = f(mid);
        if (std::abs(fmid) < std::abs(fbest)) { best = mid; fbest = fmid; }
        if (std::abs(fmid) < tol_residual && hi - lo < 1e-13 * (1.0 + std::abs(mid)))
            return mid;
        if (flo * fmid <= 0.0) { hi = mid; fhi = fmid; }
        else { lo = mid; flo = fmid; }
        if (hi - lo < 1e-15 * (1.0 + std::abs(mid))) break;
    }
    if (std::abs(fbest) > tol_residual)
        throw IllConditioned("find_root: residual did not reach tolerance");
    return best;
}

double earth_map_half_supplement(double gamma) {
    if (!(gamma > 0.0 && gamma < kPi / 2.0))
        throw DomainError("earth_map_half_supplement: gamma outside (0, pi/2)");
    return std::atan(std::sqrt(std::tan(gamma / 4.0) / std::tan(gamma / 2.0)));
}

double earth_map_count(double gamma) {
    if (!(gamma > 0.0 && gamma < kPi / 2.0))
        throw DomainError("earth_map_count: gamma outside (0, pi/2)");
    return 2.0 / gamma * earth_map_half_supplement(gamma) + 0.5;
}

double earth_map_gamma(int count) {
    if (count < 2)
        throw DomainError("earth_map_gamma: count must be >= 2 (c(gamma) stays below 2 at pi/2)");
    double lo = 1e-12, hi = kPi / 2.0 - 1e-12;
    // c(gamma) is strictly decreasing, so plain bisection on c(gamma) - count,
    // run until the bracket collapses to adjacent doubles.
    for (int it = 0; it < 200 && lo < hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (earth_map_count(mid) > count) lo = mid;
        else hi = mid;
    }
    const double gamma =
        std::abs(earth_map_count(lo) - count) < std::abs(earth_map_count(hi) - count) ? lo : hi;
    if (std::abs(earth_map_count(gamma) - count) > 1e-12)
        throw IllConditioned("earth_map_gamma: bisection stalled");
    return gamma;
}

AngleSet earth_map_angles(int count) {
    const double gamma = earth_map_gamma(count);
    AngleSet a;
    a.gamma = gamma;
    a.alpha = kPi - (count - 0.5) * gamma;
    a.beta = kPi - 0.5 * gamma;
    a.edge = edge_length(a.alpha);
    return a;
}

namespace {

struct LinearSystem {
    // Solutions of the vertex equations as an affine line
    // (alpha, beta, gamma) = base + t * dir, or a single point when the two
    // equations already pin all three angles together with compatibility.
    bool inconsistent = false;
    double base[3] = {0, 0, 0};
    double dir[3] = {0, 0, 0};
};

// Reduces two vertex equations sum(coeff * angles) = 2*pi to an affine line
// in (alpha, beta, gamma), pivoting on the best-conditioned variable pair.
LinearSystem reduce_two(const VertexType& u, const VertexType& v) {
    LinearSystem out;
    const double a1 = u.alpha, b1 = u.beta, c1 = u.gamma;
    const double a2 = v.alpha, b2 = v.beta, c2 = v.gamma;
    const double two_pi = 2.0 * kPi;
    // Solve for two of the variables in terms of the third, choosing the
    // pivot pair with the largest determinant for stability.
    const double det_ab = a1 * b2 - a2 * b1;
    const double det_ac = a1 * c2 - a2 * c1;
    const double det_bc = b1 * c2 - b2 * c1;
    const double best = std::max({std::abs(det_ab), std::abs(det_ac), std::abs(det_bc)});
    if (best < 1e-12) {
        // Dependent equations: same line as a single equation or inconsistent.
        out.inconsistent = true;
        return out;
    }
    if (std::abs(det_ab) == best) {
        // alpha, beta in terms of gamma = t.
        out.base[2] = 0.0;
        out.dir[2] = 1.0;
        out.base[0] = (two_pi * b2 - two_pi * b1) / det_ab;
        out.dir[0] = -(c1 * b2 - c2 * b1) / det_ab;
        out.base[1] = (two_pi * a1 - two_pi * a2) / det_ab;
        out.dir[1] = -(a1 * c2 - a2 * c1) / det_ab;
    } else if (std::abs(det_ac) == best) {
        // alpha, gamma in terms of beta = t.
        out.base[1] = 0.0;
        out.dir[1] = 1.0;
        out.base[0] = (two_pi * c2 - two_pi * c1) / det_ac;
        out.dir[0] = -(b1 * c2 - b2 * c1) / det_ac;
        out.base[2] = (two_pi * a1 - two_pi * a2) / det_ac;
        out.dir[2] = -(a1 * b2 - a2 * b1) / det_ac;
    } else {
        // beta, gamma in terms of alpha = t.
        out.base[0] = 0.0;
        out.dir[0] = 1.0;
        out.base[1] = (two_pi * c2 - two_pi * c1) / det_bc;
        out.dir[1] = -(a1 * c2 - a2 * c1) / det_bc;
        out.base[2] = (two_pi * b1 - two_pi * b2) / det_bc;
        out.dir[2] = -(a2 * b1 - a1 * b2) / det_bc;
    }
    return out;
}

bool inequalities_hold(double alpha, double beta, double gamma) {
    return gamma > 0.0 && gamma < alpha && alpha < beta && beta < kPi &&
           alpha > kPi / 2.0 && beta + gamma > kPi;
}

AngleSet assemble(double alpha, double beta, double gamma) {
    AngleSet s;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = gamma;
    s.edge = edge_length(alpha);
    return s;
}

// All roots of `residual` over the sub-intervals of [lo, hi] where
// `admissible` holds, located by a fixed-resolution scan plus refinement.
std::vector<double> scan_roots(const std::function<double(double)>& residual,
                               const std::function<bool(double)>& admissible,
                               double lo, double hi, double tol_root,
                               int kSamples = 8192) {
    std::vector<double> roots;
    double prev_t = 0.0, prev_f = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= kSamples; ++i) {
        const double t = lo + (hi - lo) * i / kSamples;
        if (!admissible(t)) {
            have_prev = false;
            continue;
        }
        const double f = residual(t);
        if (!std::isfinite(f)) {
            have_prev = false;
            continue;
        }
        if (have_prev && (prev_f == 0.0 || prev_f * f < 0.0)) {
            // Brackets hugging a tangent singularity can fail to refine; such
            // near-roots are rejected later by the admissibility filter.
            try {
                roots.push_back(find_root(residual, prev_t, t, tol_root));
            } catch (const IllConditioned&) {
            }
        } else if (have_prev && f == 0.0 && i == kSamples) {
            roots.push_back(t);
        }
        prev_t = t;
        prev_f = f;
        have_prev = true;
    }
    // Merge near-duplicates produced by tangential sign flips.
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    return roots;
}

}  // namespace

SolutionSet solve_vertex_system(const std::vector<VertexType>& equations,
                                const Tolerances& tol) {
    if (equations.empty() || equations.size() > 2)
        throw DomainError("solve_vertex_system: expected one or two vertex equations");

    SolutionSet out;
    if (equations.size() == 2) {
        const LinearSystem line = reduce_two(equations[0], equations[1]);
        if (line.inconsistent) {
            out.kind = SolutionSet::Kind::Empty;
            return out;
        }
        auto at = [&](double t, int i) { return line.base[i] + t * line.dir[i]; };
        auto admissible = [&](double t) {
            return inequalities_hold(at(t, 0), at(t, 1), at(t, 2));
        };
        auto residual = [&](double t) {
            return compatibility_residual(at(t, 0), at(t, 1), at(t, 2));
        };
        // The free parameter ranges over where all three angles stay in (0, pi);
        // scanning [0, pi] in the pivot variable covers it for any pivot choice.
        const std::vector<double> roots =
            scan_roots(residual, admissible, -kPi, kPi, tol.root);
        for (double t : roots) {
            AngleSet s = assemble(at(t, 0), at(t, 1), at(t, 2));
            if (angle_set_admissible(s, tol.compat)) out.points.push_back(s);
        }
        out.kind = out.points.empty() ? SolutionSet::Kind::Empty : SolutionSet::Kind::Point;
        return out;
    }

    // One equation: a one-parameter family in gamma (or empty). For each gamma
    // solve the equation for beta(alpha) and root-find the compatibility
    // residual in alpha.
    const VertexType eq = equations[0];
    if (eq.beta == 0)
        throw DomainError("solve_vertex_system: one-equation families need a beta term");
    auto sample = [eq, tol](double gamma) -> std::optional<AngleSet> {
        if (!(gamma > 0.0 && gamma < kPi)) return std::nullopt;
        auto beta_of_alpha = [&](double alpha) {
            return (2.0 * kPi - eq.alpha * alpha - eq.gamma * gamma) / eq.beta;
        };
        auto residual = [&](double alpha) {
            return compatibility_residual(alpha, beta_of_alpha(alpha), gamma);
        };
        auto admissible = [&](double alpha) {
            return inequalities_hold(alpha, beta_of_alpha(alpha), gamma);
        };
        std::vector<double> roots =
            scan_roots(residual, admissible, kPi / 2.0, kPi, tol.root, 512);
        if (roots.empty()) return std::nullopt;
        return assemble(roots.front(), beta_of_alpha(roots.front()), gamma);
    };

    // Find the gamma interval on which samples exist.
    constexpr int kProbe = 1024;
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (int i = 1; i < kProbe; ++i) {
        const double g = kPi * i / kProbe;
        if (sample(g)) {
            if (!any) lo = g;
            hi = g;
            any = true;
        }
    }
    if (!any) {
        out.kind = SolutionSet::Kind::Empty;
        return out;
    }
    out.kind = SolutionSet::Kind::Curve;
    out.gamma_lo = lo;
    out.gamma_hi = hi;
    out.sample = sample;
    {
        std::ostringstream oss;
        oss << "one-parameter family in gamma over (" << lo / kPi << ", " << hi / kPi
            << ") * pi for vertex " << to_string(eq);
        out.parameterization = oss.str();
    }
    return out;
}

SolutionSet angles_for_family(FamilyCase family, int earth_map_c, const Tolerances& tol) {
    switch (family) {
        case FamilyCase::Cube:
            return solve_vertex_system({VertexType{1, 1, 1}}, tol);
        case FamilyCase::EarthMap: {
            SolutionSet out;
            out.kind = SolutionSet::Kind::Point;
            out.points.push_back(earth_map_angles(earth_map_c));
            return out;
        }
        case FamilyCase::Fusion:
            return solve_vertex_system({VertexType{1, 2, 0}, VertexType{1, 1, 2}}, tol);
        case FamilyCase::QuadSubdivision:
            return solve_vertex_system({VertexType{0, 3, 0}, VertexType{1, 1, 2}}, tol);
        case FamilyCase::Sporadic:
            return solve_vertex_system({VertexType{2, 1, 0}, VertexType{3, 0, 1}}, tol);
    }
    throw DomainError("angles_for_family: unknown family");
}

}  // namespace sphtile
