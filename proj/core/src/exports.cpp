#include <algorithm>
#include <cmath>
#include <sstream>

#include "sphtile/embed.hpp"
#include "sphtile/errors.hpp"

namespace sphtile {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 addv(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(const Vec3& a) { return scale(1.0 / norm(a), a); }

// Great-circle interpolation between two unit vectors.
Vec3 slerp(const Vec3& a, const Vec3& b, double s) {
    const double omega = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    if (omega < 1e-12) return a;
    const double wa = std::sin((1.0 - s) * omega) / std::sin(omega);
    const double wb = std::sin(s * omega) / std::sin(omega);
    return normalized(addv(scale(wa, a), scale(wb, b)));
}

struct Projector {
    Vec3 pole;  // projection center; pole itself maps to infinity
    Vec3 e1, e2;

    explicit Projector(const Vec3& p) : pole(normalized(p)) {
        const Vec3 ref = std::abs(pole[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        e1 = normalized(sub(ref, scale(dot(ref, pole), pole)));
        // Chart handedness chosen so faces away from the pole wind positive;
        // the face containing the pole is then the unique negative polygon.
        e2 = cross(e1, pole);
    }

    std::pair<double, double> map(const Vec3& p) const {
        const double denom = 1.0 - dot(p, pole);
        return {dot(p, e1) / denom, dot(p, e2) / denom};
    }
};

constexpr int kArcSamples = 32;

}  // namespace

std::string export_svg(const Embedding& e, const Tiling& t, const Vec3& pole_in) {
    const Vec3 pole = normalized(pole_in);
    for (int v = 0; v < t.vertex_count(); ++v) {
        Vec3 d = sub(e.coordinates[v], pole);
        if (norm(d) < 1e-6)
            throw DomainError("projection pole coincides with a tiling vertex");
    }
    const Projector proj(pole);

    struct Polygon {
        int face;
        std::vector<std::pair<double, double>> pts;
        double area = 0.0;  // signed
    };
    std::vector<Polygon> polys;
    double extent = 1.0;
    for (int f = 0; f < t.face_count(); ++f) {
        Polygon poly;
        poly.face = f;
        for (int k = 0; k < 4; ++k) {
            const Vec3 a = e.coordinates[t.origin(4 * f + k)];
            const Vec3 b = e.coordinates[t.dest(4 * f + k)];
            for (int s = 0; s < kArcSamples; ++s)
                poly.pts.push_back(proj.map(slerp(a, b, double(s) / kArcSamples)));
        }
        for (std::size_t i = 0; i < poly.pts.size(); ++i) {
            const auto& p = poly.pts[i];
            const auto& q = poly.pts[(i + 1) % poly.pts.size()];
            poly.area += p.first * q.second - q.first * p.second;
        }
        polys.push_back(std::move(poly));
    }
    // The face containing the pole projects inside-out (negative area); its
    // fill becomes the page background. Remaining faces paint large to small.
    auto outer = std::min_element(polys.begin(), polys.end(),
                                  [](const Polygon& a, const Polygon& b) { return a.area < b.area; });
    const int outer_face = outer->face;
    for (const Polygon& p : polys)
        if (p.face != outer_face)
            for (const auto& pt : p.pts)
                extent = std::max({extent, std::abs(pt.first), std::abs(pt.second)});
    std::stable_sort(polys.begin(), polys.end(), [](const Polygon& a, const Polygon& b) {
        return std::abs(a.area) > std::abs(b.area);
    });

    const double view = extent * 1.05;
    std::ostringstream svg;
    svg.precision(6);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"640\" height=\"640\" viewBox=\"" << -view << ' ' << -view << ' '
        << 2 * view << ' ' << 2 * view << "\">\n";
    auto fill_of = [&](int face) {
        return t.face_kind(face) == FaceKind::Square ? "#b0b0b0" : "#ffffff";
    };
    svg << "  <rect x=\"" << -view << "\" y=\"" << -view << "\" width=\"" << 2 * view
        << "\" height=\"" << 2 * view << "\" fill=\"" << fill_of(outer_face) << "\"/>\n";
    const double stroke = view / 320.0;
    for (const Polygon& poly : polys) {
        if (poly.face == outer_face) continue;
        svg << "  <polygon fill=\"" << fill_of(poly.face) << "\" stroke=\"black\" "
            << "stroke-width=\"" << stroke << "\" points=\"";
        for (std::size_t i = 0; i < poly.pts.size(); ++i) {
            if (i) svg << ' ';
            svg << poly.pts[i].first << ',' << poly.pts[i].second;
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string export_svg(const Embedding& e, const Tiling& t) {
    // Default pole: the first square's interior centroid direction. That
    // square becomes the unbounded outer region and whatever is antipodal to
    // it sits in the middle, matching the shaded-rim look of the renderings.
    int first_square = 0;
    for (int f = 0; f < t.face_count(); ++f)
        if (t.face_kind(f) == FaceKind::Square) {
            first_square = f;
            break;
        }
    Vec3 center{0, 0, 0};
    for (int k = 0; k < 4; ++k)
        center = addv(center, e.coordinates[t.origin(4 * first_square + k)]);
    return export_svg(e, t, normalized(center));
}

std::string export_off(const Embedding& e, const Tiling& t) {
    std::ostringstream off;
    off.precision(12);
    off << "OFF\n" << t.vertex_count() << ' ' << t.face_count() << ' ' << 2 * t.face_count()
        << '\n';
    for (int v = 0; v < t.vertex_count(); ++v) {
        const Vec3& p = e.coordinates[v];
        off << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    }
    for (int f = 0; f < t.face_count(); ++f) {
        off << 4;
        for (int k = 0; k < 4; ++k) off << ' ' << t.origin(4 * f + k);
        off << '\n';
    }
    return off.str();
}

}  // namespace sphtile
