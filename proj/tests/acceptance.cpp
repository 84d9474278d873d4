// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "sphtile/classify.hpp"
#include "sphtile/embed.hpp"

using namespace sphtile;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) failures++;
    std::printf("%s  criterion %d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

AngleSet point_of(FamilyCase family, int c = 0) {
    const SolutionSet sol = angles_for_family(family, c);
    if (sol.kind != SolutionSet::Kind::Point || sol.points.size() != 1)
        throw DomainError("expected a unique point solution");
    return sol.points.front();
}

bool close_pi(double value, double printed, double tol_pi = 1e-4) {
    return std::abs(value / kPi - printed) < tol_pi;
}

std::string fingerprint(const ClassifyResult& result) {
    std::ostringstream oss;
    for (const FoundTiling& ft : result.tilings) {
        const TilingStats s = ft.tiling.stats();
        oss << ft.code << '|' << s.tiles << '|' << s.squares << '|' << s.rhombi << '\n';
    }
    return oss.str();
}

}  // namespace

int main() {
    criterion(1, "angle reproduction", 1.0, [](std::string& detail) {
        const AngleSet p3 = point_of(FamilyCase::QuadSubdivision);
        const AngleSet p4 = point_of(FamilyCase::Fusion);
        const AngleSet p5 = point_of(FamilyCase::Sporadic);
        bool ok = close_pi(p3.alpha, 0.53584) && close_pi(p3.gamma, 0.39874) &&
                  close_pi(p3.edge, 0.20590);
        ok = ok && close_pi(p4.alpha, 0.55138) && close_pi(p4.beta, 0.72431) &&
             close_pi(p4.gamma, 0.36216) && close_pi(p4.edge, 0.24273);
        ok = ok && close_pi(p5.alpha, 0.58043) && close_pi(p5.beta, 0.83914) &&
             close_pi(p5.gamma, 0.25871) && close_pi(p5.edge, 0.29517);
        if (!ok) detail = "a solved angle strays from the printed value";
        return ok;
    });

    criterion(2, "fusion relation beta = 2 gamma", 1.0, [](std::string& detail) {
        const AngleSet p4 = point_of(FamilyCase::Fusion);
        const double gap = std::abs(p4.beta - 2.0 * p4.gamma);
        if (gap >= 1e-9) detail = "gap " + std::to_string(gap);
        return gap < 1e-9;
    });

    criterion(3, "infeasibility reproduction", 1.0, [](std::string&) {
        const SolutionSet a = solve_vertex_system({{3, 0, 0}, {0, 2, 1}});
        const SolutionSet b = solve_vertex_system({{2, 1, 0}, {0, 2, 1}});
        return a.kind == SolutionSet::Kind::Empty && b.kind == SolutionSet::Kind::Empty;
    });

    criterion(4, "existence curve", 5.0, [](std::string& detail) {
        if (std::abs(earth_map_count(kPi / 2.0 - 1e-12) - 1.228) > 1e-3) {
            detail = "endpoint value";
            return false;
        }
        for (int c = 2; c <= 50; ++c) {
            if (std::abs(earth_map_count(earth_map_gamma(c)) - c) >= 1e-10) {
                detail = "round trip at c=" + std::to_string(c);
                return false;
            }
        }
        double prev = earth_map_count(1e-4);
        for (int i = 1; i <= 10000; ++i) {
            const double g = 1e-4 + i * (kPi / 2.0 - 2e-4) / 10000.0;
            const double c = earth_map_count(g);
            if (!(c < prev)) {
                detail = "monotonicity at grid point " + std::to_string(i);
                return false;
            }
            prev = c;
        }
        return true;
    });

    criterion(5, "catalog verification", 5.0, [](std::string& detail) {
        struct Row {
            const char* id;
            int squares, rhombi;
        };
        std::vector<Row> rows = {{"cube", 2, 4},
                                 {"fusion:1", 6, 16},
                                 {"fusion:2", 6, 16},
                                 {"quad-subdivision", 6, 24},
                                 {"sporadic:1", 10, 4},
                                 {"sporadic:2", 10, 4}};
        std::vector<std::string> em_ids;
        for (int c = 2; c <= 10; ++c)
            em_ids.push_back("earth-map:" + std::to_string(c));
        for (const std::string& id : em_ids) rows.push_back({id.c_str(), 2, 0});
        for (const Row& row : rows) {
            const FamilyId id = FamilyId::parse(row.id);
            const Tiling t = build(id);
            const TilingStats s = t.stats();
            const int want_rhombi =
                id.tag == FamilyId::Tag::EarthMap ? 4 * (2 * id.c - 1) : row.rhombi;
            if (s.squares != row.squares || s.rhombi != want_rhombi ||
                s.tiles != id.expected_tiles()) {
                detail = std::string("tile counts wrong for ") + row.id;
                return false;
            }
            const VerificationReport report = verify(t, catalog_angles(id));
            if (!report.all_passed()) {
                detail = std::string("verify failed for ") + row.id + ": " + to_string(report);
                return false;
            }
        }
        return true;
    });

    criterion(6, "classification at desk scale", 600.0, [](std::string& detail) {
        auto codes_of = [](int max_f) {
            std::set<std::string> got;
            for (const FoundTiling& ft : classify_all(max_f).tilings) got.insert(ft.code);
            return got;
        };
        auto expect_codes = [](const std::vector<std::string>& names) {
            std::set<std::string> want;
            for (const std::string& name : names)
                want.insert(canonical_code(build(FamilyId::parse(name))));
            return want;
        };
        if (codes_of(14) !=
            expect_codes({"cube", "sporadic:1", "sporadic:2", "earth-map:2"})) {
            detail = "max_f=14 set mismatch";
            return false;
        }
        if (codes_of(22) != expect_codes({"cube", "sporadic:1", "sporadic:2", "earth-map:2",
                                          "earth-map:3", "fusion:1", "fusion:2"})) {
            detail = "max_f=22 set mismatch";
            return false;
        }
        // Every classified tiling with f <= 30: the theorem's list restricted
        // to the budget, matched to the catalog builders by canonical code.
        std::vector<std::string> full;
        for (const FamilyId& id : catalog_ids(30)) full.push_back(id.to_string());
        if (codes_of(30) != expect_codes(full)) {
            detail = "max_f=30 set mismatch";
            return false;
        }
        return true;
    });

    criterion(7, "isomorphism claims", 1.0, [](std::string& detail) {
        const Tiling f1 = build(FamilyId{FamilyId::Tag::Fusion1, 0});
        const Tiling f2 = build(FamilyId{FamilyId::Tag::Fusion2, 0});
        const Tiling fourth = build_fusion_fourth_grouping();
        if (is_isomorphic(f1, f2, true)) {
            detail = "the two fusions compare equal";
            return false;
        }
        if (!is_isomorphic(f1, fourth, true)) {
            detail = "second and fourth grouping compare different";
            return false;
        }
        return true;
    });

    criterion(8, "embedding closure", 5.0, [](std::string& detail) {
        std::vector<FamilyId> ids = catalog_ids(30);
        for (int c = 5; c <= 10; ++c) ids.push_back(FamilyId{FamilyId::Tag::EarthMap, c});
        for (const FamilyId& id : ids) {
            const Embedding e = embed(build(id), catalog_angles(id));
            if (e.closure_residual >= 1e-8) {
                detail = "closure residual too large for " + id.to_string();
                return false;
            }
        }
        AngleSet bad = catalog_angles(FamilyId{FamilyId::Tag::Cube, 0});
        bad.beta += 0.01;
        if (std::abs(compatibility_residual(bad.alpha, bad.beta, bad.gamma)) < 1e-3) {
            detail = "perturbation did not violate compatibility";
            return false;
        }
        try {
            embed(build(FamilyId{FamilyId::Tag::Cube, 0}), bad);
            detail = "inconsistent angles embedded without complaint";
            return false;
        } catch (const ClosureFailure&) {
        }
        return true;
    });

    criterion(9, "determinism", 120.0, [](std::string& detail) {
        ClassifyOptions one;
        one.workers = 1;
        ClassifyOptions eight;
        eight.workers = 8;
        const std::string run1 = fingerprint(classify_all(14, one));
        const std::string run2 = fingerprint(classify_all(14, one));
        const std::string run8 = fingerprint(classify_all(14, eight));
        if (run1 != run2) {
            detail = "two single-worker runs differ";
            return false;
        }
        if (run1 != run8) {
            detail = "1-worker and 8-worker runs differ";
            return false;
        }
        return true;
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
