#include <algorithm>
#include <map>

#include "doctest.h"
#include "sphtile/catalog.hpp"

using namespace sphtile;

namespace {
struct Expected {
    const char* id;
    int tiles, squares, rhombi;
    std::vector<VertexType> avc;
};
}  // namespace

TEST_CASE("family id parsing") {
    CHECK(FamilyId::parse("cube").tag == FamilyId::Tag::Cube);
    CHECK(FamilyId::parse("earth-map:4").c == 4);
    CHECK(FamilyId::parse("fusion:2").tag == FamilyId::Tag::Fusion2);
    CHECK(FamilyId::parse("sporadic:1").to_string() == "sporadic:1");
    CHECK_THROWS_AS(FamilyId::parse("earth-map:1"), DomainError);
    CHECK_THROWS_AS(FamilyId::parse("dodecahedron"), DomainError);
}

TEST_CASE("every builder hits its advertised counts and vertex sets") {
    const std::vector<Expected> expected = {
        {"cube", 6, 2, 4, {{1, 1, 1}}},
        {"earth-map:2", 14, 2, 12, {{0, 2, 1}, {1, 1, 2}}},
        {"earth-map:3", 22, 2, 20, {{0, 2, 1}, {1, 1, 3}}},
        {"earth-map:4", 30, 2, 28, {{0, 2, 1}, {1, 1, 4}}},
        {"fusion:1", 22, 6, 16, {{1, 1, 2}, {1, 2, 0}}},
        {"fusion:2", 22, 6, 16, {{1, 1, 2}, {1, 2, 0}}},
        {"quad-subdivision", 30, 6, 24, {{0, 3, 0}, {1, 1, 2}}},
        {"sporadic:1", 14, 10, 4, {{2, 1, 0}, {3, 0, 1}}},
        {"sporadic:2", 14, 10, 4, {{2, 1, 0}, {3, 0, 1}}},
    };
    for (const Expected& e : expected) {
        CAPTURE(e.id);
        const FamilyId id = FamilyId::parse(e.id);
        const Tiling t = build(id);
        const TilingStats s = t.stats();
        CHECK(s.tiles == e.tiles);
        CHECK(s.tiles == id.expected_tiles());
        CHECK(s.squares == e.squares);
        CHECK(s.rhombi == e.rhombi);
        CHECK(t.realized_avc().entries == e.avc);
    }
}

TEST_CASE("every builder verifies against its solved angles") {
    for (const FamilyId& id : catalog_ids(30)) {
        CAPTURE(id.to_string());
        const VerificationReport report = verify(build(id), catalog_angles(id));
        CHECK(report.all_passed());
    }
    // Earth maps further out than the classification budget used in tests.
    for (int c = 5; c <= 10; ++c) {
        const FamilyId id{FamilyId::Tag::EarthMap, c};
        CAPTURE(c);
        CHECK(verify(build(id), catalog_angles(id)).all_passed());
    }
}

TEST_CASE("integer feasibility contains every built multiplicity vector") {
    for (const FamilyId& id : catalog_ids(30)) {
        CAPTURE(id.to_string());
        const Tiling t = build(id);
        const Avc realized = t.realized_avc();
        std::map<VertexType, int> actual;
        for (int v = 0; v < t.vertex_count(); ++v) actual[t.vertex_type(v)]++;
        Avc constraint;
        constraint.entries = realized.entries;
        const auto assignments = integer_feasibility(constraint, t.face_count());
        const bool contained =
            std::any_of(assignments.begin(), assignments.end(),
                        [&](const MultiplicityAssignment& m) { return m.multiplicity == actual; });
        CHECK(contained);
    }
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
    const std::vector<FamilyId> ids = catalog_ids(30);
    std::vector<std::string> codes;
    for (const FamilyId& id : ids) codes.push_back(canonical_code(build(id)));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            CAPTURE(ids[i].to_string());
            CAPTURE(ids[j].to_string());
            CHECK(codes[i] != codes[j]);
        }
}

TEST_CASE("the two fusions differ; the fourth grouping repeats the second") {
    const Tiling fusion1 = build(FamilyId{FamilyId::Tag::Fusion1, 0});
    const Tiling fusion2 = build(FamilyId{FamilyId::Tag::Fusion2, 0});
    const Tiling fourth = build_fusion_fourth_grouping();
    CHECK(!is_isomorphic(fusion1, fusion2, true));
    CHECK(is_isomorphic(fusion1, fourth, true));
    CHECK(verify(fourth, catalog_angles(FamilyId{FamilyId::Tag::Fusion1, 0})).all_passed());
}

TEST_CASE("the two sporadic tilings differ") {
    const Tiling s1 = build(FamilyId{FamilyId::Tag::Sporadic1, 0});
    const Tiling s2 = build(FamilyId{FamilyId::Tag::Sporadic2, 0});
    CHECK(!is_isomorphic(s1, s2, true));
}

TEST_CASE("timezone strips glue into the earth map") {
    CHECK(timezone_strip(2).faces.size() == 3);
    CHECK(timezone_strip(3).faces.size() == 5);
    CHECK_THROWS_AS(timezone_strip(1), DomainError);

    for (int c : {2, 3, 4}) {
        CAPTURE(c);
        const TimezoneStrip strip = timezone_strip(c);
        // Four copies of the strip plus two squares, glued by identifying the
        // strip-local boundary vertices with the assembled tiling's names.
        const int tn = strip.vertex_count;
        std::vector<FaceSpec> faces;
        auto v = [&](int a) { return a & 3; };
        auto w = [&](int a) { return 4 + (a & 3); };
        auto t = [&](int a, int i) { return 8 + (a & 3) * (c - 1) + (i - 1); };
        auto g = [&](int a, int i) {
            return i == 1 ? w(a) : 8 + 4 * (c - 1) + (a & 3) * (c - 1) + (i - 2);
        };
        faces.push_back(square_face(v(0), v(1), v(2), v(3)));
        faces.push_back(square_face(w(3), w(2), w(1), w(0)));
        for (int a = 0; a < 4; ++a) {
            std::vector<int> rename(tn, -1);
            rename[strip.gamma_c_end] = v(a);
            rename[strip.gamma_c_minus_1_end] = w(a + 1);
            for (int i = 1; i <= c - 1; ++i) rename[2 + (i - 1)] = t(a, i);
            for (int i = 1; i <= c; ++i) rename[2 + (c - 1) + (i - 1)] = g(a, i);
            rename[2 + (c - 1) + c] = g(a + 3, c);  // right side corner
            rename[2 + (c - 1) + c + 1] = v(a + 1);  // left side corner
            for (FaceSpec f : strip.faces) {
                for (int& corner : f.corners) corner = rename[corner];
                faces.push_back(f);
            }
        }
        const Tiling assembled = Tiling::assemble(faces);
        const FamilyId id{FamilyId::Tag::EarthMap, c};
        CHECK(verify(assembled, catalog_angles(id)).all_passed());
        CHECK(is_isomorphic(assembled, build(id), true));
    }
}
