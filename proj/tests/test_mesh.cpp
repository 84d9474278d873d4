#include <random>

#include "doctest.h"
#include "sphtile/catalog.hpp"
#include "sphtile/mesh.hpp"

using namespace sphtile;

namespace {

AngleSet family_point(FamilyCase family, int c = 0) {
    const SolutionSet sol = angles_for_family(family, c);
    REQUIRE(sol.kind == SolutionSet::Kind::Point);
    return sol.points.front();
}

// The cube with a permuted face order and renamed vertices; isomorphic to
// build(cube) but built from different ids.
Tiling relabelled_cube(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> names(8);
    for (int i = 0; i < 8; ++i) names[i] = i;
    std::shuffle(names.begin(), names.end(), rng);
    auto v = [&](int a) { return names[a & 3]; };
    auto w = [&](int a) { return names[4 + (a & 3)]; };
    std::vector<FaceSpec> faces;
    faces.push_back(square_face(v(0), v(1), v(2), v(3)));
    faces.push_back(square_face(w(3), w(2), w(1), w(0)));
    for (int a = 0; a < 4; ++a)
        faces.push_back(rhombus_face(v(a), w(a + 3), w(a), v(a + 1), CornerLabel::Gamma));
    std::shuffle(faces.begin() + 1, faces.end(), rng);
    return Tiling::assemble(faces);
}

}  // namespace

TEST_CASE("cube mesh structure and stats") {
    const Tiling cube = build(FamilyId{FamilyId::Tag::Cube, 0});
    const TilingStats s = cube.stats();
    CHECK(s.tiles == 6);
    CHECK(s.squares == 2);
    CHECK(s.rhombi == 4);
    CHECK(cube.vertex_count() == 8);
    CHECK(s.vertices_by_degree.at(3) == 8);
    CHECK(s.counts_consistent());
    const Avc avc = cube.realized_avc();
    CHECK(avc.entries == std::vector<VertexType>{{1, 1, 1}});
    CHECK(avc.exactness == Avc::Exactness::Realized);
}

TEST_CASE("assemble rejects broken meshes") {
    // Open mesh: one face only.
    std::vector<FaceSpec> open_faces{square_face(0, 1, 2, 3)};
    CHECK_THROWS_AS(Tiling::assemble(open_faces), StructuralError);

    // Rhombus corners that do not alternate.
    CHECK_THROWS_AS(rhombus_face(0, 1, 2, 3, CornerLabel::Alpha), StructuralError);
    FaceSpec bad = rhombus_face(0, 1, 2, 3, CornerLabel::Beta);
    bad.labels[1] = CornerLabel::Beta;
    std::vector<FaceSpec> faces{bad, bad};
    CHECK_THROWS_AS(Tiling::assemble(faces), StructuralError);
}

TEST_CASE("verification battery on the cube") {
    const Tiling cube = build(FamilyId{FamilyId::Tag::Cube, 0});
    const AngleSet angles = catalog_angles(FamilyId{FamilyId::Tag::Cube, 0});
    const VerificationReport good = verify(cube, angles);
    CHECK(good.all_passed());

    // Wrong angles: vertex sums fail.
    const AngleSet wrong = family_point(FamilyCase::Sporadic);
    const VerificationReport bad = verify(cube, wrong);
    CHECK(!bad.all_passed());

    const Tiling fusion = build(FamilyId{FamilyId::Tag::Fusion1, 0});
    const VerificationReport mismatched = verify(fusion, wrong);
    CHECK(!mismatched.all_passed());
    bool vertex_sum_failed = false;
    for (const VerificationCheck& c : mismatched.checks)
        if (c.name == "vertex-angle-sums" && !c.passed) vertex_sum_failed = true;
    CHECK(vertex_sum_failed);
}

TEST_CASE("verification flags a corrupted rhombus corner sequence") {
    // A rhombus with (beta, beta, gamma, gamma) corners is rejected at
    // assembly, the earliest structural gate.
    auto v = [](int a) { return a & 3; };
    auto w = [](int a) { return 4 + (a & 3); };
    std::vector<FaceSpec> faces;
    faces.push_back(square_face(v(0), v(1), v(2), v(3)));
    faces.push_back(square_face(w(3), w(2), w(1), w(0)));
    for (int a = 0; a < 4; ++a)
        faces.push_back(rhombus_face(v(a), w(a + 3), w(a), v(a + 1), CornerLabel::Gamma));
    faces[2].labels = {CornerLabel::Beta, CornerLabel::Beta, CornerLabel::Gamma,
                       CornerLabel::Gamma};
    CHECK_THROWS_AS(Tiling::assemble(faces), StructuralError);
}

TEST_CASE("canonical code is invariant under relabelling") {
    const std::string reference = canonical_code(build(FamilyId{FamilyId::Tag::Cube, 0}));
    for (unsigned seed : {1u, 2u, 3u, 4u, 20u})
        CHECK(canonical_code(relabelled_cube(seed)) == reference);
    // Stable across calls.
    CHECK(canonical_code(build(FamilyId{FamilyId::Tag::Cube, 0})) == reference);
}

TEST_CASE("isomorphism basics") {
    const Tiling cube = build(FamilyId{FamilyId::Tag::Cube, 0});
    CHECK(is_isomorphic(cube, cube, false));
    CHECK(is_isomorphic(cube, cube, true));
    CHECK(is_isomorphic(cube, relabelled_cube(7), true));
    const Tiling sporadic = build(FamilyId{FamilyId::Tag::Sporadic1, 0});
    CHECK(!is_isomorphic(cube, sporadic, true));
}

namespace {

// Rebuilds a tiling with shuffled vertex names, shuffled face order, rotated
// face loops and optionally every rhombus phase flipped (beta and gamma
// exchanged). The first three leave the labelled map unchanged; the flip
// generally does not.
Tiling scrambled(const Tiling& t, unsigned seed, bool flip_rhombus_phase) {
    std::mt19937 rng(seed);
    std::vector<int> names(t.vertex_count());
    for (int i = 0; i < t.vertex_count(); ++i) names[i] = i;
    std::shuffle(names.begin(), names.end(), rng);
    std::vector<FaceSpec> faces;
    for (int f = 0; f < t.face_count(); ++f) {
        FaceSpec spec;
        spec.kind = t.face_kind(f);
        const int rot = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int k = 0; k < 4; ++k) {
            const int h = 4 * f + ((k + rot) & 3);
            spec.corners[k] = names[t.origin(h)];
            CornerLabel l = t.label(h);
            if (flip_rhombus_phase && l != CornerLabel::Alpha)
                l = l == CornerLabel::Beta ? CornerLabel::Gamma : CornerLabel::Beta;
            spec.labels[k] = l;
        }
        faces.push_back(spec);
    }
    std::shuffle(faces.begin(), faces.end(), rng);
    return Tiling::assemble(faces);
}

}  // namespace

TEST_CASE("canonical code equality matches reflective isomorphism across variants") {
    // Catalog entries plus a pile of scrambled and phase-flipped variants.
    std::vector<Tiling> tilings;
    for (const FamilyId& id : catalog_ids(30)) tilings.push_back(build(id));
    const std::size_t originals = tilings.size();
    std::mt19937 seeds(99);
    for (std::size_t i = 0; i < originals && tilings.size() < originals + 20; ++i) {
        tilings.push_back(scrambled(tilings[i], seeds(), false));
        tilings.push_back(scrambled(tilings[i], seeds(), true));
    }
    std::vector<std::string> codes;
    for (const Tiling& t : tilings) codes.push_back(canonical_code(t));
    for (std::size_t i = 0; i < tilings.size(); ++i)
        for (std::size_t j = i; j < tilings.size(); ++j) {
            const bool same_code = codes[i] == codes[j];
            CHECK(same_code == is_isomorphic(tilings[i], tilings[j], true));
        }
    // Scrambling without the flip never changes the code.
    for (std::size_t i = 0; i < originals; ++i)
        CHECK(canonical_code(scrambled(tilings[i], 4242 + unsigned(i), false)) == codes[i]);
}

TEST_CASE("json round trip is lossless") {
    for (const FamilyId& id : catalog_ids(22)) {
        const Tiling t = build(id);
        const std::string doc = to_json(t);
        const Tiling back = tiling_from_json(doc);
        CHECK(to_json(back) == doc);
        CHECK(canonical_code(back) == canonical_code(t));
        CHECK(back.vertex_count() == t.vertex_count());
    }
}

TEST_CASE("json schema stays bit-exact for the smallest tiling") {
    // A frozen prefix and digest of the cube document; any schema drift
    // (field order, spacing, version tag) trips this before round-trip tests
    // would notice.
    const std::string doc = to_json(build(FamilyId{FamilyId::Tag::Cube, 0}));
    const std::string prefix =
        "{\n"
        "  \"format\": \"sphtile-tiling/1\",\n"
        "  \"num_vertices\": 8,\n"
        "  \"faces\": [\n"
        "    {\n"
        "      \"kind\": \"square\",\n";
    CHECK(doc.substr(0, prefix.size()) == prefix);
    CHECK(doc.size() == 2507);
    std::uint64_t digest = 1469598103934665603ull;
    for (unsigned char byte : doc) digest = (digest ^ byte) * 1099511628211ull;
    CHECK(digest == 0xc127824eb19450f1ull);
}

TEST_CASE("json parser rejects tampered documents") {
    const Tiling cube = build(FamilyId{FamilyId::Tag::Cube, 0});
    std::string doc = to_json(cube);
    CHECK_THROWS_AS(tiling_from_json("{"), ParseError);
    CHECK_THROWS_AS(tiling_from_json("{}"), ParseError);
    // Break a twin reference.
    const auto pos = doc.find("\"twin\": 4");
    REQUIRE(pos != std::string::npos);
    std::string bad = doc;
    bad.replace(pos, 9, "\"twin\": 5");
    CHECK_THROWS(tiling_from_json(bad));
}

TEST_CASE("vertex types read off half-edge fans") {
    const Tiling em3 = build(FamilyId{FamilyId::Tag::EarthMap, 3});
    const Avc avc = em3.realized_avc();
    CHECK(avc.entries == std::vector<VertexType>{{0, 2, 1}, {1, 1, 3}});
    int mixed = 0;
    for (int v = 0; v < em3.vertex_count(); ++v)
        if (em3.vertex_type(v) == VertexType{1, 1, 3}) mixed++;
    CHECK(mixed == 8);
}
