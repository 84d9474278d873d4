#pragma once

#include <optional>
#include <string>

#include "sphtile/mesh.hpp"

namespace sphtile {

// The classified tilings, one id per entry of the classification.
struct FamilyId {
    enum class Tag {
        Cube,
        EarthMap,  // takes c >= 2
        Fusion1,
        Fusion2,
        QuadSubdivision,
        Sporadic1,
        Sporadic2,
    };

    Tag tag = Tag::Cube;
    int c = 0;  // earth map parameter, c >= 2

    static FamilyId parse(const std::string& text);  // "earth-map:3", "fusion:1", ...
    std::string to_string() const;
    FamilyCase family_case() const;
    int expected_tiles() const;
};

// Deterministic constructor for each classified tiling. The output passes
// verify() with the angles of the id's family.
Tiling build(const FamilyId& id);

// Solved angles for a catalog id (the cube family is sampled mid-curve).
AngleSet catalog_angles(const FamilyId& id, const Tolerances& tol = {});

// One open block of 2c-1 rhombi; four copies glue with two squares into the
// earth map tiling. The marker vertices are the ends where c (respectively
// c-1) gamma corners of the strip pile up.
struct TimezoneStrip {
    std::vector<FaceSpec> faces;        // open mesh; vertex ids are strip-local
    int gamma_c_end = -1;               // vertex carrying gamma^c
    int gamma_c_minus_1_end = -1;       // vertex carrying gamma^(c-1)
    int vertex_count = 0;
};

TimezoneStrip timezone_strip(int c);

// Test associate: the fusion grouping drawn fourth in the reference figure;
// equivalent to Fusion1 up to reflection, built from a different matching.
Tiling build_fusion_fourth_grouping();

std::vector<FamilyId> catalog_ids(int max_tiles);  // ids with f <= max_tiles

}  // namespace sphtile
