#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphtile/catalog.hpp"
#include "sphtile/mesh.hpp"

namespace sphtile {

struct ClassifyOptions {
    std::uint64_t node_cap = 100'000'000;
    int workers = 1;
    Tolerances tol{};
};

struct RunReport {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_corner = 0;       // vertex combination not completable
    std::uint64_t pruned_feasibility = 0;  // tile counts cannot extend to a closure
    std::uint64_t closed_candidates = 0;   // closures before dedup
    std::uint64_t monohedral_discarded = 0;
    std::uint64_t duplicates_merged = 0;
    std::uint64_t chiral_pairs = 0;  // output classes whose mirror is not isomorphic
    int tilings = 0;
    int workers = 1;
    double wall_seconds = 0.0;

    std::string to_json() const;
    void merge(const RunReport& other);
};

// One discovered tiling with the canonical byte code used for deduplication.
struct FoundTiling {
    std::string code;
    Tiling tiling;
    std::string source;  // which angle system produced it (classify_all)
    AngleSet angles;
};

struct ClassifyResult {
    std::vector<FoundTiling> tilings;  // sorted by canonical code
    RunReport report;
};

// Exhaustive patch growth: every closed edge-to-edge tiling with at most
// max_tiles faces whose realized vertex set lies inside `avc`, up to
// isomorphism with reflections allowed. Throws BudgetExceeded past the node cap.
ClassifyResult classify(const AngleSet& angles, const Avc& avc, int max_tiles,
                        const ClassifyOptions& opts = {});

// Re-derives the classification at desk scale: iterates the degree-3 seed
// vertices, solves every seed/companion angle system, walks the one-parameter
// family and the earth-map points, classifies each, and merges by canonical
// code. Monohedral search outputs are counted and dropped.
ClassifyResult classify_all(int max_tiles, const ClassifyOptions& opts = {});

}  // namespace sphtile
