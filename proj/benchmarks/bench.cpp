#include <benchmark/benchmark.h>

#include "sphtile/classify.hpp"
#include "sphtile/embed.hpp"

using namespace sphtile;

namespace {

static void BM_EarthMapGamma(benchmark::State& state) {
    const int c = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(earth_map_gamma(c));
}
BENCHMARK(BM_EarthMapGamma)->Arg(2)->Arg(10)->Arg(50);

static void BM_SolveSporadicPoint(benchmark::State& state) {
    for (auto _ : state) {
        const SolutionSet sol = solve_vertex_system({{2, 1, 0}, {3, 0, 1}});
        benchmark::DoNotOptimize(sol.points.size());
    }
}
BENCHMARK(BM_SolveSporadicPoint);

static void BM_CanonicalCode(benchmark::State& state) {
    const Tiling t = build(FamilyId{FamilyId::Tag::QuadSubdivision, 0});
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(t));
}
BENCHMARK(BM_CanonicalCode);

static void BM_Embed(benchmark::State& state) {
    const FamilyId id{FamilyId::Tag::EarthMap, static_cast<int>(state.range(0))};
    const Tiling t = build(id);
    const AngleSet angles = catalog_angles(id);
    for (auto _ : state) benchmark::DoNotOptimize(embed(t, angles).closure_residual);
}
BENCHMARK(BM_Embed)->Arg(2)->Arg(6)->Arg(10);

static void BM_ClassifySporadic(benchmark::State& state) {
    const AngleSet angles = angles_for_family(FamilyCase::Sporadic).points.front();
    Avc avc;
    avc.insert({2, 1, 0});
    avc.insert({3, 0, 1});
    for (auto _ : state) {
        const ClassifyResult result = classify(angles, avc, 14);
        benchmark::DoNotOptimize(result.tilings.size());
    }
}
BENCHMARK(BM_ClassifySporadic);

}  // namespace

BENCHMARK_MAIN();
