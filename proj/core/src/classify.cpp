#include "sphtile/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sphtile/errors.hpp"

namespace sphtile {

std::string RunReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["nodes"] = nodes;
    doc["pruned_corner"] = pruned_corner;
    doc["pruned_feasibility"] = pruned_feasibility;
    doc["closed_candidates"] = closed_candidates;
    doc["monohedral_discarded"] = monohedral_discarded;
    doc["duplicates_merged"] = duplicates_merged;
    doc["chiral_pairs"] = chiral_pairs;
    doc["tilings"] = tilings;
    doc["workers"] = workers;
    doc["wall_seconds"] = wall_seconds;
    return doc.dump(2) + "\n";
}

void RunReport::merge(const RunReport& other) {
    nodes += other.nodes;
    pruned_corner += other.pruned_corner;
    pruned_feasibility += other.pruned_feasibility;
    closed_candidates += other.closed_candidates;
    monohedral_discarded += other.monohedral_discarded;
    duplicates_merged += other.duplicates_merged;
    // chiral_pairs and tilings are recomputed over the final deduplicated set
}

namespace {

// ---------------------------------------------------------------------------
// Partial patch: an open quadrilateral mesh grown tile by tile. Vertices live
// in a union-find because gluing two boundary edges identifies their far
// endpoints. All reasoning is exact integer multiset arithmetic against the
// AVC; no floating point enters the search loop.
// ---------------------------------------------------------------------------

struct Patch {
    std::vector<int> twin;          // per half-edge, -1 while open
    std::vector<int> origin;        // per half-edge, union-find id
    std::vector<CornerLabel> label; // per half-edge
    std::vector<FaceKind> kind;     // per face
    std::vector<int> parent;        // union-find
    std::vector<VertexType> corners;  // accumulated corner counts, at roots
    int squares = 0;
    int rhombi = 0;
    int open_edges = 0;

    int faces() const { return static_cast<int>(kind.size()); }
    static int next_he(int h) { return (h & ~3) | ((h + 1) & 3); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    int make_vertex() {
        const int v = static_cast<int>(parent.size());
        parent.push_back(v);
        corners.push_back({});
        return v;
    }
};

struct SearchContext {
    AngleSet angles;
    Avc avc;
    int max_tiles = 0;
    std::uint64_t node_cap = 0;
    std::vector<std::pair<int, int>> feasible;  // (squares, rhombi) end states
    bool has_alpha_entry = false;
    Tolerances tol;
    std::atomic<std::uint64_t>* node_counter = nullptr;

    bool completable(const VertexType& v) const {
        for (const VertexType& e : avc.entries)
            if (v.alpha <= e.alpha && v.beta <= e.beta && v.gamma <= e.gamma) return true;
        return false;
    }
    bool complete(const VertexType& v) const { return avc.contains(v); }
    bool counts_extendable(int squares, int rhombi) const {
        for (auto [s, r] : feasible)
            if (squares <= s && rhombi <= r) return true;
        return false;
    }
};

struct Collector {
    RunReport report;
    std::vector<std::pair<std::string, Tiling>> found;  // canonical code, tiling
};

// Adds `label` to the corner count of root vertex rv; false when the result
// can no longer grow into any AVC entry.
bool add_corner(Patch& p, const SearchContext& ctx, int rv, CornerLabel label) {
    VertexType& vt = p.corners[rv];
    switch (label) {
        case CornerLabel::Alpha: vt.alpha++; break;
        case CornerLabel::Beta: vt.beta++; break;
        case CornerLabel::Gamma: vt.gamma++; break;
    }
    return ctx.completable(vt);
}

// First open half-edge around the boundary after h, walking through dest(h).
int boundary_next(const Patch& p, int h) {
    int s = Patch::next_he(h);
    while (p.twin[s] >= 0) s = Patch::next_he(p.twin[s]);
    return s;
}

// Glues every boundary corner whose vertex is complete; merges far endpoints.
// Returns false when a merge over-fills a vertex.
bool zip(Patch& p, const SearchContext& ctx, RunReport& report) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int h = 0; h < static_cast<int>(p.twin.size()); ++h) {
            if (p.twin[h] >= 0) continue;
            const int w = p.find(p.origin[Patch::next_he(h)]);
            if (!ctx.complete(p.corners[w])) continue;
            const int s = boundary_next(p, h);
            // h: a -> w, s: w -> b. Twinning them identifies a with b.
            p.twin[h] = s;
            p.twin[s] = h;
            p.open_edges -= 2;
            const int a = p.find(p.origin[h]);
            const int b = p.find(p.origin[Patch::next_he(s)]);
            if (a != b) {
                p.parent[b] = a;
                p.corners[a].alpha += p.corners[b].alpha;
                p.corners[a].beta += p.corners[b].beta;
                p.corners[a].gamma += p.corners[b].gamma;
                if (!ctx.completable(p.corners[a])) {
                    report.pruned_corner++;
                    return false;
                }
            }
            changed = true;
        }
    }
    return true;
}

// Places one tile whose corner at the site vertex (dest of the open edge
// `site`) carries `at_site`, gluing the new face along `site`.
bool place_tile(Patch& p, const SearchContext& ctx, RunReport& report, int site,
                FaceKind kind, CornerLabel at_site) {
    const int face = p.faces();
    if (face >= ctx.max_tiles) return false;
    (kind == FaceKind::Square ? p.squares : p.rhombi)++;
    if (!ctx.counts_extendable(p.squares, p.rhombi)) {
        report.pruned_feasibility++;
        return false;
    }

    CornerLabel labels[4];
    if (kind == FaceKind::Square) {
        for (CornerLabel& l : labels) l = CornerLabel::Alpha;
    } else {
        const CornerLabel other =
            at_site == CornerLabel::Beta ? CornerLabel::Gamma : CornerLabel::Beta;
        labels[0] = at_site;
        labels[1] = other;
        labels[2] = at_site;
        labels[3] = other;
    }

    const int v = p.find(p.origin[Patch::next_he(site)]);  // dest(site)
    const int u = p.find(p.origin[site]);
    const int fresh1 = p.make_vertex();
    const int fresh2 = p.make_vertex();
    const int base = 4 * face;
    p.kind.push_back(kind);
    for (int k = 0; k < 4; ++k) {
        p.twin.push_back(-1);
        p.label.push_back(labels[k]);
    }
    p.origin.push_back(v);
    p.origin.push_back(u);
    p.origin.push_back(fresh1);
    p.origin.push_back(fresh2);
    p.twin[base] = site;
    p.twin[site] = base;
    p.open_edges += 2;  // 4 new, one twinned immediately

    if (!add_corner(p, ctx, v, labels[0]) || !add_corner(p, ctx, u, labels[1]) ||
        !add_corner(p, ctx, fresh1, labels[2]) || !add_corner(p, ctx, fresh2, labels[3])) {
        report.pruned_corner++;
        return false;
    }
    return zip(p, ctx, report);
}

// The extension site: the open half-edge whose destination is the smallest
// boundary vertex (ties by half-edge id), so growth is deterministic.
int pick_site(Patch& p) {
    int best = -1, best_vertex = -1;
    for (int h = 0; h < static_cast<int>(p.twin.size()); ++h) {
        if (p.twin[h] >= 0) continue;
        const int v = p.find(p.origin[Patch::next_he(h)]);
        if (best < 0 || v < best_vertex) {
            best = h;
            best_vertex = v;
        }
    }
    return best;
}

void emit_if_valid(Patch& p, const SearchContext& ctx, Collector& out) {
    out.report.closed_candidates++;
    // Every vertex must have closed exactly onto an AVC entry.
    for (int v = 0; v < static_cast<int>(p.parent.size()); ++v) {
        if (p.find(v) != v) continue;
        if (!ctx.complete(p.corners[v])) {
            out.report.pruned_corner++;
            return;
        }
    }
    if (p.squares == 0 || p.rhombi == 0) {
        out.report.monohedral_discarded++;
        return;
    }
    // Compact vertex ids and hand the mesh to the validating constructor.
    std::vector<int> dense(p.parent.size(), -1);
    int next_dense = 0;
    std::vector<FaceSpec> faces;
    for (int f = 0; f < p.faces(); ++f) {
        FaceSpec spec;
        spec.kind = p.kind[f];
        for (int k = 0; k < 4; ++k) {
            int r = p.find(p.origin[4 * f + k]);
            if (dense[r] < 0) dense[r] = next_dense++;
            spec.corners[k] = dense[r];
            spec.labels[k] = p.label[4 * f + k];
        }
        faces.push_back(spec);
    }
    Tiling t = Tiling::assemble(faces);
    const VerificationReport check = verify(t, ctx.angles, ctx.tol);
    if (!check.all_passed())
        throw StructuralError("search emitted a tiling that fails verification:\n" +
                              to_string(check));
    out.found.emplace_back(canonical_code(t), std::move(t));
}

constexpr std::pair<FaceKind, CornerLabel> kMoves[3] = {
    {FaceKind::Square, CornerLabel::Alpha},
    {FaceKind::Rhombus, CornerLabel::Beta},
    {FaceKind::Rhombus, CornerLabel::Gamma},
};

void dfs(Patch& p, const SearchContext& ctx, Collector& out) {
    const int site = pick_site(p);
    for (const auto& [kind, at_site] : kMoves) {
        const std::uint64_t seen = ctx.node_counter->fetch_add(1) + 1;
        if (seen > ctx.node_cap)
            throw BudgetExceeded("classify: node cap exceeded after " +
                                 std::to_string(seen) + " nodes", seen);
        Patch child = p;
        if (!place_tile(child, ctx, out.report, site, kind, at_site)) continue;
        if (child.open_edges == 0) {
            emit_if_valid(child, ctx, out);
            continue;
        }
        dfs(child, ctx, out);
    }
}

Patch seed_patch() {
    Patch p;
    p.kind.push_back(FaceKind::Square);
    p.squares = 1;
    for (int k = 0; k < 4; ++k) {
        p.twin.push_back(-1);
        p.label.push_back(CornerLabel::Alpha);
        const int v = p.make_vertex();
        p.origin.push_back(v);
        p.corners[v].alpha = 1;
    }
    p.open_edges = 4;
    return p;
}

std::vector<std::pair<int, int>> feasible_end_states(const Avc& avc, int max_tiles) {
    std::set<std::pair<int, int>> pairs;
    for (int f = 2; f <= max_tiles; ++f) {
        for (const MultiplicityAssignment& m : integer_feasibility(avc, f))
            pairs.insert({m.stats.squares, m.stats.rhombi});
    }
    // The all-square closure (six squares, eight alpha^3 corners) is kept so
    // that monohedral dead ends are observed and reported rather than
    // silently pruned.
    if (avc.contains(VertexType{3, 0, 0}) && max_tiles >= 6) pairs.insert({6, 0});
    return {pairs.begin(), pairs.end()};
}

void sort_and_dedup(std::vector<std::pair<std::string, Tiling>>& found, RunReport& report,
                    std::vector<FoundTiling>& out, const AngleSet& angles,
                    const std::string& source) {
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [code, tiling] : found) {
        if (!out.empty() && out.back().code == code) {
            report.duplicates_merged++;
            continue;
        }
        FoundTiling ft;
        ft.code = code;
        ft.tiling = std::move(tiling);
        ft.source = source;
        ft.angles = angles;
        out.push_back(std::move(ft));
    }
}

}  // namespace

ClassifyResult classify(const AngleSet& angles, const Avc& avc, int max_tiles,
                        const ClassifyOptions& opts) {
    if (max_tiles < 6) throw DomainError("classify: max_tiles must be >= 6");
    const std::string violation = angle_set_violation(angles, 1e-6);
    if (!violation.empty()) throw DomainError("classify: inadmissible angles: " + violation);

    const auto t0 = std::chrono::steady_clock::now();
    std::atomic<std::uint64_t> nodes{0};

    SearchContext ctx;
    ctx.angles = angles;
    ctx.avc = avc;
    ctx.max_tiles = max_tiles;
    ctx.node_cap = opts.node_cap;
    ctx.tol = opts.tol;
    ctx.feasible = feasible_end_states(avc, max_tiles);
    ctx.node_counter = &nodes;
    for (const VertexType& e : avc.entries)
        if (e.alpha > 0) ctx.has_alpha_entry = true;

    ClassifyResult result;
    result.report.workers = std::max(1, opts.workers);

    if (ctx.has_alpha_entry && !ctx.feasible.empty()) {
        // Frontier expansion: deterministic BFS prefix, then independent
        // subtrees. Results are merged in frontier order and finally sorted by
        // canonical code, so scheduling cannot influence the output.
        Collector prefix;
        std::deque<Patch> frontier{seed_patch()};
        const std::size_t want = static_cast<std::size_t>(result.report.workers) * 8;
        while (result.report.workers > 1 && !frontier.empty() && frontier.size() < want) {
            Patch p = std::move(frontier.front());
            frontier.pop_front();
            const int site = pick_site(p);
            for (const auto& [kind, at_site] : kMoves) {
                const std::uint64_t seen = nodes.fetch_add(1) + 1;
                if (seen > ctx.node_cap) throw BudgetExceeded("classify: node cap exceeded after " +
                                 std::to_string(seen) + " nodes", seen);
                Patch child = p;
                if (!place_tile(child, ctx, prefix.report, site, kind, at_site)) continue;
                if (child.open_edges == 0) {
                    emit_if_valid(child, ctx, prefix);
                    continue;
                }
                frontier.push_back(std::move(child));
            }
        }

        std::vector<Collector> parts(frontier.size());
        if (result.report.workers <= 1) {
            std::size_t i = 0;
            for (Patch& p : frontier) dfs(p, ctx, parts[i++]);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::vector<std::thread> pool;
            std::vector<Patch> jobs(frontier.begin(), frontier.end());
            std::exception_ptr failure;
            std::mutex failure_mutex;
            for (int w = 0; w < result.report.workers; ++w) {
                pool.emplace_back([&] {
                    try {
                        for (std::size_t i = cursor.fetch_add(1); i < jobs.size();
                             i = cursor.fetch_add(1))
                            dfs(jobs[i], ctx, parts[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                });
            }
            for (std::thread& th : pool) th.join();
            if (failure) std::rethrow_exception(failure);
        }

        std::vector<std::pair<std::string, Tiling>> all = std::move(prefix.found);
        result.report.merge(prefix.report);
        for (Collector& part : parts) {
            result.report.merge(part.report);
            for (auto& item : part.found) all.push_back(std::move(item));
        }
        sort_and_dedup(all, result.report, result.tilings, angles, "");
    }

    result.report.nodes = nodes.load();
    result.report.tilings = static_cast<int>(result.tilings.size());
    for (const FoundTiling& ft : result.tilings)
        if (is_chiral(ft.tiling)) result.report.chiral_pairs++;
    result.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace {

// An angle system queued for classification.
struct System {
    std::string source;
    AngleSet angles;
};

std::string round_key(const AngleSet& a) {
    std::ostringstream oss;
    oss.precision(8);
    oss << std::fixed << a.alpha << ',' << a.beta << ',' << a.gamma;
    return oss.str();
}

}  // namespace

ClassifyResult classify_all(int max_tiles, const ClassifyOptions& opts) {
    if (max_tiles < 6) throw DomainError("classify_all: max_tiles must be >= 6");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<System> systems;
    std::set<std::string> seen_angles;
    auto enqueue = [&](std::string source, const AngleSet& a) {
        if (!seen_angles.insert(round_key(a)).second) return;
        systems.push_back({std::move(source), a});
    };

    // The one-parameter family: any sample point carries the same combinatorial
    // classification, so one deterministic choice of gamma suffices.
    {
        const double gamma = 0.55 * kPi;
        auto residual = [&](double alpha) {
            return compatibility_residual(alpha, 2.0 * kPi - alpha - gamma, gamma);
        };
        const double alpha = find_root(residual, 0.60 * kPi, 0.72 * kPi, opts.tol.root);
        AngleSet a{alpha, 2.0 * kPi - alpha - gamma, gamma, edge_length(alpha)};
        enqueue("curve a b c (sample)", a);
    }
    // The earth-map points, one per admissible gamma-count within budget.
    for (int c = 2; 8 * c - 2 <= max_tiles; ++c)
        enqueue("earth-map count " + std::to_string(c), earth_map_angles(c));
    // Every pair of a degree-3 seed with a companion vertex of bounded degree.
    const Degree3Seeds seeds = enumerate_degree3_seeds();
    const int degree_cap = std::max(6, (max_tiles + 2) / 8 + 2);
    std::vector<VertexType> pool;
    for (int d = 3; d <= degree_cap; ++d)
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) pool.push_back({a, b, d - a - b});
    for (const VertexType& seed : seeds.admissible) {
        for (const VertexType& companion : pool) {
            if (companion == seed) continue;
            const SolutionSet sol = solve_vertex_system({seed, companion}, opts.tol);
            if (sol.kind != SolutionSet::Kind::Point) continue;
            for (const AngleSet& a : sol.points)
                enqueue("pair " + to_string(seed) + " with " + to_string(companion), a);
        }
    }

    ClassifyResult merged;
    merged.report.workers = std::max(1, opts.workers);
    std::map<std::string, FoundTiling> by_code;
    for (const System& system : systems) {
        const Avc avc = enumerate_vertices(system.angles, 0, opts.tol);
        ClassifyResult result = classify(system.angles, avc, max_tiles, opts);
        merged.report.merge(result.report);
        for (FoundTiling& ft : result.tilings) {
            ft.source = system.source;
            auto [it, inserted] = by_code.try_emplace(ft.code, std::move(ft));
            if (!inserted) merged.report.duplicates_merged++;
        }
    }
    for (auto& [code, ft] : by_code) {
        if (is_chiral(ft.tiling)) merged.report.chiral_pairs++;
        merged.tilings.push_back(std::move(ft));
    }
    merged.report.tilings = static_cast<int>(merged.tilings.size());
    merged.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return merged;
}

}  // namespace sphtile
