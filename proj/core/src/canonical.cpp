#include <algorithm>
#include <deque>
#include <vector>

#include "sphtile/mesh.hpp"

namespace sphtile {

namespace {

// Breadth-first trace of the face adjacency starting from `start`, walking
// each face loop from its entry half-edge. `mirrored` walks loops backwards,
// which is exactly a traversal of the reflected map. The byte string depends
// only on the rooted (and possibly reflected) labelled map, never on ids.
std::string trace(const Tiling& t, int start, bool mirrored) {
    auto step = [&](int h) { return mirrored ? t.prev(h) : t.next(h); };
    // Corner swept when advancing along the loop out of half-edge h.
    auto corner = [&](int h) { return mirrored ? t.label(h) : t.label(t.next(h)); };

    std::string out;
    out.reserve(static_cast<std::size_t>(t.face_count()) * 10);
    std::vector<int> face_id(t.face_count(), -1);
    int next_id = 0;
    std::deque<int> queue;  // entry half-edges of discovered faces
    face_id[t.face_of(start)] = next_id++;
    queue.push_back(start);
    while (!queue.empty()) {
        const int entry = queue.front();
        queue.pop_front();
        out.push_back(t.face_kind(t.face_of(entry)) == FaceKind::Square ? 'S' : 'R');
        // In the reflected map the origin of `entry` is the other endpoint.
        const CornerLabel at_origin = mirrored ? t.label(t.next(entry)) : t.label(entry);
        out.push_back(static_cast<char>('a' + static_cast<int>(at_origin)));
        int h = entry;
        for (int k = 0; k < 4; ++k) {
            const int other = t.twin(h);
            const int nb = t.face_of(other);
            if (face_id[nb] < 0) {
                face_id[nb] = next_id++;
                queue.push_back(other);
                out.push_back('*');
            } else {
                out.push_back(static_cast<char>('0' + face_id[nb] % 10));
                out.push_back(static_cast<char>('0' + (face_id[nb] / 10) % 10));
            }
            out.push_back(static_cast<char>('a' + static_cast<int>(corner(h))));
            h = step(h);
        }
    }
    return out;
}

std::string minimum_trace(const Tiling& t, bool mirrored) {
    std::string best;
    for (int h = 0; h < t.half_edge_count(); ++h) {
        std::string candidate = trace(t, h, mirrored);
        if (best.empty() || candidate < best) best = std::move(candidate);
    }
    return best;
}

}  // namespace

std::string canonical_code(const Tiling& t) {
    return std::min(minimum_trace(t, false), minimum_trace(t, true));
}

std::string canonical_code_oriented(const Tiling& t) { return minimum_trace(t, false); }

bool is_isomorphic(const Tiling& a, const Tiling& b, bool allow_reflection) {
    if (a.face_count() != b.face_count()) return false;
    if (allow_reflection) return canonical_code(a) == canonical_code(b);
    return canonical_code_oriented(a) == canonical_code_oriented(b);
}

bool is_chiral(const Tiling& t) {
    return minimum_trace(t, false) != minimum_trace(t, true);
}

}  // namespace sphtile
