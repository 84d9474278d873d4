#include "sphtile/vertex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sphtile/errors.hpp"

namespace sphtile {

char label_letter(CornerLabel label) {
    switch (label) {
        case CornerLabel::Alpha: return 'a';
        case CornerLabel::Beta: return 'b';
        default: return 'g';
    }
}

std::string label_name(CornerLabel label) {
    switch (label) {
        case CornerLabel::Alpha: return "alpha";
        case CornerLabel::Beta: return "beta";
        default: return "gamma";
    }
}

int VertexType::count(CornerLabel label) const {
    switch (label) {
        case CornerLabel::Alpha: return alpha;
        case CornerLabel::Beta: return beta;
        default: return gamma;
    }
}

std::string to_string(const VertexType& v) {
    std::ostringstream oss;
    bool first = true;
    const std::pair<char, int> parts[] = {{'a', v.alpha}, {'b', v.beta}, {'c', v.gamma}};
    for (auto [letter, count] : parts) {
        if (count == 0) continue;
        if (!first) oss << ' ';
        first = false;
        oss << letter;
        if (count > 1) oss << '^' << count;
    }
    if (first) oss << "1";
    return oss.str();
}

VertexType parse_vertex_type(const std::string& text) {
    VertexType v;
    std::istringstream iss(text);
    std::string token;
    while (iss >> token) {
        const char letter = token[0];
        int count = 1;
        if (token.size() > 1) {
            if (token[1] != '^') throw ParseError("bad vertex token: " + token);
            try {
                count = std::stoi(token.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad vertex exponent: " + token);
            }
        }
        switch (letter) {
            case 'a': v.alpha += count; break;
            case 'b': v.beta += count; break;
            case 'c': case 'g': v.gamma += count; break;
            default: throw ParseError("bad vertex letter: " + token);
        }
    }
    return v;
}

bool Avc::contains(const VertexType& v) const {
    return std::binary_search(entries.begin(), entries.end(), v);
}

void Avc::insert(const VertexType& v) {
    auto it = std::lower_bound(entries.begin(), entries.end(), v);
    if (it == entries.end() || *it != v) entries.insert(it, v);
}

std::string to_string(const Avc& avc) {
    std::ostringstream oss;
    oss << (avc.exactness == Avc::Exactness::Realized ? "{=" : "{");
    for (std::size_t i = 0; i < avc.entries.size(); ++i)
        oss << (i ? ", " : " ") << to_string(avc.entries[i]);
    oss << " }";
    return oss.str();
}

int TilingStats::total_vertices() const {
    int total = 0;
    for (auto [degree, count] : vertices_by_degree) total += count;
    return total;
}

bool TilingStats::counts_consistent() const {
    int v3 = 0, rhs_v3 = 8, rhs_f = 6;
    for (auto [degree, count] : vertices_by_degree) {
        if (degree == 3) v3 = count;
        if (degree >= 4) {
            rhs_v3 += (degree - 4) * count;
            rhs_f += (degree - 3) * count;
        }
    }
    return v3 == rhs_v3 && tiles == rhs_f && squares + rhombi == tiles &&
           total_vertices() == tiles + 2;
}

double angle_remainder(const VertexType& v, const AngleSet& angles) {
    return 2.0 * kPi -
           (v.alpha * angles.alpha + v.beta * angles.beta + v.gamma * angles.gamma);
}

Degree3Seeds enumerate_degree3_seeds() {
    // Symbolic facts: pi > beta > alpha > gamma, alpha > pi/2, beta + gamma > pi,
    // and alpha + beta + remainder = 2*pi must be completable at some vertex,
    // which forces the remainder of an alpha-beta pair to be at least gamma.
    Degree3Seeds out;
    for (int a = 3; a >= 0; --a) {
        for (int b = 3 - a; b >= 0; --b) {
            const int c = 3 - a - b;
            const VertexType v{a, b, c};
            std::string reason;
            if (v == VertexType{0, 0, 3})
                reason = "3 gamma = 2 pi makes alpha + beta exceed 2 pi - gamma, "
                         "so the forced alpha-beta vertex cannot close";
            else if (v == VertexType{2, 0, 1})
                reason = "2 alpha + gamma = 2 pi and beta > alpha leave the "
                         "alpha-beta remainder below gamma";
            else if (v == VertexType{1, 0, 2})
                reason = "alpha + 2 gamma = 2 pi and beta > gamma leave the "
                         "alpha-beta remainder below gamma";
            else if (v == VertexType{0, 1, 2})
                reason = "beta + 2 gamma = 2 pi and alpha > gamma leave the "
                         "alpha-beta remainder below gamma";
            if (reason.empty())
                out.admissible.push_back(v);
            else
                out.excluded.emplace_back(v, reason);
        }
    }
    return out;
}

Avc enumerate_vertices(const AngleSet& angles, int max_degree, const Tolerances& tol) {
    if (max_degree <= 0)
        max_degree = static_cast<int>(std::floor(2.0 * kPi / angles.gamma)) + 1;
    else if (max_degree < 3)
        throw DomainError("enumerate_vertices: max_degree must be >= 3");
    Avc out;
    out.exactness = Avc::Exactness::ConstraintSet;
    const int max_a = static_cast<int>(2.0 * kPi / angles.alpha) + 1;
    const int max_b = static_cast<int>(2.0 * kPi / angles.beta) + 1;
    for (int a = 0; a <= max_a; ++a) {
        for (int b = 0; b <= max_b; ++b) {
            // Remaining angle must be a multiple of gamma.
            const double rest = 2.0 * kPi - a * angles.alpha - b * angles.beta;
            if (rest < -tol.vertex) break;
            const int max_c = max_degree - a - b;
            for (int c = 0; c <= max_c; ++c) {
                const VertexType v{a, b, c};
                if (v.degree() < 3) continue;
                if (std::abs(angle_remainder(v, angles)) < tol.vertex) out.insert(v);
            }
        }
    }
    return out;
}

Avc counting_lemma_filter(const Avc& avc) {
    const bool hypothesis = std::all_of(avc.entries.begin(), avc.entries.end(),
                                        [](const VertexType& v) { return v.beta <= v.gamma; });
    if (!hypothesis) return avc;
    Avc out;
    out.exactness = avc.exactness;
    for (const VertexType& v : avc.entries)
        if (v.beta == v.gamma) out.insert(v);
    return out;
}

namespace {

void feasibility_search(const Avc& avc, std::size_t index, int tiles,
                        int used, long long alpha_sum, long long beta_sum,
                        long long gamma_sum, std::vector<int>& current,
                        std::vector<MultiplicityAssignment>& out) {
    const int total = tiles + 2;
    if (index == avc.entries.size()) {
        if (used != total) return;
        if (beta_sum != gamma_sum) return;
        if (alpha_sum % 4 != 0 || beta_sum % 2 != 0) return;
        const int squares = static_cast<int>(alpha_sum / 4);
        const int rhombi = static_cast<int>(beta_sum / 2);
        if (squares < 1 || rhombi < 1 || squares + rhombi != tiles) return;
        MultiplicityAssignment assignment;
        assignment.stats.tiles = tiles;
        assignment.stats.squares = squares;
        assignment.stats.rhombi = rhombi;
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (current[i] == 0) continue;
            assignment.multiplicity[avc.entries[i]] = current[i];
            assignment.stats.vertices_by_degree[avc.entries[i].degree()] += current[i];
        }
        if (!assignment.stats.counts_consistent()) return;
        out.push_back(std::move(assignment));
        return;
    }
    const VertexType& v = avc.entries[index];
    for (int m = 0; used + m <= total; ++m) {
        const long long a = alpha_sum + static_cast<long long>(m) * v.alpha;
        const long long b = beta_sum + static_cast<long long>(m) * v.beta;
        const long long g = gamma_sum + static_cast<long long>(m) * v.gamma;
        // Corner budgets: a tiling with `tiles` faces has 4*tiles corners.
        if (a > 4LL * tiles || b + g > 4LL * tiles) break;
        current[index] = m;
        feasibility_search(avc, index + 1, tiles, used + m, a, b, g, current, out);
    }
    current[index] = 0;
}

}  // namespace

std::vector<MultiplicityAssignment> integer_feasibility(const Avc& avc, int tiles) {
    if (tiles < 2) throw DomainError("integer_feasibility: tiles must be >= 2");
    std::vector<MultiplicityAssignment> out;
    std::vector<int> current(avc.entries.size(), 0);
    feasibility_search(avc, 0, tiles, 0, 0, 0, 0, current, out);
    return out;
}

}  // namespace sphtile
