#pragma once

#include <map>
#include <vector>

#include "sphtile/geometry.hpp"
#include "sphtile/vertex_type.hpp"

namespace sphtile {

// Admissible vertex combinations. `ConstraintSet` are the types allowed by the
// angle constraints; `Realized` the types actually appearing in a tiling.
struct Avc {
    enum class Exactness { ConstraintSet, Realized };

    std::vector<VertexType> entries;  // sorted, unique
    Exactness exactness = Exactness::ConstraintSet;

    bool contains(const VertexType& v) const;
    void insert(const VertexType& v);
};

std::string to_string(const Avc& avc);

// Face and vertex counts of a quadrilateral tiling of the sphere.
struct TilingStats {
    int tiles = 0;  // f
    int squares = 0;
    int rhombi = 0;
    std::map<int, int> vertices_by_degree;  // degree -> count

    int total_vertices() const;
    int total_edges() const { return 2 * tiles; }
    // v3 = 8 + sum (h-4) v_h  and  f = 6 + sum (h-3) v_h
    bool counts_consistent() const;
};

// 2*pi minus the angle sum of the combination; zero iff v closes a vertex.
double angle_remainder(const VertexType& v, const AngleSet& angles);

// The degree-3 vertex types that can appear, derived from the symbolic
// inequalities alone, plus the rejected ones with the reason each fails.
struct Degree3Seeds {
    std::vector<VertexType> admissible;
    std::vector<std::pair<VertexType, std::string>> excluded;
};
Degree3Seeds enumerate_degree3_seeds();

// Every type with |remainder| < tol.vertex and degree between 3 and
// max_degree. max_degree <= 0 selects the natural cap floor(2*pi/gamma) + 1.
Avc enumerate_vertices(const AngleSet& angles, int max_degree = 0,
                       const Tolerances& tol = {});

// If every entry has no more betas than gammas, keeps exactly the entries
// with equal counts; otherwise returns the input unchanged.
Avc counting_lemma_filter(const Avc& avc);

// One exhaustive solution of the global counting constraints: how many times
// each vertex type occurs, and the implied tile counts.
struct MultiplicityAssignment {
    std::map<VertexType, int> multiplicity;
    TilingStats stats;
};

// All nonnegative assignments m_v with sum m_v = f + 2, alpha count = 4 * squares,
// beta count = gamma count = 2 * rhombi, squares + rhombi = f and both >= 1.
std::vector<MultiplicityAssignment> integer_feasibility(const Avc& avc, int tiles);

}  // namespace sphtile
