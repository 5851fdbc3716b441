#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ore5/graph.hpp"

namespace ore5 {

using Triangle = std::array<int, 3>; // ascending

struct TriangleSet {
    std::vector<Triangle> triangles;
};

// Exact search for floor(n/3) vertex-disjoint triangles (n mod 3 vertices may
// stay uncovered). Backtracking pivots on the uncovered vertex of minimum
// residual degree; a greedy independent-set bound prunes hopeless branches.
// nullopt = no such family exists.
std::optional<TriangleSet> triangle_factor(const Graph& g);

// Covered/uncovered bookkeeping helper: true iff ts is a valid family of
// vertex-disjoint triangles of g covering all but exactly n mod 3 vertices.
bool is_triangle_factor(const Graph& g, const TriangleSet& ts);

// Completes a matching M to a triangle factor of G[A + V(M)]: bipartite graph
// A x M with a ~ (b1,b2) iff both ab1 and ab2 are edges; a perfect matching
// there yields |A| triangles. Requires |A| == |M|. On failure returns a
// deficient subset of A.
std::variant<TriangleSet, std::vector<int>> extend_matching_to_factor(
    const Graph& g, const std::vector<int>& a_side, const std::vector<std::pair<int, int>>& m);

// floor(n/(r+1)) disjoint stars K_{1,r}, each entry [center, leaf...].
// Randomized split + bipartite matching with a degree-concentration check and
// retries; r = 1 runs exact general matching instead, and small instances
// fall back to exact search. nullopt = no factor.
std::optional<std::vector<std::vector<int>>> k1r_factor(const Graph& g, int r, std::uint64_t seed);

// Hamilton cycle as a vertex sequence (closing edge implicit). A
// rotation-extension pass handles Dirac/Ore-style dense graphs quickly;
// exact backtracking covers the rest. nullopt = none exists.
std::optional<std::vector<int>> hamilton_cycle(const Graph& g);

// Vertex order v_0..v_{n-1} such that every edge of h joins vertices at most
// two slots apart (an embedding of h into the square of a Hamilton path).
// Requires ore_degree(h) <= 4 (OreDegreeViolation otherwise).
std::vector<int> layout_into_path_square(const Graph& h);

struct FictiveFactorResult {
    TriangleSet triangles;      // all-real triangles
    std::vector<int> discarded; // real vertices left uncovered
};

// Triangle factor of a reduced graph with universal helper vertices: tries
// the direct factor first; otherwise augments with ceil(6*d*n) vertices
// adjacent to every real vertex, factors, and drops helper triangles. The
// discarded list holds at most 2*ceil(6*d*n) + 2 real vertices.
std::optional<FictiveFactorResult> fictive_triangle_factor(const Graph& g_r, double d);

} // namespace ore5
