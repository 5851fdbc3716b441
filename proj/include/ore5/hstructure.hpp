#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ore5/graph.hpp"

namespace ore5 {

// Vertices bucketed by degree 0..4. Degree > 4 is a contract violation for
// guests (OreDegreeViolation).
struct DegreeClasses {
    std::array<std::vector<int>, 5> d;
};

DegreeClasses degree_classes(const Graph& h);

// Throws OreDegreeViolation unless ore_degree(h) <= 5.
void require_guest_degrees(const Graph& h);

// Adds edges to h in lexicographic order while the Ore-degree stays <= 5,
// repeating until no single further edge is addable. Stars K_{1,4} are
// untouched automatically (any edge at one would push an edge sum past 5).
Graph saturate(const Graph& h);

// A chain is a path with endpoints of degree 1 or 3 and interior of degree 2,
// or a cycle through exactly one degree-3 vertex with the rest of degree 2.
struct Chain {
    std::vector<int> verts; // path: endpoint..endpoint; cycle: anchor first, no repeat
    bool is_cycle = false;
};

struct ChainSystem {
    std::vector<Chain> chains;
};

// All chains of h (each degree-2 vertex lies on at most one), deterministic
// canonical order. Requires ore_degree(h) <= 5.
ChainSystem chain_system(const Graph& h);

// Matching in the auxiliary bipartite graph (degree-3 vertices) x (chains
// containing them) that saturates every degree-3 vertex. Entries are
// (vertex, chain index). Existence is structural under the degree contract;
// failure raises InternalError.
std::vector<std::pair<int, int>> d3_chain_matching(const Graph& h, const ChainSystem& cs);

struct HDecomposition {
    std::vector<int> I;       // independent dominating set, ascending
    std::vector<int> Iprime;  // seed subset tied to the degree-3 vertices
    std::vector<int> I1;      // deg-2 members whose neighbors share a component of H-I
    std::vector<int> I2;      // deg-2 members whose neighbors split across components
    std::vector<std::vector<int>> rest_components; // components of H-I, each an ordered path of <= 3 vertices
    // Filled by scattered_subset():
    std::vector<int> Ihat;
    std::array<std::vector<int>, 3> ihat_parts;
    std::uint64_t ihat_seed = 0;
};

// Decomposition with: I independent and dominating, I >= n/3, deg(x) <= 2 for
// x in I, components of H-I are paths of length <= 2, and no I-vertex has
// both neighbors non-adjacent in one component. Built by greedy completion
// plus local exchanges. Requires n >= 1 and ore_degree(h) <= 5.
HDecomposition decompose(const Graph& h);

// Greedy maximal subset of I - I1 - D0 with pairwise distance >= 5 in h,
// plus a seeded random equitable 3-split; stores into dec and returns Ihat.
std::vector<int> scattered_subset(const Graph& h, HDecomposition& dec, std::uint64_t seed);

struct TriangleExtremality {
    std::vector<std::array<int, 3>> triangles; // all triangles, vertex-disjoint under the contract
    std::vector<int> vdelta_prime;             // vertices lying in triangles
    std::vector<int> vdelta;                   // vertices of triangles whose members all have degree 2
    int triangle_count = 0;
    bool is_extreme = false; // triangle_count >= (1-nu)*n/3
};

TriangleExtremality triangle_extremality(const Graph& h, double nu);

} // namespace ore5
