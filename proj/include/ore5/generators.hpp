#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ore5/graph.hpp"

namespace ore5 {

// Weighted component mix for guest generation. Pieces: single edge (2
// vertices), two-edge path (3), longer path (4..8), cycle (4..9), triangle,
// claw K_{1,3}, star K_{1,4}. Any mix keeps the edge degree sum <= 5.
// triangle_target >= 0 first lays that fraction of floor(n/3) triangles;
// pendant_on_triangle then attaches one pendant vertex to the first triangle,
// which raises the maximum edge degree sum to exactly 5 without disturbing
// the triangle count. Leftover vertices that fit no piece become isolated
// (or raise std::invalid_argument when allow_isolated is false).
struct GuestProfile {
    int n = 0;
    double w_edge = 1, w_p2 = 1, w_path = 1, w_cycle = 1;
    double w_triangle = 1, w_claw = 1, w_star4 = 1;
    double triangle_target = -1;
    bool pendant_on_triangle = false;
    bool allow_isolated = true;
};

Graph gen_guest(const GuestProfile& p, std::uint64_t seed);

enum class HostShape {
    RandomMinDegree,    // random graph repaired to the requested minimum degree
    TripartiteExtremal, // sparse third + dense rest (first-case shape)
    TwoCliqueB,         // sparse third + two near-cliques (second-case shape)
    ThreeBlock,         // three sparse blocks, dense between (third-case shape)
    TightCH,            // K_{k,k+1,k-1} exactly (n = 3k)
    TightBipartite,     // K_{k+1,k-1} exactly (n = 2k)
};

const char* host_shape_name(HostShape s);
std::optional<HostShape> host_shape_from_name(const std::string& name);

// min_degree: RandomMinDegree target; -1 = ceil(2n/3). noise: density of
// optional extra edges inside sparse blocks / above the random threshold.
// planted_severe: for the three case shapes, how many starved vertices to
// plant (the generator caps the count so the shape keeps its minimum degree,
// block sparsity, and dispatch properties, and re-builds with fewer plants
// when a measured property would break). repair_to_conforming: after shaping,
// add edges at minimum-degree vertices until delta >= ceil(2n/3) (the
// standard way to make the tight shapes conforming).
struct HostProfile {
    int n = 0;
    HostShape shape = HostShape::RandomMinDegree;
    int min_degree = -1;
    double noise = 0.1;
    int planted_severe = 0;
    bool repair_to_conforming = false;
};

Graph gen_host(const HostProfile& p, std::uint64_t seed);

// The two tight families, exact and noise-free.
Graph tight_ch(int k);        // K_{k,k+1,k-1} on 3k vertices
Graph tight_bipartite(int k); // K_{k+1,k-1} on 2k vertices

// ceil(2n/3): the conforming host minimum degree.
int conforming_min_degree(int n);

} // namespace ore5
