#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ore5/graph.hpp"

namespace ore5 {

// Bipartite graph with separate left/right id spaces.
struct BipartiteGraph {
    int nl = 0, nr = 0;
    std::vector<std::vector<int>> adj; // left -> sorted right neighbors

    BipartiteGraph() = default;
    BipartiteGraph(int nl_, int nr_) : nl(nl_), nr(nr_), adj(nl_) {}
    void add_edge(int l, int r);
    bool has_edge(int l, int r) const;
    long long edge_count() const;
};

struct Matching {
    std::vector<int> left_to_right; // -1 when unmatched
    std::vector<int> right_to_left;
    int size = 0;
};

// Maximum bipartite matching. Left vertices are processed in ascending id and
// each augmenting path is found by BFS layering, so the result is
// deterministic for a fixed graph.
Matching max_matching(const BipartiteGraph& b);

// q-fold Hall condition |N(A)| >= q|A| for all A subseteq left. Returns
// nullopt when it holds, otherwise a witness A (ascending) with
// |N(A)| < q|A|, found from the deficiency of a q-fold clone matching.
std::optional<std::vector<int>> hall_violator(const BipartiteGraph& b, int q);

// Every left vertex r receives exactly q right vertices; every right vertex
// is assigned to exactly one left vertex.
struct ProportionalMatching {
    int q = 0;
    std::vector<int> assignment; // right id -> left id
};

using HallWitness = std::vector<int>;

// Requires nr == q*nl (std::invalid_argument otherwise); returns the matching
// or a Hall witness.
std::variant<ProportionalMatching, HallWitness> proportional_matching(const BipartiteGraph& b, int q);

// Auxiliary pair-cover graph: left side = vertices of a reduced graph g_r,
// right side = all 2-subsets {u,w} of V(g_r); an edge x~{u,w} iff xu and xw
// are both edges of g_r.
struct PairCover {
    int ell = 0;
    std::vector<std::pair<int, int>> pairs; // pair id -> (i, j) with i < j
    BipartiteGraph b;                       // left = clusters, right = pairs
    int pair_id(int i, int j) const;
};

PairCover build_pair_cover(const Graph& g_r);

// Proportional matching on PairCover with q = (ell-1)/2; requires odd ell.
std::variant<ProportionalMatching, HallWitness> pair_cover_matching(const Graph& g_r);

// Copy-expanded pair-cover graph: every pair gets `copies` clones. For a pair
// with PairCover-neighborhood {w_1 < ... < w_t}, clone s <= t is wired only to
// w_s and the remaining copies-t clones are wired to all of w_1..w_t.
struct PairCopies {
    PairCover base;
    int copies = 0;
    BipartiteGraph b; // left = clusters, right = pair clones
    int clone_id(int pair, int s) const { return pair * copies + s; }
    int clone_pair(int clone) const { return clone / copies; }
};

// copies = max(ell, ceil(ell/mu)).
PairCopies build_pair_copies(const PairCover& l1, double mu);

struct StrongMatchingResult {
    PairCopies copies_graph;
    ProportionalMatching matching; // on PairCopies's right side (pair clones)
};

// Proportional matching on PairCopies with q = copies*(ell-1)/2. On success the
// neighborhood-ratio inequality
//   |N_PC2(A)|/|S'| >= (1-mu) * |N_PC1(A)|/|S|
// is spot-checked on a few seeded random subsets A (InternalError if broken).
std::variant<StrongMatchingResult, HallWitness> strong_proportional_matching(const Graph& g_r,
                                                                             double mu,
                                                                             std::uint64_t seed = 0);

// Maximum matching in a general graph (blossom shrinking); mate[v] = partner
// or -1. Deterministic: augmenting searches start from unmatched vertices in
// ascending order.
std::vector<int> general_max_matching(const Graph& g);

} // namespace ore5
