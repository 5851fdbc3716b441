#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ore5/embedding.hpp"
#include "ore5/extremal.hpp"
#include "ore5/factor.hpp"
#include "ore5/graph.hpp"
#include "ore5/hstructure.hpp"

namespace ore5 {

// Shared bookkeeping for the three extremal-host embedding procedures. Blocks
// are fixed at init; `vacant` shrinks as triangles and leftover vertices are
// placed. Every triangle placed by a cover/balance step is recorded in
// `placed` in placement order, so the final assembly can pair guest triangle
// components with host triangles one-to-one.
struct CaseState {
    int case_id = 1;
    const Graph* g = nullptr;
    std::vector<int> block_a, block_b; // cases 1-2: A and B = V - A
    std::vector<int> block_b1, block_b2; // case 2: the two near-clique halves of B
    std::vector<int> block_c;            // case 3: A, B, C partition V
    std::vector<char> in_a, in_b1, in_b2, in_c;
    std::vector<char> vacant;
    TriangleSet placed;
    int crossing_placed = 0; // case 2: triangles meeting both halves of B
    ExceptionalSets exceptional;
    // Matching that pairs each A-starved B vertex with a private A neighbor.
    std::vector<std::pair<int, int>> starved_partner; // (B vertex, A vertex)
    std::vector<std::string> trace;
    double eta = 0.15, mu = 0.3;

    int vacant_in(const std::vector<int>& block) const;
    std::vector<int> vacant_list(const std::vector<int>& block) const;
    bool balanced_triangle(const Triangle& t) const; // exactly one vertex in A
    bool crossing_triangle(const Triangle& t) const; // case 2: meets B1 and B2
    // Places t, marks its vertices occupied, verifies it is a host triangle.
    void place(const Triangle& t, const char* step);
};

// Validation + exceptional-set computation. The partitions must already be
// switch-stable (init throws std::invalid_argument otherwise, mirroring the
// exceptional-set preconditions).
CaseState init_case1(const Graph& g, std::vector<int> a, std::vector<int> b, double eta,
                     double mu);
CaseState init_case2(const Graph& g, std::vector<int> a, std::vector<int> b1, std::vector<int> b2,
                     double eta, double mu);
CaseState init_case3(const Graph& g, std::vector<int> a, std::vector<int> b, std::vector<int> c,
                     double eta, double mu);

// Case 1, cover steps: first the severely A-starved part of B via a matching
// into A, then the severely B-starved part of A, then both mild tiers. Every
// triangle is balanced (one A vertex, two B vertices).
void cover_exceptional_case1(CaseState& st);

// Case 1, leftover step: embeds the non-triangle part of the guest. Path
// components of leftover - I go onto vacant B paths (largest first); the
// independent set I goes onto vacant A vertices via a common-neighborhood
// matching. leftover_vertices lists the guest ids; leftover and dec describe
// the induced subgraph (dec indices refer to positions in leftover_vertices).
void embed_leftover_case1(CaseState& st, const Graph& leftover,
                          const std::vector<int>& leftover_vertices, const HDecomposition& dec,
                          Embedding& emb);

// Case 1, balance step: places `expected` triangles entirely inside vacant B
// until 2|vacant A| == |vacant B|. The caller passes the count derived from
// the bookkeeping identity; the step re-derives it and cross-checks.
void balance_case1(CaseState& st, int expected);

// Case 1, finish step: triangle factor of G[a4 + b4] with 2|a4| == |b4|: a
// perfect matching inside G[b4], each edge extended by a private a4 vertex.
std::vector<Triangle> finish_case1(const Graph& g, const std::vector<int>& a4,
                                   const std::vector<int>& b4, double mu, double alpha);

// Case 2: covers the A-starved vertices of B with exactly q crossing
// triangles (preferring each vertex's matched A partner) and the rest
// non-crossing.
void cover_a_starved(CaseState& st, int q);

// Case 2, parity step: covers the clique-starved and A-starved severe sets so
// that the vacant part of the second half ends even. Returns the branch label
// actually taken (recorded in st.trace as well).
std::string parity_cover(CaseState& st);

// Case 2, mild step: covers the remaining exceptional vertices with
// non-crossing balanced triangles only.
void cover_exceptional_case2(CaseState& st);

struct CaseEmbedResult {
    Embedding emb;
    CaseState st;
};

// Full drivers. h must satisfy the Ore-degree bound; the block partition must
// be stable for the respective case. Throw StepFailure when a search step
// runs dry and HypothesisViolation when a density-side precondition fails.
CaseEmbedResult case1_embed(const Graph& h, const Graph& g, const std::vector<int>& a,
                            const std::vector<int>& b, double eta, double mu);
CaseEmbedResult case2_embed(const Graph& h, const Graph& g, const std::vector<int>& a,
                            const std::vector<int>& b1, const std::vector<int>& b2, double eta,
                            double mu);
CaseEmbedResult case3_embed(const Graph& h, const Graph& g, const std::vector<int>& a,
                            const std::vector<int>& b, const std::vector<int>& c, double eta,
                            double mu);

} // namespace ore5
