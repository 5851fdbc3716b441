#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ore5/factor.hpp"
#include "ore5/graph.hpp"
#include "ore5/hstructure.hpp"
#include "ore5/matching.hpp"

namespace ore5 {

// Synthetic cluster-level picture of a host: a reduced graph whose vertices
// stand for size-m clusters, a triangle factor on it, and the density/slack
// parameters of the run. m*ell + v0_size = n.
struct ClusterWorld {
    Graph gr;
    int m = 0;
    double d = 0, eps = 0, delta_buf = 0, c = 0;
    TriangleSet t;
    int v0_size = 0;

    int ell() const { return gr.n; }
    long long n() const { return (long long)m * gr.n + v0_size; }
};

// Reduced graph: near-complete with minimum degree kept >= 2*ell/3 and a
// triangle factor; edge_keep in (0,1] thins it. Validates parameters and the
// factor. Deterministic per seed.
ClusterWorld make_cluster_world(int ell, int m, double d, double eps, double delta_buf,
                                double c_param, int v0_size, double edge_keep,
                                std::uint64_t seed);

// Guest-to-cluster assignment under construction. Cluster indices run 1..ell;
// 0 marks the surplus class destined for the exceptional host vertices; -1 is
// unassigned. Fictive helper vertices occupy ids >= n_real.
struct AssignmentState {
    int n_real = 0;
    std::vector<int> h;
    std::vector<int> owner;      // fictive id -> owning guest vertex; -1 for real ids
    std::vector<int> fictive_of; // real vertex -> its fictive id or -1
    std::vector<std::array<int, 2>> pair_of; // real vertex -> neighbor index pair (i < j)
    std::vector<std::vector<int>> buffers;   // cluster -> buffer members ([0] unused)
    std::vector<int> psi0_row; // guest vertex -> row of the exceptional degree table, -1 none

    std::vector<int> l_sizes(int ell) const;              // real vertices per index 0..ell
    std::vector<std::vector<int>> l_sets(int ell) const;  // the members themselves
};

// Random triangle + random role permutation per path component; vertices of
// the independent set that sit next to one component land on the triangle
// vertex their neighbors leave free; isolated vertices pick a uniform cluster.
// Pair-distributed classes stay unassigned.
AssignmentState assign_components(const Graph& h, const HDecomposition& dec,
                                  const ClusterWorld& world, std::uint64_t seed);

// Gives every two-real-neighbor vertex whose neighbors share one index, and
// every degree-one member of the scattered set, a fictive second neighbor at
// a uniform random index different from the real one.
void add_fictive(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                 std::uint64_t seed);

// Sends every pair-class vertex outside the first scattered part to the
// cluster matched to its index pair.
void distribute_i2(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                   const ClusterWorld& world, const PairCover& pc,
                   const ProportionalMatching& m1);

// Random equipartition of each first-part pair class into copy segments;
// segment t follows the matched cluster of copy t.
void distribute_ihat1(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                      const ClusterWorld& world, const StrongMatchingResult& m2,
                      std::uint64_t seed);

// Moves a random surplus subset of the first scattered part out of each
// cluster into class 0 until every cluster holds exactly m real vertices.
void form_l0(const Graph& h, const HDecomposition& dec, AssignmentState& st,
             const ClusterWorld& world, std::uint64_t seed);

struct SwitchRecord {
    int out_vertex = -1; // left class 0 for a cluster
    int in_vertex = -1;  // entered class 0 in its place
    int cluster = 0;
};

// Repairs the degree condition tying class-0 vertices to their exceptional
// host images: a class-0 vertex whose host image sees one of its neighbor
// clusters poorly swaps places with a first-part vertex whose own pair the
// image sees well. host_deg[row][j] = degree of exceptional host vertex `row`
// into cluster j+1; rows follow st.psi0_row.
std::vector<SwitchRecord> switching_c7(const Graph& h, const HDecomposition& dec,
                                       AssignmentState& st, const ClusterWorld& world,
                                       const std::vector<std::vector<int>>& host_deg,
                                       const StrongMatchingResult& m2);

// Picks the buffer sets: equally many second-part vertices from every pair
// class, excluding fictive owners, giving |B_i| = delta*m members in each
// cluster and exactly 2*delta*m buffer neighbors in every cluster.
void select_buffers(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                    const ClusterWorld& world, const PairCover& pc,
                    const ProportionalMatching& m1);

// Test fixture standing in for the embedding-time flagged host sets: per
// cluster, degree profiles (into every cluster) of the flagged vertices.
struct EmbedFixture {
    double eps_prime = 0;
    std::vector<std::vector<std::vector<int>>> flagged;
};

struct ConditionConstants {
    double k1 = 15.0;    // class-0 size against d*n
    double k2 = 15000.0; // class-0 neighbor load against d*m
    double k3 = 6.0;     // flagged-replacement neighbor load against eps_prime*m
};

struct ConditionReport {
    std::array<bool, 10> checked{}; // index 1..9
    std::array<bool, 10> ok{};
    std::vector<std::string> notes;

    bool all_ok() const {
        for (int i = 1; i <= 9; ++i)
            if (checked[i] && !ok[i]) return false;
        return true;
    }
};

// Evaluates the nine partition conditions: exact predicates for C1-C7 (C7
// needs the host degree table), fixture-driven replacement matching for
// C8-C9. Unchecked conditions have checked[i] = false.
ConditionReport check_conditions(const Graph& h, const HDecomposition& dec,
                                 const AssignmentState& st, const ClusterWorld& world,
                                 const std::vector<std::vector<int>>* l0_host_deg,
                                 const EmbedFixture* fixture, const ConditionConstants& kc = {});

// Removal sets of size exactly ceil(4*eps*m) per cluster: every vertex whose
// degree into at least half of its cluster's matched pairs falls below
// (d - 6*eps)*m must go; the quota is filled worst-first and padded with the
// lowest ids. profiles[i][v][j] = degree of vertex v of cluster i+1 into
// cluster j+1.
std::vector<std::vector<int>> bad_vertex_removal(
    const ClusterWorld& world, const std::vector<std::vector<std::vector<int>>>& profiles,
    const PairCover& pc, const ProportionalMatching& m1);

struct PipelineResult {
    HDecomposition dec;
    AssignmentState state;
    ConditionReport report;
    std::vector<SwitchRecord> switches;
    std::vector<std::vector<int>> l0_host_deg;
};

// Full pipeline on one guest and one world: decompose, assign, add fictive
// neighbors, distribute the pair classes, form class 0, switch, select
// buffers, and evaluate the conditions. The exceptional host degree table is
// synthesized from the seed.
PipelineResult pipeline_run(const Graph& h, const ClusterWorld& world, std::uint64_t seed,
                            const EmbedFixture* fixture = nullptr);

} // namespace ore5
