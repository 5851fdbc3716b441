#include "ore5/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "ore5/errors.hpp"

namespace ore5 {

namespace {

constexpr double kMatchSlack = 0.5; // copy-expansion slack for the strong matching

std::vector<char> member_mask(int n, const std::vector<int>& s) {
    std::vector<char> mask(n, 0);
    for (int v : s) mask[v] = 1;
    return mask;
}

// Degree-1 and degree-0 members of the independent set.
void degree_classes(const Graph& h, const HDecomposition& dec, std::vector<int>& d1,
                    std::vector<int>& d0) {
    for (int x : dec.I) {
        if (h.degree(x) == 1) d1.push_back(x);
        if (h.degree(x) == 0) d0.push_back(x);
    }
}

} // namespace

ClusterWorld make_cluster_world(int ell, int m, double d, double eps, double delta_buf,
                                double c_param, int v0_size, double edge_keep,
                                std::uint64_t seed) {
    if (ell <= 0 || ell % 3 != 0) throw std::invalid_argument("cluster count must be 3k > 0");
    if (m <= 0 || v0_size < 0) throw std::invalid_argument("cluster size parameters invalid");
    if (d <= 0 || eps <= 0 || delta_buf < 0 || c_param <= 0)
        throw std::invalid_argument("world parameters must be positive");
    if (edge_keep <= 0 || edge_keep > 1) throw std::invalid_argument("edge_keep outside (0,1]");

    std::mt19937_64 rng(seed);
    int mindeg = (2 * ell + 2) / 3;
    long long all_pairs = (long long)ell * (ell - 1) / 2;
    long long removals = (long long)std::llround((1.0 - edge_keep) * (double)all_pairs);

    for (;;) {
        Graph gr(ell);
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j) gr.add_edge(i, j);
        std::vector<std::pair<int, int>> pool;
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j) pool.emplace_back(i, j);
        std::shuffle(pool.begin(), pool.end(), rng);
        long long done = 0;
        for (auto [i, j] : pool) {
            if (done >= removals) break;
            if (gr.degree(i) > mindeg && gr.degree(j) > mindeg) {
                gr.remove_edge(i, j);
                ++done;
            }
        }
        auto tf = triangle_factor(gr);
        if (!tf) {
            removals /= 2; // rare: thinned too aggressively for a factor
            if (removals == 0) throw HypothesisViolation("no triangle factor on the full graph");
            continue;
        }
        ClusterWorld w;
        w.gr = std::move(gr);
        w.m = m;
        w.d = d;
        w.eps = eps;
        w.delta_buf = delta_buf;
        w.c = c_param;
        w.t = std::move(*tf);
        w.v0_size = v0_size;
        return w;
    }
}

std::vector<int> AssignmentState::l_sizes(int ell) const {
    std::vector<int> out(ell + 1, 0);
    for (int v = 0; v < n_real; ++v)
        if (h[v] >= 0) ++out[h[v]];
    return out;
}

std::vector<std::vector<int>> AssignmentState::l_sets(int ell) const {
    std::vector<std::vector<int>> out(ell + 1);
    for (int v = 0; v < n_real; ++v)
        if (h[v] >= 0) out[h[v]].push_back(v);
    return out;
}

AssignmentState assign_components(const Graph& h, const HDecomposition& dec,
                                  const ClusterWorld& world, std::uint64_t seed) {
    int ell = world.ell();
    check_internal(!world.t.triangles.empty(), "world carries no reduced triangle factor");
    AssignmentState st;
    st.n_real = h.n;
    st.h.assign(h.n, -1);
    st.owner.assign(h.n, -1);
    st.fictive_of.assign(h.n, -1);
    st.pair_of.assign(h.n, {-1, -1});
    st.buffers.assign(ell + 1, {});
    st.psi0_row.assign(h.n, -1);

    std::mt19937_64 rng(seed);
    std::vector<int> comp_of(h.n, -1);
    for (int ci = 0; ci < (int)dec.rest_components.size(); ++ci)
        for (int v : dec.rest_components[ci]) comp_of[v] = ci;

    std::vector<int> comp_triangle(dec.rest_components.size(), -1);
    std::uniform_int_distribution<int> pick_t(0, (int)world.t.triangles.size() - 1);
    for (int ci = 0; ci < (int)dec.rest_components.size(); ++ci) {
        const auto& comp = dec.rest_components[ci];
        int ti = pick_t(rng);
        comp_triangle[ci] = ti;
        std::array<int, 3> roles{0, 1, 2};
        std::shuffle(roles.begin(), roles.end(), rng);
        for (size_t k = 0; k < comp.size(); ++k)
            st.h[comp[k]] = world.t.triangles[ti][roles[k]] + 1;
    }

    std::vector<char> in_ihat = member_mask(h.n, dec.Ihat);
    std::vector<int> d1, d0;
    degree_classes(h, dec, d1, d0);

    for (int x : dec.I1) {
        int ci = comp_of[h.adj[x][0]];
        check_internal(ci >= 0 && ci == comp_of[h.adj[x][1]],
                       "apex vertex neighbors must share one component");
        const auto& t = world.t.triangles[comp_triangle[ci]];
        int c1 = st.h[h.adj[x][0]], c2 = st.h[h.adj[x][1]];
        check_internal(c1 != c2, "apex neighbors fell on one cluster");
        for (int r = 0; r < 3; ++r)
            if (t[r] + 1 != c1 && t[r] + 1 != c2) st.h[x] = t[r] + 1;
        check_internal(st.h[x] >= 1, "no free triangle vertex for an apex");
    }
    for (int x : d1) {
        if (in_ihat[x]) continue; // fictive treatment later
        int y = h.adj[x][0];
        int ci = comp_of[y];
        check_internal(ci >= 0, "leaf neighbor outside every component");
        const auto& t = world.t.triangles[comp_triangle[ci]];
        std::array<int, 2> free{};
        int nf = 0;
        for (int r = 0; r < 3; ++r)
            if (t[r] + 1 != st.h[y]) free[nf++] = t[r] + 1;
        check_internal(nf == 2, "leaf must see two free triangle vertices");
        st.h[x] = free[std::uniform_int_distribution<int>(0, 1)(rng)];
    }
    for (int x : d0) st.h[x] = std::uniform_int_distribution<int>(1, ell)(rng);
    return st;
}

void add_fictive(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                 std::uint64_t seed) {
    int ell = (int)st.buffers.size() - 1;
    std::mt19937_64 rng(seed);
    std::vector<char> in_ihat = member_mask(h.n, dec.Ihat);

    auto give_fictive = [&](int x, int real_idx) {
        int fid = (int)st.h.size();
        std::uniform_int_distribution<int> pick(1, ell - 1);
        int idx = pick(rng);
        if (idx >= real_idx) ++idx; // uniform over {1..ell} minus the real index
        st.h.push_back(idx);
        st.owner.push_back(x);
        st.fictive_of[x] = fid;
        st.pair_of[x] = {std::min(real_idx, idx), std::max(real_idx, idx)};
    };

    for (int x : dec.I2) {
        int i1 = st.h[h.adj[x][0]], i2 = st.h[h.adj[x][1]];
        check_internal(i1 >= 1 && i2 >= 1, "pair-class neighbors must be assigned first");
        if (i1 == i2)
            give_fictive(x, i1);
        else
            st.pair_of[x] = {std::min(i1, i2), std::max(i1, i2)};
    }
    for (int x : dec.Ihat) {
        if (h.degree(x) != 1) continue;
        int real_idx = st.h[h.adj[x][0]];
        check_internal(real_idx >= 1, "scattered leaf neighbor must be assigned first");
        give_fictive(x, real_idx);
    }
    (void)in_ihat;
}

void distribute_i2(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                   const ClusterWorld& world, const PairCover& pc,
                   const ProportionalMatching& m1) {
    std::vector<char> in_ihat1 = member_mask(h.n, dec.ihat_parts[0]);
    auto handle = [&](int x) {
        if (in_ihat1[x] || st.h[x] >= 0) return;
        auto [i, j] = st.pair_of[x];
        check_internal(i >= 1 && j >= 1 && i != j, "pair-class vertex without a proper pair");
        int cluster = m1.assignment[pc.pair_id(i - 1, j - 1)] + 1;
        check_internal(world.gr.has_edge(cluster - 1, i - 1) &&
                           world.gr.has_edge(cluster - 1, j - 1),
                       "matched cluster must neighbor both pair indices");
        st.h[x] = cluster;
    };
    for (int x : dec.I2) handle(x);
    for (int x : dec.Ihat)
        if (st.fictive_of[x] >= 0) handle(x);
}

void distribute_ihat1(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                      const ClusterWorld& world, const StrongMatchingResult& m2,
                      std::uint64_t seed) {
    (void)h;
    (void)world;
    std::mt19937_64 rng(seed);
    int copies = m2.copies_graph.copies;
    // group the first scattered part by neighbor-index pair
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int x : dec.ihat_parts[0]) {
        auto [i, j] = st.pair_of[x];
        check_internal(i >= 1 && j >= 1, "first-part vertex without a pair");
        groups[{i, j}].push_back(x);
    }
    for (auto& [key, xs] : groups) {
        std::shuffle(xs.begin(), xs.end(), rng);
        int pair = m2.copies_graph.base.pair_id(key.first - 1, key.second - 1);
        for (size_t t = 0; t < xs.size(); ++t) {
            int clone = m2.copies_graph.clone_id(pair, (int)(t % copies));
            st.h[xs[t]] = m2.matching.assignment[clone] + 1;
        }
    }
}

void form_l0(const Graph& h, const HDecomposition& dec, AssignmentState& st,
             const ClusterWorld& world, std::uint64_t seed) {
    (void)h;
    int ell = world.ell();
    std::mt19937_64 rng(seed);
    std::vector<char> in_ihat1 = member_mask(st.n_real, dec.ihat_parts[0]);
    auto sets = st.l_sets(ell);
    int moved = 0;
    for (int i = 1; i <= ell; ++i) {
        int surplus = (int)sets[i].size() - world.m;
        if (surplus < 0)
            throw PipelineFailure("cluster " + std::to_string(i) + " is short of vertices");
        if (surplus == 0) continue;
        std::vector<int> cand;
        for (int v : sets[i])
            if (in_ihat1[v]) cand.push_back(v);
        if ((int)cand.size() < surplus)
            throw PipelineFailure("first scattered part cannot supply the surplus of cluster " +
                                  std::to_string(i));
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int k = 0; k < surplus; ++k) {
            st.h[cand[k]] = 0;
            ++moved;
        }
    }
    check_internal(moved == world.v0_size, "surplus total must equal the exceptional count");
    // rows of the exceptional degree table follow ascending class-0 members
    int row = 0;
    for (int v = 0; v < st.n_real; ++v)
        if (st.h[v] == 0) st.psi0_row[v] = row++;
}

std::vector<SwitchRecord> switching_c7(const Graph& h, const HDecomposition& dec,
                                       AssignmentState& st, const ClusterWorld& world,
                                       const std::vector<std::vector<int>>& host_deg,
                                       const StrongMatchingResult& m2) {
    double need = world.c * world.m;
    std::vector<char> in_ihat1 = member_mask(st.n_real, dec.ihat_parts[0]);
    std::vector<SwitchRecord> ledger;

    auto neighbor_indices = [&](int x) {
        std::vector<int> idx;
        for (int y : h.adj[x])
            if (st.h[y] >= 1) idx.push_back(st.h[y]);
        if (st.fictive_of[x] >= 0) idx.push_back(st.h[st.fictive_of[x]]);
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        return idx;
    };
    auto good_for = [&](int row, const std::vector<int>& clusters) {
        for (int j : clusters)
            if ((double)host_deg[row][j - 1] + 1e-9 < need) return false;
        return true;
    };

    std::vector<int> l0;
    for (int v = 0; v < st.n_real; ++v)
        if (st.h[v] == 0) l0.push_back(v);
    for (int x : l0) {
        int row = st.psi0_row[x];
        check_internal(row >= 0 && row < (int)host_deg.size(), "class-0 vertex without a row");
        std::vector<int> mine = neighbor_indices(x);
        if (good_for(row, mine)) continue;
        // candidate clusters: partners of the copies of x's pair
        auto [pi, pj] = st.pair_of[x];
        check_internal(pi >= 1, "class-0 vertex without a pair");
        int pair = m2.copies_graph.base.pair_id(pi - 1, pj - 1);
        std::vector<int> cand_clusters;
        for (int t = 0; t < m2.copies_graph.copies; ++t)
            cand_clusters.push_back(
                m2.matching.assignment[m2.copies_graph.clone_id(pair, t)] + 1);
        std::sort(cand_clusters.begin(), cand_clusters.end());
        cand_clusters.erase(std::unique(cand_clusters.begin(), cand_clusters.end()),
                            cand_clusters.end());
        bool done = false;
        for (int cl : cand_clusters) {
            for (int xp = 0; xp < st.n_real && !done; ++xp) {
                if (st.h[xp] != cl || !in_ihat1[xp]) continue;
                std::vector<int> theirs = neighbor_indices(xp);
                if (!good_for(row, theirs)) continue;
                st.h[x] = cl;
                st.h[xp] = 0;
                st.psi0_row[xp] = row;
                st.psi0_row[x] = -1;
                ledger.push_back({x, xp, cl});
                done = true;
            }
            if (done) break;
        }
        if (!done)
            throw PipelineFailure("no switch partner for class-0 vertex " + std::to_string(x));
    }
    return ledger;
}

void select_buffers(const Graph& h, const HDecomposition& dec, AssignmentState& st,
                    const ClusterWorld& world, const PairCover& pc,
                    const ProportionalMatching& m1) {
    (void)h;
    int ell = world.ell();
    double dm = world.delta_buf * world.m;
    long long quota_ll = std::llround(dm);
    check_internal(std::abs(dm - (double)quota_ll) < 1e-9, "delta*m must be an integer");
    int quota = (int)quota_ll;
    for (auto& b : st.buffers) b.clear();
    if (quota == 0) return;
    if (2 * quota % (ell - 1) != 0)
        throw std::invalid_argument("buffer quota 2*delta*m/(ell-1) is not integral");
    int per_pair = 2 * quota / (ell - 1);

    std::vector<char> in_ihat2 = member_mask(st.n_real, dec.ihat_parts[1]);
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int x : dec.ihat_parts[1]) {
        if (st.fictive_of[x] >= 0) continue; // owners contribute only one real neighbor
        auto [i, j] = st.pair_of[x];
        if (i < 1) continue;
        groups[{i, j}].push_back(x);
    }
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) {
            if (!world.gr.has_edge(i - 1, j - 1)) continue;
            auto it = groups.find({i, j});
            int have = it == groups.end() ? 0 : (int)it->second.size();
            if (have < per_pair)
                throw PipelineFailure("pair class {" + std::to_string(i) + "," +
                                      std::to_string(j) + "} holds " + std::to_string(have) +
                                      " buffer candidates; needs " + std::to_string(per_pair));
            auto& xs = it->second;
            std::sort(xs.begin(), xs.end());
            int cluster = m1.assignment[pc.pair_id(i - 1, j - 1)] + 1;
            for (int k = 0; k < per_pair; ++k) {
                check_internal(st.h[xs[k]] == cluster, "buffer member strayed from its cluster");
                st.buffers[cluster].push_back(xs[k]);
            }
        }
    for (int i = 1; i <= ell; ++i)
        if ((int)st.buffers[i].size() != quota)
            throw PipelineFailure("cluster " + std::to_string(i) + " buffer has " +
                                  std::to_string(st.buffers[i].size()) + " members; needs " +
                                  std::to_string(quota));
    (void)in_ihat2;
}

ConditionReport check_conditions(const Graph& h, const HDecomposition& dec,
                                 const AssignmentState& st, const ClusterWorld& world,
                                 const std::vector<std::vector<int>>* l0_host_deg,
                                 const EmbedFixture* fixture, const ConditionConstants& kc) {
    int ell = world.ell();
    ConditionReport rep;
    auto fail = [&](int idx, const std::string& note) {
        rep.ok[idx] = false;
        rep.notes.push_back("C" + std::to_string(idx) + ": " + note);
    };
    for (int i = 1; i <= 7; ++i) {
        rep.checked[i] = true;
        rep.ok[i] = true;
    }

    auto sets = st.l_sets(ell);
    std::vector<char> in_ihat = member_mask(st.n_real, dec.Ihat);

    // C1: class-0 size
    if ((int)sets[0].size() != world.v0_size)
        fail(1, "class-0 size " + std::to_string(sets[0].size()) + " != exceptional count");
    if ((double)sets[0].size() > kc.k1 * world.d * (double)world.n() + 1e-9)
        fail(1, "class-0 size exceeds the d*n bound");
    // C2: class 0 inside the scattered set
    for (int v : sets[0])
        if (!in_ihat[v]) {
            fail(2, "vertex " + std::to_string(v) + " of class 0 is not scattered");
            break;
        }
    // C3: clusters independent in the guest
    for (const auto& e : h.edges())
        if (st.h[e.first] >= 1 && st.h[e.first] == st.h[e.second]) {
            fail(3, "guest edge inside cluster " + std::to_string(st.h[e.first]));
            break;
        }
    // C4: class-0 neighbor load per cluster
    {
        std::vector<int> load(ell + 1, 0);
        std::vector<char> counted(st.n_real, 0);
        for (int v : sets[0])
            for (int y : h.adj[v])
                if (!counted[y] && st.h[y] >= 1) {
                    counted[y] = 1;
                    ++load[st.h[y]];
                }
        for (int i = 1; i <= ell; ++i)
            if ((double)load[i] > kc.k2 * world.d * world.m + 1e-9)
                fail(4, "class-0 neighbor load in cluster " + std::to_string(i));
    }
    // C5: buffers scattered, inside their cluster, of exact size, with even
    // neighbor spread
    {
        double dm = world.delta_buf * world.m;
        std::vector<int> bload(ell + 1, 0);
        bool have_buffers = false;
        for (int i = 1; i <= ell; ++i) {
            if (!st.buffers[i].empty()) have_buffers = true;
            if (world.delta_buf > 0 && std::abs((double)st.buffers[i].size() - dm) > 1e-9)
                fail(5, "buffer size in cluster " + std::to_string(i));
            for (int v : st.buffers[i]) {
                if (!in_ihat[v]) fail(5, "buffer vertex " + std::to_string(v) + " not scattered");
                if (st.h[v] != i) fail(5, "buffer vertex outside its cluster");
                for (int y : h.adj[v])
                    if (st.h[y] >= 1) ++bload[st.h[y]];
            }
        }
        if (have_buffers)
            for (int i = 1; i <= ell; ++i)
                for (int j = i + 1; j <= ell; ++j)
                    if (std::abs(bload[i] - bload[j]) > world.eps * world.m + 1e-9)
                        fail(5, "buffer neighbor spread between clusters " + std::to_string(i) +
                                    " and " + std::to_string(j));
        rep.checked[5] = world.delta_buf > 0;
    }
    // C6: homomorphism
    for (const auto& e : h.edges()) {
        int a = st.h[e.first], b = st.h[e.second];
        if (a >= 1 && b >= 1 && a != b && !world.gr.has_edge(a - 1, b - 1)) {
            fail(6, "guest edge onto a reduced non-edge (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
            break;
        }
    }
    // C7: class-0 host images see their neighbor clusters well
    if (l0_host_deg) {
        double need = world.c * world.m;
        for (int v : sets[0]) {
            int row = st.psi0_row[v];
            if (row < 0 || row >= (int)l0_host_deg->size()) {
                fail(7, "class-0 vertex " + std::to_string(v) + " lacks a host row");
                continue;
            }
            for (int y : h.adj[v])
                if (st.h[y] >= 1 &&
                    (double)(*l0_host_deg)[row][st.h[y] - 1] + 1e-9 < need)
                    fail(7, "host image of " + std::to_string(v) + " starves cluster " +
                                std::to_string(st.h[y]));
        }
    } else {
        rep.checked[7] = false;
    }
    // C8/C9: flagged-vertex replacement via the third scattered part
    if (fixture) {
        rep.checked[8] = rep.checked[9] = true;
        rep.ok[8] = rep.ok[9] = true;
        std::vector<char> in_ihat3 = member_mask(st.n_real, dec.ihat_parts[2]);
        std::vector<int> fload(ell + 1, 0);
        for (int i = 1; i <= ell && rep.ok[8]; ++i) {
            if (i - 1 >= (int)fixture->flagged.size()) break;
            const auto& flags = fixture->flagged[i - 1];
            if (flags.empty()) continue;
            if ((double)flags.size() > fixture->eps_prime * world.m + 1e-9) {
                fail(8, "flagged set of cluster " + std::to_string(i) + " oversized");
                break;
            }
            std::vector<int> cands;
            for (int v : sets[i])
                if (in_ihat3[v]) cands.push_back(v);
            BipartiteGraph bp((int)flags.size(), (int)cands.size());
            double need = (world.d - 6 * world.eps) * world.m;
            for (int fi = 0; fi < (int)flags.size(); ++fi)
                for (int cj = 0; cj < (int)cands.size(); ++cj) {
                    bool good = true;
                    for (int y : h.adj[cands[cj]]) {
                        if (st.h[y] < 1) continue;
                        if ((double)flags[fi][st.h[y] - 1] + 1e-9 < need) {
                            good = false;
                            break;
                        }
                    }
                    if (good) bp.add_edge(fi, cj);
                }
            Matching mm = max_matching(bp);
            if (mm.size < (int)flags.size()) {
                fail(8, "no full replacement matching in cluster " + std::to_string(i));
            } else {
                for (int fi = 0; fi < (int)flags.size(); ++fi) {
                    int x = cands[mm.left_to_right[fi]];
                    for (int y : h.adj[x])
                        if (st.h[y] >= 1) ++fload[st.h[y]];
                }
            }
        }
        if (rep.ok[8])
            for (int i = 1; i <= ell; ++i)
                if ((double)fload[i] > kc.k3 * fixture->eps_prime * world.m + 1e-9)
                    fail(9, "replacement neighbor load in cluster " + std::to_string(i));
    }
    return rep;
}

std::vector<std::vector<int>> bad_vertex_removal(
    const ClusterWorld& world, const std::vector<std::vector<std::vector<int>>>& profiles,
    const PairCover& pc, const ProportionalMatching& m1) {
    int ell = world.ell();
    check_internal((int)profiles.size() == ell, "one profile table per cluster required");
    int quota = (int)std::ceil(4.0 * world.eps * world.m - 1e-9);
    double small = (world.d - 6.0 * world.eps) * world.m;
    std::vector<std::vector<int>> removed(ell);
    for (int i = 0; i < ell; ++i) {
        std::vector<std::pair<int, int>> my_pairs; // pairs matched to cluster i
        for (int p = 0; p < (int)pc.pairs.size(); ++p)
            if (m1.assignment[p] == i) my_pairs.push_back(pc.pairs[p]);
        check_internal(!my_pairs.empty(), "cluster serves no pairs under the matching");
        const auto& prof = profiles[i];
        check_internal((int)prof.size() == world.m, "profile table size must equal m");
        std::vector<int> badness(world.m, 0);
        for (int v = 0; v < world.m; ++v)
            for (auto [a, b] : my_pairs)
                if ((double)prof[v][a] + 1e-9 < small || (double)prof[v][b] + 1e-9 < small)
                    ++badness[v];
        int half = ((int)my_pairs.size() + 1) / 2;
        std::vector<int> order(world.m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return badness[x] > badness[y]; });
        int bad_count = 0;
        for (int v = 0; v < world.m; ++v) bad_count += badness[v] >= half ? 1 : 0;
        if (bad_count > quota)
            throw PipelineFailure("cluster " + std::to_string(i + 1) + " holds " +
                                  std::to_string(bad_count) + " bad vertices; quota is " +
                                  std::to_string(quota));
        check_internal(quota <= world.m, "removal quota larger than the cluster");
        removed[i].assign(order.begin(), order.begin() + quota);
        std::sort(removed[i].begin(), removed[i].end());
        // post: nothing left past the badness threshold
        std::vector<char> gone(world.m, 0);
        for (int v : removed[i]) gone[v] = 1;
        for (int v = 0; v < world.m; ++v)
            check_internal(gone[v] || badness[v] < half, "bad vertex survived the removal");
    }
    return removed;
}

PipelineResult pipeline_run(const Graph& h, const ClusterWorld& world, std::uint64_t seed,
                            const EmbedFixture* fixture) {
    PipelineResult out;
    out.dec = decompose(h);
    scattered_subset(h, out.dec, seed ^ 0x5ca77e7edull);
    out.state = assign_components(h, out.dec, world, seed);
    add_fictive(h, out.dec, out.state, seed ^ 0xf1c71e5ull);

    bool need_pairs = false;
    for (int v = 0; v < out.state.n_real; ++v)
        if (out.state.h[v] < 0) need_pairs = true;
    std::optional<PairCover> pc;
    std::optional<ProportionalMatching> m1;
    std::optional<StrongMatchingResult> m2;
    if (need_pairs) {
        if (world.ell() % 2 == 0)
            throw PipelineFailure("pair distribution needs an odd cluster count");
        pc = build_pair_cover(world.gr);
        auto r1 = pair_cover_matching(world.gr);
        if (std::holds_alternative<HallWitness>(r1))
            throw PipelineFailure("no proportional pair matching on this reduced graph");
        m1 = std::get<ProportionalMatching>(r1);
        auto r2 = strong_proportional_matching(world.gr, kMatchSlack, seed ^ 0x2b1ull);
        if (std::holds_alternative<HallWitness>(r2))
            throw PipelineFailure("no strong proportional matching on this reduced graph");
        m2 = std::get<StrongMatchingResult>(std::move(r2));
        distribute_i2(h, out.dec, out.state, world, *pc, *m1);
        distribute_ihat1(h, out.dec, out.state, world, *m2, seed ^ 0x1147ull);
    }
    for (int v = 0; v < out.state.n_real; ++v)
        check_internal(out.state.h[v] >= 1, "vertex left unassigned before class-0 formation");

    form_l0(h, out.dec, out.state, world, seed ^ 0x10ull);

    // synthesized exceptional host degrees
    std::mt19937_64 rng(seed ^ 0xde90ull);
    out.l0_host_deg.assign(world.v0_size, std::vector<int>(world.ell(), 0));
    std::uniform_int_distribution<int> dd(0, world.m);
    for (auto& row : out.l0_host_deg)
        for (int& x : row) x = dd(rng);
    if (world.v0_size > 0 && m2)
        out.switches = switching_c7(h, out.dec, out.state, world, out.l0_host_deg, *m2);

    if (world.delta_buf > 0 && pc) select_buffers(h, out.dec, out.state, world, *pc, *m1);
    out.report = check_conditions(h, out.dec, out.state, world,
                                  world.v0_size > 0 ? &out.l0_host_deg : nullptr, fixture);
    return out;
}

} // namespace ore5
