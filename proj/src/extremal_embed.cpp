#include "ore5/extremal_embed.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ore5/coloring.hpp"
#include "ore5/errors.hpp"
#include "ore5/matching.hpp"

namespace ore5 {

namespace {

Triangle tri(int x, int y, int z) {
    Triangle t{x, y, z};
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void mark(std::vector<char>& mask, const std::vector<int>& s) {
    for (int v : s) mask[v] = 1;
}

void check_blocks_partition(int n, std::initializer_list<const std::vector<int>*> parts) {
    std::vector<char> seen(n, 0);
    int total = 0;
    for (const auto* p : parts)
        for (int v : *p) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("blocks do not partition the host vertex set");
            seen[v] = 1;
            ++total;
        }
    if (total != n) throw std::invalid_argument("blocks do not partition the host vertex set");
}

// Lowest vacant common neighbor of a and b inside pool; avoid is optional.
int common_vacant(const CaseState& st, int a, int b, const std::vector<int>& pool,
                  const std::vector<char>* avoid) {
    for (int v : pool) {
        if (!st.vacant[v] || v == a || v == b) continue;
        if (avoid && (*avoid)[v]) continue;
        if (st.g->has_edge(a, v) && st.g->has_edge(b, v)) return v;
    }
    return -1;
}

// Lexicographically first vacant adjacent pair inside pool cap N(a).
std::pair<int, int> vacant_edge_at(const CaseState& st, int a, const std::vector<int>& pool,
                                   const std::vector<char>* avoid) {
    std::vector<int> cand;
    for (int v : pool) {
        if (!st.vacant[v] || v == a) continue;
        if (avoid && (*avoid)[v]) continue;
        if (st.g->has_edge(a, v)) cand.push_back(v);
    }
    for (size_t i = 0; i < cand.size(); ++i)
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (st.g->has_edge(cand[i], cand[j])) return {cand[i], cand[j]};
    return {-1, -1};
}

int count_in(const CaseState& st, const Triangle& t, const std::vector<char>& mask) {
    int c = 0;
    (void)st;
    for (int v : t) c += mask[v] ? 1 : 0;
    return c;
}

int deg_to(const Graph& g, int v, const std::vector<int>& block) {
    int c = 0;
    for (int w : g.adj[v]) c += std::binary_search(block.begin(), block.end(), w) ? 1 : 0;
    return c;
}

} // namespace

int CaseState::vacant_in(const std::vector<int>& block) const {
    int c = 0;
    for (int v : block) c += vacant[v] ? 1 : 0;
    return c;
}

std::vector<int> CaseState::vacant_list(const std::vector<int>& block) const {
    std::vector<int> out;
    for (int v : block)
        if (vacant[v]) out.push_back(v);
    return out;
}

bool CaseState::balanced_triangle(const Triangle& t) const {
    return count_in(*this, t, in_a) == 1;
}

bool CaseState::crossing_triangle(const Triangle& t) const {
    if (case_id == 2) return count_in(*this, t, in_b1) > 0 && count_in(*this, t, in_b2) > 0;
    if (case_id == 3)
        return count_in(*this, t, in_a) == 1 && count_in(*this, t, in_b1) == 1 &&
               count_in(*this, t, in_c) == 1;
    return false;
}

void CaseState::place(const Triangle& t, const char* step) {
    check_internal(t[0] < t[1] && t[1] < t[2], "triangle vertices out of order");
    for (int v : t) check_internal(v >= 0 && v < g->n && vacant[v], "placing onto occupied vertex");
    check_internal(g->has_edge(t[0], t[1]) && g->has_edge(t[0], t[2]) && g->has_edge(t[1], t[2]),
                   "placed triple is not a host triangle");
    for (int v : t) vacant[v] = 0;
    placed.triangles.push_back(t);
    if (case_id == 2 && crossing_triangle(t)) ++crossing_placed;
    trace.push_back(std::string(step) + ": " + std::to_string(t[0]) + " " + std::to_string(t[1]) +
                    " " + std::to_string(t[2]));
}

CaseState init_case1(const Graph& g, std::vector<int> a, std::vector<int> b, double eta,
                     double mu) {
    a = sorted_unique(std::move(a));
    b = sorted_unique(std::move(b));
    check_blocks_partition(g.n, {&a, &b});
    CaseState st;
    st.case_id = 1;
    st.g = &g;
    st.eta = eta;
    st.mu = mu;
    st.block_a = a;
    st.block_b = b;
    st.in_a.assign(g.n, 0);
    st.in_b1.assign(g.n, 0);
    st.in_b2.assign(g.n, 0);
    st.in_c.assign(g.n, 0);
    mark(st.in_a, a);
    st.vacant.assign(g.n, 1);
    st.exceptional = exceptional_sets_case1(g, a, b, eta);
    if (!st.exceptional.b_severe.empty())
        st.starved_partner = cover_matching(g, st.block_a, st.exceptional.b_severe);
    return st;
}

CaseState init_case2(const Graph& g, std::vector<int> a, std::vector<int> b1, std::vector<int> b2,
                     double eta, double mu) {
    a = sorted_unique(std::move(a));
    b1 = sorted_unique(std::move(b1));
    b2 = sorted_unique(std::move(b2));
    check_blocks_partition(g.n, {&a, &b1, &b2});
    CaseState st;
    st.case_id = 2;
    st.g = &g;
    st.eta = eta;
    st.mu = mu;
    st.block_a = a;
    st.block_b1 = b1;
    st.block_b2 = b2;
    st.block_b.reserve(b1.size() + b2.size());
    std::merge(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(st.block_b));
    st.in_a.assign(g.n, 0);
    st.in_b1.assign(g.n, 0);
    st.in_b2.assign(g.n, 0);
    st.in_c.assign(g.n, 0);
    mark(st.in_a, a);
    mark(st.in_b1, b1);
    mark(st.in_b2, b2);
    st.vacant.assign(g.n, 1);
    st.exceptional = exceptional_sets_case2(g, a, b1, b2, eta, mu);
    if (!st.exceptional.b_severe.empty())
        st.starved_partner = cover_matching(g, st.block_a, st.exceptional.b_severe);
    return st;
}

CaseState init_case3(const Graph& g, std::vector<int> a, std::vector<int> b, std::vector<int> c,
                     double eta, double mu) {
    a = sorted_unique(std::move(a));
    b = sorted_unique(std::move(b));
    c = sorted_unique(std::move(c));
    check_blocks_partition(g.n, {&a, &b, &c});
    CaseState st;
    st.case_id = 3;
    st.g = &g;
    st.eta = eta;
    st.mu = mu;
    st.block_a = a;
    st.block_b = b; // second block
    st.block_c = c;
    st.in_a.assign(g.n, 0);
    st.in_b1.assign(g.n, 0); // reused for the middle block membership
    st.in_b2.assign(g.n, 0);
    st.in_c.assign(g.n, 0);
    mark(st.in_a, a);
    mark(st.in_b1, b);
    mark(st.in_c, c);
    st.vacant.assign(g.n, 1);
    st.exceptional = exceptional_sets_case3(g, a, b, c, mu);
    return st;
}

void cover_exceptional_case1(CaseState& st) {
    check_internal(st.case_id == 1, "case-1 cover called on wrong state");
    const Graph& g = *st.g;
    const auto& ex = st.exceptional;
    std::vector<char> severe_b(g.n, 0);
    mark(severe_b, ex.b_severe);

    // A-starved severe B vertices: matched A partner plus a common neighbor
    // drawn from the non-starved part of B.
    for (auto [b, a] : st.starved_partner) {
        if (!st.vacant[b]) continue;
        check_internal(st.vacant[a], "matched A partner consumed before use");
        int v = common_vacant(st, a, b, st.block_b, &severe_b);
        if (v < 0)
            throw StepFailure("no third vertex completes the cover of A-starved vertex " +
                              std::to_string(b));
        Triangle t = tri(a, b, v);
        st.place(t, "cover A-starved severe");
        check_internal(st.balanced_triangle(t), "cover triangle not balanced");
    }
    // B-starved severe A vertices: an edge inside the B neighborhood.
    for (int stage = 0; stage < 2; ++stage) {
        const auto& tier = stage == 0 ? ex.a_severe : ex.a_mild;
        const char* label = stage == 0 ? "cover B-starved severe" : "cover B-starved mild";
        for (int a : tier) {
            if (!st.vacant[a]) continue;
            auto [x, y] = vacant_edge_at(st, a, st.block_b, nullptr);
            if (x < 0)
                throw StepFailure("no B edge completes the cover of B-starved vertex " +
                                  std::to_string(a));
            Triangle t = tri(a, x, y);
            st.place(t, label);
            check_internal(st.balanced_triangle(t), "cover triangle not balanced");
        }
    }
    // Mild A-starved B vertices: any vacant A neighbor plus a common third in B.
    for (int b : ex.b_mild) {
        if (!st.vacant[b]) continue;
        int pick = -1;
        for (int a : st.block_a)
            if (st.vacant[a] && g.has_edge(a, b)) {
                pick = a;
                break;
            }
        if (pick < 0)
            throw StepFailure("no vacant A neighbor for mild A-starved vertex " +
                              std::to_string(b));
        int v = common_vacant(st, pick, b, st.block_b, nullptr);
        if (v < 0)
            throw StepFailure("no third vertex completes the cover of mild A-starved vertex " +
                              std::to_string(b));
        Triangle t = tri(pick, b, v);
        st.place(t, "cover A-starved mild");
        check_internal(st.balanced_triangle(t), "cover triangle not balanced");
    }
}

namespace {

// Shared by cases 1 and 2: paths of leftover - I onto a vacant block, the
// independent set onto vacant A through a common-neighborhood matching.
void embed_leftover_pool(CaseState& st, const Graph& leftover,
                         const std::vector<int>& leftover_vertices, const HDecomposition& dec,
                         const std::vector<int>& path_pool, Embedding& emb) {
    const Graph& g = *st.g;
    check_internal((int)leftover_vertices.size() == leftover.n,
                   "leftover vertex list does not match the leftover graph");
    auto settle = [&](int local, int host) {
        int gid = leftover_vertices[local];
        check_internal(st.vacant[host], "leftover vertex onto occupied host");
        check_internal(emb.phi[gid] < 0, "guest vertex placed twice");
        emb.phi[gid] = host;
        st.vacant[host] = 0;
    };

    std::vector<const std::vector<int>*> comps;
    comps.reserve(dec.rest_components.size());
    for (const auto& c : dec.rest_components) comps.push_back(&c);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const std::vector<int>* x, const std::vector<int>* y) {
                         return x->size() > y->size();
                     });
    for (const auto* cp : comps) {
        const auto& comp = *cp;
        if (comp.size() == 1) {
            int host = -1;
            for (int v : path_pool)
                if (st.vacant[v]) {
                    host = v;
                    break;
                }
            if (host < 0) throw StepFailure("no vacant vertex left for a leftover singleton");
            settle(comp[0], host);
        } else if (comp.size() == 2) {
            int h1 = -1, h2 = -1;
            for (int v : path_pool) {
                if (!st.vacant[v]) continue;
                for (int w : g.adj[v])
                    if (w > v && st.vacant[w] &&
                        std::binary_search(path_pool.begin(), path_pool.end(), w)) {
                        h1 = v;
                        h2 = w;
                        break;
                    }
                if (h1 >= 0) break;
            }
            if (h1 < 0) throw StepFailure("no vacant edge left for a leftover pair");
            settle(comp[0], h1);
            settle(comp[1], h2);
        } else {
            check_internal(comp.size() == 3, "leftover component longer than three vertices");
            int hm = -1, hx = -1, hz = -1;
            for (int v : path_pool) {
                if (!st.vacant[v]) continue;
                std::vector<int> nb;
                for (int w : g.adj[v])
                    if (st.vacant[w] && std::binary_search(path_pool.begin(), path_pool.end(), w))
                        nb.push_back(w);
                if (nb.size() >= 2) {
                    hm = v;
                    hx = nb[0];
                    hz = nb[1];
                    break;
                }
            }
            if (hm < 0) throw StepFailure("no vacant path of three vertices left");
            settle(comp[1], hm);
            settle(comp[0], hx);
            settle(comp[2], hz);
        }
    }

    // Independent part: each vertex needs a vacant A vertex adjacent to all
    // images of its neighbors.
    std::vector<int> slots = st.vacant_list(st.block_a);
    BipartiteGraph bp((int)dec.I.size(), (int)slots.size());
    for (int i = 0; i < (int)dec.I.size(); ++i) {
        int x = dec.I[i];
        std::vector<int> hosts;
        for (int y : leftover.adj[x]) {
            int hy = emb.phi[leftover_vertices[y]];
            check_internal(hy >= 0, "independent-part neighbor not yet placed");
            hosts.push_back(hy);
        }
        for (int j = 0; j < (int)slots.size(); ++j) {
            bool ok = true;
            for (int hy : hosts)
                if (!g.has_edge(slots[j], hy)) {
                    ok = false;
                    break;
                }
            if (ok) bp.add_edge(i, j);
        }
    }
    Matching mm = max_matching(bp);
    if (mm.size < (int)dec.I.size())
        throw StepFailure("independent part of the leftover does not match into vacant A");
    for (int i = 0; i < (int)dec.I.size(); ++i) settle(dec.I[i], slots[mm.left_to_right[i]]);
    st.trace.push_back("leftover: " + std::to_string(leftover.n) + " vertices placed");
}

} // namespace

void embed_leftover_case1(CaseState& st, const Graph& leftover,
                          const std::vector<int>& leftover_vertices, const HDecomposition& dec,
                          Embedding& emb) {
    check_internal(st.case_id == 1, "case-1 leftover step called on wrong state");
    embed_leftover_pool(st, leftover, leftover_vertices, dec, st.block_b, emb);
}

void balance_case1(CaseState& st, int expected) {
    const std::vector<int>& pool = st.case_id == 2 ? st.block_b1 : st.block_b;
    int va = st.vacant_in(st.block_a);
    int vb = st.case_id == 2 ? st.vacant_in(st.block_b1) + st.vacant_in(st.block_b2)
                             : st.vacant_in(st.block_b);
    check_internal(vb - 2 * va == 3 * expected,
                   "balance count disagrees with the vacancy identity");
    for (int t = 0; t < expected; ++t) {
        Triangle found{-1, -1, -1};
        for (int v : pool) {
            if (!st.vacant[v]) continue;
            auto [x, y] = vacant_edge_at(st, v, pool, nullptr);
            if (x >= 0) {
                found = tri(v, x, y);
                break;
            }
        }
        if (found[0] < 0) throw StepFailure("no vacant triangle left for the balance step");
        st.place(found, "balance");
        check_internal(count_in(st, found, st.in_a) == 0, "balance triangle touches A");
    }
}

std::vector<Triangle> finish_case1(const Graph& g, const std::vector<int>& a4,
                                   const std::vector<int>& b4, double mu, double alpha) {
    if (a4.empty() && b4.empty()) return {};
    if (2 * a4.size() != b4.size())
        throw std::invalid_argument("finish step needs |B| == 2|A|");
    std::vector<int> ids = sorted_unique(b4);
    Graph g1 = induced(g, ids);
    MatchingOrBlocks r = two_blocks_or_matching(g1, mu, alpha);
    if (std::holds_alternative<TwoBlocks>(r))
        throw StepFailure("vacant block part splits into two dense halves; no perfect matching");
    std::vector<std::pair<int, int>> m;
    for (auto [x, y] : std::get<std::vector<std::pair<int, int>>>(r))
        m.emplace_back(ids[x], ids[y]);
    auto ext = extend_matching_to_factor(g, sorted_unique(a4), m);
    if (std::holds_alternative<std::vector<int>>(ext))
        throw StepFailure("matching edges do not extend to triangles across all of vacant A");
    return std::get<TriangleSet>(ext).triangles;
}

void cover_a_starved(CaseState& st, int q) {
    check_internal(st.case_id == 2, "A-starved cover with crossing count is a case-2 step");
    const Graph& g = *st.g;
    std::vector<char> severe(g.n, 0);
    mark(severe, st.exceptional.b_severe);
    mark(severe, st.exceptional.b1_severe);
    mark(severe, st.exceptional.b2_severe);
    int crossed = 0;
    for (size_t i = 0; i < st.starved_partner.size(); ++i) {
        auto [b, a] = st.starved_partner[i];
        if (!st.vacant[b]) continue;
        bool want_cross = crossed < q;
        const std::vector<int>& pool =
            st.in_b1[b] ? (want_cross ? st.block_b2 : st.block_b1)
                        : (want_cross ? st.block_b1 : st.block_b2);
        std::vector<char> reserved(g.n, 0);
        for (size_t j = 0; j < st.starved_partner.size(); ++j)
            if (j != i && st.vacant[st.starved_partner[j].first])
                reserved[st.starved_partner[j].second] = 1;
        int u = -1, w = -1;
        if (st.vacant[a]) {
            w = common_vacant(st, a, b, pool, &severe);
            if (w >= 0) u = a;
        }
        if (u < 0) {
            for (int w2 : pool) {
                if (!st.vacant[w2] || severe[w2] || !g.has_edge(b, w2)) continue;
                for (int u2 : st.block_a) {
                    if (!st.vacant[u2] || reserved[u2]) continue;
                    if (g.has_edge(u2, b) && g.has_edge(u2, w2)) {
                        u = u2;
                        w = w2;
                        break;
                    }
                }
                if (u >= 0) break;
            }
        }
        if (u < 0)
            throw StepFailure("no cover triangle for A-starved vertex " + std::to_string(b));
        Triangle t = tri(b, u, w);
        st.place(t, want_cross ? "cover A-starved crossing" : "cover A-starved plain");
        check_internal(st.balanced_triangle(t), "cover triangle not balanced");
        check_internal(st.crossing_triangle(t) == want_cross,
                       "cover triangle crossing state disagrees with the plan");
        if (want_cross) ++crossed;
    }
    check_internal(crossed == q, "crossing quota not met by the A-starved covers");
}

std::string parity_cover(CaseState& st) {
    check_internal(st.case_id == 2, "parity cover is a case-2 step");
    const Graph& g = *st.g;
    const auto& ex = st.exceptional;
    std::vector<char> severe(g.n, 0);
    mark(severe, ex.b_severe);
    mark(severe, ex.b1_severe);
    mark(severe, ex.b2_severe);

    int b2_vac = st.vacant_in(st.block_b2);
    int cross_base = (int)ex.b1_severe.size() + (int)ex.b2_severe.size();
    int q = 0;
    bool extra = false;
    if (((b2_vac - cross_base) % 2 + 2) % 2 == 1) {
        if (!ex.b_severe.empty())
            q = 1;
        else
            extra = true;
    }
    std::string label = b2_vac % 2 ? "odd-" : "even-";
    if (!ex.b2_severe.empty()) label += "mirror-";
    if (q == 1)
        label += "(ii)";
    else if (extra)
        label += "(iii)";
    else if (cross_base > 0)
        label += "(i)";
    else
        label += "(aligned)";
    st.trace.push_back("parity branch " + label);

    std::vector<char> reserved(g.n, 0);
    for (auto [b, a] : st.starved_partner)
        if (st.vacant[b]) reserved[a] = 1;
    auto cover_clique_starved = [&](const std::vector<int>& tier, const std::vector<int>& far) {
        for (int v : tier) {
            if (!st.vacant[v]) continue;
            int u = -1, w = -1;
            for (int w2 : far) {
                if (!st.vacant[w2] || severe[w2] || !g.has_edge(v, w2)) continue;
                for (int u2 : st.block_a) {
                    if (!st.vacant[u2] || reserved[u2]) continue;
                    if (g.has_edge(u2, v) && g.has_edge(u2, w2)) {
                        u = u2;
                        w = w2;
                        break;
                    }
                }
                if (u >= 0) break;
            }
            if (u < 0)
                throw StepFailure("no crossing cover for clique-starved vertex " +
                                  std::to_string(v));
            Triangle t = tri(v, u, w);
            st.place(t, "cover clique-starved");
            check_internal(st.balanced_triangle(t) && st.crossing_triangle(t),
                           "clique-starved cover must be balanced and crossing");
        }
    };
    cover_clique_starved(ex.b1_severe, st.block_b2);
    cover_clique_starved(ex.b2_severe, st.block_b1);

    if (extra) {
        std::vector<char> excl(g.n, 0);
        mark(excl, ex.b_severe);
        mark(excl, ex.b_mild);
        mark(excl, ex.b1_severe);
        mark(excl, ex.b1_mild);
        mark(excl, ex.b2_severe);
        mark(excl, ex.b2_mild);
        bool done = false;
        for (int v : st.block_b) {
            if (!st.vacant[v] || excl[v]) continue;
            const std::vector<int>& far = st.in_b1[v] ? st.block_b2 : st.block_b1;
            for (int w : far) {
                if (!st.vacant[w] || severe[w] || !g.has_edge(v, w)) continue;
                int u = common_vacant(st, v, w, st.block_a, &reserved);
                if (u >= 0) {
                    Triangle t = tri(v, w, u);
                    st.place(t, "parity triangle");
                    check_internal(st.crossing_triangle(t), "parity triangle must cross");
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
        if (!done) throw StepFailure("no crossing triangle available to fix the parity");
    }

    cover_a_starved(st, q);
    check_internal(st.vacant_in(st.block_b2) % 2 == 0,
                   "second half vacancy must end even after the parity cover");
    return label;
}

void cover_exceptional_case2(CaseState& st) {
    check_internal(st.case_id == 2, "case-2 mild cover called on wrong state");
    const Graph& g = *st.g;
    const auto& ex = st.exceptional;
    std::vector<char> severe(g.n, 0);
    mark(severe, ex.b_severe);
    mark(severe, ex.b1_severe);
    mark(severe, ex.b2_severe);

    // B-starved A vertices, both tiers: a same-half adjacent pair.
    for (int stage = 0; stage < 2; ++stage) {
        const auto& tier = stage == 0 ? ex.a_severe : ex.a_mild;
        for (int a : tier) {
            if (!st.vacant[a]) continue;
            auto [x, y] = vacant_edge_at(st, a, st.block_b1, &severe);
            if (x < 0) std::tie(x, y) = vacant_edge_at(st, a, st.block_b2, &severe);
            if (x < 0)
                throw StepFailure("no same-half edge covers B-starved vertex " +
                                  std::to_string(a));
            Triangle t = tri(a, x, y);
            st.place(t, stage == 0 ? "cover B-starved severe" : "cover B-starved mild");
            check_internal(st.balanced_triangle(t) && !st.crossing_triangle(t),
                           "B-starved cover must stay inside one half");
        }
    }
    // Mild A-starved and clique-starved B vertices: own half only.
    auto own_half_cover = [&](const std::vector<int>& tier, const char* label) {
        for (int b : tier) {
            if (!st.vacant[b]) continue;
            const std::vector<int>& own = st.in_b1[b] ? st.block_b1 : st.block_b2;
            int u = -1, w = -1;
            for (int u2 : st.block_a) {
                if (!st.vacant[u2] || !g.has_edge(u2, b)) continue;
                int w2 = common_vacant(st, u2, b, own, &severe);
                if (w2 >= 0) {
                    u = u2;
                    w = w2;
                    break;
                }
            }
            if (u < 0)
                throw StepFailure(std::string("no own-half cover for vertex ") +
                                  std::to_string(b));
            Triangle t = tri(b, u, w);
            st.place(t, label);
            check_internal(st.balanced_triangle(t) && !st.crossing_triangle(t),
                           "mild cover must stay inside one half");
        }
    };
    own_half_cover(ex.b_mild, "cover A-starved mild");
    own_half_cover(ex.b1_mild, "cover clique-starved mild");
    own_half_cover(ex.b2_mild, "cover clique-starved mild");
}

namespace {

// Guest triangle components (ascending by least vertex) and the remaining
// vertex list.
std::pair<std::vector<Triangle>, std::vector<int>> split_guest(const Graph& h) {
    std::vector<Triangle> units;
    std::vector<int> rest;
    for (const auto& c : classify_components(h)) {
        if (c.kind == ComponentKind::Triangle)
            units.push_back(tri(c.vertices[0], c.vertices[1], c.vertices[2]));
        else
            rest.insert(rest.end(), c.vertices.begin(), c.vertices.end());
    }
    std::sort(units.begin(), units.end());
    std::sort(rest.begin(), rest.end());
    return {units, rest};
}

void map_units(const std::vector<Triangle>& units, const TriangleSet& hosts, Embedding& emb) {
    check_internal(units.size() == hosts.triangles.size(),
                   "guest triangle components must match placed host triangles one-to-one");
    for (size_t i = 0; i < units.size(); ++i)
        for (int j = 0; j < 3; ++j) {
            check_internal(emb.phi[units[i][j]] < 0, "guest vertex placed twice");
            emb.phi[units[i][j]] = hosts.triangles[i][j];
        }
}

int leftover_balance_count(const Graph& h, const Graph& leftover, const HDecomposition& dec) {
    int r = h.n % 3;
    int s = leftover.n == 0 ? 0 : 3 * (int)dec.I.size() - leftover.n;
    check_internal(s >= 0, "independent part smaller than a third of the leftover");
    check_internal((r + s) % 3 == 0, "balance count must be divisible by three");
    return (r + s) / 3;
}

} // namespace

CaseEmbedResult case1_embed(const Graph& h, const Graph& g, const std::vector<int>& a,
                            const std::vector<int>& b, double eta, double mu) {
    require_guest_degrees(h);
    if (h.n != g.n) throw std::invalid_argument("guest and host must have equal order");
    CaseState st = init_case1(g, a, b, eta, mu);
    auto [units, rest] = split_guest(h);
    Embedding emb(h.n);

    cover_exceptional_case1(st);
    Graph leftover = induced(h, rest);
    HDecomposition dec;
    if (leftover.n > 0) {
        dec = decompose(leftover);
        embed_leftover_case1(st, leftover, rest, dec, emb);
    }
    balance_case1(st, leftover_balance_count(h, leftover, dec));
    std::vector<int> a4 = st.vacant_list(st.block_a);
    std::vector<int> b4 = st.vacant_list(st.block_b);
    check_internal(2 * a4.size() == b4.size(), "vacant parts must satisfy |B| == 2|A|");
    double alpha = std::min(0.49, 8.0 * std::sqrt(st.eta));
    for (const Triangle& t : finish_case1(g, a4, b4, st.mu, alpha)) st.place(t, "finish");
    map_units(units, st.placed, emb);
    check_internal(emb.complete(), "embedding incomplete after the finish step");
    return {emb, st};
}

CaseEmbedResult case2_embed(const Graph& h, const Graph& g, const std::vector<int>& a,
                            const std::vector<int>& b1, const std::vector<int>& b2, double eta,
                            double mu) {
    require_guest_degrees(h);
    if (h.n != g.n) throw std::invalid_argument("guest and host must have equal order");
    CaseState st = init_case2(g, a, b1, b2, eta, mu);
    auto [units, rest] = split_guest(h);
    Embedding emb(h.n);

    parity_cover(st);
    cover_exceptional_case2(st);
    Graph leftover = induced(h, rest);
    HDecomposition dec;
    if (leftover.n > 0) {
        dec = decompose(leftover);
        embed_leftover_pool(st, leftover, rest, dec, st.block_b1, emb);
    }
    balance_case1(st, leftover_balance_count(h, leftover, dec));
    int vb1 = st.vacant_in(st.block_b1), vb2 = st.vacant_in(st.block_b2);
    check_internal(vb1 % 2 == 0 && vb2 % 2 == 0, "both vacant halves must be even");
    std::vector<int> a_vac = st.vacant_list(st.block_a);
    check_internal(2 * a_vac.size() == (size_t)(vb1 + vb2),
                   "vacant parts must satisfy |B| == 2|A|");
    std::vector<int> a_first(a_vac.begin(), a_vac.begin() + vb1 / 2);
    std::vector<int> a_second(a_vac.begin() + vb1 / 2, a_vac.end());
    double alpha = std::min(0.49, 8.0 * std::sqrt(st.eta));
    for (const Triangle& t : finish_case1(g, a_first, st.vacant_list(st.block_b1), st.mu, alpha))
        st.place(t, "finish first half");
    for (const Triangle& t : finish_case1(g, a_second, st.vacant_list(st.block_b2), st.mu, alpha))
        st.place(t, "finish second half");
    map_units(units, st.placed, emb);
    check_internal(emb.complete(), "embedding incomplete after the finish step");
    return {emb, st};
}

namespace {

void cover_exceptional_case3(CaseState& st) {
    const Graph& g = *st.g;
    const auto& ex = st.exceptional;
    const std::vector<int>* blocks[3] = {&st.block_a, &st.block_b, &st.block_c};
    const std::vector<int>* severe[3] = {&ex.a_severe, &ex.b_severe, &ex.c_severe};
    const std::vector<int>* mild[3] = {&ex.a_mild, &ex.b_mild, &ex.c_mild};
    int k = (int)st.block_a.size();
    std::vector<char> severe_mask(g.n, 0);
    for (int i = 0; i < 3; ++i) mark(severe_mask, *severe[i]);

    // Severe tiers: each vertex starved toward one other block gets a matched
    // partner there, the third vertex comes from the block it still sees well.
    for (int x = 0; x < 3; ++x) {
        if (severe[x]->empty()) continue;
        int o1 = (x + 1) % 3, o2 = (x + 2) % 3;
        std::vector<int> toward1, toward2;
        for (int v : *severe[x]) {
            bool s1 = 3 * deg_to(g, v, *blocks[o1]) < k;
            bool s2 = 3 * deg_to(g, v, *blocks[o2]) < k;
            if (s1 && s2)
                throw HypothesisViolation("vertex " + std::to_string(v) +
                                          " is starved toward both other blocks");
            (s1 ? toward1 : toward2).push_back(v);
        }
        auto m1 = toward1.empty()
                      ? std::vector<std::pair<int, int>>{}
                      : cover_matching(g, st.vacant_list(*blocks[o1]), toward1);
        auto m2 = toward2.empty()
                      ? std::vector<std::pair<int, int>>{}
                      : cover_matching(g, st.vacant_list(*blocks[o2]), toward2);
        std::vector<char> partner_mask(g.n, 0);
        for (auto [v, y] : m1) partner_mask[y] = 1;
        for (auto [v, y] : m2) partner_mask[y] = 1;
        std::vector<int> partner(g.n, -1);
        for (auto [v, y] : m1) partner[v] = y;
        for (auto [v, y] : m2) partner[v] = y;
        std::vector<char> avoid(g.n, 0);
        for (int v = 0; v < g.n; ++v) avoid[v] = severe_mask[v] | partner_mask[v];
        for (int v : *severe[x]) {
            if (!st.vacant[v]) continue;
            int y = partner[v];
            check_internal(y >= 0, "severe vertex missed by both cover matchings");
            const std::vector<int>& third_pool =
                std::binary_search(blocks[o1]->begin(), blocks[o1]->end(), y) ? *blocks[o2]
                                                                              : *blocks[o1];
            if (!st.vacant[y])
                throw StepFailure("matched partner of severe vertex " + std::to_string(v) +
                                  " was consumed");
            int z = common_vacant(st, v, y, third_pool, &avoid);
            if (z < 0)
                throw StepFailure("no third-block vertex completes the cover of " +
                                  std::to_string(v));
            Triangle t = tri(v, y, z);
            st.place(t, "cover severe");
            check_internal(st.crossing_triangle(t), "case-3 cover must take one vertex per block");
        }
    }
    // Mild tiers: lexicographic crossing triangles.
    for (int x = 0; x < 3; ++x) {
        int o1 = (x + 1) % 3, o2 = (x + 2) % 3;
        if (o1 > o2) std::swap(o1, o2);
        for (int v : *mild[x]) {
            if (!st.vacant[v]) continue;
            Triangle found{-1, -1, -1};
            for (int y : *blocks[o1]) {
                if (!st.vacant[y] || !g.has_edge(v, y)) continue;
                int z = common_vacant(st, v, y, *blocks[o2], nullptr);
                if (z >= 0) {
                    found = tri(v, y, z);
                    break;
                }
            }
            if (found[0] < 0)
                throw StepFailure("no crossing cover for mild vertex " + std::to_string(v));
            st.place(found, "cover mild");
            check_internal(st.crossing_triangle(found),
                           "case-3 cover must take one vertex per block");
        }
    }
}

// Backtracking placement of the colored remainder, block by color class.
struct GuidedSearch {
    const Graph& hrem;
    const Graph& g;
    std::vector<int> order;                // hrem ids in assignment order
    std::vector<std::vector<int>> earlier; // hrem id -> earlier-placed neighbors
    std::vector<const std::vector<int>*> pool; // hrem id -> host candidate list
    std::vector<char> used;
    std::vector<int> assign;
    long long budget = 4'000'000;

    bool dfs(size_t pos) {
        if (pos == order.size()) return true;
        int x = order[pos];
        for (int v : *pool[x]) {
            if (used[v]) continue;
            if (--budget < 0) throw StepFailure("placement search budget exhausted");
            bool ok = true;
            for (int p : earlier[x])
                if (!g.has_edge(v, assign[p])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = 1;
            assign[x] = v;
            if (dfs(pos + 1)) return true;
            used[v] = 0;
            assign[x] = -1;
        }
        return false;
    }
};

} // namespace

CaseEmbedResult case3_embed(const Graph& h, const Graph& g, const std::vector<int>& a,
                            const std::vector<int>& b, const std::vector<int>& c, double eta,
                            double mu) {
    require_guest_degrees(h);
    if (h.n != g.n) throw std::invalid_argument("guest and host must have equal order");
    CaseState st = init_case3(g, a, b, c, eta, mu);
    Embedding emb(h.n);

    cover_exceptional_case3(st);

    auto [units, rest] = split_guest(h);
    size_t consumed = st.placed.triangles.size();
    if (consumed > units.size())
        throw StepFailure("more cover triangles than guest triangle components");
    std::vector<Triangle> used_units(units.begin(), units.begin() + consumed);
    std::vector<int> remaining = rest;
    for (size_t i = consumed; i < units.size(); ++i)
        remaining.insert(remaining.end(), units[i].begin(), units[i].end());
    std::sort(remaining.begin(), remaining.end());

    Graph hrem = induced(h, remaining);
    EquitableColoring col = equitable_3_coloring(hrem);

    std::array<std::pair<int, int>, 3> by_vac = {
        std::make_pair(st.vacant_in(st.block_a), 0),
        std::make_pair(st.vacant_in(st.block_b), 1),
        std::make_pair(st.vacant_in(st.block_c), 2)};
    std::stable_sort(by_vac.begin(), by_vac.end());
    const std::vector<int>* blocks[3] = {&st.block_a, &st.block_b, &st.block_c};
    std::array<std::vector<int>, 3> pools; // color class index -> vacant hosts
    for (int i = 0; i < 3; ++i) {
        pools[i] = st.vacant_list(*blocks[by_vac[i].second]);
        check_internal(pools[i].size() == col.classes[i].size(),
                       "color class sizes must match vacant block sizes");
    }

    GuidedSearch gs{hrem, g, {}, {}, {}, {}, {}, 4'000'000};
    gs.earlier.assign(hrem.n, {});
    gs.pool.assign(hrem.n, nullptr);
    gs.used.assign(g.n, 0);
    gs.assign.assign(hrem.n, -1);
    for (int v = 0; v < hrem.n; ++v) gs.pool[v] = &pools[col.color_of[v]];
    // components largest first, BFS inside each
    auto comps = classify_components(hrem);
    std::stable_sort(comps.begin(), comps.end(), [](const Component& x, const Component& y) {
        return x.vertices.size() > y.vertices.size();
    });
    std::vector<char> seen(hrem.n, 0);
    for (const auto& cp : comps) {
        std::vector<int> queue{cp.vertices.front()};
        seen[cp.vertices.front()] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            gs.order.push_back(x);
            for (int y : hrem.adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
        }
    }
    check_internal(gs.order.size() == (size_t)hrem.n, "placement order misses vertices");
    std::vector<int> pos_of(hrem.n, -1);
    for (size_t i = 0; i < gs.order.size(); ++i) pos_of[gs.order[i]] = (int)i;
    for (int x = 0; x < hrem.n; ++x)
        for (int y : hrem.adj[x])
            if (pos_of[y] < pos_of[x]) gs.earlier[x].push_back(y);

    if (!gs.dfs(0)) throw StepFailure("no placement of the colored remainder was found");
    for (int v = 0; v < hrem.n; ++v) {
        check_internal(st.vacant[gs.assign[v]], "guided placement reused an occupied vertex");
        st.vacant[gs.assign[v]] = 0;
        emb.phi[remaining[v]] = gs.assign[v];
    }
    st.trace.push_back("guided placement: " + std::to_string(hrem.n) + " vertices");

    map_units(used_units, st.placed, emb);
    check_internal(emb.complete(), "embedding incomplete after the guided placement");
    return {emb, st};
}

} // namespace ore5
