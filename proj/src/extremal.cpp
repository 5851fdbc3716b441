#include "ore5/extremal.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "ore5/errors.hpp"
#include "ore5/matching.hpp"

namespace ore5 {

namespace {

std::string set_str(const std::vector<int>& s, size_t cap = 12) {
    std::string out = "{";
    for (size_t i = 0; i < s.size() && i < cap; ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    if (s.size() > cap) out += ",...";
    return out + "}";
}

void require_partition(const Graph& g, std::initializer_list<const std::vector<int>*> parts) {
    std::vector<char> seen(g.n, 0);
    int total = 0;
    for (const auto* p : parts)
        for (int v : *p) {
            if (v < 0 || v >= g.n || seen[v])
                throw std::invalid_argument("blocks must partition the vertex set");
            seen[v] = 1;
            ++total;
        }
    if (total != g.n) throw std::invalid_argument("blocks must partition the vertex set");
}

std::vector<int> deg_into(const Graph& g, const std::vector<int>& s) {
    auto mask = make_mask(g.n, s);
    std::vector<int> d(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (mask[w]) ++d[v];
    return d;
}

// exact minimum-edge subset search (ascending-id combinations, prune on the
// running edge count — it only grows down a branch)
struct SubsetSearch {
    const Graph& g;
    int size;
    std::vector<int> cur;
    long long cur_edges = 0;
    std::vector<char> in;
    std::vector<int> best;
    long long best_edges = LLONG_MAX;

    SubsetSearch(const Graph& g_, int size_) : g(g_), size(size_), in(g_.n, 0) {}

    void dfs(int from) {
        if ((int)cur.size() == size) {
            if (cur_edges < best_edges) {
                best = cur;
                best_edges = cur_edges;
            }
            return;
        }
        if (cur_edges >= best_edges) return;
        int remaining = size - (int)cur.size();
        for (int v = from; v + remaining <= g.n; ++v) {
            int add = 0;
            for (int w : g.adj[v])
                if (in[w]) ++add;
            in[v] = 1;
            cur.push_back(v);
            cur_edges += add;
            dfs(v + 1);
            cur_edges -= add;
            cur.pop_back();
            in[v] = 0;
        }
    }
};

} // namespace

std::pair<std::vector<int>, long long> sparsest_subset(const Graph& g, int size) {
    if (size < 1 || size > g.n) throw std::invalid_argument("subset size out of range");
    if (g.n <= 20) {
        SubsetSearch s(g, size);
        s.dfs(0);
        return {s.best, s.best_edges};
    }
    std::vector<int> best;
    long long best_edges = LLONG_MAX;
    for (int restart = 0; restart < 50; ++restart) {
        std::mt19937_64 rng(0x5eed0000u + restart);
        std::vector<int> ids(g.n);
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<char> in(g.n, 0);
        for (int i = 0; i < size; ++i) in[ids[i]] = 1;
        std::vector<int> dega(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            for (int w : g.adj[v])
                if (in[w]) ++dega[v];
        long long edges = 0;
        for (int v = 0; v < g.n; ++v)
            if (in[v]) edges += dega[v];
        edges /= 2;
        for (;;) {
            int bu = -1, bv = -1, bd = 0;
            for (int u = 0; u < g.n; ++u) {
                if (!in[u]) continue;
                for (int v = 0; v < g.n; ++v) {
                    if (in[v]) continue;
                    int delta = dega[v] - dega[u] - (g.has_edge(u, v) ? 1 : 0);
                    if (delta < bd) {
                        bd = delta;
                        bu = u;
                        bv = v;
                    }
                }
            }
            if (bu < 0) break;
            in[bu] = 0;
            in[bv] = 1;
            for (int w : g.adj[bu]) --dega[w];
            for (int w : g.adj[bv]) ++dega[w];
            edges += bd;
        }
        if (edges < best_edges) {
            best_edges = edges;
            best.clear();
            for (int v = 0; v < g.n; ++v)
                if (in[v]) best.push_back(v);
        }
    }
    return {best, best_edges};
}

std::optional<ExtremalityCertificate> extremality_certificate(const Graph& g, int k, double eta) {
    if (k < 2) throw std::invalid_argument("extremality order must be >= 2");
    if (g.n < k) throw std::invalid_argument("graph smaller than the extremality order");
    int size = g.n / k;
    auto [a, internal] = sparsest_subset(g, size);
    double cap = eta * ((double)size * (size - 1) / 2.0);
    if ((double)internal > cap + 1e-9) return std::nullopt;
    ExtremalityCertificate cert;
    cert.k = k;
    cert.a = a;
    cert.internal_edges = internal;
    cert.eta = eta;
    return cert;
}

MatchingOrBlocks two_blocks_or_matching(const Graph& g1, double mu, double alpha) {
    int n = g1.n;
    if (n % 2 != 0) throw HypothesisViolation("two-blocks dichotomy needs even order, got " +
                                              std::to_string(n));
    if ((double)min_degree(g1) < n / 2.0 - alpha * n - 1e-9)
        throw HypothesisViolation("minimum degree " + std::to_string(min_degree(g1)) +
                                  " below N/2 - alpha*N for N=" + std::to_string(n));
    auto mate = general_max_matching(g1);
    std::vector<int> unmatched;
    for (int v = 0; v < n; ++v)
        if (mate[v] < 0) unmatched.push_back(v);
    if (unmatched.empty()) {
        std::vector<std::pair<int, int>> m;
        for (int v = 0; v < n; ++v)
            if (mate[v] > v) m.push_back({v, mate[v]});
        return m;
    }
    if (unmatched.size() != 2)
        throw HypothesisViolation("maximum matching leaves " + std::to_string(unmatched.size()) +
                                  " vertices uncovered " + set_str(unmatched) +
                                  "; the degree hypothesis admits at most two");
    MatchingClassification cls;
    cls.u = unmatched[0];
    cls.v = unmatched[1];
    check_internal(!g1.has_edge(cls.u, cls.v),
                   "unmatched vertices adjacent under a maximum matching");
    for (int w = 0; w < n; ++w)
        if (mate[w] > w) cls.m.push_back({w, mate[w]});
    for (int i = 0; i < (int)cls.m.size(); ++i) {
        auto [w1, w2] = cls.m[i];
        int du = (g1.has_edge(cls.u, w1) ? 1 : 0) + (g1.has_edge(cls.u, w2) ? 1 : 0);
        int dv = (g1.has_edge(cls.v, w1) ? 1 : 0) + (g1.has_edge(cls.v, w2) ? 1 : 0);
        if (du == 2) {
            check_internal(dv == 0, "augmenting path through a fully-u-attached edge");
            cls.classes[0].push_back(i);
        } else if (dv == 2) {
            check_internal(du == 0, "augmenting path through a fully-v-attached edge");
            cls.classes[4].push_back(i);
        } else if (du == 1 && dv == 1) {
            bool same = (g1.has_edge(cls.u, w1) && g1.has_edge(cls.v, w1)) ||
                        (g1.has_edge(cls.u, w2) && g1.has_edge(cls.v, w2));
            check_internal(same, "u and v attach to opposite ends of a matching edge");
            cls.classes[2].push_back(i);
        } else if (du == 1) {
            cls.classes[1].push_back(i);
        } else if (dv == 1) {
            cls.classes[3].push_back(i);
        } else {
            cls.classes[5].push_back(i);
        }
    }
    if (!cls.classes[2].empty())
        throw HypothesisViolation(
            "found " + std::to_string(cls.classes[2].size()) +
            " matching edges attached to both unmatched vertices; impossible when no half of the "
            "vertex set is mu-sparse (mu=" + std::to_string(mu) + ")");
    // no edge may join the partners of u-attached and v-attached single hits
    for (int i : cls.classes[1]) {
        auto [w1, w2] = cls.m[i];
        int p2 = g1.has_edge(cls.u, w1) ? w2 : w1;
        for (int j : cls.classes[3]) {
            auto [x1, x2] = cls.m[j];
            int p4 = g1.has_edge(cls.v, x1) ? x2 : x1;
            check_internal(!g1.has_edge(p2, p4),
                           "augmenting path through partner vertices of classes 1 and 3");
        }
    }
    double m6 = (double)cls.classes[5].size();
    check_internal(m6 <= alpha * n + 1e-9, "class-5 count exceeds alpha*N");
    double m2m4 = (double)(cls.classes[1].size() + cls.classes[3].size());
    check_internal(m2m4 <= 2 * alpha * n + 1e-9, "single-hit classes exceed 2*alpha*N");

    std::vector<int> v1{cls.u}, v2{cls.v};
    for (int i : cls.classes[0]) {
        v1.push_back(cls.m[i].first);
        v1.push_back(cls.m[i].second);
    }
    for (int i : cls.classes[1]) {
        v1.push_back(cls.m[i].first);
        v1.push_back(cls.m[i].second);
    }
    for (int i : cls.classes[3]) {
        v2.push_back(cls.m[i].first);
        v2.push_back(cls.m[i].second);
    }
    for (int i : cls.classes[4]) {
        v2.push_back(cls.m[i].first);
        v2.push_back(cls.m[i].second);
    }
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    int half = n / 2;
    auto shed = [&](std::vector<int>& from, std::vector<int>& to) {
        while ((int)from.size() > half) {
            to.push_back(from.front());
            from.erase(from.begin());
        }
    };
    shed(v1, v2);
    shed(v2, v1);
    std::vector<int> spare;
    for (int i : cls.classes[5]) {
        spare.push_back(cls.m[i].first);
        spare.push_back(cls.m[i].second);
    }
    std::sort(spare.begin(), spare.end());
    for (int w : spare)
        ((int)v1.size() < half ? v1 : v2).push_back(w);
    check_internal((int)v1.size() == half && (int)v2.size() == half,
                   "rebalanced blocks are not halves");
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    TwoBlocks tb;
    tb.v1 = std::move(v1);
    tb.v2 = std::move(v2);
    tb.crossing = edges_between(g1, tb.v1, tb.v2);
    tb.cls = std::move(cls);
    if ((double)tb.crossing > 3.0 * alpha * n * n + 1e-9)
        throw HypothesisViolation("blocks carry " + std::to_string(tb.crossing) +
                                  " crossing edges, above 3*alpha*N^2");
    return tb;
}

namespace {

constexpr int kMaxSwitchRounds = 1 << 20;

} // namespace

Partition2 stabilize_bipartition(const Graph& g, std::vector<int> a, std::vector<int> b) {
    require_partition(g, {&a, &b});
    std::vector<char> in_a = make_mask(g.n, a);
    std::vector<int> dega = deg_into(g, a), degb = deg_into(g, b);
    int switches = 0;
    for (int round = 0;; ++round) {
        check_internal(round < kMaxSwitchRounds, "bipartition stabilization failed to terminate");
        int su = -1, sv = -1;
        for (int u = 0; u < g.n && su < 0; ++u) {
            if (!in_a[u]) continue;
            for (int v = 0; v < g.n; ++v) {
                if (in_a[v]) continue;
                if (dega[u] + degb[v] > degb[u] + dega[v]) {
                    su = u;
                    sv = v;
                    break;
                }
            }
        }
        if (su < 0) break;
        in_a[su] = 0;
        in_a[sv] = 1;
        for (int w : g.adj[su]) {
            --dega[w];
            ++degb[w];
        }
        for (int w : g.adj[sv]) {
            ++dega[w];
            --degb[w];
        }
        ++switches;
    }
    Partition2 out;
    for (int v = 0; v < g.n; ++v)
        (in_a[v] ? out.a : out.b).push_back(v);
    out.switches = switches;
    return out;
}

Partition2 stabilize_two_cliques(const Graph& g, std::vector<int> b1, std::vector<int> b2) {
    std::vector<char> seen(g.n, 0);
    for (const auto* p : {&b1, &b2})
        for (int v : *p) {
            if (v < 0 || v >= g.n || seen[v])
                throw std::invalid_argument("clique blocks overlap or leave range");
            seen[v] = 1;
        }
    std::vector<char> in1 = make_mask(g.n, b1), in2 = make_mask(g.n, b2);
    std::vector<int> deg1 = deg_into(g, b1), deg2 = deg_into(g, b2);
    int switches = 0;
    for (int round = 0;; ++round) {
        check_internal(round < kMaxSwitchRounds, "two-clique stabilization failed to terminate");
        int su = -1, sv = -1;
        for (int u = 0; u < g.n && su < 0; ++u) {
            if (!in1[u]) continue;
            for (int v = 0; v < g.n; ++v) {
                if (!in2[v]) continue;
                // only swaps that strictly reduce the cross count; the bare
                // inequality alone loops forever on adjacent pairs with
                // slack exactly 2
                int gain = deg2[u] + deg1[v] - deg1[u] - deg2[v] -
                           2 * (g.has_edge(u, v) ? 1 : 0);
                if (gain > 0) {
                    su = u;
                    sv = v;
                    break;
                }
            }
        }
        if (su < 0) break;
        in1[su] = 0;
        in2[su] = 1;
        in2[sv] = 0;
        in1[sv] = 1;
        for (int w : g.adj[su]) {
            --deg1[w];
            ++deg2[w];
        }
        for (int w : g.adj[sv]) {
            --deg2[w];
            ++deg1[w];
        }
        ++switches;
    }
    Partition2 out;
    for (int v = 0; v < g.n; ++v) {
        if (in1[v]) out.a.push_back(v);
        if (in2[v]) out.b.push_back(v);
    }
    out.switches = switches;
    return out;
}

Partition3 stabilize_tripartition(const Graph& g, std::vector<int> a, std::vector<int> b,
                                  std::vector<int> c) {
    require_partition(g, {&a, &b, &c});
    std::vector<int> part(g.n, -1);
    for (int v : a) part[v] = 0;
    for (int v : b) part[v] = 1;
    for (int v : c) part[v] = 2;
    std::array<std::vector<int>, 3> deg;
    deg[0] = deg_into(g, a);
    deg[1] = deg_into(g, b);
    deg[2] = deg_into(g, c);
    auto move_vertex = [&](int v, int to) {
        for (int w : g.adj[v]) {
            --deg[part[v]][w];
            ++deg[to][w];
        }
        part[v] = to;
    };
    int switches = 0;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    const int orders[2][3] = {{0, 1, 2}, {0, 2, 1}};
    for (int round = 0;; ++round) {
        check_internal(round < kMaxSwitchRounds, "tripartition stabilization failed to terminate");
        bool moved = false;
        for (const auto& pr : pairs) {
            int X = pr[0], Y = pr[1];
            for (int u = 0; u < g.n && !moved; ++u) {
                if (part[u] != X) continue;
                for (int v = 0; v < g.n; ++v) {
                    if (part[v] != Y) continue;
                    if (deg[X][u] + deg[Y][v] > deg[Y][u] + deg[X][v]) {
                        move_vertex(u, Y);
                        move_vertex(v, X);
                        moved = true;
                        ++switches;
                        break;
                    }
                }
            }
            if (moved) break;
        }
        if (moved) continue;
        for (const auto& ord : orders) {
            int X1 = ord[0], X2 = ord[1], X3 = ord[2];
            for (int u = 0; u < g.n && !moved; ++u) {
                if (part[u] != X1) continue;
                for (int v = 0; v < g.n && !moved; ++v) {
                    if (part[v] != X2) continue;
                    for (int w = 0; w < g.n; ++w) {
                        if (part[w] != X3) continue;
                        if (deg[X1][u] + deg[X2][v] + deg[X3][w] >
                            deg[X2][u] + deg[X3][v] + deg[X1][w]) {
                            move_vertex(u, X2);
                            move_vertex(v, X3);
                            move_vertex(w, X1);
                            moved = true;
                            ++switches;
                            break;
                        }
                    }
                }
            }
            if (moved) break;
        }
        if (!moved) break;
    }
    Partition3 out;
    for (int v = 0; v < g.n; ++v) {
        if (part[v] == 0) out.a.push_back(v);
        if (part[v] == 1) out.b.push_back(v);
        if (part[v] == 2) out.c.push_back(v);
    }
    out.switches = switches;
    return out;
}

bool bipartition_stable(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> dega = deg_into(g, a), degb = deg_into(g, b);
    for (int u : a)
        for (int v : b)
            if (dega[u] + degb[v] > degb[u] + dega[v]) return false;
    return true;
}

bool two_cliques_stable(const Graph& g, const std::vector<int>& b1, const std::vector<int>& b2) {
    std::vector<int> deg1 = deg_into(g, b1), deg2 = deg_into(g, b2);
    for (int u : b1)
        for (int v : b2)
            if (deg2[u] + deg1[v] - deg1[u] - deg2[v] - 2 * (g.has_edge(u, v) ? 1 : 0) > 0)
                return false;
    return true;
}

bool tripartition_stable(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& c) {
    std::array<std::vector<int>, 3> deg{deg_into(g, a), deg_into(g, b), deg_into(g, c)};
    const std::vector<int>* blocks[3] = {&a, &b, &c};
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
        int X = pr[0], Y = pr[1];
        for (int u : *blocks[X])
            for (int v : *blocks[Y])
                if (deg[X][u] + deg[Y][v] > deg[Y][u] + deg[X][v]) return false;
    }
    const int orders[2][3] = {{0, 1, 2}, {0, 2, 1}};
    for (const auto& ord : orders) {
        int X1 = ord[0], X2 = ord[1], X3 = ord[2];
        for (int u : *blocks[X1])
            for (int v : *blocks[X2])
                for (int w : *blocks[X3])
                    if (deg[X1][u] + deg[X2][v] + deg[X3][w] >
                        deg[X2][u] + deg[X3][v] + deg[X1][w])
                        return false;
    }
    return true;
}

namespace {

void require_host_degree(const Graph& g) {
    if (3 * min_degree(g) < 2 * g.n)
        throw HypothesisViolation("host minimum degree " + std::to_string(min_degree(g)) +
                                  " below 2n/3 for n=" + std::to_string(g.n));
}

void bound_check(const char* name, size_t have, double cap) {
    if ((double)have > cap + 1e-9)
        throw HypothesisViolation(std::string(name) + " has " + std::to_string(have) +
                                  " vertices, above its size bound " + std::to_string(cap));
}

} // namespace

ExceptionalSets exceptional_sets_case1(const Graph& g, const std::vector<int>& a,
                                       const std::vector<int>& b, double eta) {
    require_partition(g, {&a, &b});
    if ((int)a.size() != g.n / 3)
        throw std::invalid_argument("first block must have floor(n/3) vertices");
    require_host_degree(g);
    if (!bipartition_stable(g, a, b))
        throw std::invalid_argument("blocks admit an improving switch; stabilize first");
    int n = g.n;
    std::vector<int> dega = deg_into(g, a), degb = deg_into(g, b);
    ExceptionalSets ex;
    ex.case_id = 1;
    double mild_a_cap = 2.0 * n / 3.0 - 10.0 * std::sqrt(eta) * n;
    double mild_b_cap = n / 3.0 - 10.0 * std::sqrt(eta) * n;
    for (int v : a) {
        if (9LL * degb[v] < 4LL * n)
            ex.a_severe.push_back(v);
        else if ((double)degb[v] <= mild_a_cap + 1e-9)
            ex.a_mild.push_back(v);
    }
    for (int v : b) {
        if (9LL * dega[v] < 2LL * n)
            ex.b_severe.push_back(v);
        else if ((double)dega[v] <= mild_b_cap + 1e-9)
            ex.b_mild.push_back(v);
    }
    // a vertex qualifying on each side would give an improving switch
    check_internal(ex.a_severe.empty() || ex.b_severe.empty(),
                   "severe sets nonempty on both sides of a stable bipartition");
    long long ea = edges_within(g, a);
    if ((double)ea <= eta * n * n / 18.0 + 1e-9) {
        bound_check("severe low-cross set of the small block", ex.a_severe.size(), eta * n);
        bound_check("severe low-cross set of the large block", ex.b_severe.size(), 3.0 * eta * n);
        bound_check("mild low-cross set of the small block", ex.a_mild.size(),
                    std::sqrt(eta) * n / 45.0);
        bound_check("mild low-cross set of the large block", ex.b_mild.size(),
                    std::sqrt(eta) * n / 30.0);
    }
    return ex;
}

ExceptionalSets exceptional_sets_case2(const Graph& g, const std::vector<int>& a,
                                       const std::vector<int>& b1, const std::vector<int>& b2,
                                       double eta, double mu) {
    require_partition(g, {&a, &b1, &b2});
    int n = g.n, k = n / 3, r = n % 3;
    if ((int)a.size() != k || (int)b1.size() != k + r / 2 || (int)b2.size() != k + (r + 1) / 2)
        throw std::invalid_argument("block sizes must be k, k+floor(r/2), k+ceil(r/2)");
    require_host_degree(g);
    std::vector<int> b;
    std::merge(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(b));
    if (!bipartition_stable(g, a, b) || !two_cliques_stable(g, b1, b2))
        throw std::invalid_argument("blocks admit an improving switch; stabilize first");
    ExceptionalSets ex = exceptional_sets_case1(g, a, b, eta);
    ex.case_id = 2;
    std::vector<int> deg1 = deg_into(g, b1), deg2 = deg_into(g, b2);
    double mild_cap = (double)k - 10.0 * std::sqrt(mu) * k;
    for (int v : b1) {
        if (3LL * deg1[v] < k)
            ex.b1_severe.push_back(v);
        else if ((double)deg1[v] <= mild_cap + 1e-9)
            ex.b1_mild.push_back(v);
    }
    for (int v : b2) {
        if (3LL * deg2[v] < k)
            ex.b2_severe.push_back(v);
        else if ((double)deg2[v] <= mild_cap + 1e-9)
            ex.b2_mild.push_back(v);
    }
    if (k >= 4)
        check_internal(ex.b1_severe.empty() || ex.b2_severe.empty(),
                       "own-clique-starved vertices on both sides of a stable two-clique split");
    else if (!ex.b1_severe.empty() && !ex.b2_severe.empty())
        throw HypothesisViolation("own-clique-starved vertices on both sides at toy scale");
    auto mask_sev = make_mask(g.n, ex.b_severe);
    for (int v : ex.b1_severe)
        if (mask_sev[v])
            throw HypothesisViolation("vertex " + std::to_string(v) +
                                      " starves toward both its clique and the small block");
    for (int v : ex.b2_severe)
        if (mask_sev[v])
            throw HypothesisViolation("vertex " + std::to_string(v) +
                                      " starves toward both its clique and the small block");
    if ((double)edges_between(g, b1, b2) <= mu * n * n + 1e-9) {
        bound_check("first-clique severe set", ex.b1_severe.size(), 5.0 * mu * n);
        bound_check("second-clique severe set", ex.b2_severe.size(), 5.0 * mu * n);
        bound_check("first-clique mild set", ex.b1_mild.size(), std::sqrt(mu) * n / 2.0);
        bound_check("second-clique mild set", ex.b2_mild.size(), std::sqrt(mu) * n / 2.0);
    }
    return ex;
}

ExceptionalSets exceptional_sets_case3(const Graph& g, const std::vector<int>& a,
                                       const std::vector<int>& b, const std::vector<int>& c,
                                       double mu) {
    require_partition(g, {&a, &b, &c});
    int n = g.n, k = n / 3, r = n % 3;
    if ((int)a.size() != k || (int)b.size() != k + r / 2 || (int)c.size() != k + (r + 1) / 2)
        throw std::invalid_argument("block sizes must be k, k+floor(r/2), k+ceil(r/2)");
    require_host_degree(g);
    if (!tripartition_stable(g, a, b, c))
        throw std::invalid_argument("blocks admit an improving switch; stabilize first");
    std::array<const std::vector<int>*, 3> blocks{&a, &b, &c};
    std::array<std::vector<int>, 3> deg{deg_into(g, a), deg_into(g, b), deg_into(g, c)};
    ExceptionalSets ex;
    ex.case_id = 3;
    std::array<std::vector<int>*, 3> severe{&ex.a_severe, &ex.b_severe, &ex.c_severe};
    std::array<std::vector<int>*, 3> mild{&ex.a_mild, &ex.b_mild, &ex.c_mild};
    double mild_cap = (double)k - 10.0 * std::sqrt(mu) * k;
    for (int i = 0; i < 3; ++i) {
        int o1 = (i + 1) % 3, o2 = (i + 2) % 3;
        for (int v : *blocks[i]) {
            if (3LL * deg[o1][v] < k || 3LL * deg[o2][v] < k)
                severe[i]->push_back(v);
            else if ((double)deg[o1][v] <= mild_cap + 1e-9 ||
                     (double)deg[o2][v] <= mild_cap + 1e-9)
                mild[i]->push_back(v);
        }
    }
    if (!ex.a_severe.empty() && !ex.b_severe.empty() && !ex.c_severe.empty())
        throw HypothesisViolation(
            "all three blocks hold severely cross-starved vertices after stabilization");
    // starving toward a block forces that block to reach back strongly
    for (int i = 0; i < 3; ++i)
        for (int o : {(i + 1) % 3, (i + 2) % 3}) {
            bool starving = false;
            for (int v : *severe[i])
                if (3LL * deg[o][v] < k) starving = true;
            if (!starving) continue;
            for (int y : *blocks[o])
                if (3LL * deg[i][y] <= 2LL * k)
                    throw HypothesisViolation(
                        "vertex " + std::to_string(y) +
                        " lacks the forced back-degree opposite a cross-starved block");
        }
    for (int i = 0; i < 3; ++i) {
        if ((double)edges_within(g, *blocks[i]) > mu * n * n / 18.0 + 1e-9) continue;
        bound_check("severe cross-starved set", severe[i]->size(), mu * n / 2.0);
        bound_check("mild cross-starved set", mild[i]->size(), std::sqrt(mu) * n / 30.0);
    }
    return ex;
}

std::vector<std::pair<int, int>> cover_matching(const Graph& g, const std::vector<int>& a,
                                                const std::vector<int>& bp) {
    BipartiteGraph f((int)bp.size(), (int)a.size());
    for (int i = 0; i < (int)bp.size(); ++i)
        for (int j = 0; j < (int)a.size(); ++j)
            if (g.has_edge(bp[i], a[j])) f.add_edge(i, j);
    Matching m = max_matching(f);
    if (m.size < (int)bp.size()) {
        auto w = hall_violator(f, 1);
        check_internal(w.has_value(), "deficient matching without a Hall witness");
        std::vector<int> names;
        for (int i : *w) names.push_back(bp[i]);
        throw HypothesisViolation("no matching covers the exceptional set; Hall violator " +
                                  set_str(names) +
                                  " contradicts switch stability at full scale");
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < (int)bp.size(); ++i) out.push_back({bp[i], a[m.left_to_right[i]]});
    return out;
}

} // namespace ore5
