#include "ore5/matching.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

#include "ore5/errors.hpp"

namespace ore5 {

void BipartiteGraph::add_edge(int l, int r) {
    if (l < 0 || l >= nl || r < 0 || r >= nr) throw std::invalid_argument("bipartite edge out of range");
    auto& a = adj[l];
    auto it = std::lower_bound(a.begin(), a.end(), r);
    if (it == a.end() || *it != r) a.insert(it, r);
}

bool BipartiteGraph::has_edge(int l, int r) const {
    const auto& a = adj[l];
    return std::binary_search(a.begin(), a.end(), r);
}

long long BipartiteGraph::edge_count() const {
    long long m = 0;
    for (const auto& a : adj) m += (long long)a.size();
    return m;
}

// BFS for one augmenting path from `src`; returns true and flips the path if
// one exists.
static bool augment_from(const BipartiteGraph& b, int src, std::vector<int>& l2r, std::vector<int>& r2l) {
    std::vector<int> parent_right(b.nr, -2); // right -> left that discovered it
    std::deque<int> q{src};
    std::vector<char> seen_left(b.nl, 0);
    seen_left[src] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int r : b.adj[u]) {
            if (parent_right[r] != -2) continue;
            parent_right[r] = u;
            int nxt = r2l[r];
            if (nxt == -1) {
                // free right vertex: unwind
                int rr = r;
                while (rr != -1) {
                    int ll = parent_right[rr];
                    int prev = l2r[ll];
                    l2r[ll] = rr;
                    r2l[rr] = ll;
                    rr = prev;
                }
                return true;
            }
            if (!seen_left[nxt]) {
                seen_left[nxt] = 1;
                q.push_back(nxt);
            }
        }
    }
    return false;
}

Matching max_matching(const BipartiteGraph& b) {
    Matching m;
    m.left_to_right.assign(b.nl, -1);
    m.right_to_left.assign(b.nr, -1);
    for (int u = 0; u < b.nl; ++u)
        if (augment_from(b, u, m.left_to_right, m.right_to_left)) ++m.size;
    return m;
}

// Clone each left vertex q times and look for a matching saturating all
// clones; a deficiency certificate projects back to a q-fold Hall witness.
static BipartiteGraph clone_left(const BipartiteGraph& b, int q) {
    BipartiteGraph c(b.nl * q, b.nr);
    for (int u = 0; u < b.nl; ++u)
        for (int k = 0; k < q; ++k) c.adj[u * q + k] = b.adj[u];
    return c;
}

std::optional<std::vector<int>> hall_violator(const BipartiteGraph& b, int q) {
    if (q <= 0) throw std::invalid_argument("q must be positive");
    BipartiteGraph c = clone_left(b, q);
    Matching m = max_matching(c);
    if (m.size == c.nl) return std::nullopt;
    // Alternating reachability from an unmatched clone; the reachable left
    // vertices form a deficient set.
    int start = -1;
    for (int u = 0; u < c.nl; ++u)
        if (m.left_to_right[u] == -1) {
            start = u;
            break;
        }
    std::vector<char> seen_left(c.nl, 0), seen_right(c.nr, 0);
    std::deque<int> qq{start};
    seen_left[start] = 1;
    while (!qq.empty()) {
        int u = qq.front();
        qq.pop_front();
        for (int r : c.adj[u]) {
            if (seen_right[r]) continue;
            seen_right[r] = 1;
            int nxt = m.right_to_left[r];
            check_internal(nxt != -1, "free right vertex reachable from deficient left");
            if (!seen_left[nxt]) {
                seen_left[nxt] = 1;
                qq.push_back(nxt);
            }
        }
    }
    std::vector<int> witness;
    for (int u = 0; u < b.nl; ++u)
        for (int k = 0; k < q; ++k)
            if (seen_left[u * q + k]) {
                witness.push_back(u);
                break;
            }
    // sanity: |N(witness)| < q|witness|
    std::vector<char> nb(b.nr, 0);
    long long cnt = 0;
    for (int u : witness)
        for (int r : b.adj[u])
            if (!nb[r]) {
                nb[r] = 1;
                ++cnt;
            }
    check_internal(cnt < (long long)q * (long long)witness.size(), "extracted witness is not deficient");
    return witness;
}

std::variant<ProportionalMatching, HallWitness> proportional_matching(const BipartiteGraph& b, int q) {
    if (q <= 0) throw std::invalid_argument("q must be positive");
    if (b.nr != b.nl * q)
        throw std::invalid_argument("proportional matching needs |right| == q*|left|");
    BipartiteGraph c = clone_left(b, q);
    Matching m = max_matching(c);
    if (m.size < c.nl) {
        auto w = hall_violator(b, q);
        check_internal(w.has_value(), "deficient clone matching but no Hall witness");
        return *w;
    }
    ProportionalMatching pm;
    pm.q = q;
    pm.assignment.assign(b.nr, -1);
    for (int cu = 0; cu < c.nl; ++cu) {
        int r = m.left_to_right[cu];
        check_internal(r >= 0, "saturating matching left a clone unmatched");
        pm.assignment[r] = cu / q;
    }
    for (int r = 0; r < b.nr; ++r)
        check_internal(pm.assignment[r] >= 0, "right vertex unassigned in proportional matching");
    return pm;
}

int PairCover::pair_id(int i, int j) const {
    if (i > j) std::swap(i, j);
    check_internal(0 <= i && i < j && j < ell, "pair out of range");
    // pairs are emitted in lexicographic order (0,1),(0,2),...,(0,ell-1),(1,2),...
    return i * ell - i * (i + 1) / 2 + (j - i - 1);
}

PairCover build_pair_cover(const Graph& g_r) {
    PairCover l1;
    l1.ell = g_r.n;
    for (int i = 0; i < g_r.n; ++i)
        for (int j = i + 1; j < g_r.n; ++j) l1.pairs.emplace_back(i, j);
    l1.b = BipartiteGraph(g_r.n, (int)l1.pairs.size());
    for (int p = 0; p < (int)l1.pairs.size(); ++p) {
        auto [i, j] = l1.pairs[p];
        for (int w = 0; w < g_r.n; ++w)
            if (w != i && w != j && g_r.has_edge(w, i) && g_r.has_edge(w, j)) l1.b.add_edge(w, p);
    }
    return l1;
}

std::variant<ProportionalMatching, HallWitness> pair_cover_matching(const Graph& g_r) {
    if (g_r.n % 2 == 0)
        throw std::invalid_argument("pair-cover proportional matching needs an odd cluster count");
    PairCover l1 = build_pair_cover(g_r);
    return proportional_matching(l1.b, (g_r.n - 1) / 2);
}

PairCopies build_pair_copies(const PairCover& l1, double mu) {
    if (mu <= 0 || mu >= 1) throw std::invalid_argument("mu must lie in (0,1)");
    PairCopies l2;
    l2.base = l1;
    l2.copies = std::max((long long)l1.ell, (long long)std::ceil((double)l1.ell / mu));
    int np = (int)l1.pairs.size();
    l2.b = BipartiteGraph(l1.ell, np * l2.copies);
    for (int p = 0; p < np; ++p) {
        // PairCover adjacency is stored left->right; gather this pair's cluster
        // neighborhood (ascending since left ids ascend).
        std::vector<int> nbh;
        for (int w = 0; w < l1.ell; ++w)
            if (l1.b.has_edge(w, p)) nbh.push_back(w);
        int t = (int)nbh.size();
        check_internal(t <= l2.copies, "pair degree exceeds clone count");
        for (int s = 0; s < l2.copies; ++s) {
            int clone = l2.clone_id(p, s);
            if (s < t)
                l2.b.add_edge(nbh[s], clone);
            else
                for (int w : nbh) l2.b.add_edge(w, clone);
        }
    }
    return l2;
}

// |N_PC2(A)| / |S'|  >=  (1-mu) * |N_PC1(A)| / |S|, checked exactly with
// integer cross-multiplication. mu enters as the rational c0/c with
// c0 = ceil(mu*c) ... we instead compare via doubles-free route: scale both
// sides by |S|*|S'| and compare (1-mu) through its defining ratio using the
// clone counts, which is how the construction realizes mu.
static void spot_check_ratio(const PairCopies& l2, double mu, std::uint64_t seed) {
    const PairCover& l1 = l2.base;
    int ell = l1.ell;
    long long S = (long long)l1.pairs.size();
    long long Sp = S * l2.copies;
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> a;
        for (int w = 0; w < ell; ++w)
            if (rng() & 1) a.push_back(w);
        if (a.empty()) a.push_back((int)(rng() % ell));
        std::vector<char> n1(l1.b.nr, 0), n2(l2.b.nr, 0);
        long long c1 = 0, c2 = 0;
        for (int w : a) {
            for (int p : l1.b.adj[w])
                if (!n1[p]) { n1[p] = 1; ++c1; }
            for (int cl : l2.b.adj[w])
                if (!n2[cl]) { n2[cl] = 1; ++c2; }
        }
        // c2/Sp >= (1-mu)*c1/S  <=>  c2*S >= (1-mu)*c1*Sp
        long double lhs = (long double)c2 * (long double)S;
        long double rhs = (1.0L - (long double)mu) * (long double)c1 * (long double)Sp;
        check_internal(lhs >= rhs - 1e-9L, "clone-graph neighborhood ratio dropped below (1-mu) of pair-graph ratio");
    }
}

std::variant<StrongMatchingResult, HallWitness> strong_proportional_matching(const Graph& g_r,
                                                                             double mu,
                                                                             std::uint64_t seed) {
    if (g_r.n % 2 == 0)
        throw std::invalid_argument("pair-cover proportional matching needs an odd cluster count");
    PairCover l1 = build_pair_cover(g_r);
    PairCopies l2 = build_pair_copies(l1, mu);
    int q = l2.copies * (g_r.n - 1) / 2;
    auto res = proportional_matching(l2.b, q);
    if (std::holds_alternative<HallWitness>(res)) return std::get<HallWitness>(res);
    spot_check_ratio(l2, mu, seed);
    StrongMatchingResult out;
    out.copies_graph = std::move(l2);
    out.matching = std::get<ProportionalMatching>(res);
    return out;
}

// ---------------------------------------------------------------------------
// General-graph maximum matching, standard blossom shrinking (O(V^3)).
namespace {

struct Blossom {
    int n;
    const Graph& g;
    std::vector<int> mate, p, base;
    std::vector<char> used, blossom;
    std::deque<int> q;

    explicit Blossom(const Graph& g_) : n(g_.n), g(g_), mate(n, -1) {}

    int lca(int a, int b) {
        std::vector<char> used2(n, 0);
        for (;;) {
            a = base[a];
            used2[a] = 1;
            if (mate[a] == -1) break;
            a = p[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (used2[b]) return b;
            b = p[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[mate[v]]] = 1;
            p[v] = child;
            child = mate[v];
            v = p[mate[v]];
        }
    }

    int find_path(int root) {
        used.assign(n, 0);
        p.assign(n, -1);
        base.resize(n);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        q.clear();
        q.push_back(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : g.adj[v]) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
                    int curbase = lca(v, to);
                    blossom.assign(n, 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = 1;
                    q.push_back(mate[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (mate[v] != -1) continue;
            int u = find_path(v);
            if (u == -1) continue;
            while (u != -1) {
                int pv = p[u], ppv = mate[pv];
                mate[u] = pv;
                mate[pv] = u;
                u = ppv;
            }
        }
    }
};

} // namespace

std::vector<int> general_max_matching(const Graph& g) {
    Blossom b(g);
    b.run();
    return b.mate;
}

} // namespace ore5
