#include "ore5/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ore5/errors.hpp"
#include "ore5/matching.hpp"

namespace ore5 {

namespace {

struct TriangleSearch {
    const Graph& g;
    std::vector<char> covered;
    std::vector<Triangle> picked;
    int needed, skips_left;

    explicit TriangleSearch(const Graph& g_)
        : g(g_), covered(g_.n, 0), needed(g_.n / 3), skips_left(g_.n % 3) {}

    int residual_degree(int v) const {
        int d = 0;
        for (int w : g.adj[v])
            if (!covered[w]) ++d;
        return d;
    }

    // Any independent set S among uncovered vertices forces every future
    // triangle to spend >= 2 vertices outside S, so
    //   #future <= (uncovered - |S|) / 2.
    bool bound_fails() const {
        int uncovered = 0;
        for (char c : covered)
            if (!c) ++uncovered;
        int still = needed - (int)picked.size();
        if (uncovered < 3 * still) return true;
        std::vector<int> order;
        order.reserve(uncovered);
        for (int v = 0; v < g.n; ++v)
            if (!covered[v]) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = residual_degree(a), db = residual_degree(b);
            return da != db ? da < db : a < b;
        });
        std::vector<char> blocked(g.n, 0);
        int s = 0;
        for (int v : order) {
            if (blocked[v]) continue;
            ++s;
            for (int w : g.adj[v]) blocked[w] = 1;
        }
        return (uncovered - s) / 2 < still;
    }

    bool run() {
        if ((int)picked.size() == needed) return true;
        if (bound_fails()) return false;
        // pivot: uncovered vertex with the fewest uncovered neighbors
        int pivot = -1, best = g.n + 1;
        for (int v = 0; v < g.n; ++v) {
            if (covered[v]) continue;
            int d = residual_degree(v);
            if (d < best) {
                best = d;
                pivot = v;
            }
        }
        check_internal(pivot >= 0, "no uncovered pivot with triangles still needed");
        std::vector<int> nb;
        for (int w : g.adj[pivot])
            if (!covered[w]) nb.push_back(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (!g.has_edge(u, w)) continue;
                covered[pivot] = covered[u] = covered[w] = 1;
                Triangle t{pivot, u, w};
                std::sort(t.begin(), t.end());
                picked.push_back(t);
                if (run()) return true;
                picked.pop_back();
                covered[pivot] = covered[u] = covered[w] = 0;
            }
        if (skips_left > 0) {
            --skips_left;
            covered[pivot] = 1;
            if (run()) return true;
            covered[pivot] = 0;
            ++skips_left;
        }
        return false;
    }
};

} // namespace

std::optional<TriangleSet> triangle_factor(const Graph& g) {
    TriangleSearch s(g);
    if (!s.run()) return std::nullopt;
    TriangleSet ts;
    ts.triangles = std::move(s.picked);
    std::sort(ts.triangles.begin(), ts.triangles.end());
    return ts;
}

bool is_triangle_factor(const Graph& g, const TriangleSet& ts) {
    if ((int)ts.triangles.size() != g.n / 3) return false;
    std::vector<char> used(g.n, 0);
    for (const auto& t : ts.triangles) {
        for (int v : t) {
            if (v < 0 || v >= g.n || used[v]) return false;
            used[v] = 1;
        }
        if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2])) return false;
    }
    return true;
}

std::variant<TriangleSet, std::vector<int>> extend_matching_to_factor(
    const Graph& g, const std::vector<int>& a_side, const std::vector<std::pair<int, int>>& m) {
    if (a_side.size() != m.size())
        throw std::invalid_argument("extension needs |A| == |M|");
    BipartiteGraph b((int)a_side.size(), (int)m.size());
    for (int i = 0; i < (int)a_side.size(); ++i)
        for (int j = 0; j < (int)m.size(); ++j)
            if (g.has_edge(a_side[i], m[j].first) && g.has_edge(a_side[i], m[j].second))
                b.add_edge(i, j);
    Matching mm = max_matching(b);
    if (mm.size < (int)a_side.size()) {
        auto w = hall_violator(b, 1);
        check_internal(w.has_value(), "imperfect matching without a Hall witness");
        std::vector<int> out;
        for (int i : *w) out.push_back(a_side[i]);
        return out;
    }
    TriangleSet ts;
    for (int i = 0; i < (int)a_side.size(); ++i) {
        int j = mm.left_to_right[i];
        Triangle t{a_side[i], m[j].first, m[j].second};
        std::sort(t.begin(), t.end());
        ts.triangles.push_back(t);
    }
    std::sort(ts.triangles.begin(), ts.triangles.end());
    return ts;
}

namespace {

// exact star-packing search for small instances
struct StarSearch {
    const Graph& g;
    int r, needed, skips_left;
    std::vector<char> covered;
    std::vector<std::vector<int>> picked;

    StarSearch(const Graph& g_, int r_)
        : g(g_), r(r_), needed(g_.n / (r_ + 1)), skips_left(g_.n % (r_ + 1)), covered(g_.n, 0) {}

    bool choose_leaves(int center, const std::vector<int>& cand, size_t from, std::vector<int>& leaves) {
        if ((int)leaves.size() == r) {
            std::vector<int> star{center};
            star.insert(star.end(), leaves.begin(), leaves.end());
            for (int v : star) covered[v] = 1;
            picked.push_back(star);
            if (run()) return true;
            picked.pop_back();
            for (int v : star) covered[v] = 0;
            return false;
        }
        for (size_t i = from; i < cand.size(); ++i) {
            if (covered[cand[i]]) continue;
            leaves.push_back(cand[i]);
            if (choose_leaves(center, cand, i + 1, leaves)) return true;
            leaves.pop_back();
        }
        return false;
    }

    bool run() {
        if ((int)picked.size() == needed) return true;
        int pivot = -1;
        for (int v = 0; v < g.n; ++v)
            if (!covered[v]) {
                pivot = v;
                break;
            }
        if (pivot < 0) return false;
        // pivot as center
        std::vector<int> cand;
        for (int w : g.adj[pivot])
            if (!covered[w]) cand.push_back(w);
        std::vector<int> leaves;
        covered[pivot] = 1;
        if (choose_leaves(pivot, cand, 0, leaves)) return true;
        covered[pivot] = 0;
        // pivot as a leaf of some uncovered center
        for (int c : cand) {
            std::vector<int> cand2;
            for (int w : g.adj[c])
                if (!covered[w] && w != pivot) cand2.push_back(w);
            covered[pivot] = 1;
            covered[c] = 1;
            std::vector<int> leaves2{pivot};
            if (choose_leaves(c, cand2, 0, leaves2)) return true;
            covered[pivot] = 0;
            covered[c] = 0;
        }
        if (skips_left > 0) {
            --skips_left;
            covered[pivot] = 1;
            if (run()) return true;
            covered[pivot] = 0;
            ++skips_left;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<std::vector<int>>> k1r_factor(const Graph& g, int r, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("star arity must be >= 1");
    int s = g.n / (r + 1);
    if (s == 0) return std::vector<std::vector<int>>{};

    if (r == 1) {
        auto mate = general_max_matching(g);
        int matched = 0;
        for (int v = 0; v < g.n; ++v)
            if (mate[v] >= 0) ++matched;
        if (matched / 2 < s) return std::nullopt;
        std::vector<std::vector<int>> stars;
        for (int v = 0; v < g.n; ++v)
            if (mate[v] > v) stars.push_back({v, mate[v]});
        return stars;
    }

    double eps = (double)min_degree(g) / std::max(1, g.n) - 0.5;
    std::mt19937_64 rng(seed);
    std::vector<int> ids(g.n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int attempt = 0; attempt < 30; ++attempt) {
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<int> X(ids.begin(), ids.begin() + s);
        std::vector<int> Y(ids.begin() + s, ids.begin() + s + (size_t)r * s);
        if (eps > 0) {
            // post-split degree concentration; resample on failure
            auto ymask = make_mask(g.n, Y);
            auto xmask = make_mask(g.n, X);
            double need_y = (0.5 + eps / 2) * (double)Y.size();
            double need_x = (0.5 + eps / 2) * (double)X.size();
            bool ok = true;
            for (int x : X) {
                int d = 0;
                for (int w : g.adj[x])
                    if (ymask[w]) ++d;
                if (d < need_y) { ok = false; break; }
            }
            if (ok)
                for (int y : Y) {
                    int d = 0;
                    for (int w : g.adj[y])
                        if (xmask[w]) ++d;
                    if (d < need_x) { ok = false; break; }
                }
            if (!ok) continue;
        }
        // blow each center into r clones and match against Y
        BipartiteGraph b(s * r, (int)Y.size());
        std::vector<int> ypos(g.n, -1);
        for (int i = 0; i < (int)Y.size(); ++i) ypos[Y[i]] = i;
        for (int i = 0; i < s; ++i)
            for (int w : g.adj[X[i]])
                if (ypos[w] >= 0)
                    for (int k = 0; k < r; ++k) b.add_edge(i * r + k, ypos[w]);
        Matching m = max_matching(b);
        if (m.size < s * r) continue;
        std::vector<std::vector<int>> stars(s);
        for (int i = 0; i < s; ++i) stars[i].push_back(X[i]);
        for (int c = 0; c < s * r; ++c) stars[c / r].push_back(Y[m.left_to_right[c]]);
        for (auto& st : stars) std::sort(st.begin() + 1, st.end());
        return stars;
    }
    if (g.n <= 21) {
        StarSearch ss(g, r);
        if (ss.run()) return ss.picked;
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Rotation-extension: complete under the Ore condition, best-effort otherwise.
std::optional<std::vector<int>> hamilton_rotation(const Graph& g) {
    int n = g.n;
    std::vector<int> path{0};
    std::vector<char> on(n, 0);
    on[0] = 1;
    int guard = 4 * n * n + 16;
    while ((int)path.size() < n && guard-- > 0) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v : g.adj[path.back()])
                if (!on[v]) {
                    path.push_back(v);
                    on[v] = 1;
                    grew = true;
                    break;
                }
            if (!grew)
                for (int v : g.adj[path.front()])
                    if (!on[v]) {
                        path.insert(path.begin(), v);
                        on[v] = 1;
                        grew = true;
                        break;
                    }
        }
        if ((int)path.size() == n) break;
        // close the path into a cycle
        int k = (int)path.size();
        int rot = -1;
        if (!g.has_edge(path.front(), path.back())) {
            for (int i = 0; i + 1 < k; ++i)
                if (g.has_edge(path[i], path.back()) && g.has_edge(path[i + 1], path.front())) {
                    rot = i;
                    break;
                }
            if (rot < 0) return std::nullopt; // not dense enough for this route
            std::reverse(path.begin() + rot + 1, path.end());
        }
        // reopen at a vertex with an outside neighbor
        int cut = -1, out = -1;
        for (int i = 0; i < k && cut < 0; ++i)
            for (int v : g.adj[path[i]])
                if (!on[v]) {
                    cut = i;
                    out = v;
                    break;
                }
        if (cut < 0) return std::nullopt; // disconnected from the rest
        std::rotate(path.begin(), path.begin() + (cut + 1) % k, path.end());
        path.push_back(out);
        on[out] = 1;
    }
    if ((int)path.size() < n) return std::nullopt;
    if (!g.has_edge(path.front(), path.back())) {
        int k = n, rot = -1;
        for (int i = 0; i + 1 < k; ++i)
            if (g.has_edge(path[i], path.back()) && g.has_edge(path[i + 1], path.front())) {
                rot = i;
                break;
            }
        if (rot < 0) return std::nullopt;
        std::reverse(path.begin() + rot + 1, path.end());
    }
    return path;
}

struct HamiltonSearch {
    const Graph& g;
    std::vector<int> path;
    std::vector<char> on;

    explicit HamiltonSearch(const Graph& g_) : g(g_), on(g_.n, 0) {}

    bool feasible() const {
        int cur = path.back(), start = path.front();
        for (int w = 0; w < g.n; ++w) {
            if (on[w]) continue;
            int avail = 0;
            for (int v : g.adj[w])
                if (!on[v] || v == cur || v == start) ++avail;
            if (avail < 2) return false;
        }
        return true;
    }

    bool dfs() {
        if ((int)path.size() == g.n) return g.has_edge(path.back(), path.front());
        if (!feasible()) return false;
        int cur = path.back();
        for (int v : g.adj[cur]) {
            if (on[v]) continue;
            on[v] = 1;
            path.push_back(v);
            if (dfs()) return true;
            path.pop_back();
            on[v] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> hamilton_cycle(const Graph& g) {
    if (g.n < 3) return std::nullopt;
    if (min_degree(g) < 2) return std::nullopt;
    if (auto fast = hamilton_rotation(g)) return fast;
    HamiltonSearch hs(g);
    hs.path.push_back(0);
    hs.on[0] = 1;
    if (hs.dfs()) return hs.path;
    return std::nullopt;
}

std::vector<int> layout_into_path_square(const Graph& h) {
    if (ore_degree(h) > 4)
        throw OreDegreeViolation("layout requires Ore-degree <= 4, found " +
                                 std::to_string(ore_degree(h)));
    std::vector<int> order;
    for (const Component& c : classify_components(h)) {
        switch (c.kind) {
            case ComponentKind::IsolatedVertex:
            case ComponentKind::Edge:
                order.insert(order.end(), c.vertices.begin(), c.vertices.end());
                break;
            case ComponentKind::Path: {
                // walk from the smaller endpoint
                int end = -1;
                for (int v : c.vertices)
                    if (h.degree(v) == 1) {
                        end = v;
                        break;
                    }
                int prev = -1, cur = end;
                while (cur != -1) {
                    order.push_back(cur);
                    int nxt = -1;
                    for (int w : h.adj[cur])
                        if (w != prev) nxt = w;
                    prev = cur;
                    cur = nxt;
                }
                break;
            }
            case ComponentKind::Triangle:
            case ComponentKind::Cycle: {
                // cycle order from the smallest vertex toward its smaller neighbor
                std::vector<int> cyc;
                int start = c.vertices.front();
                int prev = start, cur = std::min(h.adj[start][0], h.adj[start][1]);
                cyc.push_back(start);
                while (cur != start) {
                    cyc.push_back(cur);
                    int nxt = (h.adj[cur][0] == prev) ? h.adj[cur][1] : h.adj[cur][0];
                    prev = cur;
                    cur = nxt;
                }
                // interleave: slots c_0, c_{t-1}, c_1, c_{t-2}, ... keep every
                // cycle edge within two slots
                int t = (int)cyc.size();
                for (int a = 0; a < t; ++a)
                    order.push_back(a % 2 == 0 ? cyc[a / 2] : cyc[t - 1 - a / 2]);
                break;
            }
            case ComponentKind::Claw: {
                int center = -1;
                for (int v : c.vertices)
                    if (h.degree(v) == 3) center = v;
                std::vector<int> leaves;
                for (int v : c.vertices)
                    if (v != center) leaves.push_back(v);
                order.push_back(leaves[0]);
                order.push_back(leaves[1]);
                order.push_back(center);
                order.push_back(leaves[2]);
                break;
            }
            default:
                throw InternalError("unexpected component shape under Ore-degree 4");
        }
    }
    check_internal((int)order.size() == h.n, "layout dropped vertices");
    std::vector<int> slot(h.n, -1);
    for (int i = 0; i < h.n; ++i) slot[order[i]] = i;
    for (int u = 0; u < h.n; ++u)
        for (int v : h.adj[u])
            check_internal(std::abs(slot[u] - slot[v]) <= 2, "layout stretched an edge past two slots");
    return order;
}

std::optional<FictiveFactorResult> fictive_triangle_factor(const Graph& g_r, double d) {
    if (d <= 0) throw std::invalid_argument("density parameter must be positive");
    int n = g_r.n;
    if (auto direct = triangle_factor(g_r)) {
        FictiveFactorResult res;
        res.triangles = *direct;
        std::vector<char> used(n, 0);
        for (const auto& t : res.triangles.triangles)
            for (int v : t) used[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!used[v]) res.discarded.push_back(v);
        return res;
    }
    int nf = (int)std::ceil(6.0 * d * n);
    Graph aug(n + nf);
    for (auto [u, v] : g_r.edges()) aug.add_edge(u, v);
    for (int f = n; f < n + nf; ++f)
        for (int v = 0; v < n; ++v) aug.add_edge(f, v);
    auto factored = triangle_factor(aug);
    if (!factored) return std::nullopt;
    FictiveFactorResult res;
    std::vector<char> used(n, 0);
    for (const auto& t : factored->triangles) {
        bool fict = t[0] >= n || t[1] >= n || t[2] >= n;
        if (!fict) {
            res.triangles.triangles.push_back(t);
            for (int v : t) used[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!used[v]) res.discarded.push_back(v);
    check_internal((int)res.discarded.size() <= 2 * nf + 2, "fictive route discarded too many vertices");
    return res;
}

} // namespace ore5
