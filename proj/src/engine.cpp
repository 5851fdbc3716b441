#include "ore5/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ore5/errors.hpp"
#include "ore5/extremal.hpp"
#include "ore5/extremal_embed.hpp"
#include "ore5/factor.hpp"
#include "ore5/hstructure.hpp"
#include "ore5/matching.hpp"

namespace ore5 {

VerifyReport verify_embedding(const Graph& h, const Graph& g, const Embedding& e) {
    if ((int)e.phi.size() != h.n)
        return {false, "assignment covers " + std::to_string(e.phi.size()) + " vertices, guest has " +
                           std::to_string(h.n)};
    std::vector<char> used(g.n, 0);
    for (int v = 0; v < h.n; ++v) {
        int img = e.phi[v];
        if (img < 0) return {false, "guest vertex " + std::to_string(v) + " is unplaced"};
        if (img >= g.n)
            return {false, "guest vertex " + std::to_string(v) + " maps outside the host"};
        if (used[img])
            return {false, "host vertex " + std::to_string(img) + " receives two guest vertices"};
        used[img] = 1;
    }
    for (const auto& [u, v] : h.edges())
        if (!g.has_edge(e.phi[u], e.phi[v]))
            return {false, "guest edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " lands on the host non-edge " + std::to_string(e.phi[u]) + "-" +
                               std::to_string(e.phi[v])};
    return {true, ""};
}

namespace {

// Complete backtracking search for an injective homomorphism, visiting guest
// vertices most-constrained-first (placed neighbors, then degree, then id).
// Guest vertices that are isolated overall sort to the end; the visitor fires
// once every positive-degree vertex is placed and decides what to do with the
// isolated tail. Returning true from the visitor stops the search.
class ExactSearch {
  public:
    using Visitor = std::function<bool(std::vector<int>&, std::vector<char>&)>;

    ExactSearch(const Graph& h, const Graph& g, long long node_budget)
        : h_(h), g_(g), budget_(node_budget) {
        int nh = h.n, ng = g.n;
        hdeg_.resize(nh);
        for (int v = 0; v < nh; ++v) hdeg_[v] = h.degree(v);
        gdeg_.resize(ng);
        for (int v = 0; v < ng; ++v) gdeg_[v] = g.degree(v);
        bits_ = ng <= 64;
        if (bits_) {
            grow_.assign(ng, 0);
            for (int v = 0; v < ng; ++v)
                for (int w : g.adj[v]) grow_[v] |= 1ull << w;
            free_mask_ = ng == 64 ? ~0ull : ((1ull << ng) - 1);
        } else {
            gmat_.assign(ng, std::vector<char>(ng, 0));
            for (int v = 0; v < ng; ++v)
                for (int w : g.adj[v]) gmat_[v][w] = 1;
        }
        // Greedy static order.
        std::vector<char> chosen(nh, 0);
        std::vector<int> pn(nh, 0);
        order_.reserve(nh);
        for (int step = 0; step < nh; ++step) {
            int best = -1;
            for (int v = 0; v < nh; ++v) {
                if (chosen[v]) continue;
                if (best < 0 || pn[v] > pn[best] ||
                    (pn[v] == pn[best] &&
                     (hdeg_[v] > hdeg_[best] || (hdeg_[v] == hdeg_[best] && v < best))))
                    best = v;
            }
            order_.push_back(best);
            chosen[best] = 1;
            for (int w : h.adj[best])
                if (!chosen[w]) ++pn[w];
        }
        tail_start_ = nh;
        while (tail_start_ > 0 && hdeg_[order_[tail_start_ - 1]] == 0) --tail_start_;
        earlier_.assign(nh, {});
        for (int i = 0; i < tail_start_; ++i)
            for (int j = 0; j < i; ++j)
                if (h.has_edge(order_[i], order_[j])) earlier_[i].push_back(j);
        phi_.assign(nh, -1);
        used_.assign(ng, 0);
    }

    int tail_start() const { return tail_start_; }
    const std::vector<int>& order() const { return order_; }
    bool out_of_budget() const { return out_of_budget_; }

    // True iff some visitor call returned true (budget exhaustion also stops
    // the search but leaves out_of_budget() set and returns false).
    bool run(const Visitor& visit) {
        visit_ = &visit;
        if (h_.n > g_.n) return false;
        bool hit = dfs(0);
        return hit && !out_of_budget_;
    }

  private:
    bool dfs(int depth) {
        if (depth == tail_start_) return (*visit_)(phi_, used_);
        if (budget_ >= 0 && ++nodes_ > budget_) {
            out_of_budget_ = true;
            return true; // unwind everything
        }
        int v = order_[depth];
        if (bits_) {
            std::uint64_t cand = free_mask_;
            for (int j : earlier_[depth]) cand &= grow_[phi_[order_[j]]];
            while (cand) {
                int c = std::countr_zero(cand);
                cand &= cand - 1;
                if (gdeg_[c] < hdeg_[v]) continue;
                phi_[v] = c;
                used_[c] = 1;
                free_mask_ &= ~(1ull << c);
                if (dfs(depth + 1)) return true;
                free_mask_ |= 1ull << c;
                used_[c] = 0;
                phi_[v] = -1;
            }
        } else {
            for (int c = 0; c < g_.n; ++c) {
                if (used_[c] || gdeg_[c] < hdeg_[v]) continue;
                bool ok = true;
                for (int j : earlier_[depth])
                    if (!gmat_[phi_[order_[j]]][c]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                phi_[v] = c;
                used_[c] = 1;
                if (dfs(depth + 1)) return true;
                used_[c] = 0;
                phi_[v] = -1;
            }
        }
        return false;
    }

    const Graph& h_;
    const Graph& g_;
    long long budget_;
    long long nodes_ = 0;
    bool out_of_budget_ = false;
    bool bits_ = false;
    std::vector<std::uint64_t> grow_;
    std::vector<std::vector<char>> gmat_;
    std::uint64_t free_mask_ = 0;
    std::vector<int> hdeg_, gdeg_, order_;
    std::vector<std::vector<int>> earlier_;
    int tail_start_ = 0;
    std::vector<int> phi_;
    std::vector<char> used_;
    const Visitor* visit_ = nullptr;
};

// One complete or budget-capped search pass; candidate host vertices follow
// the given relabeling (identity when empty), and isolated guest vertices take
// the lowest free hosts of that labeling. Returns nullopt with *budget_hit set
// when the pass was cut short, nullopt with it clear when absence is proven.
std::optional<Embedding> exhaustive_pass(const Graph& h, const Graph& g, long long budget,
                                         const std::vector<int>& perm, bool* budget_hit) {
    *budget_hit = false;
    if (h.n > g.n) return std::nullopt;
    const bool identity = perm.empty();
    Graph gp(identity ? 0 : g.n);
    if (!identity) {
        std::vector<int> inv(g.n);
        for (int i = 0; i < g.n; ++i) inv[perm[i]] = i;
        for (const auto& [u, v] : g.edges()) gp.add_edge(inv[u], inv[v]);
    }
    const Graph& gg = identity ? g : gp;
    ExactSearch s(h, gg, budget);
    Embedding e(h.n);
    bool found = s.run([&](std::vector<int>& phi, std::vector<char>& used) {
        int c = 0;
        for (int i = s.tail_start(); i < h.n; ++i) {
            while (used[c]) ++c;
            phi[s.order()[i]] = c;
            used[c] = 1;
        }
        e.phi = phi;
        return true;
    });
    if (s.out_of_budget()) {
        *budget_hit = true;
        return std::nullopt;
    }
    if (!found) return std::nullopt;
    if (!identity)
        for (int v = 0; v < h.n; ++v) e.phi[v] = perm[e.phi[v]];
    return e;
}

// Complete search, organized as budget-capped restarts over seeded host
// relabelings (a static vertex order that thrashes under one labeling usually
// succeeds quickly under another) with a final unbounded pass, so the overall
// verdict stays exact: an embedding when one exists, nullopt only on proven
// absence.
std::optional<Embedding> exhaustive_embed(const Graph& h, const Graph& g, std::uint64_t seed) {
    bool hit = false;
    if (g.n <= 12) return exhaustive_pass(h, g, -1, {}, &hit);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed ^ 0x7a39cc0full);
    long long budget = 100'000;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto e = exhaustive_pass(h, g, budget, attempt == 0 ? std::vector<int>{} : perm, &hit);
        if (e) return e;
        if (!hit) return std::nullopt;
        std::shuffle(perm.begin(), perm.end(), rng);
        budget *= 4;
    }
    return exhaustive_pass(h, g, -1, {}, &hit);
}

struct BalancedCut {
    std::vector<int> b1, b2; // ascending; |b1| = floor(|b|/2)
    long long crossing = 0;
};

// Minimum-crossing balanced split of the vertex set b: seeded restarts of a
// first-improving swap descent. Deterministic for a fixed seed; the first
// restart starts from the ascending halves.
BalancedCut min_balanced_cut(const Graph& g, const std::vector<int>& b, std::uint64_t seed) {
    int nb = (int)b.size();
    int half = nb / 2;
    BalancedCut best;
    best.crossing = LLONG_MAX;
    if (nb < 2) {
        best.b1 = {};
        best.b2 = b;
        best.crossing = 0;
        return best;
    }
    std::mt19937_64 rng(seed ^ 0x6a1a9cedull);
    std::vector<char> inb(g.n, 0);
    for (int v : b) inb[v] = 1;
    std::vector<int> perm = b;
    const int restarts = 12;
    for (int rs = 0; rs < restarts; ++rs) {
        if (rs > 0) std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> side(g.n, -1);
        for (int i = 0; i < nb; ++i) side[perm[i]] = i < half ? 0 : 1;
        std::vector<std::array<long long, 2>> deg(g.n, {0, 0});
        long long cross = 0;
        for (int v : b)
            for (int w : g.adj[v])
                if (inb[w]) {
                    ++deg[v][side[w]];
                    if (side[v] == 0 && side[w] == 1) ++cross;
                }
        bool improved = true;
        while (improved) {
            improved = false;
            for (int ui = 0; ui < nb && !improved; ++ui) {
                int u = b[ui];
                if (side[u] != 0) continue;
                for (int vi = 0; vi < nb && !improved; ++vi) {
                    int v = b[vi];
                    if (side[v] != 1) continue;
                    long long adjuv = g.has_edge(u, v) ? 1 : 0;
                    long long delta =
                        (deg[u][0] - deg[u][1]) + (deg[v][1] - deg[v][0]) + 2 * adjuv;
                    if (delta >= 0) continue;
                    side[u] = 1;
                    side[v] = 0;
                    for (int w : g.adj[u])
                        if (inb[w]) {
                            --deg[w][0];
                            ++deg[w][1];
                        }
                    for (int w : g.adj[v])
                        if (inb[w]) {
                            ++deg[w][0];
                            --deg[w][1];
                        }
                    cross += delta;
                    improved = true;
                }
            }
        }
        if (cross < best.crossing) {
            best.crossing = cross;
            best.b1.clear();
            best.b2.clear();
            for (int v : b) (side[v] == 0 ? best.b1 : best.b2).push_back(v);
        }
    }
    // b is ascending, so the per-side pushes above are already ascending.
    return best;
}

std::optional<Embedding> route_theta3(const Graph& h, const Graph& g,
                                      std::vector<std::string>& notes) {
    auto hc = hamilton_cycle(g);
    if (!hc) {
        notes.push_back("host has no Hamilton cycle");
        return std::nullopt;
    }
    auto comps = classify_components(h);
    Embedding e(h.n);
    int pos = 0;
    for (const auto& comp : comps) {
        std::vector<int> path = comp.vertices;
        if (path.size() > 3) {
            notes.push_back("component larger than three vertices under edge-degree-sum 3");
            return std::nullopt;
        }
        if (path.size() == 3) {
            int mid = -1;
            for (int v : comp.vertices) {
                int d = 0;
                for (int w : comp.vertices)
                    if (w != v && h.has_edge(v, w)) ++d;
                if (d == 2) mid = v;
            }
            if (mid < 0) {
                notes.push_back("three-vertex component is not a path");
                return std::nullopt;
            }
            std::vector<int> ends;
            for (int v : comp.vertices)
                if (v != mid) ends.push_back(v);
            path = {ends[0], mid, ends[1]};
        }
        for (int i = 0; i < (int)path.size(); ++i) e.phi[path[i]] = (*hc)[pos + i];
        pos += (int)path.size();
    }
    return e;
}

std::optional<Embedding> route_theta4(const Graph& h, const Graph& g, long long budget,
                                      std::uint64_t seed, std::vector<std::string>& notes) {
    std::vector<int> ord = layout_into_path_square(h);
    int n = h.n;
    std::vector<std::array<char, 2>> need(n, {0, 0});
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= 2; ++d)
            if (i - d >= 0 && h.has_edge(ord[i], ord[i - d])) need[i][d - 1] = 1;
    // Budget-capped restarts over host candidate orders: a position with no
    // required edges branches over every unused host vertex, so one unlucky
    // order can thrash; another order usually succeeds immediately.
    std::vector<int> host_ord(g.n);
    std::iota(host_ord.begin(), host_ord.end(), 0);
    std::mt19937_64 rng(seed ^ 0x7e7a4ull);
    const int attempts = 4;
    long long slice = budget >= 0 ? std::max<long long>(budget / attempts, 50'000) : -1;
    for (int a = 0; a < attempts; ++a) {
        if (a > 0) {
            if (slice < 0) break;
            std::shuffle(host_ord.begin(), host_ord.end(), rng);
        }
        std::vector<int> img(n, -1);
        std::vector<char> used(g.n, 0);
        long long nodes = 0;
        bool out = false;
        std::function<bool(int)> go = [&](int i) -> bool {
            if (i == n) return true;
            for (int c : host_ord) {
                if (used[c]) continue;
                if (need[i][0] && !g.has_edge(img[i - 1], c)) continue;
                if (need[i][1] && !g.has_edge(img[i - 2], c)) continue;
                if (slice >= 0 && ++nodes > slice) {
                    out = true;
                    return false;
                }
                img[i] = c;
                used[c] = 1;
                if (go(i + 1)) return true;
                used[c] = 0;
                img[i] = -1;
                if (out) return false;
            }
            return false;
        };
        if (go(0)) {
            Embedding e(n);
            for (int i = 0; i < n; ++i) e.phi[ord[i]] = img[i];
            return e;
        }
        if (!out) {
            // A completed pass depends only on the layout, not the candidate
            // order, so retrying cannot help.
            notes.push_back("position-by-position search exhausted without an embedding");
            return std::nullopt;
        }
    }
    notes.push_back("position-by-position search hit the node budget");
    return std::nullopt;
}

std::optional<Embedding> route_extremal(const Graph& h, const Graph& g, const EngineConfig& cfg,
                                        const ExtremalityCertificate& cert, std::string& route,
                                        std::vector<std::string>& notes) {
    std::vector<char> ina(g.n, 0);
    for (int v : cert.a) ina[v] = 1;
    std::vector<int> restv;
    restv.reserve(g.n - (int)cert.a.size());
    for (int v = 0; v < g.n; ++v)
        if (!ina[v]) restv.push_back(v);
    Partition2 p = stabilize_bipartition(g, cert.a, restv);
    if (p.switches > 0)
        notes.push_back("sparse-block bipartition stabilized with " + std::to_string(p.switches) +
                        " switches");

    BalancedCut cut = min_balanced_cut(g, p.b, cfg.seed);
    double cap = cfg.mu * (double)cut.b1.size() * (double)cut.b2.size();
    notes.push_back("balanced cut of the dense side: " + std::to_string(cut.crossing) +
                    " crossing edges (two-clique threshold " + std::to_string((long long)cap) +
                    ")");
    if ((double)cut.crossing < cap) {
        Partition2 q = stabilize_two_cliques(g, cut.b1, cut.b2);
        try {
            route = "case2";
            return case2_embed(h, g, p.a, q.a, q.b, cfg.eta, cfg.mu).emb;
        } catch (const StepFailure& e) {
            notes.push_back(std::string("two-clique route failed: ") + e.what());
        } catch (const HypothesisViolation& e) {
            notes.push_back(std::string("two-clique route failed: ") + e.what());
        } catch (const std::invalid_argument& e) {
            notes.push_back(std::string("two-clique route rejected: ") + e.what());
        }
    }
    Graph gb = induced(g, p.b);
    auto cert2 = extremality_certificate(gb, 2, cfg.mu);
    if (cert2) {
        std::vector<char> inc(gb.n, 0);
        for (int i : cert2->a) inc[i] = 1;
        std::vector<int> c1, c2;
        for (int i = 0; i < gb.n; ++i) (inc[i] ? c1 : c2).push_back(p.b[i]);
        Partition3 t = stabilize_tripartition(g, p.a, c1, c2);
        if (t.switches > 0)
            notes.push_back("three-block partition stabilized with " +
                            std::to_string(t.switches) + " switches");
        try {
            route = "case3";
            return case3_embed(h, g, t.a, t.b, t.c, cfg.eta, cfg.mu).emb;
        } catch (const StepFailure& e) {
            notes.push_back(std::string("three-block route failed: ") + e.what());
        } catch (const HypothesisViolation& e) {
            notes.push_back(std::string("three-block route failed: ") + e.what());
        } catch (const std::invalid_argument& e) {
            notes.push_back(std::string("three-block route rejected: ") + e.what());
        }
    }
    try {
        route = "case1";
        return case1_embed(h, g, p.a, p.b, cfg.eta, cfg.mu).emb;
    } catch (const StepFailure& e) {
        notes.push_back(std::string("sparse-block route failed: ") + e.what());
    } catch (const HypothesisViolation& e) {
        notes.push_back(std::string("sparse-block route failed: ") + e.what());
    } catch (const std::invalid_argument& e) {
        notes.push_back(std::string("sparse-block route rejected: ") + e.what());
    }
    return std::nullopt;
}

std::optional<Embedding> route_near_extreme(const Graph& h, const Graph& g,
                                            const TriangleExtremality& tex,
                                            const EngineConfig& cfg,
                                            std::vector<std::string>& notes) {
    std::vector<char> indelta(h.n, 0);
    for (int v : tex.vdelta) indelta[v] = 1;
    std::vector<std::array<int, 3>> units;
    for (auto t : tex.triangles) {
        std::sort(t.begin(), t.end());
        if (indelta[t[0]] && indelta[t[1]] && indelta[t[2]]) units.push_back(t);
    }
    std::sort(units.begin(), units.end());
    std::vector<int> rest;
    for (int v = 0; v < h.n; ++v)
        if (!indelta[v]) rest.push_back(v);
    Graph hp = induced(h, rest);
    ExactSearch search(hp, g, cfg.node_budget);
    const int kMaxAttempts = 20;
    int attempts = 0;
    std::optional<Embedding> out;
    search.run([&](std::vector<int>& phi, std::vector<char>& used) -> bool {
        ++attempts;
        std::vector<int> freev;
        for (int c = 0; c < g.n; ++c)
            if (!used[c]) freev.push_back(c);
        Graph gf = induced(g, freev);
        auto fac = triangle_factor(gf);
        if (fac && (int)fac->triangles.size() >= (int)units.size()) {
            std::vector<std::array<int, 3>> ht;
            for (const auto& t : fac->triangles)
                ht.push_back({freev[t[0]], freev[t[1]], freev[t[2]]});
            std::sort(ht.begin(), ht.end());
            Embedding e(h.n);
            for (int i = 0; i < hp.n; ++i)
                if (phi[i] >= 0) e.phi[rest[i]] = phi[i];
            std::vector<char> intri(g.n, 0);
            for (int j = 0; j < (int)units.size(); ++j)
                for (int c = 0; c < 3; ++c) {
                    e.phi[units[j][c]] = ht[j][c];
                    intri[ht[j][c]] = 1;
                }
            std::vector<int> leftover;
            for (int c : freev)
                if (!intri[c]) leftover.push_back(c);
            int li = 0;
            for (int i = 0; i < hp.n; ++i)
                if (phi[i] < 0) e.phi[rest[i]] = leftover[li++];
            check_internal(li == (int)leftover.size(),
                           "free hosts after the triangle family mismatch the isolated tail");
            out = std::move(e);
            return true;
        }
        return attempts >= kMaxAttempts;
    });
    if (!out)
        notes.push_back("no triangle family on the vacant set after " + std::to_string(attempts) +
                        " placement attempts" +
                        (search.out_of_budget() ? " (node budget hit)" : ""));
    return out;
}

std::optional<Embedding> route_structure(const Graph& h, const Graph& g, const EngineConfig& cfg,
                                         std::vector<std::string>& notes) {
    HDecomposition dec = decompose(h);
    std::vector<int> idx(dec.rest_components.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return dec.rest_components[x].size() > dec.rest_components[y].size();
    });
    std::vector<char> used(g.n, 0);
    Embedding e(h.n);
    long long nodes = 0;
    bool out_budget = false;
    auto leaf = [&]() -> bool {
        std::vector<int> slots;
        for (int c = 0; c < g.n; ++c)
            if (!used[c]) slots.push_back(c);
        BipartiteGraph bg((int)dec.I.size(), (int)slots.size());
        for (int i = 0; i < (int)dec.I.size(); ++i)
            for (int s = 0; s < (int)slots.size(); ++s) {
                bool ok = true;
                for (int u : h.adj[dec.I[i]])
                    if (!g.has_edge(slots[s], e.phi[u])) {
                        ok = false;
                        break;
                    }
                if (ok) bg.add_edge(i, s);
            }
        Matching m = max_matching(bg);
        if (m.size < (int)dec.I.size()) return false;
        for (int i = 0; i < (int)dec.I.size(); ++i) e.phi[dec.I[i]] = slots[m.left_to_right[i]];
        return true;
    };
    auto spend = [&]() -> bool {
        if (cfg.node_budget >= 0 && ++nodes > cfg.node_budget) {
            out_budget = true;
            return false;
        }
        return true;
    };
    std::function<bool(int)> go = [&](int k) -> bool {
        if (out_budget) return false;
        if (k == (int)idx.size()) return leaf();
        const auto& comp = dec.rest_components[idx[k]];
        if (comp.size() == 1) {
            for (int c = 0; c < g.n && !out_budget; ++c) {
                if (used[c] || !spend()) continue;
                used[c] = 1;
                e.phi[comp[0]] = c;
                if (go(k + 1)) return true;
                e.phi[comp[0]] = -1;
                used[c] = 0;
            }
        } else if (comp.size() == 2) {
            for (int c = 0; c < g.n && !out_budget; ++c) {
                if (used[c]) continue;
                used[c] = 1;
                e.phi[comp[0]] = c;
                for (int d : g.adj[c]) {
                    if (used[d] || out_budget || !spend()) continue;
                    used[d] = 1;
                    e.phi[comp[1]] = d;
                    if (go(k + 1)) return true;
                    e.phi[comp[1]] = -1;
                    used[d] = 0;
                }
                e.phi[comp[0]] = -1;
                used[c] = 0;
            }
        } else {
            for (int m = 0; m < g.n && !out_budget; ++m) {
                if (used[m]) continue;
                used[m] = 1;
                e.phi[comp[1]] = m;
                for (int c : g.adj[m]) {
                    if (used[c] || out_budget) continue;
                    used[c] = 1;
                    e.phi[comp[0]] = c;
                    for (int d : g.adj[m]) {
                        if (used[d] || out_budget || !spend()) continue;
                        used[d] = 1;
                        e.phi[comp[2]] = d;
                        if (go(k + 1)) return true;
                        e.phi[comp[2]] = -1;
                        used[d] = 0;
                    }
                    e.phi[comp[0]] = -1;
                    used[c] = 0;
                }
                e.phi[comp[1]] = -1;
                used[m] = 0;
            }
        }
        return false;
    };
    if (go(0)) return e;
    notes.push_back(out_budget ? "component-guided search hit the node budget"
                               : "component-guided search exhausted without an embedding");
    return std::nullopt;
}

} // namespace

std::optional<Embedding> oracle_embed(const Graph& h, const Graph& g) {
    bool hit = false;
    return exhaustive_pass(h, g, -1, {}, &hit);
}

EngineResult embed(const Graph& h, const Graph& g, const EngineConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    EngineResult res;
    EngineReport& rep = res.report;
    if (h.n != g.n)
        throw std::invalid_argument("guest and host must have the same number of vertices");
    int n = h.n;
    int theta = ore_degree(h);
    if (!cfg.force) {
        if (theta > 5)
            throw OreDegreeViolation("guest edge degree sum " + std::to_string(theta) +
                                     " exceeds 5");
        if (3LL * min_degree(g) < 2LL * n)
            throw HypothesisViolation("host minimum degree " + std::to_string(min_degree(g)) +
                                      " is below two thirds of the order " + std::to_string(n));
    }
    std::optional<Embedding> emb;
    if (n == 0) {
        rep.route = "theta<=3";
        emb = Embedding(0);
    } else {
        try {
            if (theta <= 3) {
                rep.route = "theta<=3";
                emb = route_theta3(h, g, rep.notes);
            } else if (theta == 4) {
                rep.route = "theta=4";
                emb = route_theta4(h, g, cfg.node_budget, cfg.seed, rep.notes);
            } else if (theta == 5) {
                TriangleExtremality tex = triangle_extremality(h, cfg.nu);
                if (tex.is_extreme) {
                    auto cert = extremality_certificate(g, 3, cfg.eta);
                    if (cert) {
                        std::string route = "case1";
                        emb = route_extremal(h, g, cfg, *cert, route, rep.notes);
                        rep.route = route;
                    } else {
                        rep.route = "near-extreme";
                        emb = route_near_extreme(h, g, tex, cfg, rep.notes);
                    }
                } else {
                    rep.route = "guided";
                    emb = route_structure(h, g, cfg, rep.notes);
                }
            } else {
                rep.route = "fallback";
                rep.notes.push_back("guest edge degree sum exceeds 5; exhaustive search only");
            }
        } catch (const StepFailure& e) {
            rep.notes.push_back(std::string("route failed: ") + e.what());
        } catch (const HypothesisViolation& e) {
            rep.notes.push_back(std::string("route failed: ") + e.what());
        } catch (const std::invalid_argument& e) {
            rep.notes.push_back(std::string("route rejected its input: ") + e.what());
        }
        if (!emb) {
            if (rep.route.empty()) rep.route = "fallback";
            if (rep.route != "fallback") rep.used_fallback = true;
            emb = exhaustive_embed(h, g, cfg.seed);
            if (emb)
                rep.notes.push_back("exhaustive fallback produced the embedding");
            else {
                rep.route = "absent";
                rep.notes.push_back("exhaustive search proved no embedding exists");
            }
        }
    }
    if (emb) {
        VerifyReport vr = verify_embedding(h, g, *emb);
        if (!vr.ok) throw InternalError("embedding failed verification: " + vr.first_violation);
        rep.verified = true;
        res.emb = std::move(emb);
    }
    rep.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace ore5
