#include "ore5/hstructure.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "ore5/errors.hpp"
#include "ore5/matching.hpp"

namespace ore5 {

void require_guest_degrees(const Graph& h) {
    for (int u = 0; u < h.n; ++u)
        for (int v : h.adj[u])
            if (u < v && h.degree(u) + h.degree(v) > 5)
                throw OreDegreeViolation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                         " has degree sum " + std::to_string(h.degree(u) + h.degree(v)));
}

DegreeClasses degree_classes(const Graph& h) {
    DegreeClasses dc;
    for (int v = 0; v < h.n; ++v) {
        int d = h.degree(v);
        if (d > 4)
            throw OreDegreeViolation("vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        dc.d[d].push_back(v);
    }
    return dc;
}

Graph saturate(const Graph& h) {
    require_guest_degrees(h);
    Graph g = h;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < g.n && !grew; ++u) {
            if (g.degree(u) >= 4) continue;
            for (int v = u + 1; v < g.n; ++v) {
                if (g.degree(v) >= 4 || g.has_edge(u, v)) continue;
                // adding uv raises both degrees by one; every edge at u or v
                // (including uv itself) must stay within sum 5
                int du = g.degree(u) + 1, dv = g.degree(v) + 1;
                if (du + dv > 5) continue;
                bool ok = true;
                for (int w : g.adj[u])
                    if (du + g.degree(w) > 5) { ok = false; break; }
                if (ok)
                    for (int w : g.adj[v])
                        if (dv + g.degree(w) > 5) { ok = false; break; }
                if (!ok) continue;
                g.add_edge(u, v);
                grew = true;
                break;
            }
        }
    }
    return g;
}

ChainSystem chain_system(const Graph& h) {
    require_guest_degrees(h);
    std::vector<int> deg(h.n);
    for (int v = 0; v < h.n; ++v) deg[v] = h.degree(v);

    ChainSystem cs;
    std::set<std::vector<int>> seen; // canonical vertex sequences
    auto canonical = [&](Chain c) {
        if (!c.is_cycle) {
            if (c.verts.front() > c.verts.back()) std::reverse(c.verts.begin(), c.verts.end());
        } else {
            // anchor stays first; orient toward the smaller neighbor
            if (c.verts.size() >= 3 && c.verts[1] > c.verts.back())
                std::reverse(c.verts.begin() + 1, c.verts.end());
        }
        return c;
    };

    for (int x = 0; x < h.n; ++x) {
        if (deg[x] != 1 && deg[x] != 3) continue;
        for (int y0 : h.adj[x]) {
            std::vector<int> walk{x};
            int prev = x, cur = y0;
            while (deg[cur] == 2) {
                walk.push_back(cur);
                int nxt = (h.adj[cur][0] == prev) ? h.adj[cur][1] : h.adj[cur][0];
                prev = cur;
                cur = nxt;
            }
            Chain c;
            if (cur == x) {
                c.is_cycle = true; // closed walk back to the anchor, interior all degree 2
            } else if (deg[cur] == 1 || deg[cur] == 3) {
                walk.push_back(cur);
            } else {
                continue; // dead-ends into a star center: not a chain
            }
            c.verts = std::move(walk);
            c = canonical(std::move(c));
            if (seen.insert(c.verts).second) cs.chains.push_back(std::move(c));
        }
    }
    std::sort(cs.chains.begin(), cs.chains.end(),
              [](const Chain& a, const Chain& b) { return a.verts < b.verts; });
    return cs;
}

std::vector<std::pair<int, int>> d3_chain_matching(const Graph& h, const ChainSystem& cs) {
    std::vector<int> d3;
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) == 3) d3.push_back(v);
    std::vector<int> d3_index(h.n, -1);
    for (int i = 0; i < (int)d3.size(); ++i) d3_index[d3[i]] = i;

    BipartiteGraph b((int)d3.size(), (int)cs.chains.size());
    for (int c = 0; c < (int)cs.chains.size(); ++c) {
        const Chain& ch = cs.chains[c];
        int cnt = 0;
        if (ch.is_cycle) {
            if (d3_index[ch.verts[0]] >= 0) { b.add_edge(d3_index[ch.verts[0]], c); ++cnt; }
        } else {
            for (int end : {ch.verts.front(), ch.verts.back()})
                if (d3_index[end] >= 0) { b.add_edge(d3_index[end], c); ++cnt; }
        }
        check_internal(cnt <= 2, "chain holds more than two degree-3 vertices");
    }
    for (int i = 0; i < (int)d3.size(); ++i)
        check_internal((int)b.adj[i].size() >= 2 && (int)b.adj[i].size() <= 3,
                       "degree-3 vertex lies on " + std::to_string(b.adj[i].size()) +
                           " chains; expected 2 or 3");

    Matching m = max_matching(b);
    check_internal(m.size == (int)d3.size(), "chain matching fails to saturate the degree-3 vertices");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < (int)d3.size(); ++i) out.emplace_back(d3[i], m.left_to_right[i]);
    return out;
}

namespace {

// Neighbor of x inside chain ch (x an endpoint or the cycle anchor); for a
// cycle both cycle-neighbors qualify and the smaller id wins.
int chain_neighbor(const Chain& ch, int x) {
    if (ch.is_cycle) {
        check_internal(ch.verts[0] == x, "cycle anchor mismatch");
        return std::min(ch.verts[1], ch.verts.back());
    }
    if (ch.verts.front() == x) return ch.verts[1];
    check_internal(ch.verts.back() == x, "matched vertex is not a chain endpoint");
    return ch.verts[ch.verts.size() - 2];
}

} // namespace

HDecomposition decompose(const Graph& h) {
    require_guest_degrees(h);
    check_internal(h.n >= 1, "decompose needs at least one vertex");
    HDecomposition dec;

    ChainSystem cs = chain_system(h);
    auto matching = d3_chain_matching(h, cs);

    std::vector<char> in_I(h.n, 0), in_Iprime(h.n, 0);
    for (auto [x, c] : matching) {
        int y = chain_neighbor(cs.chains[c], x);
        check_internal(h.degree(y) <= 2, "seed vertex has degree above 2");
        in_Iprime[y] = 1;
    }
    for (int v = 0; v < h.n; ++v)
        if (in_Iprime[v]) {
            for (int w : h.adj[v]) check_internal(!in_Iprime[w], "seed set is not independent");
            in_I[v] = 1;
        }

    auto addable = [&](int v) {
        if (in_I[v]) return false;
        for (int w : h.adj[v])
            if (in_I[w]) return false;
        return true;
    };

    // Greedy completion + local exchanges. Every pass through the outer loop
    // that performs an exchange strictly grows |I|.
    for (;;) {
        for (int v = 0; v < h.n; ++v)
            if (addable(v)) in_I[v] = 1;

        // a high-degree member must be a star center: trade it for its leaves
        int swapped = -1;
        for (int v = 0; v < h.n && swapped < 0; ++v)
            if (in_I[v] && h.degree(v) >= 3) swapped = v;
        if (swapped >= 0) {
            check_internal(h.degree(swapped) == 4 && !in_Iprime[swapped],
                           "independent set holds a degree-3 vertex");
            in_I[swapped] = 0;
            for (int w : h.adj[swapped]) {
                check_internal(h.degree(w) == 1, "star center with a non-leaf neighbor");
                in_I[w] = 1;
            }
            continue;
        }

        // components of H-I must be short paths; find a member with two
        // non-adjacent neighbors on the same one and trade it for them
        std::vector<int> comp(h.n, -1);
        int nc = 0;
        for (int s = 0; s < h.n; ++s) {
            if (in_I[s] || comp[s] >= 0) continue;
            comp[s] = nc;
            std::deque<int> q{s};
            int size = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                ++size;
                for (int w : h.adj[u])
                    if (!in_I[w] && comp[w] < 0) {
                        comp[w] = nc;
                        q.push_back(w);
                    }
            }
            check_internal(size <= 3, "component of H-I larger than a 2-path");
            ++nc;
        }
        int bad = -1;
        for (int v = 0; v < h.n && bad < 0; ++v) {
            if (!in_I[v] || h.degree(v) != 2) continue;
            int y1 = h.adj[v][0], y2 = h.adj[v][1];
            if (comp[y1] == comp[y2] && comp[y1] >= 0 && !h.has_edge(y1, y2)) bad = v;
        }
        if (bad >= 0) {
            check_internal(!in_Iprime[bad], "seed vertex caught in a path-splitting exchange");
            int y1 = h.adj[bad][0], y2 = h.adj[bad][1];
            in_I[bad] = 0;
            in_I[y1] = in_I[y2] = 1;
            continue;
        }
        break;
    }

    for (int v = 0; v < h.n; ++v) {
        if (in_Iprime[v]) dec.Iprime.push_back(v);
        if (in_I[v]) dec.I.push_back(v);
    }
    check_internal(3 * (long long)dec.I.size() >= h.n, "independent set smaller than n/3");

    // ordered path components of H-I
    std::vector<char> seen(h.n, 0);
    for (int s = 0; s < h.n; ++s) {
        if (in_I[s] || seen[s]) continue;
        std::vector<int> vs;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            vs.push_back(u);
            for (int w : h.adj[u])
                if (!in_I[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(vs.begin(), vs.end());
        if (vs.size() == 3) {
            // order endpoint-mid-endpoint, smaller endpoint first
            auto inside = [&](int u) {
                int d = 0;
                for (int w : h.adj[u])
                    if (w == vs[0] || w == vs[1] || w == vs[2]) ++d;
                return d;
            };
            std::vector<int> ends, mid;
            for (int u : vs) (inside(u) == 1 ? ends : mid).push_back(u);
            check_internal(ends.size() == 2 && mid.size() == 1, "3-vertex component is not a path");
            vs = {std::min(ends[0], ends[1]), mid[0], std::max(ends[0], ends[1])};
        }
        dec.rest_components.push_back(std::move(vs));
    }
    std::sort(dec.rest_components.begin(), dec.rest_components.end());

    std::vector<int> comp_of(h.n, -1);
    for (int c = 0; c < (int)dec.rest_components.size(); ++c)
        for (int v : dec.rest_components[c]) comp_of[v] = c;
    for (int v : dec.I) {
        if (h.degree(v) != 2) continue;
        int y1 = h.adj[v][0], y2 = h.adj[v][1];
        check_internal(comp_of[y1] >= 0 && comp_of[y2] >= 0, "member of I with a neighbor in I");
        (comp_of[y1] == comp_of[y2] ? dec.I1 : dec.I2).push_back(v);
    }
    return dec;
}

std::vector<int> scattered_subset(const Graph& h, HDecomposition& dec, std::uint64_t seed) {
    std::vector<char> excluded(h.n, 0);
    for (int v : dec.I1) excluded[v] = 1;

    std::vector<char> picked(h.n, 0);
    std::vector<int> ihat;
    for (int v : dec.I) {
        if (excluded[v] || h.degree(v) == 0) continue;
        // BFS to depth 4: any already-picked vertex that close blocks v
        std::vector<std::pair<int, int>> frontier{{v, 0}};
        std::vector<int> dist(h.n, -1);
        dist[v] = 0;
        bool blocked = false;
        for (size_t qi = 0; qi < frontier.size() && !blocked; ++qi) {
            auto [u, d] = frontier[qi];
            if (picked[u] && u != v) blocked = true;
            if (d == 4) continue;
            for (int w : h.adj[u])
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    frontier.emplace_back(w, d + 1);
                }
        }
        if (!blocked) {
            picked[v] = 1;
            ihat.push_back(v);
        }
    }

    dec.Ihat = ihat;
    dec.ihat_seed = seed;
    std::vector<int> shuffled = ihat;
    std::mt19937_64 rng(seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    size_t k = shuffled.size();
    std::array<size_t, 3> sz{k / 3, k / 3, k / 3};
    for (size_t i = 0; i < k % 3; ++i) ++sz[i];
    size_t at = 0;
    for (int part = 0; part < 3; ++part) {
        dec.ihat_parts[part].assign(shuffled.begin() + at, shuffled.begin() + at + sz[part]);
        std::sort(dec.ihat_parts[part].begin(), dec.ihat_parts[part].end());
        at += sz[part];
    }
    return ihat;
}

TriangleExtremality triangle_extremality(const Graph& h, double nu) {
    require_guest_degrees(h);
    TriangleExtremality te;
    std::vector<char> in_tri(h.n, 0);
    for (int u = 0; u < h.n; ++u)
        for (int v : h.adj[u]) {
            if (v <= u) continue;
            for (int w : h.adj[v]) {
                if (w <= v) continue;
                if (h.has_edge(u, w)) {
                    check_internal(!in_tri[u] && !in_tri[v] && !in_tri[w],
                                   "overlapping triangles despite the degree contract");
                    in_tri[u] = in_tri[v] = in_tri[w] = 1;
                    te.triangles.push_back({u, v, w});
                }
            }
        }
    te.triangle_count = (int)te.triangles.size();
    for (const auto& t : te.triangles) {
        bool all2 = true;
        for (int x : t) {
            te.vdelta_prime.push_back(x);
            if (h.degree(x) != 2) all2 = false;
        }
        if (all2)
            for (int x : t) te.vdelta.push_back(x);
    }
    std::sort(te.vdelta_prime.begin(), te.vdelta_prime.end());
    std::sort(te.vdelta.begin(), te.vdelta.end());
    te.is_extreme = 3.0 * te.triangle_count >= (1.0 - nu) * h.n - 1e-9;
    return te;
}

} // namespace ore5
