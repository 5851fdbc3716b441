#include "ore5/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "ore5/errors.hpp"

namespace ore5 {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        g.add_edge(u, v);
    }
    return g;
}

bool Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    auto& au = adj[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return true;
}

void Graph::remove_edge(int u, int v) {
    auto& au = adj[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) throw std::invalid_argument("removing absent edge");
    au.erase(it);
    auto& av = adj[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& au = adj[u];
    return std::binary_search(au.begin(), au.end(), v);
}

long long Graph::edge_count() const {
    long long s = 0;
    for (const auto& a : adj) s += (long long)a.size();
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve((size_t)edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int min_degree(const Graph& g) {
    if (g.n == 0) return 0;
    int d = g.n;
    for (int v = 0; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

int ore_degree(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) best = std::max(best, g.degree(u) + g.degree(v));
    return best;
}

std::optional<int> delta2(const Graph& g) {
    std::optional<int> best;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            int s = g.degree(u) + g.degree(v);
            if (!best || s < *best) best = s;
        }
    return best;
}

const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::IsolatedVertex: return "IsolatedVertex";
        case ComponentKind::Edge: return "Edge";
        case ComponentKind::Path: return "Path";
        case ComponentKind::Cycle: return "Cycle";
        case ComponentKind::Triangle: return "Triangle";
        case ComponentKind::Claw: return "Claw";
        case ComponentKind::Star4: return "Star4";
        case ComponentKind::Other: return "Other";
    }
    return "?";
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.adj[u])
                if (comp[v] < 0) {
                    comp[v] = next;
                    q.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

static ComponentKind classify_one(const Graph& g, const std::vector<int>& vs, int& length) {
    int t = (int)vs.size();
    long long m = 0;
    int dmax = 0, deg1 = 0, deg2 = 0;
    for (int v : vs) {
        int d = g.degree(v);
        m += d;
        dmax = std::max(dmax, d);
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
    }
    m /= 2;
    length = 0;
    if (t == 1) return ComponentKind::IsolatedVertex;
    if (t == 2) return ComponentKind::Edge;
    if (dmax <= 2 && m == t - 1 && deg1 == 2) {
        length = t - 1;
        return ComponentKind::Path;
    }
    if (dmax == 2 && m == t) {
        length = t;
        return t == 3 ? ComponentKind::Triangle : ComponentKind::Cycle;
    }
    if (m == t - 1 && dmax == t - 1 && deg1 == t - 1) {
        if (t == 4) return ComponentKind::Claw;
        if (t == 5) return ComponentKind::Star4;
    }
    return ComponentKind::Other;
}

std::vector<Component> classify_components(const Graph& g) {
    auto comp = component_ids(g);
    int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<Component> out(k);
    for (int v = 0; v < g.n; ++v) out[comp[v]].vertices.push_back(v);
    for (auto& c : out) c.kind = classify_one(g, c.vertices, c.length);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    dist[src] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) {
    if (u == v) return 0;
    return bfs_distances(g, u)[v];
}

Rat::Rat(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

bool Rat::operator<(const Rat& o) const {
    return (__int128)num * o.den < (__int128)o.num * den;
}

std::string Rat::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

long long edges_within(const Graph& g, const std::vector<int>& s) {
    auto mask = make_mask(g.n, s);
    long long m = 0;
    for (int u : s)
        for (int v : g.adj[u])
            if (u < v && mask[v]) ++m;
    return m;
}

long long edges_between(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
    auto my = make_mask(g.n, y);
    long long m = 0;
    for (int u : x)
        for (int v : g.adj[u])
            if (my[v]) ++m;
    return m;
}

Rat density(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("density of empty side");
    auto mx = make_mask(g.n, x);
    for (int v : y)
        if (mx[v]) throw std::invalid_argument("density sides overlap");
    return Rat(edges_between(g, x, y), (long long)x.size() * (long long)y.size());
}

Graph induced(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> idx(g.n, -1);
    for (int i = 0; i < (int)s.size(); ++i) idx[s[i]] = i;
    Graph h((int)s.size());
    for (int u : s)
        for (int v : g.adj[u])
            if (idx[v] >= 0 && u < v) h.add_edge(idx[u], idx[v]);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

std::vector<char> make_mask(int n, const std::vector<int>& s) {
    std::vector<char> mask(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        mask[v] = 1;
    }
    return mask;
}

} // namespace ore5
