#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ore5 {

// Simple undirected graph on dense vertex ids 0..n-1.
// Neighbor lists are kept sorted ascending; no loops, no parallel edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Inserts u-v if absent; returns false if the edge was already there.
    bool add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return (int)adj[v].size(); }
    long long edge_count() const;
    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);

// Maximum of deg(u)+deg(v) over edges uv; 0 for an edgeless graph.
int ore_degree(const Graph& g);

// Minimum of deg(u)+deg(v) over NON-adjacent pairs u != v; nullopt for a
// complete graph (no non-adjacent pair exists).
std::optional<int> delta2(const Graph& g);

enum class ComponentKind {
    IsolatedVertex, // single vertex
    Edge,           // K_2
    Path,           // path with >= 2 edges
    Cycle,          // cycle of length >= 4
    Triangle,       // C_3
    Claw,           // K_{1,3}
    Star4,          // K_{1,4}
    Other,
};

const char* component_kind_name(ComponentKind k);

struct Component {
    std::vector<int> vertices; // ascending
    ComponentKind kind = ComponentKind::Other;
    int length = 0; // edge count for Path/Cycle, else 0
};

// Components listed in order of their smallest vertex id.
std::vector<Component> classify_components(const Graph& g);

// component_ids()[v] = index of v's component (ordered by smallest member).
std::vector<int> component_ids(const Graph& g);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// Graph distance, or -1 when u and v are in different components.
int distance(const Graph& g, int u, int v);

// Exact nonnegative rational, normalized, den > 0.
struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n, long long d);
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rat& o) const;
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    double to_double() const { return (double)num / (double)den; }
    std::string str() const;
};

long long edges_within(const Graph& g, const std::vector<int>& s);
long long edges_between(const Graph& g, const std::vector<int>& x, const std::vector<int>& y);

// e(X,Y) / (|X|*|Y|) as an exact rational. X and Y must be disjoint and
// nonempty (std::invalid_argument otherwise).
Rat density(const Graph& g, const std::vector<int>& x, const std::vector<int>& y);

// Induced subgraph on s (ascending relabel); vertex i of the result is s[i]
// after s is sorted.
Graph induced(const Graph& g, std::vector<int> s);

Graph complement(const Graph& g);

// Membership mask helper: mask[v] = 1 iff v in s.
std::vector<char> make_mask(int n, const std::vector<int>& s);

} // namespace ore5
