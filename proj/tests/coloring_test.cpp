#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "ore5/coloring.hpp"
#include "ore5/errors.hpp"
#include "ore5/graph.hpp"

using namespace ore5;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

void check_equitable(const Graph& h, const EquitableColoring& col) {
    REQUIRE((int)col.color_of.size() == h.n);
    std::vector<int> count(3, 0);
    for (int v = 0; v < h.n; ++v) {
        REQUIRE(col.color_of[v] >= 0);
        REQUIRE(col.color_of[v] < 3);
        ++count[col.color_of[v]];
    }
    // Proper: no edge inside a class.
    for (const auto& [u, v] : h.edges()) CHECK(col.color_of[u] != col.color_of[v]);
    // Classes mirror color_of and are size-sorted with spread at most one.
    std::set<int> seen;
    for (int c = 0; c < 3; ++c) {
        CHECK((int)col.classes[c].size() == count[c]);
        for (int v : col.classes[c]) {
            CHECK(col.color_of[v] == c);
            CHECK(seen.insert(v).second);
        }
    }
    CHECK((int)seen.size() == h.n);
    CHECK(col.classes[0].size() <= col.classes[1].size());
    CHECK(col.classes[1].size() <= col.classes[2].size());
    CHECK(col.classes[2].size() - col.classes[0].size() <= 1);
}

} // namespace

TEST_CASE("small exact shapes") {
    for (int n : {1, 2, 3, 4, 5, 6, 7}) {
        Graph p = path_graph(n);
        check_equitable(p, equitable_3_coloring(p));
    }
    for (int n : {3, 4, 5, 6, 9}) {
        Graph c = cycle_graph(n);
        check_equitable(c, equitable_3_coloring(c));
    }
    Graph empty(6);
    check_equitable(empty, equitable_3_coloring(empty));
    Graph one(1);
    check_equitable(one, equitable_3_coloring(one));
}

TEST_CASE("triangles force all three colors") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    EquitableColoring col = equitable_3_coloring(g);
    check_equitable(g, col);
    CHECK(col.classes[0].size() == 1);
    CHECK(col.classes[2].size() == 1);
}

TEST_CASE("odd cycle pushes past two colors but stays equitable") {
    // C9: a 3/3/3 split needs the odd-cycle third color placed carefully.
    Graph g = cycle_graph(9);
    EquitableColoring col = equitable_3_coloring(g);
    check_equitable(g, col);
    CHECK(col.classes[0].size() == 3);
}

TEST_CASE("mixed components balance across the size table") {
    // Triangle + path + claw + isolated vertices: the per-component splits
    // must be recombined so global class sizes differ by at most one.
    Graph g(13);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    for (int l = 8; l <= 10; ++l) g.add_edge(7, l);
    check_equitable(g, equitable_3_coloring(g));

    Graph tri_heavy(12); // four triangles: forced 4/4/4
    for (int t = 0; t < 4; ++t) {
        int b = 3 * t;
        tri_heavy.add_edge(b, b + 1);
        tri_heavy.add_edge(b + 1, b + 2);
        tri_heavy.add_edge(b, b + 2);
    }
    EquitableColoring col = equitable_3_coloring(tri_heavy);
    check_equitable(tri_heavy, col);
    CHECK(col.classes[0].size() == 4);
    CHECK(col.classes[2].size() == 4);
}

TEST_CASE("stars at the degree boundary") {
    Graph star4(5); // K_{1,4} has Ore-degree 5: admissible
    for (int l = 1; l <= 4; ++l) star4.add_edge(0, l);
    EquitableColoring col = equitable_3_coloring(star4);
    check_equitable(star4, col);

    Graph k4(4); // Ore-degree 6: rejected
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK_THROWS_AS(equitable_3_coloring(k4), OreDegreeViolation);
}

TEST_CASE("larger sparse guests stay proper and balanced") {
    // 60-cycle plus 10 triangles plus 10 isolated vertices (n = 100).
    Graph g(100);
    for (int i = 0; i < 60; ++i) g.add_edge(i, (i + 1) % 60);
    for (int t = 0; t < 10; ++t) {
        int b = 60 + 3 * t;
        g.add_edge(b, b + 1);
        g.add_edge(b + 1, b + 2);
        g.add_edge(b, b + 2);
    }
    check_equitable(g, equitable_3_coloring(g));
}
