#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ore5/generators.hpp"
#include "ore5/graph.hpp"

using namespace ore5;

namespace {

std::vector<int> iota_range(int from, int count) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

int count_kind(const Graph& g, ComponentKind k) {
    int c = 0;
    for (const auto& comp : classify_components(g))
        if (comp.kind == k) ++c;
    return c;
}

} // namespace

TEST_CASE("guest generator honors a full triangle target") {
    GuestProfile p;
    p.n = 30;
    p.triangle_target = 1.0;
    Graph g = gen_guest(p, 7);
    CHECK(g.n == 30);
    CHECK(g.edge_count() == 30);
    for (int v = 0; v < 30; ++v) CHECK(g.degree(v) == 2);
    CHECK(count_kind(g, ComponentKind::Triangle) == 10);
    for (int t = 0; t < 10; ++t) {
        CHECK(g.has_edge(3 * t, 3 * t + 1));
        CHECK(g.has_edge(3 * t, 3 * t + 2));
        CHECK(g.has_edge(3 * t + 1, 3 * t + 2));
    }
}

TEST_CASE("pendant attachment reaches the degree-sum ceiling") {
    SUBCASE("spare vertex carries the pendant") {
        GuestProfile p;
        p.n = 31;
        p.triangle_target = 1.0;
        p.pendant_on_triangle = true;
        Graph g = gen_guest(p, 3);
        CHECK(g.edge_count() == 31);
        CHECK(count_kind(g, ComponentKind::Triangle) == 9); // one became a paw
        CHECK(g.has_edge(0, 30));
        CHECK(g.degree(30) == 1);
        CHECK(g.degree(0) == 3);
        CHECK(ore_degree(g) == 5);
    }
    SUBCASE("tight budget trades one triangle for the pendant") {
        GuestProfile p; // default weights refill the freed vertices
        p.n = 30;
        p.triangle_target = 1.0;
        p.pendant_on_triangle = true;
        Graph g = gen_guest(p, 11);
        // Only 9 forced triangles fit once the pendant takes a vertex; the
        // remaining two vertices can only hold a single edge.
        CHECK(g.has_edge(0, 27));
        CHECK(g.degree(27) == 1);
        CHECK(g.has_edge(28, 29));
        CHECK(g.degree(28) == 1);
        CHECK(ore_degree(g) == 5);
    }
}

TEST_CASE("single-piece profiles produce exactly that piece") {
    SUBCASE("edges only") {
        GuestProfile p;
        p.n = 12;
        p.w_p2 = p.w_path = p.w_cycle = p.w_triangle = p.w_claw = p.w_star4 = 0;
        Graph g = gen_guest(p, 5);
        CHECK(g.edge_count() == 6);
        for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 1);
        CHECK(count_kind(g, ComponentKind::Edge) == 6);
    }
    SUBCASE("four-leaf stars only") {
        GuestProfile p;
        p.n = 10;
        p.w_edge = p.w_p2 = p.w_path = p.w_cycle = p.w_triangle = p.w_claw = 0;
        p.w_star4 = 1;
        Graph g = gen_guest(p, 5);
        CHECK(g.edge_count() == 8);
        CHECK(g.degree(0) == 4);
        CHECK(g.degree(5) == 4);
        CHECK(count_kind(g, ComponentKind::Star4) == 2);
        CHECK(ore_degree(g) == 5);
    }
    SUBCASE("leftover short of every piece goes isolated") {
        GuestProfile p;
        p.n = 9;
        p.w_edge = p.w_p2 = p.w_path = p.w_cycle = p.w_triangle = p.w_claw = 0;
        p.w_star4 = 1;
        Graph g = gen_guest(p, 5);
        CHECK(g.edge_count() == 4);
        CHECK(count_kind(g, ComponentKind::IsolatedVertex) == 4);
        p.allow_isolated = false;
        CHECK_THROWS_AS(gen_guest(p, 5), std::invalid_argument);
    }
}

TEST_CASE("guest generator rejects bad profiles") {
    GuestProfile p;
    p.n = -1;
    CHECK_THROWS_AS(gen_guest(p, 0), std::invalid_argument);
    p.n = 9;
    p.w_path = -0.5;
    CHECK_THROWS_AS(gen_guest(p, 0), std::invalid_argument);
    p.w_path = 1;
    p.triangle_target = 1.5;
    CHECK_THROWS_AS(gen_guest(p, 0), std::invalid_argument);
    p.triangle_target = -1;
    p.pendant_on_triangle = true;
    CHECK_THROWS_AS(gen_guest(p, 0), std::invalid_argument);
    p.triangle_target = 0.0; // no triangle to carry the pendant
    CHECK_THROWS_AS(gen_guest(p, 0), std::invalid_argument);
}

TEST_CASE("guest generator is deterministic and stays in contract") {
    GuestProfile p;
    p.n = 23;
    Graph a = gen_guest(p, 99);
    Graph b = gen_guest(p, 99);
    CHECK(a.adj == b.adj);
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = gen_guest(p, s);
        CHECK(g.n == 23);
        CHECK(ore_degree(g) <= 5);
    }
}

TEST_CASE("tight families match their closed forms") {
    SUBCASE("three-class family") {
        Graph g = tight_ch(3); // classes of sizes 3, 4, 2
        CHECK(g.n == 9);
        CHECK(g.edge_count() == 26);
        CHECK(min_degree(g) == 5);
        CHECK(conforming_min_degree(9) == 6); // one short of conforming
        CHECK(edges_within(g, iota_range(0, 3)) == 0);
        CHECK(edges_within(g, iota_range(3, 4)) == 0);
        CHECK(edges_within(g, iota_range(7, 2)) == 0);
        CHECK_THROWS_AS(tight_ch(1), std::invalid_argument);
    }
    SUBCASE("bipartite family") {
        Graph g = tight_bipartite(3); // sides of sizes 4 and 2
        CHECK(g.n == 6);
        CHECK(g.edge_count() == 8);
        CHECK(min_degree(g) == 2);
        CHECK(conforming_min_degree(6) == 4);
        CHECK_THROWS_AS(tight_bipartite(1), std::invalid_argument);
    }
}

TEST_CASE("conforming minimum degree is the two-thirds ceiling") {
    CHECK(conforming_min_degree(0) == 0);
    CHECK(conforming_min_degree(1) == 1);
    CHECK(conforming_min_degree(6) == 4);
    CHECK(conforming_min_degree(7) == 5);
    CHECK(conforming_min_degree(9) == 6);
    CHECK(conforming_min_degree(12) == 8);
}

TEST_CASE("host shape names round-trip") {
    for (HostShape s : {HostShape::RandomMinDegree, HostShape::TripartiteExtremal,
                        HostShape::TwoCliqueB, HostShape::ThreeBlock, HostShape::TightCH,
                        HostShape::TightBipartite}) {
        auto back = host_shape_from_name(host_shape_name(s));
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
    CHECK_FALSE(host_shape_from_name("no-such-shape").has_value());
}

TEST_CASE("random hosts hit the degree target deterministically") {
    HostProfile p;
    p.n = 15;
    Graph a = gen_host(p, 4);
    CHECK(a.n == 15);
    CHECK(min_degree(a) >= conforming_min_degree(15));
    Graph b = gen_host(p, 4);
    CHECK(a.adj == b.adj);

    p.min_degree = 5;
    Graph low = gen_host(p, 4);
    CHECK(min_degree(low) >= 5);

    p.min_degree = 15;
    CHECK_THROWS_AS(gen_host(p, 4), std::invalid_argument);
    p.min_degree = -1;
    p.n = 8;
    CHECK_THROWS_AS(gen_host(p, 4), std::invalid_argument);
}

TEST_CASE("first-case hosts keep the small side sparse") {
    HostProfile p;
    p.n = 18;
    p.shape = HostShape::TripartiteExtremal;
    p.noise = 0.0;
    Graph g = gen_host(p, 21);
    CHECK(g.n == 18);
    CHECK(min_degree(g) >= conforming_min_degree(18));
    // The build only accepts a small block under 15% internal density.
    CHECK((double)edges_within(g, iota_range(0, 6)) <= 0.15 * 6 * 5 / 2.0);

    SUBCASE("planting starves one dense-side vertex toward the small side") {
        p.planted_severe = 2; // cap allows a single plant at this order
        Graph pg = gen_host(p, 21);
        CHECK(min_degree(pg) >= conforming_min_degree(18));
        CHECK(edges_between(pg, {6}, iota_range(0, 6)) == 3);
    }
}

TEST_CASE("second-case hosts form two bridged near-cliques") {
    HostProfile p;
    p.n = 18;
    p.shape = HostShape::TwoCliqueB;
    p.noise = 0.0;
    Graph g = gen_host(p, 8);
    CHECK(min_degree(g) >= conforming_min_degree(18));
    CHECK(edges_within(g, iota_range(6, 6)) == 15);
    CHECK(edges_within(g, iota_range(12, 6)) == 15);
    // Degree repair pairs the two cliques vertex by vertex.
    CHECK(edges_between(g, iota_range(6, 6), iota_range(12, 6)) == 6);
}

TEST_CASE("third-case hosts keep all three blocks internally empty") {
    HostProfile p;
    p.n = 18;
    p.shape = HostShape::ThreeBlock;
    p.noise = 0.0;
    Graph g = gen_host(p, 8);
    CHECK(min_degree(g) == 12);
    CHECK(g.edge_count() == 108);
    CHECK(edges_within(g, iota_range(0, 6)) == 0);
    CHECK(edges_within(g, iota_range(6, 6)) == 0);
    CHECK(edges_within(g, iota_range(12, 6)) == 0);
}

TEST_CASE("tight shapes via the host profile, with optional repair") {
    HostProfile p;
    p.n = 12;
    p.shape = HostShape::TightCH;
    Graph g = gen_host(p, 0);
    CHECK(min_degree(g) == 7); // one short of conforming at this order
    p.repair_to_conforming = true;
    Graph r = gen_host(p, 0);
    CHECK(min_degree(r) >= conforming_min_degree(12));

    p.n = 13;
    CHECK_THROWS_AS(gen_host(p, 0), std::invalid_argument);

    HostProfile q;
    q.n = 12;
    q.shape = HostShape::TightBipartite;
    Graph tb = gen_host(q, 0);
    CHECK(min_degree(tb) == 5); // the k+1 side sees only the k-1 side
    q.repair_to_conforming = true;
    CHECK(min_degree(gen_host(q, 0)) >= conforming_min_degree(12));
    q.n = 7;
    CHECK_THROWS_AS(gen_host(q, 0), std::invalid_argument);
}
