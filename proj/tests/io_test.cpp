#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ore5/graph.hpp"
#include "ore5/io.hpp"

using namespace ore5;

TEST_CASE("round trip through the text format") {
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(2, 1);
    g.add_edge(1, 4);
    std::string text = to_edge_list_string(g);
    std::istringstream in(text);
    Graph back = read_edge_list(in);
    CHECK(back.n == 5);
    CHECK(back.edges() == g.edges());
}

TEST_CASE("reader accepts comments and exact header") {
    std::istringstream in("# a graph\np 3 2\n0 1\n# middle comment\n1 2\n");
    Graph g = read_edge_list(in);
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("writer emits sorted edges with header") {
    Graph g(3);
    g.add_edge(2, 1);
    g.add_edge(1, 0);
    CHECK(to_edge_list_string(g) == "p 3 2\n0 1\n1 2\n");
}

TEST_CASE("malformed input is rejected") {
    std::istringstream missing("0 1\n");
    CHECK_THROWS(read_edge_list(missing));
    std::istringstream range("p 2 1\n0 5\n");
    CHECK_THROWS(read_edge_list(range));
    std::istringstream loop("p 2 1\n1 1\n");
    CHECK_THROWS(read_edge_list(loop));
    std::istringstream short_list("p 3 2\n0 1\n");
    CHECK_THROWS(read_edge_list(short_list));
}

TEST_CASE("empty graph round trip") {
    Graph g(0);
    std::istringstream in(to_edge_list_string(g));
    Graph back = read_edge_list(in);
    CHECK(back.n == 0);
    CHECK(back.edge_count() == 0);
}
