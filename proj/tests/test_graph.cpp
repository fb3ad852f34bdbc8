#include "doctest.h"

#include <algorithm>
#include <set>

#include "altan/graph.hpp"

using namespace altan;

TEST_CASE("make_graph validates and normalises") {
    Graph g = make_graph(4, {{1, 0}, {0, 1}, {2, 3}, {1, 2}});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3); // parallel edge collapsed
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_graph(2, {{-1, 0}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_graph(2, {{1, 1}}), SelfLoop);
    CHECK_THROWS_AS(make_graph(-1, {}), IndexOutOfRange);
    CHECK(make_graph(0, {}).n == 0);
}

TEST_CASE("prefix_subgraph inverts vertex extension") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Graph h = prefix_subgraph(g, 3); // edge (2,3) is dropped with vertex 3
    CHECK(h.n == 3);
    CHECK(h.edge_count() == 2);
    CHECK_THROWS_AS(prefix_subgraph(g, 6), IndexOutOfRange);
    CHECK_THROWS_AS(prefix_subgraph(g, -1), IndexOutOfRange);

    // round trip through an altan step recovers the parent exactly
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    auto pair = altan::altan(make_altan_pair(p3, {{0, 0, 1, 2, 2}}));
    Graph back = prefix_subgraph(pair.graph, p3.n);
    CHECK(back.n == p3.n);
    CHECK(back.edge_count() == p3.edge_count());
    for (int u = 0; u < 3; ++u) CHECK(back.adjacency[u] == p3.adjacency[u]);
}

TEST_CASE("canonical_rotation picks the least cyclic shift") {
    CHECK(canonical_rotation({{2, 0, 1}}).vertices == std::vector<int>{0, 1, 2});
    CHECK(canonical_rotation({{1, 0, 1, 0}}).vertices == std::vector<int>{0, 1, 0, 1});
    CHECK(canonical_rotation({{3, 1, 3, 1, 2}}).vertices == std::vector<int>{1, 2, 3, 1, 3});
    CHECK(canonical_rotation({{5, 5}}).vertices == std::vector<int>{5, 5});
}

TEST_CASE("altan adds spokes and an alternating ring") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    AltanPair base = make_altan_pair(p3, {{0, 2}});
    CHECK(base.level == 0);
    AltanPair a = altan::altan(base);

    // x vertices at 3,4; y vertices at 5,6
    CHECK(a.graph.n == 7);
    CHECK(a.level == 1);
    CHECK(a.x_range == std::pair<int, int>{3, 5});
    CHECK(a.y_range == std::pair<int, int>{5, 7});
    CHECK(a.attachment.vertices == std::vector<int>{5, 6});
    std::set<std::pair<int, int>> want{{0, 1}, {1, 2}, {0, 3}, {2, 4},
                                       {3, 5}, {4, 6}, {4, 5}, {3, 6}};
    auto got = a.graph.edges();
    CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == want);
    // vertex counts: n + 2h per level
    CHECK(iterated_altan(base, 3).graph.n == 3 + 3 * 4);

    CHECK_THROWS_AS(make_altan_pair(p3, {{0}}), InvalidAttachment);
    CHECK_THROWS_AS(make_altan_pair(p3, {{0, 3}}), InvalidAttachment);
    CHECK_THROWS_AS(iterated_altan(base, -1), Error);
}

TEST_CASE("attachment repeats give parallel spokes to distinct x vertices") {
    Graph k1 = make_graph(1, {});
    AltanPair a = altan::altan(make_altan_pair(k1, {{0, 0}}));
    CHECK(a.graph.n == 5);
    CHECK(a.graph.degree(0) == 2); // two spokes from the single parent vertex
}

TEST_CASE("connectivity and bipartiteness") {
    CHECK(is_connected(make_graph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_connected(make_graph(3, {{0, 1}})));
    CHECK(is_connected(make_graph(1, {})));
    CHECK(is_connected(make_graph(0, {})));

    std::vector<int> colour;
    CHECK(is_bipartite(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), &colour));
    CHECK(colour[0] != colour[1]);
    CHECK(colour[0] == colour[2]);
    CHECK_FALSE(is_bipartite(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("json document round trip") {
    GraphDocument doc{make_graph(3, {{0, 1}, {1, 2}}), AttachmentSet{{0, 2}}, 0};
    GraphDocument back = graph_from_json(to_json(doc));
    CHECK(back.graph.n == 3);
    CHECK(back.graph.edges() == doc.graph.edges());
    REQUIRE(back.attachment.has_value());
    CHECK(back.attachment->vertices == std::vector<int>{0, 2});
    CHECK(back.level == 0);

    GraphDocument bare = graph_from_json(R"({"n": 2, "edges": [[0, 1]]})");
    CHECK_FALSE(bare.attachment.has_value());

    CHECK_THROWS_AS(graph_from_json("{"), Error);
    CHECK_THROWS_AS(graph_from_json("[]"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n": 1, "edges": [[0]]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n": 1, "edges": [[0, 2]]})"), IndexOutOfRange);
}

TEST_CASE("dot export mentions every edge") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}});
    std::string dot = to_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
