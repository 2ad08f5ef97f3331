#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltc/generators.hpp"
#include "ltc/graph.hpp"

using namespace ltc;

namespace {

Graph path(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph cycle(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, es);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}});
    int degsum = 0;
    for (Vertex v = 0; v < 3; ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.edge_count());
}

TEST_CASE("ball on paths and cycles") {
    Graph p5 = path(5);
    CHECK(ball(p5, 2, 0) == VertexSet{2});
    CHECK(ball(p5, 2, 2) == VertexSet{0, 1, 2, 3, 4});
    Graph c7 = cycle(7);
    for (Vertex v = 0; v < 7; ++v) CHECK(ball(c7, v, 1).size() == 3);
}

TEST_CASE("ball monotone in radius and capped by component") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = series_parallel_random(30, rng.next());
        Vertex v = static_cast<Vertex>(rng.below(30));
        size_t prev = 0;
        for (int r = 0; r < 10; ++r) {
            VertexSet b = ball(g, v, r);
            CHECK(b.size() >= prev);
            prev = b.size();
        }
        CHECK(prev == 30);  // generator output is connected
    }
}

TEST_CASE("boundary and coboundary") {
    Graph p3 = path(3);
    auto [bd, cobd] = boundary_and_coboundary(p3, {0});
    CHECK(bd == VertexSet{0});
    CHECK(cobd == VertexSet{1});

    Graph c4 = cycle(4);
    auto [bd2, cobd2] = boundary_and_coboundary(c4, {0, 1});
    CHECK(bd2 == VertexSet{0, 1});
    CHECK(cobd2 == VertexSet{2, 3});

    auto [bd3, cobd3] = boundary_and_coboundary(c4, {0, 1, 2, 3});
    CHECK(bd3.empty());
    CHECK(cobd3.empty());
}

TEST_CASE("pocket predicate") {
    Graph p4 = path(4);
    CHECK(is_pocket(p4, {0}, 2));
    // star centre exceeds the host-degree cap
    std::vector<std::pair<Vertex, Vertex>> star;
    for (int i = 1; i <= 10; ++i) star.push_back({0, i});
    Graph k1_10(11, star);
    CHECK_FALSE(is_pocket(k1_10, {0}, 3));
    CHECK_FALSE(is_pocket(p4, {0, 2}, 4));  // disconnected
    CHECK_THROWS_AS(is_pocket(p4, {}, 2), std::invalid_argument);
}

TEST_CASE("deep predicate") {
    Graph p10 = path(10);
    CHECK(is_deep(p10, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 9));
    CHECK_FALSE(is_deep(p10, {0, 1}, 3));
    CHECK_FALSE(is_deep(p10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 1));  // empty coboundary
}

TEST_CASE("verify_colouring") {
    Graph k2(2, {{0, 1}});
    ListAssignment l{2, {{0, 1}, {0, 1}}};
    Colouring good{{0, 1}};
    CHECK(verify_colouring(k2, good, &l).ok);
    Colouring clash{{0, 0}};
    auto v = verify_colouring(k2, clash);
    CHECK_FALSE(v.ok);
    CHECK(v.bad_edge == std::pair<Vertex, Vertex>{0, 1});
    Colouring off_list{{0, 2}};
    ListAssignment l3{3, {{0, 1}, {0, 1}}};
    auto v2 = verify_colouring(k2, off_list, &l3);
    CHECK_FALSE(v2.ok);
    CHECK(v2.bad_vertex == 1);
    Colouring partial{{0, -1}};
    CHECK_THROWS_AS(verify_colouring(k2, partial), std::invalid_argument);
}

TEST_CASE("verify_colouring agrees with an independent edge scan") {
    Rng rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = series_parallel_random(3 + static_cast<int>(rng.below(20)), rng.next());
        Colouring phi;
        for (int i = 0; i < g.vertex_count(); ++i)
            phi.colour.push_back(static_cast<int>(rng.below(3)));
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (phi.colour[u] == phi.colour[v]) proper = false;
        CHECK(verify_colouring(g, phi).ok == proper);
    }
}

TEST_CASE("graph json round trip") {
    Graph k2 = graph_from_json(R"({"n":2,"edges":[[0,1]]})");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0,0]]})"), std::runtime_error);
    CHECK_THROWS_AS(graph_from_json("not json"), std::runtime_error);

    Graph g = series_parallel_random(40, 5);
    std::string s = graph_to_json(g);
    CHECK(graph_to_json(graph_from_json(s)) == s);
}

TEST_CASE("lists and colouring json round trip") {
    Graph g = path(3);
    ListAssignment l = random_lists(g, 2, 4, 11);
    ListAssignment l2 = lists_from_json(lists_to_json(l), 3);
    CHECK(l2.universe == l.universe);
    CHECK(l2.lists == l.lists);
    Colouring phi{{2, 0, 1}};
    Colouring phi2 = colouring_from_json(colouring_to_json(phi), 3);
    CHECK(phi2.colour == phi.colour);
}
