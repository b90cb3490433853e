#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "circhi/catalog.hpp"
#include "circhi/digraph.hpp"
#include "circhi/graph.hpp"
#include "support.hpp"

using namespace circhi;
using circhi::testsupport::all_connected_graphs;

TEST_CASE("simple graph invariants are enforced") {
    CHECK_THROWS_AS(UndirectedGraph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(UndirectedGraph(3, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(UndirectedGraph(3, {{0, 3}}), DomainError);
    UndirectedGraph g(4, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.is_connected());
    CHECK(g.induced({1, 2, 3}).edge_count() == 1);
}

TEST_CASE("catalog graphs have the documented shapes") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), DomainError);

    UndirectedGraph wheel = odd_wheel(2);
    CHECK(wheel.vertex_count() == 6);
    CHECK(wheel.degree(5) == 5);  // hub

    UndirectedGraph p = petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(p.distances_from(0)[7] == 2);

    UndirectedGraph q = q_graph();
    CHECK(q.vertex_count() == 9);
    CHECK(q.edge_count() == 12);

    UndirectedGraph g1 = g_family(1);
    CHECK(g1.vertex_count() == 8);
    CHECK(g1.edge_count() == 10);
    CHECK(g1.has_edge(0, 4));
    CHECK(g1.has_edge(2, 6));
    CHECK_FALSE(g1.has_edge(1, 5));

    UndirectedGraph w = w_gadget(2);
    CHECK(w.vertex_count() == 11);  // C5, u, h_1..h_5
    CHECK(w.degree(5) == 5);        // u sees every h_k
    CHECK(w.has_edge(6, 0));        // h_1 - v_1
    CHECK_FALSE(w.has_edge(5, 0));  // u is not on the cycle

    CHECK_THROWS_AS(g_family(0), DomainError);
    CHECK_THROWS_AS(catalog("nonesuch"), ParseError);
    CHECK(catalog("gn:2").vertex_count() == 16);
    CHECK(catalog("petersen-line").vertex_count() == 15);
}

TEST_CASE("g_family sizes follow the construction") {
    for (int n = 1; n <= 3; ++n) {
        UndirectedGraph g = g_family(n);
        CHECK(g.vertex_count() == 8 * n);
        CHECK(g.edge_count() == 8 * n + 2 * n);
    }
}

TEST_CASE("compose_new joins parts to the apex and their host vertex") {
    UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    UndirectedGraph k1(1, {});
    UndirectedGraph g = compose_new(k3, {k1, k1, k1});
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 9);
    int apex = 6;
    CHECK(g.degree(apex) == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(g.has_edge(3 + i, apex));
        CHECK(g.has_edge(3 + i, i));
    }
    CHECK_THROWS_AS(compose_new(k3, {k1, k1}), DomainError);
}

TEST_CASE("line graph basics") {
    UndirectedGraph p3(3, {{0, 1}, {1, 2}});
    CHECK(line_graph(p3) == UndirectedGraph(2, {{0, 1}}));

    UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(line_graph(k3) == UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}));

    UndirectedGraph pl = line_graph(petersen());
    CHECK(pl.vertex_count() == 15);
    CHECK(pl.edge_count() == 30);
    for (int v = 0; v < 15; ++v) CHECK(pl.degree(v) == 4);
}

TEST_CASE("neighborhoods are exact BFS level sets") {
    UndirectedGraph wheel = odd_wheel(2);
    CHECK(neighborhood(wheel, 5, 1) == std::vector<int>{0, 1, 2, 3, 4});

    CHECK(neighborhood(petersen(), 0, 2).size() == 6);

    UndirectedGraph p3(3, {{0, 1}, {1, 2}});
    auto n1 = neighborhood_of_set(p3, {0, 1});
    CHECK(n1 == std::vector<int>{2});
    CHECK_THROWS_AS(neighborhood(p3, 7, 1), DomainError);
}

TEST_CASE("to_symmetric_digraph doubles edges uniformly") {
    UndirectedGraph k2(2, {{0, 1}});
    WeightedSymmetricDigraph d = to_symmetric_digraph(k2, Rational(1));
    CHECK(d.arc_count() == 2);
    CHECK(d.weight(0, 1) == Rational(1));
    CHECK(d.weight(1, 0) == Rational(1));

    WeightedSymmetricDigraph c5 = to_symmetric_digraph(cycle_graph(5), Rational(3, 2));
    CHECK(c5.arc_count() == 10);
    for (int i = 0; i < c5.arc_count(); ++i) CHECK(c5.weight(i) == Rational(3, 2));

    CHECK_THROWS_AS(to_symmetric_digraph(k2, Rational(0)), DomainError);
}

TEST_CASE("symmetry and weight invariants of digraphs") {
    CHECK_THROWS_AS(WeightedSymmetricDigraph(2, {{0, 1, Rational(1)}}), DomainError);
    CHECK_THROWS_AS(
        WeightedSymmetricDigraph(2, {{0, 1, Rational(0)}, {1, 0, Rational(0)}}), DomainError);
    CHECK_THROWS_AS(
        WeightedSymmetricDigraph(2, {{0, 1, Rational(-1)}, {1, 0, Rational(2)}}), DomainError);
    WeightedSymmetricDigraph ok(2, {{0, 1, Rational(0)}, {1, 0, Rational(2)}});
    CHECK(ok.total_weight() == Rational(2));
}

TEST_CASE("orientations reject directed cycles") {
    UndirectedGraph c5 = cycle_graph(5);
    CHECK_THROWS_AS(
        AcyclicOrientation::from_arcs(c5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), NotAcyclic);
    auto w = AcyclicOrientation::from_arcs(c5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}});
    CHECK(w.sinks() == std::vector<int>{1, 3});
    CHECK(w.sources() == std::vector<int>{2, 4});
    CHECK(w.directs(0, 1));
    CHECK_FALSE(w.directs(1, 0));
}

TEST_CASE("marking_from_orientation transcribes arc directions") {
    UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto w = AcyclicOrientation::from_arcs(k3, {{0, 1}, {1, 2}, {0, 2}});
    Marking t = marking_from_orientation(w);
    CHECK(t.tokens(0, 1) == 1);
    CHECK(t.tokens(1, 2) == 1);
    CHECK(t.tokens(0, 2) == 1);
    CHECK(t.tokens(1, 0) == 0);
    CHECK(t.tokens(2, 1) == 0);
    CHECK(t.tokens(2, 0) == 0);

    // A vertex holds a token on every in-arc exactly when it is a sink.
    WeightedSymmetricDigraph d = to_symmetric_digraph(k3, 1);
    for (int v = 0; v < 3; ++v) {
        bool fireable = true;
        for (int arc : d.in_arcs(v)) fireable = fireable && t.tokens(arc) > 0;
        CHECK(fireable == (w.out_degree(v) == 0));
    }
}

TEST_CASE("is_good_marking checks both conditions") {
    UndirectedGraph k2(2, {{0, 1}});
    WeightedSymmetricDigraph d = to_symmetric_digraph(k2, Rational(1));
    CHECK(is_good_marking(d, Marking(d, {1, 0})));
    CHECK_FALSE(is_good_marking(d, Marking(d, {1, 1})));

    UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    WeightedSymmetricDigraph t3 = to_symmetric_digraph(k3, Rational(1));
    // Cyclic token-free arcs 0->1->2->0: tokens sit on the reverse arcs.
    std::vector<long long> tokens(t3.arc_count(), 0);
    tokens[t3.arc_index(1, 0)] = 1;
    tokens[t3.arc_index(2, 1)] = 1;
    tokens[t3.arc_index(0, 2)] = 1;
    CHECK_FALSE(is_good_marking(t3, Marking(t3, tokens)));

    WeightedSymmetricDigraph other = to_symmetric_digraph(cycle_graph(3), Rational(1));
    CHECK_THROWS_AS(is_good_marking(d, Marking(other, {1, 0, 1, 0, 1, 0})), DomainMismatch);
}

TEST_CASE("every orientation induces a good marking, bijectively") {
    // Exhaustive over all connected graphs with up to 5 vertices.
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : all_connected_graphs(n)) {
            WeightedSymmetricDigraph d = to_symmetric_digraph(g, Rational(1));
            std::set<std::vector<long long>> markings;
            long long count = 0;
            for_each_acyclic_orientation(g, [&](const AcyclicOrientation& w) {
                Marking t = marking_from_orientation(w);
                REQUIRE(is_good_marking(d, t));
                REQUIRE(orientation_from_marking(d, t) == w);
                markings.insert(t.tokens_by_arc());
                ++count;
                return true;
            });
            // Injective, and every good unit marking is hit: a good marking's
            // token-1 arcs form an acyclic orientation by definition.
            CHECK(static_cast<long long>(markings.size()) == count);
        }
    }
}

TEST_CASE("orientation enumeration is exhaustive and capped") {
    CHECK(enumerate_acyclic_orientations(cycle_graph(5)).size() == 30);
    UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(enumerate_acyclic_orientations(k3).size() == 6);
    CHECK_THROWS_AS(enumerate_acyclic_orientations(cycle_graph(5), 7), CapExceeded);
}

TEST_CASE("random orientations are deterministic per seed") {
    UndirectedGraph p = petersen();
    CHECK(random_acyclic_orientation(p, 42) == random_acyclic_orientation(p, 42));
}
