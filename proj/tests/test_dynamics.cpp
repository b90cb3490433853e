#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "circhi/bounds.hpp"
#include "circhi/catalog.hpp"
#include "circhi/dynamics.hpp"
#include "support.hpp"

using namespace circhi;
using namespace circhi::testsupport;

namespace {

UndirectedGraph k2() { return UndirectedGraph(2, {{0, 1}}); }
UndirectedGraph k3() { return UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("single token alternates on an edge") {
    WeightedSymmetricDigraph d = to_symmetric_digraph(k2(), 1);
    Marking t(d, {1, 0});  // token on 0->1 feeds vertex 1
    TokenGameState state = initial_token_state(d, t);
    std::vector<long long> weights(d.arc_count(), 1);

    TokenGameStep step = step_token_game(state, d, weights);
    CHECK(step.fired == std::vector<int>{1});  // h(1) = {v}
    step = step_token_game(step.next, d, weights);
    CHECK(step.fired == std::vector<int>{0});
    step = step_token_game(step.next, d, weights);
    CHECK(step.fired == std::vector<int>{1});

    SteadyState steady = run_to_steady_state(d, t);
    CHECK(steady.period == 2);
    CHECK(steady.multiplicity == 1);
    CHECK(steady.ratio() == Rational(2));
}

TEST_CASE("transitive triangle settles at ratio 3") {
    WeightedSymmetricDigraph d = to_symmetric_digraph(k3(), 1);
    Marking t = marking_from_orientation(
        AcyclicOrientation::from_arcs(k3(), {{0, 1}, {1, 2}, {0, 2}}));
    SteadyState steady = run_to_steady_state(d, t);
    CHECK(steady.ratio() == Rational(3));
    CHECK(steady.ratio() == max_cycle_ratio(d, t).ratio);
    // Vertices fire one at a time: 2, then 1, then 0.
    CHECK(steady.fired_history[0] == std::vector<int>{2});
    CHECK(steady.fired_history[1] == std::vector<int>{1});
    CHECK(steady.fired_history[2] == std::vector<int>{0});
}

TEST_CASE("balanced C5 orientation has period 5, multiplicity 2") {
    UndirectedGraph c5 = cycle_graph(5);
    WeightedSymmetricDigraph d = to_symmetric_digraph(c5, 1);
    Marking t = marking_from_orientation(
        AcyclicOrientation::from_arcs(c5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}}));
    SteadyState steady = run_to_steady_state(d, t);
    CHECK(steady.period == 5);
    CHECK(steady.multiplicity == 2);
    CHECK(steady.ratio() == Rational(5, 2));
}

TEST_CASE("pulses with no arrivals fire nothing") {
    // Weight-2 edge: the token spends a pulse in flight, so h(2) is empty.
    WeightedSymmetricDigraph d = to_symmetric_digraph(k2(), Rational(2));
    Marking t(d, {1, 0});
    TokenGameState state = initial_token_state(d, t);
    std::vector<long long> weights(d.arc_count(), 2);
    TokenGameStep step = step_token_game(state, d, weights);
    CHECK(step.fired == std::vector<int>{1});
    step = step_token_game(step.next, d, weights);
    CHECK(step.fired.empty());
    step = step_token_game(step.next, d, weights);
    CHECK(step.fired == std::vector<int>{0});

    SteadyState steady = run_to_steady_state(d, t);
    CHECK(steady.period == 4);
    CHECK(steady.multiplicity == 1);
    CHECK(steady.ratio() == Rational(4));
}

TEST_CASE("rational weights are cleared by their lcm") {
    WeightedSymmetricDigraph d =
        WeightedSymmetricDigraph(2, {{0, 1, Rational(3, 2)}, {1, 0, Rational(3, 2)}});
    Marking t(d, {1, 0});
    SteadyState steady = run_to_steady_state(d, t);
    CHECK(steady.weight_scale == 2);
    CHECK(steady.ratio() == Rational(3));  // the 2-cycle weighs 3, one token
    CHECK(steady.period_unscaled() == Rational(3));
}

TEST_CASE("bad markings and caps are loud") {
    WeightedSymmetricDigraph d = to_symmetric_digraph(k2(), 1);
    CHECK_THROWS_AS(run_to_steady_state(d, Marking(d, {1, 1})), GoodnessViolation);
    CHECK_THROWS_AS(run_to_steady_state(d, Marking(d, {1, 0}), 1), CapExceeded);

    UndirectedGraph disconnected(3, {{0, 1}});
    WeightedSymmetricDigraph dd = to_symmetric_digraph(disconnected, 1);
    CHECK_THROWS_AS(run_to_steady_state(dd, Marking(dd, {1, 0})), NotConnected);
}

TEST_CASE("token counts are conserved and stay safe") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        UndirectedGraph g = random_connected_graph(rng, 5);
        WeightedSymmetricDigraph d = random_weighted_digraph(rng, g, 3);
        Marking t = random_good_marking(rng, d);
        std::vector<long long> weights;
        for (int i = 0; i < d.arc_count(); ++i) weights.push_back(d.weight(i).num());
        TokenGameState state = initial_token_state(d, t);
        for (int pulse = 0; pulse < 50; ++pulse) {
            state = step_token_game(state, d, weights).next;
            for (int i = 0; i < d.arc_count(); ++i) {
                int rev = d.reverse_arc(i);
                if (rev < i) continue;
                long long together = state.available[i] + state.available[rev] +
                                     static_cast<long long>(state.in_flight[i].size()) +
                                     static_cast<long long>(state.in_flight[rev].size());
                REQUIRE(together == t.tokens(i) + t.tokens(rev));
                // Safety: counts never exceed 1 in the good unit-pair setting.
                REQUIRE(state.available[i] <= 1);
            }
        }
    }
}

TEST_CASE("sink reversal flips exactly the sink edges") {
    UndirectedGraph edge = k2();
    auto w = AcyclicOrientation::from_arcs(edge, {{0, 1}});
    auto next = sink_reversal_step(w);
    CHECK(next.directs(1, 0));

    auto tri = AcyclicOrientation::from_arcs(k3(), {{0, 1}, {1, 2}, {0, 2}});
    auto after = sink_reversal_step(tri);  // sink 2 reverses both incident edges
    CHECK(after.directs(0, 1));
    CHECK(after.directs(2, 1));
    CHECK(after.directs(2, 0));
}

TEST_CASE("sinks become sources and stay independent") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        UndirectedGraph g = random_connected_graph(rng, 6);
        AcyclicOrientation w = random_orientation(rng, g);
        for (int step = 0; step < 10; ++step) {
            auto sinks = w.sinks();
            for (std::size_t i = 0; i < sinks.size(); ++i)
                for (std::size_t j = i + 1; j < sinks.size(); ++j)
                    REQUIRE_FALSE(g.has_edge(sinks[i], sinks[j]));
            AcyclicOrientation next = sink_reversal_step(w);
            auto sources = next.sources();
            for (int s : sinks)
                REQUIRE(std::find(sources.begin(), sources.end(), s) != sources.end());
            w = next;
        }
    }
}

TEST_CASE("every C5 orientation has sink period 5") {
    UndirectedGraph c5 = cycle_graph(5);
    for (const auto& w : enumerate_acyclic_orientations(c5)) {
        SinkSequence seq = sink_sequence(w);
        CHECK(seq.period == 5);
    }
    // The (2,3)-balanced orientation: multiplicity 2, ratio 5/2.
    auto balanced = AcyclicOrientation::from_arcs(c5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}});
    SinkSequence seq = sink_sequence(balanced);
    CHECK(seq.multiplicity == 2);
    CHECK(seq.ratio() == Rational(5, 2));
    CHECK(seq.sink_pattern.size() == 5);

    auto single = sink_sequence(AcyclicOrientation::from_arcs(k2(), {{0, 1}}));
    CHECK(single.period == 2);
    CHECK(single.multiplicity == 1);
}

TEST_CASE("sink reversal is the unit-weight token game") {
    CHECK(unit_dynamics_equivalence(AcyclicOrientation::from_arcs(k2(), {{0, 1}})));
    for (const auto& w : enumerate_acyclic_orientations(cycle_graph(5)))
        CHECK(unit_dynamics_equivalence(w));
    UndirectedGraph p = petersen();
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
        CHECK(unit_dynamics_equivalence(random_acyclic_orientation(p, seed)));
}

TEST_CASE("steady-state ratio equals the max cycle ratio on random instances") {
    // >= 100 random instances over connected graphs with <= 7 vertices and
    // integer weights in 1..4, each with a random good marking.
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> size(2, 7);
    for (int trial = 0; trial < 110; ++trial) {
        UndirectedGraph g = random_connected_graph(rng, size(rng));
        WeightedSymmetricDigraph d = random_weighted_digraph(rng, g, 4);
        Marking t = random_good_marking(rng, d);
        REQUIRE(run_to_steady_state(d, t).ratio() == max_cycle_ratio(d, t).ratio);
    }
}

TEST_CASE("no <alpha, alpha> sub-pattern when alpha_2 < 2 alpha") {
    std::mt19937_64 rng(3);
    for (const UndirectedGraph& g : {q_graph(), g_family(1)}) {
        int alpha = independence_number(g);
        REQUIRE(alpha_t(g, 2) < 2 * alpha);
        for (int trial = 0; trial < 5; ++trial) {
            SinkSequence seq = sink_sequence(random_orientation(rng, g));
            int p = static_cast<int>(seq.sink_pattern.size());
            for (int i = 0; i < p; ++i) {
                int a = seq.sink_pattern[i];
                int b = seq.sink_pattern[(i + 1) % p];
                REQUIRE(a + b <= alpha_t(g, 2));
                REQUIRE_FALSE((a == alpha && b == alpha));
            }
        }
    }
}
