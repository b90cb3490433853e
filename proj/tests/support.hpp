#pragma once

#include <random>
#include <vector>

#include "circhi/digraph.hpp"
#include "circhi/graph.hpp"

namespace circhi::testsupport {

// Every connected graph on exactly n labeled vertices (all edge subsets,
// filtered). Practical for n <= 5.
inline std::vector<UndirectedGraph> all_connected_graphs(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<UndirectedGraph> result;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        UndirectedGraph g(n, std::move(edges));
        if (g.is_connected()) result.push_back(std::move(g));
    }
    return result;
}

inline UndirectedGraph random_connected_graph(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        UndirectedGraph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
}

inline AcyclicOrientation random_orientation(std::mt19937_64& rng, const UndirectedGraph& g) {
    std::vector<int> rank(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rank[v] = v;
    std::shuffle(rank.begin(), rank.end(), rng);
    std::vector<bool> forward;
    forward.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) forward.push_back(rank[u] < rank[v]);
    return AcyclicOrientation(g, std::move(forward));
}

// Independent integer weights in 1..max_weight on every arc.
inline WeightedSymmetricDigraph random_weighted_digraph(std::mt19937_64& rng,
                                                        const UndirectedGraph& g,
                                                        int max_weight) {
    std::uniform_int_distribution<int> w(1, max_weight);
    std::vector<std::tuple<int, int, Rational>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v, Rational(w(rng)));
        arcs.emplace_back(v, u, Rational(w(rng)));
    }
    return WeightedSymmetricDigraph(g.vertex_count(), std::move(arcs));
}

// Good marking induced by a random acyclic orientation, on d's arc set.
inline Marking random_good_marking(std::mt19937_64& rng, const WeightedSymmetricDigraph& d) {
    AcyclicOrientation w = random_orientation(rng, d.underlying());
    std::vector<long long> tokens(d.arc_count(), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (w.directs(u, v)) tokens[i] = 1;
    }
    return Marking(d, std::move(tokens));
}

}  // namespace circhi::testsupport
