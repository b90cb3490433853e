#pragma once

#include <optional>
#include <vector>

#include "circhi/digraph.hpp"

namespace circhi {

struct CycleRatioResult {
    Rational ratio;
    std::vector<int> witness_cycle;  // simple dicycle achieving the ratio
};

// Longest-walk values phi(u) >= 0 with phi(v) >= phi(u) + w_uv on every arc.
struct Potentials {
    std::vector<Rational> value;
};

// True iff some dicycle has strictly positive total weight under arc_weight
// (indexed like d.arcs()). Longest-path relaxation with cycle detection.
bool has_positive_cycle(const WeightedSymmetricDigraph& d, const std::vector<Rational>& arc_weight);

// Maximum weight of a directed walk ending at each vertex, the empty walk
// (weight 0) included. Throws PositiveCycle when unbounded.
Potentials longest_walk_potentials(const WeightedSymmetricDigraph& d,
                                   const std::vector<Rational>& arc_weight);

// Exact max over dicycles of |C|_c / |C|_T, with a witness cycle (ties broken
// by lexicographically smallest vertex sequence). Requires every dicycle to
// carry a token (throws RatioUnbounded otherwise) and a connected digraph.
CycleRatioResult max_cycle_ratio(const WeightedSymmetricDigraph& d, const Marking& t);

// All simple dicycles, each once, as canonical sequences (starting at their
// smallest vertex) in lexicographic order. Brute-force oracle; refuses
// digraphs larger than vertex_cap (default 12).
std::vector<std::vector<int>> enumerate_dicycles(const WeightedSymmetricDigraph& d,
                                                 int vertex_cap = 12);

// Smallest canonical simple dicycle of an arbitrary arc set, or nullopt if
// the digraph is acyclic.
std::optional<std::vector<int>> lexicographically_smallest_dicycle(int vertex_count,
                                                                   const std::vector<Arc>& arcs);

}  // namespace circhi
