#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circhi/graph.hpp"
#include "circhi/rational.hpp"

namespace circhi {

// One machine-checked hypothesis: what was checked, whether it holds, and a
// concrete witness or counterexample.
struct HypothesisCheck {
    std::string property;
    bool holds = false;
    std::string witness;
};

struct BoundReport {
    std::string bound_name;
    bool applicable = false;
    std::vector<HypothesisCheck> hypotheses;
    std::optional<Rational> value;  // present iff applicable
};

// Exact chromatic number by branch and bound (greedy clique lower bound,
// greedy upper bound, vertices by descending degree). chi(empty) = 0.
int chromatic_number(const UndirectedGraph& g);

// A proper coloring with at most k colors, or nullopt.
std::optional<std::vector<int>> is_k_colorable(const UndirectedGraph& g, int k);

int independence_number(const UndirectedGraph& g);

// Every independent set of maximum size, sorted; capped by vertex count.
std::vector<std::vector<int>> all_maximum_independent_sets(const UndirectedGraph& g,
                                                           int vertex_cap = 24);

// Largest vertex-induced t-colorable subgraph, exact; capped by vertex count.
int alpha_t(const UndirectedGraph& g, int t, int vertex_cap = 20);

// chi_c >= 1 + max_u chi(N_1(u)).
BoundReport bound_d1(const UndirectedGraph& g);

// chi_c >= t |V| / alpha_t when every vertex has chi(N_1(u)) >= t - 1.
BoundReport bound_alphat(const UndirectedGraph& g, int t, int vertex_cap = 20);

// Builds the composition of h with the part graphs (one per vertex of h, all
// joined to a fresh apex and to their h-vertex); chi_c >= t + 2 when the
// parts are all t-chromatic and chi(h) >= 3.
std::pair<UndirectedGraph, BoundReport> bound_new(const UndirectedGraph& h,
                                                  const std::vector<UndirectedGraph>& parts);

// chi_c >= 3 when some vertex has chi(N_2(u)) >= 3.
BoundReport bound_d2(const UndirectedGraph& g);

// chi_c >= |V| / (alpha - 2/3) under P1..P4.
BoundReport bound_alpha2(const UndirectedGraph& g, int alpha_t_cap = 20);

// chi_c >= |V| / (alpha - (t-1)/t) under P1..P5.
BoundReport bound_alpha1_1(const UndirectedGraph& g, int t, int independent_sets_cap = 24);

struct BoundConfig {
    std::vector<int> t_values;    // empty: every t in 2..chi(G)
    int alpha_t_cap = 20;
    int independent_sets_cap = 24;
};

struct BestBounds {
    std::vector<BoundReport> reports;
    std::optional<Rational> best;  // largest applicable value
};

// Runs the trivial |V|/alpha bound plus every bound above that applies to a
// bare graph, in a fixed report order.
BestBounds best_lower_bound(const UndirectedGraph& g, const BoundConfig& config = {});

}  // namespace circhi
