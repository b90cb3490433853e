#pragma once

#include <string_view>
#include <vector>

#include "circhi/graph.hpp"

namespace circhi {

// Deterministically labeled named graphs. Labelings are part of the contract:
// file outputs and witnesses are stable across runs.

// Cycle 0-1-...-(n-1)-0, n >= 3.
UndirectedGraph cycle_graph(int n);

// Rim cycle C_{2k+1} on 0..2k plus hub 2k+1 adjacent to every rim vertex.
UndirectedGraph odd_wheel(int k);

// Outer cycle 0..4, spokes i-(i+5), inner vertices 5..9 joined at step 2.
UndirectedGraph petersen();

// Petersen with vertex 0 deleted, remaining vertices relabeled 0..8.
UndirectedGraph q_graph();

// Even cycle C_{8n} on 0..8n-1 plus the chords {2i, 2i+4n}, i = 0..2n-1.
UndirectedGraph g_family(int n);

// Odd cycle 0..2n on the first 2n+1 labels, apex u = 2n+1, and one extra
// vertex h_k = 2n+1+k joined to u and to cycle vertex k-1, k = 1..2n+1.
UndirectedGraph w_gadget(int n);

// Disjoint copies of h and parts[0..n-1] (n = |V(h)|), all part vertices
// joined to a new vertex x (the last label), and the vertices of parts[i]
// joined to vertex i of h.
UndirectedGraph compose_new(const UndirectedGraph& h, const std::vector<UndirectedGraph>& parts);

// Lookup by spec string: cycle:<n>, oddwheel:<k>, petersen, petersen-line,
// q, gn:<n>, w:<n>.
UndirectedGraph catalog(std::string_view spec);

}  // namespace circhi
