#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "circhi/error.hpp"

namespace circhi {

using Edge = std::pair<int, int>;  // stored with first < second

// Simple undirected graph on vertices 0..n-1, immutable after construction.
class UndirectedGraph {
  public:
    UndirectedGraph() = default;
    UndirectedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const;
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }
    bool has_edge(int u, int v) const;
    // Index into edges() of {u,v}, or -1.
    int edge_index(int u, int v) const;

    bool is_connected() const;
    // BFS distances from u; -1 for unreachable vertices.
    std::vector<int> distances_from(int u) const;
    // Subgraph induced by the given vertices, relabeled 0.. in sorted order.
    UndirectedGraph induced(std::vector<int> vertices) const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int u) const;

    int n_ = 0;
    std::vector<Edge> edges_;             // sorted lexicographically
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

// Orientation of every edge of a host graph; directed cycles are rejected at
// construction.
class AcyclicOrientation {
  public:
    // forward[i] == true directs edges()[i] = {u,v} as u -> v (u < v).
    AcyclicOrientation(UndirectedGraph host, std::vector<bool> forward);
    // Builds from explicit arcs; every host edge must appear exactly once.
    static AcyclicOrientation from_arcs(UndirectedGraph host, const std::vector<Edge>& arcs);

    const UndirectedGraph& host() const { return host_; }
    const std::vector<bool>& forward() const { return forward_; }
    bool directs(int u, int v) const;  // true iff arc u -> v exists
    Edge arc(int edge_index) const;    // (tail, head)
    std::vector<Edge> arcs() const;

    int out_degree(int u) const { return out_deg_[u]; }
    int in_degree(int u) const { return in_deg_[u]; }
    std::vector<int> sinks() const;
    std::vector<int> sources() const;

    friend bool operator==(const AcyclicOrientation& a, const AcyclicOrientation& b) {
        return a.host_ == b.host_ && a.forward_ == b.forward_;
    }

  private:
    UndirectedGraph host_;
    std::vector<bool> forward_;
    std::vector<int> out_deg_, in_deg_;
};

// Line graph: one vertex per edge of g (in edge order), adjacent iff the
// edges share an endpoint.
UndirectedGraph line_graph(const UndirectedGraph& g);

// Vertices at distance exactly k from u.
std::vector<int> neighborhood(const UndirectedGraph& g, int u, int k);
// Open neighborhood of a set: adjacent to S but outside S.
std::vector<int> neighborhood_of_set(const UndirectedGraph& g, const std::vector<int>& s);

// Visits every acyclic orientation (deterministic DFS over edge directions);
// stops early when the visitor returns false. Throws CapExceeded after `cap`
// orientations (0 means the default of 4 million).
void for_each_acyclic_orientation(const UndirectedGraph& g,
                                  const std::function<bool(const AcyclicOrientation&)>& visit,
                                  long long cap = 0);
std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const UndirectedGraph& g,
                                                               long long cap = 0);

// Orientation induced by a seeded random vertex order (mt19937_64).
AcyclicOrientation random_acyclic_orientation(const UndirectedGraph& g, std::uint64_t seed);

}  // namespace circhi
