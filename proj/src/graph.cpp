#include "circhi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace circhi {

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw DomainError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("loops are not allowed");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("parallel edges are not allowed");
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void UndirectedGraph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw DomainError("vertex " + std::to_string(u) + " out of range");
}

const std::vector<int>& UndirectedGraph::neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
}

bool UndirectedGraph::has_edge(int u, int v) const {
    return edge_index(u, v) >= 0;
}

int UndirectedGraph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool UndirectedGraph::is_connected() const {
    if (n_ <= 1) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> UndirectedGraph::distances_from(int u) const {
    check_vertex(u);
    std::vector<int> dist(n_, -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : adj_[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

UndirectedGraph UndirectedGraph::induced(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> label(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        label[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : edges_)
        if (label[u] >= 0 && label[v] >= 0) edges.emplace_back(label[u], label[v]);
    return UndirectedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

namespace {

// Kahn's algorithm over the oriented edges.
bool orientation_is_acyclic(const UndirectedGraph& host, const std::vector<bool>& forward) {
    int n = host.vertex_count();
    std::vector<std::vector<int>> out(n);
    std::vector<int> in_deg(n, 0);
    for (std::size_t i = 0; i < host.edges().size(); ++i) {
        auto [u, v] = host.edges()[i];
        int tail = forward[i] ? u : v;
        int head = forward[i] ? v : u;
        out[tail].push_back(head);
        ++in_deg[head];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (in_deg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v])
            if (--in_deg[w] == 0) stack.push_back(w);
    }
    return seen == n;
}

}  // namespace

AcyclicOrientation::AcyclicOrientation(UndirectedGraph host, std::vector<bool> forward)
    : host_(std::move(host)), forward_(std::move(forward)) {
    if (forward_.size() != host_.edges().size())
        throw DomainError("orientation size does not match edge count");
    if (!orientation_is_acyclic(host_, forward_))
        throw NotAcyclic("orientation contains a directed cycle");
    out_deg_.assign(host_.vertex_count(), 0);
    in_deg_.assign(host_.vertex_count(), 0);
    for (std::size_t i = 0; i < forward_.size(); ++i) {
        auto [tail, head] = arc(static_cast<int>(i));
        ++out_deg_[tail];
        ++in_deg_[head];
    }
}

AcyclicOrientation AcyclicOrientation::from_arcs(UndirectedGraph host,
                                                 const std::vector<Edge>& arcs) {
    std::vector<int> assigned(host.edges().size(), 0);
    std::vector<bool> forward(host.edges().size(), false);
    for (auto [tail, head] : arcs) {
        int e = host.edge_index(tail, head);
        if (e < 0) throw DomainError("arc does not correspond to a host edge");
        if (assigned[e]) throw DomainError("edge oriented twice");
        assigned[e] = 1;
        forward[e] = (tail < head);
    }
    for (std::size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i]) throw DomainError("edge left unoriented");
    return AcyclicOrientation(std::move(host), std::move(forward));
}

bool AcyclicOrientation::directs(int u, int v) const {
    int e = host_.edge_index(u, v);
    if (e < 0) return false;
    return arc(e) == Edge{u, v};
}

Edge AcyclicOrientation::arc(int edge_index) const {
    auto [u, v] = host_.edges()[edge_index];
    return forward_[edge_index] ? Edge{u, v} : Edge{v, u};
}

std::vector<Edge> AcyclicOrientation::arcs() const {
    std::vector<Edge> result;
    result.reserve(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) result.push_back(arc(static_cast<int>(i)));
    return result;
}

std::vector<int> AcyclicOrientation::sinks() const {
    std::vector<int> result;
    for (int v = 0; v < host_.vertex_count(); ++v)
        if (out_deg_[v] == 0) result.push_back(v);
    return result;
}

std::vector<int> AcyclicOrientation::sources() const {
    std::vector<int> result;
    for (int v = 0; v < host_.vertex_count(); ++v)
        if (in_deg_[v] == 0) result.push_back(v);
    return result;
}

UndirectedGraph line_graph(const UndirectedGraph& g) {
    const auto& edges = g.edges();
    std::vector<Edge> result;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                result.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return UndirectedGraph(static_cast<int>(edges.size()), std::move(result));
}

std::vector<int> neighborhood(const UndirectedGraph& g, int u, int k) {
    auto dist = g.distances_from(u);
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] == k) result.push_back(v);
    return result;
}

std::vector<int> neighborhood_of_set(const UndirectedGraph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw DomainError("set vertex out of range");
        in_s[v] = 1;
    }
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v]) continue;
        for (int w : g.neighbors(v)) {
            if (in_s[w]) {
                result.push_back(v);
                break;
            }
        }
    }
    return result;
}

namespace {

constexpr long long kDefaultOrientationCap = 4'000'000;

// DFS over edge directions; a partial assignment is extended only while the
// oriented arcs stay acyclic, so every leaf is an acyclic orientation.
struct OrientationEnumerator {
    const UndirectedGraph& g;
    const std::function<bool(const AcyclicOrientation&)>& visit;
    long long cap;
    long long count = 0;
    bool stopped = false;
    std::vector<bool> forward;
    std::vector<std::vector<int>> out;  // adjacency of the oriented prefix

    bool creates_cycle(int tail, int head) const {
        // Is tail reachable from head via already-oriented arcs?
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{head};
        seen[head] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == tail) return true;
            for (int y : out[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    void recurse(std::size_t edge) {
        if (stopped) return;
        if (edge == g.edges().size()) {
            if (++count > cap) throw CapExceeded("orientation cap exceeded");
            if (!visit(AcyclicOrientation(g, forward))) stopped = true;
            return;
        }
        auto [u, v] = g.edges()[edge];
        for (bool dir : {true, false}) {
            int tail = dir ? u : v;
            int head = dir ? v : u;
            if (creates_cycle(tail, head)) continue;
            forward[edge] = dir;
            out[tail].push_back(head);
            recurse(edge + 1);
            out[tail].pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_acyclic_orientation(const UndirectedGraph& g,
                                  const std::function<bool(const AcyclicOrientation&)>& visit,
                                  long long cap) {
    if (cap <= 0) cap = kDefaultOrientationCap;
    OrientationEnumerator e{g, visit, cap};
    e.forward.assign(g.edges().size(), false);
    e.out.assign(g.vertex_count(), {});
    e.recurse(0);
}

std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const UndirectedGraph& g,
                                                               long long cap) {
    std::vector<AcyclicOrientation> result;
    for_each_acyclic_orientation(
        g,
        [&](const AcyclicOrientation& w) {
            result.push_back(w);
            return true;
        },
        cap);
    return result;
}

AcyclicOrientation random_acyclic_orientation(const UndirectedGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> rank(g.vertex_count());
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    std::vector<bool> forward;
    forward.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) forward.push_back(rank[u] < rank[v]);
    return AcyclicOrientation(g, std::move(forward));
}

}  // namespace circhi
