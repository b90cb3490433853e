#include "circhi/catalog.hpp"

#include <charconv>
#include <string>

namespace circhi {

UndirectedGraph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph odd_wheel(int k) {
    if (k < 1) throw DomainError("odd wheel parameter must be positive");
    int rim = 2 * k + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < rim; ++i) edges.emplace_back(i, (i + 1) % rim);
    for (int i = 0; i < rim; ++i) edges.emplace_back(i, rim);
    return UndirectedGraph(rim + 1, std::move(edges));
}

UndirectedGraph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return UndirectedGraph(10, std::move(edges));
}

UndirectedGraph q_graph() {
    UndirectedGraph p = petersen();
    std::vector<Edge> edges;
    for (auto [u, v] : p.edges())
        if (u != 0 && v != 0) edges.emplace_back(u - 1, v - 1);
    return UndirectedGraph(9, std::move(edges));
}

UndirectedGraph g_family(int n) {
    if (n < 1) throw DomainError("g_family parameter must be positive");
    int size = 8 * n;
    std::vector<Edge> edges;
    for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
    for (int i = 0; i < 2 * n; ++i) edges.emplace_back(2 * i, 2 * i + 4 * n);
    return UndirectedGraph(size, std::move(edges));
}

UndirectedGraph w_gadget(int n) {
    if (n < 1) throw DomainError("w_gadget parameter must be positive");
    int cycle = 2 * n + 1;
    int u = cycle;
    std::vector<Edge> edges;
    for (int i = 0; i < cycle; ++i) edges.emplace_back(i, (i + 1) % cycle);
    for (int k = 1; k <= cycle; ++k) {
        int h = cycle + k;  // h_k
        edges.emplace_back(h, u);
        edges.emplace_back(h, k - 1);
    }
    return UndirectedGraph(2 * cycle + 1, std::move(edges));
}

UndirectedGraph compose_new(const UndirectedGraph& h, const std::vector<UndirectedGraph>& parts) {
    if (static_cast<int>(parts.size()) != h.vertex_count())
        throw DomainError("compose_new needs one part graph per vertex of h");
    int total = h.vertex_count();
    std::vector<int> offset(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        offset[i] = total;
        total += parts[i].vertex_count();
    }
    int x = total++;
    std::vector<Edge> edges = h.edges();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto [a, b] : parts[i].edges()) edges.emplace_back(offset[i] + a, offset[i] + b);
        for (int a = 0; a < parts[i].vertex_count(); ++a) {
            edges.emplace_back(offset[i] + a, x);
            edges.emplace_back(offset[i] + a, static_cast<int>(i));
        }
    }
    return UndirectedGraph(total, std::move(edges));
}

namespace {

int parse_param(std::string_view spec, std::string_view name) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), value);
    if (ec != std::errc() || ptr != spec.data() + spec.size())
        throw ParseError("catalog entry '" + std::string(name) + "' needs an integer parameter");
    return value;
}

}  // namespace

UndirectedGraph catalog(std::string_view spec) {
    std::string_view name = spec;
    std::string_view param;
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        name = spec.substr(0, colon);
        param = spec.substr(colon + 1);
    }
    if (name == "cycle") return cycle_graph(parse_param(param, name));
    if (name == "oddwheel") return odd_wheel(parse_param(param, name));
    if (name == "gn") return g_family(parse_param(param, name));
    if (name == "w") return w_gadget(parse_param(param, name));
    if (!param.empty()) throw ParseError("catalog entry '" + std::string(name) + "' takes no parameter");
    if (name == "petersen") return petersen();
    if (name == "petersen-line") return line_graph(petersen());
    if (name == "q") return q_graph();
    throw ParseError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace circhi
