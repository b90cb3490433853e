#include "circhi/digraph.hpp"

#include <algorithm>
#include <string>

namespace circhi {

namespace {

long long arc_key(int n, int u, int v) {
    return static_cast<long long>(u) * n + v;
}

}  // namespace

WeightedSymmetricDigraph::WeightedSymmetricDigraph(
    int vertex_count, std::vector<std::tuple<int, int, Rational>> arc_list)
    : n_(vertex_count) {
    if (n_ < 0) throw DomainError("negative vertex count");
    std::sort(arc_list.begin(), arc_list.end(), [](const auto& a, const auto& b) {
        return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
    });
    arcs_.reserve(arc_list.size());
    weights_.reserve(arc_list.size());
    for (const auto& [u, v, w] : arc_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DomainError("arc endpoint out of range");
        if (u == v) throw DomainError("loops are not allowed");
        if (w < Rational(0)) throw DomainError("negative arc weight");
        if (!arcs_.empty() && arcs_.back() == Arc{u, v}) throw DomainError("duplicate arc");
        arcs_.emplace_back(u, v);
        weights_.push_back(w);
    }
    index_.reserve(arcs_.size() * 2);
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        index_[arc_key(n_, arcs_[i].first, arcs_[i].second)] = static_cast<int>(i);
    reverse_.assign(arcs_.size(), -1);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [u, v] = arcs_[i];
        int rev = arc_index(v, u);
        if (rev < 0) throw DomainError("arc without its reverse: symmetry violated");
        reverse_[i] = rev;
        if (weights_[i] + weights_[rev] <= Rational(0))
            throw DomainError("opposite arc pair with zero total weight");
        out_[u].push_back(static_cast<int>(i));
        in_[v].push_back(static_cast<int>(i));
    }
}

const Rational& WeightedSymmetricDigraph::weight(int u, int v) const {
    int i = arc_index(u, v);
    if (i < 0) throw DomainError("no such arc");
    return weights_[i];
}

int WeightedSymmetricDigraph::arc_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DomainError("vertex out of range");
    auto it = index_.find(arc_key(n_, u, v));
    return it == index_.end() ? -1 : it->second;
}

UndirectedGraph WeightedSymmetricDigraph::underlying() const {
    std::vector<Edge> edges;
    for (auto [u, v] : arcs_)
        if (u < v) edges.emplace_back(u, v);
    return UndirectedGraph(n_, std::move(edges));
}

Rational WeightedSymmetricDigraph::total_weight() const {
    Rational total(0);
    for (const auto& w : weights_) total += w;
    return total;
}

Marking::Marking(const WeightedSymmetricDigraph& host, std::vector<long long> tokens_by_arc)
    : arcs_(host.arcs()), tokens_(std::move(tokens_by_arc)) {
    if (tokens_.size() != arcs_.size()) throw DomainMismatch("token vector size mismatch");
    for (long long t : tokens_)
        if (t < 0) throw DomainError("negative token count");
}

long long Marking::tokens(int u, int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
    if (it == arcs_.end() || *it != Arc{u, v}) throw DomainMismatch("no such arc in marking");
    return tokens_[it - arcs_.begin()];
}

long long Marking::total() const {
    long long sum = 0;
    for (long long t : tokens_) sum += t;
    return sum;
}

long long Marking::max_token() const {
    long long best = 0;
    for (long long t : tokens_) best = std::max(best, t);
    return best;
}

void Marking::check_domain(const WeightedSymmetricDigraph& d) const {
    if (arcs_ != d.arcs()) throw DomainMismatch("marking not defined on this digraph's arc set");
}

WeightedSymmetricDigraph to_symmetric_digraph(const UndirectedGraph& g, const Rational& weight) {
    if (weight <= Rational(0)) throw DomainError("edge weight must be positive");
    std::vector<std::tuple<int, int, Rational>> arcs;
    arcs.reserve(g.edges().size() * 2);
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v, weight);
        arcs.emplace_back(v, u, weight);
    }
    return WeightedSymmetricDigraph(g.vertex_count(), std::move(arcs));
}

Marking marking_from_orientation(const AcyclicOrientation& w) {
    WeightedSymmetricDigraph d = to_symmetric_digraph(w.host(), Rational(1));
    std::vector<long long> tokens(d.arc_count(), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (w.directs(u, v)) tokens[i] = 1;
    }
    return Marking(d, std::move(tokens));
}

AcyclicOrientation orientation_from_marking(const WeightedSymmetricDigraph& d, const Marking& t) {
    if (!is_good_marking(d, t)) throw GoodnessViolation("marking is not good");
    UndirectedGraph host = d.underlying();
    std::vector<bool> forward;
    forward.reserve(host.edges().size());
    for (auto [u, v] : host.edges()) forward.push_back(t.tokens(u, v) == 1);
    return AcyclicOrientation(std::move(host), std::move(forward));
}

bool is_good_marking(const WeightedSymmetricDigraph& d, const Marking& t) {
    t.check_domain(d);
    for (int i = 0; i < d.arc_count(); ++i)
        if (t.tokens(i) + t.tokens(d.reverse_arc(i)) != 1) return false;
    // |C|_T > 0 for every dicycle iff the token-free arcs form a DAG.
    std::vector<std::vector<int>> out(d.vertex_count());
    std::vector<int> in_deg(d.vertex_count(), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        if (t.tokens(i) == 0) {
            auto [u, v] = d.arcs()[i];
            out[u].push_back(v);
            ++in_deg[v];
        }
    }
    std::vector<int> stack;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (in_deg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v])
            if (--in_deg[w] == 0) stack.push_back(w);
    }
    return seen == d.vertex_count();
}

}  // namespace circhi
