#pragma once

#include <tuple>
#include <unordered_map>
#include <vector>

#include "circhi/graph.hpp"
#include "circhi/rational.hpp"

namespace circhi {

using Arc = std::pair<int, int>;  // ordered (tail, head)

// Edge-weighted symmetric digraph: arc uv exists iff vu does, weights are
// nonnegative with a positive sum on every opposite pair.
class WeightedSymmetricDigraph {
  public:
    WeightedSymmetricDigraph() = default;
    WeightedSymmetricDigraph(int vertex_count, std::vector<std::tuple<int, int, Rational>> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Rational& weight(int arc_id) const { return weights_[arc_id]; }
    const Rational& weight(int u, int v) const;
    const std::vector<Rational>& weights() const { return weights_; }

    // Index into arcs() of (u,v), or -1.
    int arc_index(int u, int v) const;
    int reverse_arc(int arc_id) const { return reverse_[arc_id]; }
    const std::vector<int>& out_arcs(int u) const { return out_[u]; }
    const std::vector<int>& in_arcs(int u) const { return in_[u]; }

    UndirectedGraph underlying() const;
    bool is_connected() const { return underlying().is_connected(); }
    Rational total_weight() const;

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;  // sorted lexicographically
    std::vector<Rational> weights_;
    std::vector<int> reverse_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_map<long long, int> index_;
};

// Token counts on the arc set of a host digraph.
class Marking {
  public:
    Marking() = default;
    Marking(const WeightedSymmetricDigraph& host, std::vector<long long> tokens_by_arc);

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<long long>& tokens_by_arc() const { return tokens_; }
    long long tokens(int arc_id) const { return tokens_[arc_id]; }
    long long tokens(int u, int v) const;
    long long total() const;
    long long max_token() const;

    // Throws DomainMismatch unless this marking is defined on exactly the
    // arc set of d.
    void check_domain(const WeightedSymmetricDigraph& d) const;

    friend bool operator==(const Marking& a, const Marking& b) {
        return a.arcs_ == b.arcs_ && a.tokens_ == b.tokens_;
    }

  private:
    std::vector<Arc> arcs_;
    std::vector<long long> tokens_;
};

// Replaces each edge {u,v} by arcs uv and vu, both of the given weight.
WeightedSymmetricDigraph to_symmetric_digraph(const UndirectedGraph& g, const Rational& weight);

// Unit-weight marking with one token on u->v exactly when the orientation
// directs {u,v} that way; always good, and the fireable vertices are the sinks.
Marking marking_from_orientation(const AcyclicOrientation& w);

// Inverse of marking_from_orientation for good unit markings.
AcyclicOrientation orientation_from_marking(const WeightedSymmetricDigraph& d, const Marking& t);

// One token per opposite pair and no dicycle of token-free arcs.
bool is_good_marking(const WeightedSymmetricDigraph& d, const Marking& t);

}  // namespace circhi
