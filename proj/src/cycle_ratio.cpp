#include "circhi/cycle_ratio.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace circhi {

namespace {

void check_weight_vector(const WeightedSymmetricDigraph& d, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != d.arc_count())
        throw DomainMismatch("arc weight vector size mismatch");
}

// One relaxation sweep of phi(v) = max(phi(v), phi(u) + w_uv); returns
// whether anything changed.
bool relax_once(const WeightedSymmetricDigraph& d, const std::vector<Rational>& w,
                std::vector<Rational>& phi) {
    bool changed = false;
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        Rational candidate = phi[u] + w[i];
        if (candidate > phi[v]) {
            phi[v] = candidate;
            changed = true;
        }
    }
    return changed;
}

}  // namespace

bool has_positive_cycle(const WeightedSymmetricDigraph& d, const std::vector<Rational>& arc_weight) {
    check_weight_vector(d, arc_weight);
    std::vector<Rational> phi(d.vertex_count(), Rational(0));
    // Starting from 0 everywhere, only a positive cycle can sustain growth
    // beyond n-1 sweeps.
    for (int pass = 0; pass < d.vertex_count(); ++pass)
        if (!relax_once(d, arc_weight, phi)) return false;
    return relax_once(d, arc_weight, phi);
}

Potentials longest_walk_potentials(const WeightedSymmetricDigraph& d,
                                   const std::vector<Rational>& arc_weight) {
    check_weight_vector(d, arc_weight);
    std::vector<Rational> phi(d.vertex_count(), Rational(0));
    for (int pass = 0; pass < d.vertex_count(); ++pass)
        if (!relax_once(d, arc_weight, phi)) return Potentials{std::move(phi)};
    if (relax_once(d, arc_weight, phi))
        throw PositiveCycle("longest walks unbounded: positive dicycle present");
    return Potentials{std::move(phi)};
}

std::optional<std::vector<int>> lexicographically_smallest_dicycle(int vertex_count,
                                                                   const std::vector<Arc>& arcs) {
    std::vector<std::vector<int>> out(vertex_count);
    for (auto [u, v] : arcs) out[u].push_back(v);
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());

    // Tarjan SCCs: a vertex lies on a dicycle iff its component is nontrivial.
    std::vector<int> comp(vertex_count, -1), low(vertex_count), order(vertex_count, -1), stack;
    std::vector<char> on_stack(vertex_count, 0);
    int counter = 0, comp_count = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        order[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : out[v]) {
            if (order[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], order[w]);
            }
        }
        if (low[v] == order[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    };
    for (int v = 0; v < vertex_count; ++v)
        if (order[v] < 0) strongconnect(v);

    std::vector<int> comp_size(comp_count, 0);
    for (int v = 0; v < vertex_count; ++v) ++comp_size[comp[v]];

    int start = -1;
    for (int v = 0; v < vertex_count; ++v) {
        if (comp_size[comp[v]] >= 2) {
            start = v;
            break;
        }
    }
    if (start < 0) return std::nullopt;

    // Greedy extension with a feasibility check: append the smallest successor
    // from which the start is still reachable while avoiding the path so far.
    // Closing back to start is always preferred (a prefix beats any extension).
    std::vector<char> visited(vertex_count, 0);
    auto reaches_start = [&](int from) {
        std::vector<char> seen(vertex_count, 0);
        std::vector<int> work{from};
        seen[from] = 1;
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            if (x == start) return true;
            for (int y : out[x]) {
                if (!seen[y] && (!visited[y] || y == start) && comp[y] == comp[start]) {
                    seen[y] = 1;
                    work.push_back(y);
                }
            }
        }
        return false;
    };

    std::vector<int> path{start};
    visited[start] = 1;
    while (true) {
        int u = path.back();
        bool extended = false;
        for (int w : out[u]) {
            if (comp[w] != comp[start]) continue;
            if (w == start) {
                if (path.size() >= 2) return path;
                continue;
            }
            if (visited[w]) continue;
            visited[w] = 1;
            if (reaches_start(w)) {
                path.push_back(w);
                extended = true;
                break;
            }
            visited[w] = 0;
        }
        if (!extended) throw Error("internal error: dicycle search dead-ended");
    }
}

namespace {

// Canonical cycles with minimum vertex = s, explored with ascending
// neighbors, which yields lexicographic output order for free.
void collect_cycles_from(const WeightedSymmetricDigraph& d, int s, std::vector<int>& path,
                         std::vector<char>& used, std::vector<std::vector<int>>& result) {
    int u = path.back();
    for (int arc_id : d.out_arcs(u)) {
        int w = d.arcs()[arc_id].second;
        if (w == s && path.size() >= 2) result.push_back(path);
        if (w <= s || used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        collect_cycles_from(d, s, path, used, result);
        path.pop_back();
        used[w] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_dicycles(const WeightedSymmetricDigraph& d, int vertex_cap) {
    if (d.vertex_count() > vertex_cap)
        throw CapExceeded("dicycle enumeration capped at " + std::to_string(vertex_cap) +
                          " vertices");
    std::vector<std::vector<int>> result;
    std::vector<char> used(d.vertex_count(), 0);
    for (int s = 0; s < d.vertex_count(); ++s) {
        std::vector<int> path{s};
        used[s] = 1;
        collect_cycles_from(d, s, path, used, result);
        used[s] = 0;
    }
    return result;
}

namespace {

// Least r >= 0 with pred(r) true. pred must be monotone (false below some
// rational r*, true from r* on) and r* must have denominator <= den_cap.
// Stern-Brocot descent: (a/b, c/d) brackets r* with bc - ad = 1, so every
// fraction strictly between them has denominator >= b + d. Runs toward either
// end are accelerated by doubling + binary search.
Rational least_true(const std::function<bool(const Rational&)>& pred, long long den_cap) {
    if (pred(Rational(0))) return Rational(0);
    long long a = 0, b = 1, c = 1, d = 0;
    auto mediant = [&](long long k) {  // (a + k c) / (b + k d)
        return Rational(detail::checked_add(a, detail::checked_mul(k, c)),
                        detail::checked_add(b, detail::checked_mul(k, d)));
    };
    auto mediant_hi = [&](long long k) {  // (c + k a) / (d + k b)
        return Rational(detail::checked_add(c, detail::checked_mul(k, a)),
                        detail::checked_add(d, detail::checked_mul(k, b)));
    };
    while (true) {
        if (d != 0 && b + d > den_cap) return Rational(c, d);
        if (!pred(mediant(1))) {
            // Walk toward c/d: find the largest k with pred(mediant(k)) false.
            long long k_cap = d == 0 ? 0 : (den_cap - b) / d + 1;  // first k past the cap
            long long lo = 1, hi = 2;
            while ((k_cap == 0 || hi < k_cap) && !pred(mediant(hi))) {
                lo = hi;
                hi *= 2;
            }
            if (k_cap != 0 && hi >= k_cap) {
                if (!pred(mediant(k_cap))) return Rational(c, d);
                hi = k_cap;
            }
            while (lo + 1 < hi) {
                long long mid = lo + (hi - lo) / 2;
                (pred(mediant(mid)) ? hi : lo) = mid;
            }
            a = detail::checked_add(a, detail::checked_mul(lo, c));
            b = detail::checked_add(b, detail::checked_mul(lo, d));
        } else {
            // Walk toward a/b: find the largest k with pred(mediant_hi(k)) true.
            long long lo = 1, hi = 2;
            while (pred(mediant_hi(hi))) {
                lo = hi;
                hi *= 2;
            }
            while (lo + 1 < hi) {
                long long mid = lo + (hi - lo) / 2;
                (pred(mediant_hi(mid)) ? lo : hi) = mid;
            }
            c = detail::checked_add(c, detail::checked_mul(lo, a));
            d = detail::checked_add(d, detail::checked_mul(lo, b));
        }
    }
}

}  // namespace

CycleRatioResult max_cycle_ratio(const WeightedSymmetricDigraph& d, const Marking& t) {
    t.check_domain(d);
    if (d.arc_count() == 0) throw DomainError("digraph has no dicycles");
    if (!d.is_connected()) throw NotConnected("cycle ratio requires a connected digraph");
    {
        // A token-free dicycle makes the ratio unbounded.
        std::vector<Arc> zero_arcs;
        for (int i = 0; i < d.arc_count(); ++i)
            if (t.tokens(i) == 0) zero_arcs.push_back(d.arcs()[i]);
        if (lexicographically_smallest_dicycle(d.vertex_count(), zero_arcs))
            throw RatioUnbounded("dicycle with zero token count");
    }

    // Clear denominators so the answer is P / Q with integer P and
    // Q <= n * max_token (a simple cycle has at most n arcs).
    long long scale = 1;
    for (int i = 0; i < d.arc_count(); ++i) scale = detail::checked_lcm(scale, d.weight(i).den());
    long long den_cap =
        detail::checked_mul(static_cast<long long>(d.vertex_count()), std::max(1LL, t.max_token()));

    auto weights_at = [&](const Rational& r) {
        std::vector<Rational> w;
        w.reserve(d.arc_count());
        for (int i = 0; i < d.arc_count(); ++i)
            w.push_back(d.weight(i) * Rational(scale) - r * Rational(t.tokens(i)));
        return w;
    };
    auto no_positive_cycle = [&](const Rational& r) { return !has_positive_cycle(d, weights_at(r)); };

    Rational scaled_ratio = least_true(no_positive_cycle, den_cap);

    // At the optimum the maximizing cycles are exactly the dicycles of the
    // subdigraph of arcs tight under the longest-walk potentials.
    Potentials phi = longest_walk_potentials(d, weights_at(scaled_ratio));
    std::vector<Rational> w = weights_at(scaled_ratio);
    std::vector<Arc> tight;
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (phi.value[u] + w[i] == phi.value[v]) tight.push_back(d.arcs()[i]);
    }
    auto witness = lexicographically_smallest_dicycle(d.vertex_count(), tight);
    if (!witness) throw Error("internal error: no tight cycle at the optimal ratio");
    return CycleRatioResult{scaled_ratio / Rational(scale), std::move(*witness)};
}

}  // namespace circhi
