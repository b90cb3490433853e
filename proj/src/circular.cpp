#include "circhi/circular.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "circhi/bounds.hpp"
#include "circhi/dynamics.hpp"

namespace circhi {

CircularColoring::CircularColoring(Rational perimeter, std::vector<Rational> points)
    : perimeter_(std::move(perimeter)), points_(std::move(points)) {
    if (perimeter_ <= Rational(0)) throw DomainError("perimeter must be positive");
    for (const auto& x : points_)
        if (x < Rational(0) || x >= perimeter_)
            throw DomainError("coloring point outside [0, perimeter)");
}

KdColoring::KdColoring(long long k, long long d, std::vector<long long> colors)
    : k_(k), d_(d), colors_(std::move(colors)) {
    if (d_ < 1 || k_ < 2 * d_) throw DomainError("need k >= 2d >= 2");
    for (long long c : colors_)
        if (c < 0 || c >= k_) throw DomainError("color out of range");
}

Rational circ_dist(const Rational& x, const Rational& y, const Rational& p) {
    if (p <= Rational(0)) throw DomainError("perimeter must be positive");
    if (x < Rational(0) || x >= p || y < Rational(0) || y >= p)
        throw DomainError("point outside [0, perimeter)");
    if (x == y) return Rational(0);
    return rational_mod(y - x, p);
}

bool verify_circular_coloring(const WeightedSymmetricDigraph& d, const CircularColoring& phi) {
    if (phi.vertex_count() != d.vertex_count())
        throw DomainMismatch("coloring size does not match digraph");
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (circ_dist(phi.point(u), phi.point(v), phi.perimeter()) < d.weight(i)) return false;
    }
    return true;
}

bool verify_kd_coloring(const UndirectedGraph& g, const KdColoring& f) {
    if (static_cast<int>(f.colors().size()) != g.vertex_count())
        throw DomainMismatch("coloring size does not match graph");
    for (auto [u, v] : g.edges()) {
        long long diff = std::abs(f.colors()[u] - f.colors()[v]);
        if (diff < f.d() || diff > f.k() - f.d()) return false;
    }
    return true;
}

CircularColoring kd_to_circular(const KdColoring& f) {
    std::vector<Rational> points;
    points.reserve(f.colors().size());
    for (long long c : f.colors()) points.emplace_back(c, f.d());
    return CircularColoring(Rational(f.k(), f.d()), std::move(points));
}

std::optional<KdColoring> find_kd_coloring(const UndirectedGraph& g, long long k, long long d) {
    if (d < 1 || k < 2 * d) throw DomainError("need k >= 2d >= 2");
    int n = g.vertex_count();
    std::vector<long long> color(n, -1);
    // conflicts[v][c]: assigned neighbors that rule color c out at v.
    std::vector<std::vector<int>> conflicts(n, std::vector<int>(k, 0));
    std::vector<long long> domain(n, k);

    auto update = [&](int v, long long c, int delta) -> bool {
        bool alive = true;
        for (int w : g.neighbors(v)) {
            if (color[w] >= 0) continue;
            for (long long off = -(d - 1); off <= d - 1; ++off) {
                long long cc = ((c + off) % k + k) % k;
                int& entry = conflicts[w][cc];
                if (delta > 0 && entry++ == 0 && --domain[w] == 0) alive = false;
                if (delta < 0 && --entry == 0) ++domain[w];
            }
        }
        return alive;
    };

    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == n) return true;
        long long last = v == 0 ? 0 : k - 1;  // rotation lets the first vertex stay at 0
        for (long long c = 0; c <= last; ++c) {
            if (conflicts[v][c] != 0) continue;
            color[v] = c;
            bool alive = update(v, c, +1);
            if (alive && assign(v + 1)) return true;
            update(v, c, -1);
            color[v] = -1;
        }
        return false;
    };

    if (!assign(0)) return std::nullopt;
    return KdColoring(k, d, std::move(color));
}

ChiCKdResult chi_c_exact_kd(const UndirectedGraph& g) {
    if (!g.is_connected()) throw NotConnected("chi_c requires a connected graph");
    if (g.edge_count() == 0) return ChiCKdResult{Rational(1), std::nullopt};
    long long n = g.vertex_count();
    long long chi = chromatic_number(g);
    long long alpha = independence_number(g);
    Rational low(n, alpha);
    Rational high(chi);

    std::vector<std::pair<Rational, std::pair<long long, long long>>> candidates;
    for (long long den = 1; den <= alpha; ++den) {
        for (long long num = 2 * den; num <= n; ++num) {
            if (std::gcd(num, den) != 1) continue;
            Rational value(num, den);
            if (value < low || value > high) continue;
            candidates.emplace_back(value, std::pair{num, den});
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [value, kd] : candidates) {
        if (auto witness = find_kd_coloring(g, kd.first, kd.second))
            return ChiCKdResult{value, std::move(witness)};
    }
    throw Error("internal error: candidate set exhausted");  // chi/1 always succeeds
}

namespace {

Marking orientation_marking_on(const WeightedSymmetricDigraph& d, const AcyclicOrientation& w) {
    std::vector<long long> tokens(d.arc_count(), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (w.directs(u, v)) tokens[i] = 1;
    }
    return Marking(d, std::move(tokens));
}

}  // namespace

ChiCMintyResult chi_c_exact_minty(const WeightedSymmetricDigraph& d, long long orientation_cap) {
    if (d.arc_count() == 0) throw DomainError("digraph has no dicycles");
    if (!d.is_connected()) throw NotConnected("chi_c requires a connected digraph");
    std::optional<ChiCMintyResult> best;
    for_each_acyclic_orientation(
        d.underlying(),
        [&](const AcyclicOrientation& w) {
            Marking t = orientation_marking_on(d, w);
            if (best) {
                // Ratio exceeds the current best iff some cycle is positive there.
                std::vector<Rational> probe;
                probe.reserve(d.arc_count());
                for (int i = 0; i < d.arc_count(); ++i)
                    probe.push_back(d.weight(i) - best->value * Rational(t.tokens(i)));
                if (has_positive_cycle(d, probe)) return true;
            }
            CycleRatioResult r = max_cycle_ratio(d, t);
            if (!best || r.ratio < best->value) best = ChiCMintyResult{r.ratio, std::move(t)};
            return true;
        },
        orientation_cap);
    return *best;
}

ChiCDynamicsResult chi_c_via_dynamics(const UndirectedGraph& g, long long orientation_cap) {
    if (g.edge_count() == 0) throw DomainError("graph has no edges");
    if (!g.is_connected()) throw NotConnected("chi_c requires a connected graph");
    std::optional<ChiCDynamicsResult> best;
    for_each_acyclic_orientation(
        g,
        [&](const AcyclicOrientation& w) {
            Rational ratio = sink_sequence(w).ratio();
            if (!best || ratio < best->value) best = ChiCDynamicsResult{ratio, w};
            return true;
        },
        orientation_cap);
    return *best;
}

ChiCMintyResult chi_c_via_token_game(const WeightedSymmetricDigraph& d, long long orientation_cap,
                                     long long pulse_cap) {
    if (d.arc_count() == 0) throw DomainError("digraph has no dicycles");
    if (!d.is_connected()) throw NotConnected("chi_c requires a connected digraph");
    std::optional<ChiCMintyResult> best;
    for_each_acyclic_orientation(
        d.underlying(),
        [&](const AcyclicOrientation& w) {
            Marking t = orientation_marking_on(d, w);
            Rational ratio = run_to_steady_state(d, t, pulse_cap).ratio();
            if (!best || ratio < best->value) best = ChiCMintyResult{ratio, std::move(t)};
            return true;
        },
        orientation_cap);
    return *best;
}

PeriodicSchedule schedule_from_coloring(const CircularColoring& phi) {
    return PeriodicSchedule{phi.perimeter(), phi.points()};
}

Marking marking_from_coloring(const WeightedSymmetricDigraph& d, const CircularColoring& phi) {
    if (!verify_circular_coloring(d, phi))
        throw InvalidColoring("not a circular coloring of this digraph");
    std::vector<long long> tokens(d.arc_count(), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (u > v) continue;  // each pair once, read as (u, v) with u < v
        int rev = d.reverse_arc(i);
        if (phi.point(v) > phi.point(u)) {
            tokens[rev] = 1;
        } else {
            tokens[i] = 1;
        }
    }
    return Marking(d, std::move(tokens));
}

CircularColoring coloring_from_schedule(const WeightedSymmetricDigraph& d,
                                        const PeriodicSchedule& s) {
    if (s.period <= Rational(0)) throw DomainError("schedule period must be positive");
    if (static_cast<int>(s.offsets.size()) != d.vertex_count())
        throw DomainMismatch("offset vector size mismatch");
    std::vector<Rational> points;
    points.reserve(s.offsets.size());
    for (const auto& x : s.offsets) {
        if (x < Rational(0)) throw DomainError("schedule offsets must be nonnegative");
        points.push_back(rational_mod(x, s.period));
    }
    CircularColoring phi(s.period, std::move(points));
    if (!verify_circular_coloring(d, phi))
        throw InadmissibleSchedule("offsets mod period are not a circular coloring");
    return phi;
}

bool replay_schedule_admissible(const WeightedSymmetricDigraph& d, const Marking& t,
                                const PeriodicSchedule& s, long long firings_per_vertex) {
    t.check_domain(d);
    if (s.period <= Rational(0)) throw DomainError("schedule period must be positive");
    if (static_cast<int>(s.offsets.size()) != d.vertex_count())
        throw DomainMismatch("offset vector size mismatch");
    for (const auto& x : s.offsets)
        if (x < Rational(0)) throw DomainError("schedule offsets must be nonnegative");

    struct Event {
        Rational time;
        int kind;  // 0 = token arrival (processed first), 1 = firing
        int where; // arc for arrivals, vertex for firings
    };
    std::vector<Event> events;
    for (int v = 0; v < d.vertex_count(); ++v) {
        for (long long k = 1; k <= firings_per_vertex; ++k) {
            Rational when = s.offsets[v] + s.period * Rational(k - 1);
            events.push_back({when, 1, v});
            for (int arc_id : d.out_arcs(v))
                events.push_back({when + d.weight(arc_id), 0, arc_id});
        }
    }
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.kind < b.kind;
    });

    std::vector<long long> tokens = t.tokens_by_arc();
    for (const Event& e : events) {
        if (e.kind == 0) {
            ++tokens[e.where];
        } else {
            for (int arc_id : d.in_arcs(e.where)) {
                if (tokens[arc_id] == 0) return false;
                --tokens[arc_id];
            }
        }
    }
    return true;
}

bool verify_weak_circular_coloring(const WeightedSymmetricDigraph& d, const CircularColoring& phi) {
    if (phi.vertex_count() != d.vertex_count())
        throw DomainMismatch("coloring size does not match digraph");
    for (int i = 0; i < d.arc_count(); ++i)
        if (phi.perimeter() < d.weight(i) + d.weight(d.reverse_arc(i)))
            throw DomainError("weak colorings are defined only for perimeter >= max(c_uv + c_vu)");
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (phi.point(u) == phi.point(v)) continue;
        if (circ_dist(phi.point(u), phi.point(v), phi.perimeter()) < d.weight(i)) return false;
    }
    // Fibers may not contain a dicycle of all-positive arcs.
    std::map<Rational, std::vector<int>> fibers;
    for (int v = 0; v < d.vertex_count(); ++v) fibers[phi.point(v)].push_back(v);
    for (const auto& [point, members] : fibers) {
        std::vector<char> in_fiber(d.vertex_count(), 0);
        for (int v : members) in_fiber[v] = 1;
        std::vector<Arc> arcs;
        for (int i = 0; i < d.arc_count(); ++i) {
            auto [u, v] = d.arcs()[i];
            if (in_fiber[u] && in_fiber[v] && d.weight(i) > Rational(0)) arcs.push_back({u, v});
        }
        if (lexicographically_smallest_dicycle(d.vertex_count(), arcs)) return false;
    }
    return true;
}

TightnessDigraph tightness_digraph(const WeightedSymmetricDigraph& d, const CircularColoring& phi) {
    TightnessDigraph result;
    result.vertex_count = d.vertex_count();
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        bool tight;
        if (phi.point(u) == phi.point(v))
            tight = d.weight(i) == Rational(0);
        else
            tight = circ_dist(phi.point(u), phi.point(v), phi.perimeter()) == d.weight(i);
        if (tight) result.arcs.push_back({u, v});
    }
    return result;
}

std::optional<std::vector<int>> find_tight_dicycle(const WeightedSymmetricDigraph& d,
                                                   const CircularColoring& phi) {
    if (!verify_weak_circular_coloring(d, phi))
        throw InvalidColoring("not a weak circular coloring of this digraph");
    TightnessDigraph td = tightness_digraph(d, phi);
    return lexicographically_smallest_dicycle(td.vertex_count, td.arcs);
}

WeakColoringReport weak_coloring_from_marking(const WeightedSymmetricDigraph& d, const Marking& t,
                                              const Rational& r) {
    if (!is_good_marking(d, t)) throw GoodnessViolation("marking is not good");
    std::vector<Rational> w;
    w.reserve(d.arc_count());
    for (int i = 0; i < d.arc_count(); ++i)
        w.push_back(d.weight(i) - r * Rational(t.tokens(i)));
    Potentials phi = longest_walk_potentials(d, w);  // throws PositiveCycle below the max ratio
    std::vector<Rational> points;
    points.reserve(phi.value.size());
    for (const auto& x : phi.value) points.push_back(rational_mod(x, r));
    CircularColoring coloring(r, std::move(points));
    WeakColoringReport report{coloring, verify_weak_circular_coloring(d, coloring), std::nullopt};
    report.tight_dicycle = lexicographically_smallest_dicycle(
        d.vertex_count(), tightness_digraph(d, coloring).arcs);
    return report;
}

}  // namespace circhi
