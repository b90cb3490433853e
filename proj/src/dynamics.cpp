#include "circhi/dynamics.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace circhi {

namespace {

std::vector<long long> scaled_integer_weights(const WeightedSymmetricDigraph& d,
                                              long long& scale_out) {
    long long scale = 1;
    for (int i = 0; i < d.arc_count(); ++i) {
        if (d.weight(i) <= Rational(0))
            throw DomainError("token game requires positive arc weights");
        scale = detail::checked_lcm(scale, d.weight(i).den());
    }
    std::vector<long long> weights;
    weights.reserve(d.arc_count());
    for (int i = 0; i < d.arc_count(); ++i) {
        Rational w = d.weight(i) * Rational(scale);
        weights.push_back(w.num());
    }
    scale_out = scale;
    return weights;
}

}  // namespace

TokenGameState initial_token_state(const WeightedSymmetricDigraph& d, const Marking& t) {
    t.check_domain(d);
    TokenGameState state;
    state.available = t.tokens_by_arc();
    state.in_flight.assign(d.arc_count(), {});
    return state;
}

TokenGameStep step_token_game(const TokenGameState& state, const WeightedSymmetricDigraph& d,
                              const std::vector<long long>& weights) {
    if (static_cast<int>(weights.size()) != d.arc_count())
        throw DomainMismatch("weight vector size mismatch");
    TokenGameStep step;
    step.next = state;
    auto& s = step.next;
    // All fireability tests read the post-arrival, pre-firing counts, so the
    // simultaneous phase has no vertex-order dependence.
    for (int v = 0; v < d.vertex_count(); ++v) {
        bool fireable = !d.in_arcs(v).empty();
        for (int arc_id : d.in_arcs(v)) {
            if (s.available[arc_id] == 0) {
                fireable = false;
                break;
            }
        }
        if (fireable) step.fired.push_back(v);
    }
    for (int v : step.fired) {
        for (int arc_id : d.in_arcs(v)) --s.available[arc_id];
        for (int arc_id : d.out_arcs(v)) {
            if (weights[arc_id] <= 0) throw DomainError("token game requires positive weights");
            s.in_flight[arc_id].push_back(weights[arc_id]);
        }
    }
    // Advance the pulse: delays tick down and tokens reaching 0 land.
    for (int i = 0; i < d.arc_count(); ++i) {
        auto& flight = s.in_flight[i];
        std::sort(flight.begin(), flight.end());
        std::size_t arrived = 0;
        for (auto& delay : flight) {
            if (--delay == 0) ++arrived;
        }
        s.available[i] += static_cast<long long>(arrived);
        flight.erase(flight.begin(), flight.begin() + arrived);
    }
    ++s.pulse;
    return step;
}

namespace {

std::vector<long long> encode_state(const TokenGameState& s) {
    std::vector<long long> key;
    key.reserve(s.available.size() * 2);
    for (std::size_t i = 0; i < s.available.size(); ++i) {
        key.push_back(s.available[i]);
        for (long long delay : s.in_flight[i]) key.push_back(-delay);
    }
    return key;
}

}  // namespace

SteadyState run_to_steady_state(const WeightedSymmetricDigraph& d, const Marking& t,
                                long long pulse_cap) {
    if (!d.is_connected()) throw NotConnected("token game requires a connected digraph");
    if (!is_good_marking(d, t)) throw GoodnessViolation("initial marking is not good");
    SteadyState result;
    std::vector<long long> weights = scaled_integer_weights(d, result.weight_scale);
    if (pulse_cap <= 0) {
        __int128 total_weight = 0;
        for (long long w : weights) total_weight += w;
        __int128 suggested = 10 * total_weight * (d.vertex_count() + d.arc_count());
        pulse_cap = suggested > 1'000'000'000 ? 1'000'000'000
                                              : std::max<long long>(10000, static_cast<long long>(suggested));
    }

    TokenGameState state = initial_token_state(d, t);
    std::map<std::vector<long long>, long long> seen;
    seen.emplace(encode_state(state), 0);
    while (state.pulse < pulse_cap) {
        TokenGameStep step = step_token_game(state, d, weights);
        state = std::move(step.next);
        result.fired_history.push_back(std::move(step.fired));
        auto [it, fresh] = seen.emplace(encode_state(state), state.pulse);
        if (!fresh) {
            result.transient = it->second;
            result.period = state.pulse - it->second;
            break;
        }
    }
    if (result.period == 0) throw CapExceeded("no steady state within pulse cap");

    // fired_history now holds exactly h(1) .. h(transient + period).
    result.firing_counts.assign(d.vertex_count(), 0);
    for (long long i = result.transient; i < result.transient + result.period; ++i)
        for (int v : result.fired_history[i]) ++result.firing_counts[v];
    result.multiplicity = result.firing_counts.empty() ? 0 : result.firing_counts[0];
    for (long long count : result.firing_counts)
        if (count != result.multiplicity)
            throw MultiplicityMismatch("per-vertex firing counts differ over one period");
    if (result.multiplicity <= 0) throw MultiplicityMismatch("no vertex fired over one period");
    return result;
}

AcyclicOrientation sink_reversal_step(const AcyclicOrientation& w) {
    const auto& host = w.host();
    std::vector<char> is_sink(host.vertex_count(), 0);
    for (int v : w.sinks()) is_sink[v] = 1;
    std::vector<bool> forward = w.forward();
    for (std::size_t i = 0; i < forward.size(); ++i) {
        auto [u, v] = host.edges()[i];
        if (is_sink[u] || is_sink[v]) forward[i] = !forward[i];
    }
    return AcyclicOrientation(host, std::move(forward));
}

SinkSequence sink_sequence(const AcyclicOrientation& w, long long step_cap) {
    if (!w.host().is_connected()) throw NotConnected("sink sequence requires a connected host");
    if (step_cap <= 0)
        step_cap = std::max<long long>(
            10000, 20LL * (w.host().vertex_count() + 1) * (w.host().edge_count() + 1));

    SinkSequence result;
    std::map<std::vector<bool>, long long> seen;
    AcyclicOrientation current = w;
    long long index = 0;
    while (index <= step_cap) {
        auto [it, fresh] = seen.emplace(current.forward(), index);
        if (!fresh) {
            result.transient = it->second;
            result.period = index - it->second;
            break;
        }
        result.orientations.push_back(current);
        result.sink_history.push_back(current.sinks());
        current = sink_reversal_step(current);
        ++index;
    }
    if (result.period == 0) throw CapExceeded("no orientation recurrence within step cap");

    // orientations and sink_history hold exactly w_0 .. w_{transient + period - 1}.
    std::vector<long long> counts(w.host().vertex_count(), 0);
    for (long long i = result.transient; i < result.transient + result.period; ++i) {
        result.sink_pattern.push_back(static_cast<int>(result.sink_history[i].size()));
        for (int v : result.sink_history[i]) ++counts[v];
    }
    result.multiplicity = counts.empty() ? 0 : counts[0];
    for (long long count : counts)
        if (count != result.multiplicity)
            throw MultiplicityMismatch("per-vertex sink counts differ over one period");
    if (result.multiplicity <= 0) throw MultiplicityMismatch("no vertex became a sink over one period");
    return result;
}

bool unit_dynamics_equivalence(const AcyclicOrientation& w, long long cap) {
    SinkSequence sinks = sink_sequence(w, cap);
    WeightedSymmetricDigraph d = to_symmetric_digraph(w.host(), Rational(1));
    SteadyState game = run_to_steady_state(d, marking_from_orientation(w), cap);
    if (game.transient != sinks.transient || game.period != sinks.period ||
        game.multiplicity != sinks.multiplicity)
        return false;
    if (game.fired_history.size() != sinks.sink_history.size()) return false;
    for (std::size_t i = 0; i < game.fired_history.size(); ++i)
        if (game.fired_history[i] != sinks.sink_history[i]) return false;
    return true;
}

}  // namespace circhi
