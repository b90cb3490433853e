#pragma once

#include <vector>

#include "circhi/cycle_ratio.hpp"
#include "circhi/digraph.hpp"

namespace circhi {

// Token-game configuration after `pulse` completed pulses. Arrivals due at a
// pulse are credited before fireability is read, so in_flight holds only
// strictly future tokens (remaining delay >= 1, sorted per arc).
struct TokenGameState {
    long long pulse = 0;
    std::vector<long long> available;             // per arc
    std::vector<std::vector<long long>> in_flight;  // per arc, sorted remaining delays

    friend bool operator==(const TokenGameState&, const TokenGameState&) = default;
};

struct TokenGameStep {
    TokenGameState next;
    std::vector<int> fired;  // h(t) for the pulse just played; may be empty
};

TokenGameState initial_token_state(const WeightedSymmetricDigraph& d, const Marking& t);

// Plays pulse state.pulse + 1: every vertex with a token on each in-arc fires
// simultaneously, consuming one per in-arc and scheduling one on each out-arc
// uv with delay c_uv. Weights must be positive integers.
TokenGameStep step_token_game(const TokenGameState& state, const WeightedSymmetricDigraph& d,
                              const std::vector<long long>& weights);

// Steady state of a token-game run. States are indexed from 0 (the initial
// marking); transient is the first index whose full configuration recurs, so
// the state after transient + period pulses equals the state after transient.
struct SteadyState {
    long long transient = 0;    // M
    long long period = 0;       // p, in scaled pulses
    long long multiplicity = 0; // m
    std::vector<long long> firing_counts;       // per vertex over one period
    long long weight_scale = 1;                 // rational weights were multiplied by this
    std::vector<std::vector<int>> fired_history;  // h(1) .. h(transient + period)

    Rational period_unscaled() const { return Rational(period, weight_scale); }
    Rational ratio() const { return Rational(period, multiplicity * weight_scale); }
};

// Simulates until the full configuration recurs. Requires a connected digraph,
// a good marking and positive weights; rational weights are cleared to
// integers by their lcm (period reported in scaled pulses, see weight_scale).
// pulse_cap <= 0 picks a generous default.
SteadyState run_to_steady_state(const WeightedSymmetricDigraph& d, const Marking& t,
                                long long pulse_cap = 0);

// Reverses every edge incident to a sink; the result is again acyclic.
AcyclicOrientation sink_reversal_step(const AcyclicOrientation& w);

// Orientation sequence generated by repeated sink reversal, cut at the first
// exact recurrence. Indices run from 0 (= the initial orientation).
struct SinkSequence {
    long long transient = 0;     // M
    long long period = 0;        // p
    long long multiplicity = 0;  // m
    std::vector<int> sink_pattern;                  // |sink(w_i)| for i in [M, M+p)
    std::vector<std::vector<int>> sink_history;     // sinks of w_0 .. w_{M+p-1}
    std::vector<AcyclicOrientation> orientations;   // w_0 .. w_{M+p-1}

    Rational ratio() const { return Rational(period, multiplicity); }
};

SinkSequence sink_sequence(const AcyclicOrientation& w, long long step_cap = 0);

// Sink reversal is the unit-weight token game: same transient, period,
// multiplicity, and h(t) = sink(w_{t-1}) for every simulated pulse.
bool unit_dynamics_equivalence(const AcyclicOrientation& w, long long cap = 0);

}  // namespace circhi
