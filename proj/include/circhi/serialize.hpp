#pragma once

#include <nlohmann/json.hpp>

#include "circhi/bounds.hpp"
#include "circhi/circular.hpp"
#include "circhi/cycle_ratio.hpp"
#include "circhi/dynamics.hpp"
#include "circhi/io.hpp"

namespace circhi {

// JSON views with stable field names; rationals are "num/den" strings so
// exactness survives the trip.
nlohmann::json json_rational(const Rational& r);
nlohmann::json json_graph(const UndirectedGraph& g);
nlohmann::json json_marked_graph(const WeightedSymmetricDigraph& d, const Marking& t);
nlohmann::json json_coloring(const CircularColoring& phi);
nlohmann::json json_kd_coloring(const KdColoring& f);
nlohmann::json json_bound_report(const BoundReport& report);
nlohmann::json json_cycle_ratio(const CycleRatioResult& result);
nlohmann::json json_steady_state(const SteadyState& s);
nlohmann::json json_sink_sequence(const SinkSequence& s);

}  // namespace circhi
