#include "circhi/serialize.hpp"

namespace circhi {

using nlohmann::json;

json json_rational(const Rational& r) {
    return r.str();
}

json json_graph(const UndirectedGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

json json_marked_graph(const WeightedSymmetricDigraph& d, const Marking& t) {
    json arcs = json::array();
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        arcs.push_back({{"tail", u},
                        {"head", v},
                        {"weight", json_rational(d.weight(i))},
                        {"tokens", t.tokens(i)}});
    }
    return {{"vertex_count", d.vertex_count()}, {"arcs", arcs}};
}

json json_coloring(const CircularColoring& phi) {
    json points = json::array();
    for (int v = 0; v < phi.vertex_count(); ++v) points.push_back(json_rational(phi.point(v)));
    return {{"perimeter", json_rational(phi.perimeter())}, {"points", points}};
}

json json_kd_coloring(const KdColoring& f) {
    return {{"k", f.k()}, {"d", f.d()}, {"colors", f.colors()}};
}

json json_bound_report(const BoundReport& report) {
    json hypotheses = json::array();
    for (const auto& h : report.hypotheses)
        hypotheses.push_back({{"property", h.property}, {"holds", h.holds}, {"witness", h.witness}});
    return {{"bound", report.bound_name},
            {"applicable", report.applicable},
            {"value", report.value ? json_rational(*report.value) : json()},
            {"hypotheses", hypotheses}};
}

json json_cycle_ratio(const CycleRatioResult& result) {
    return {{"ratio", json_rational(result.ratio)}, {"witness_cycle", result.witness_cycle}};
}

json json_steady_state(const SteadyState& s) {
    return {{"transient", s.transient},
            {"period", s.period},
            {"multiplicity", s.multiplicity},
            {"weight_scale", s.weight_scale},
            {"ratio", json_rational(s.ratio())}};
}

json json_sink_sequence(const SinkSequence& s) {
    return {{"transient", s.transient},
            {"period", s.period},
            {"multiplicity", s.multiplicity},
            {"sink_pattern", s.sink_pattern},
            {"ratio", json_rational(s.ratio())}};
}

}  // namespace circhi
