#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circhi/bounds.hpp"
#include "circhi/catalog.hpp"
#include "circhi/circular.hpp"
#include "circhi/cycle_ratio.hpp"
#include "circhi/dynamics.hpp"
#include "circhi/io.hpp"

namespace py = pybind11;
using namespace circhi;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Circular chromatic numbers via colorings, cycle ratios and token games";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GoodnessViolation>(m, "GoodnessViolation", domain_error);
    py::register_exception<NotAcyclic>(m, "NotAcyclic", domain_error);
    py::register_exception<RatioUnbounded>(m, "RatioUnbounded", domain_error);
    py::register_exception<PositiveCycle>(m, "PositiveCycle", domain_error);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>(), py::arg("value"))
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
        .def_static("parse", &Rational::parse)
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("is_integer", &Rational::is_integer)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__float__",
             [](const Rational& r) { return static_cast<double>(r.num()) / r.den(); })
        .def("__hash__",
             [](const Rational& r) { return py::hash(py::make_tuple(r.num(), r.den())); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });
    py::implicitly_convertible<long long, Rational>();

    py::class_<UndirectedGraph>(m, "UndirectedGraph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &UndirectedGraph::vertex_count)
        .def_property_readonly("edge_count", &UndirectedGraph::edge_count)
        .def_property_readonly("edges", &UndirectedGraph::edges)
        .def("neighbors", &UndirectedGraph::neighbors)
        .def("degree", &UndirectedGraph::degree)
        .def("has_edge", &UndirectedGraph::has_edge)
        .def("is_connected", &UndirectedGraph::is_connected)
        .def("distances_from", &UndirectedGraph::distances_from)
        .def("induced", &UndirectedGraph::induced)
        .def(py::self == py::self)
        .def("__repr__", [](const UndirectedGraph& g) {
            return "UndirectedGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<AcyclicOrientation>(m, "AcyclicOrientation")
        .def(py::init(&AcyclicOrientation::from_arcs), py::arg("host"), py::arg("arcs"))
        .def_property_readonly("host", &AcyclicOrientation::host)
        .def("arcs", &AcyclicOrientation::arcs)
        .def("directs", &AcyclicOrientation::directs)
        .def("sinks", &AcyclicOrientation::sinks)
        .def("sources", &AcyclicOrientation::sources)
        .def("out_degree", &AcyclicOrientation::out_degree)
        .def("in_degree", &AcyclicOrientation::in_degree)
        .def(py::self == py::self);

    py::class_<WeightedSymmetricDigraph>(m, "WeightedSymmetricDigraph")
        .def(py::init<int, std::vector<std::tuple<int, int, Rational>>>(),
             py::arg("vertex_count"), py::arg("arcs"))
        .def_property_readonly("vertex_count", &WeightedSymmetricDigraph::vertex_count)
        .def_property_readonly("arc_count", &WeightedSymmetricDigraph::arc_count)
        .def_property_readonly("arcs", &WeightedSymmetricDigraph::arcs)
        .def("weight", py::overload_cast<int, int>(&WeightedSymmetricDigraph::weight, py::const_))
        .def("underlying", &WeightedSymmetricDigraph::underlying)
        .def("is_connected", &WeightedSymmetricDigraph::is_connected)
        .def("total_weight", &WeightedSymmetricDigraph::total_weight);

    py::class_<Marking>(m, "Marking")
        .def(py::init<const WeightedSymmetricDigraph&, std::vector<long long>>(),
             py::arg("host"), py::arg("tokens_by_arc"))
        .def_property_readonly("arcs", &Marking::arcs)
        .def_property_readonly("tokens_by_arc", &Marking::tokens_by_arc)
        .def("tokens", py::overload_cast<int, int>(&Marking::tokens, py::const_))
        .def("total", &Marking::total)
        .def(py::self == py::self);

    // Named graphs and constructions.
    m.def("cycle_graph", &cycle_graph);
    m.def("odd_wheel", &odd_wheel);
    m.def("petersen", &petersen);
    m.def("q_graph", &q_graph);
    m.def("g_family", &g_family);
    m.def("w_gadget", &w_gadget);
    m.def("compose_new", &compose_new);
    m.def("catalog", [](const std::string& spec) { return catalog(spec); });
    m.def("line_graph", &line_graph);
    m.def("neighborhood", &neighborhood);
    m.def("neighborhood_of_set", &neighborhood_of_set);
    m.def("enumerate_acyclic_orientations", &enumerate_acyclic_orientations, py::arg("graph"),
          py::arg("cap") = 0);
    m.def("random_acyclic_orientation", &random_acyclic_orientation);

    m.def("to_symmetric_digraph", &to_symmetric_digraph);
    m.def("marking_from_orientation", &marking_from_orientation);
    m.def("orientation_from_marking", &orientation_from_marking);
    m.def("is_good_marking", &is_good_marking);

    py::class_<CycleRatioResult>(m, "CycleRatioResult")
        .def_readonly("ratio", &CycleRatioResult::ratio)
        .def_readonly("witness_cycle", &CycleRatioResult::witness_cycle);
    py::class_<Potentials>(m, "Potentials").def_readonly("value", &Potentials::value);

    m.def("has_positive_cycle", &has_positive_cycle);
    m.def("longest_walk_potentials", &longest_walk_potentials);
    m.def("max_cycle_ratio", &max_cycle_ratio);
    m.def("enumerate_dicycles", &enumerate_dicycles, py::arg("digraph"), py::arg("vertex_cap") = 12);

    py::class_<SteadyState>(m, "SteadyState")
        .def_readonly("transient", &SteadyState::transient)
        .def_readonly("period", &SteadyState::period)
        .def_readonly("multiplicity", &SteadyState::multiplicity)
        .def_readonly("firing_counts", &SteadyState::firing_counts)
        .def_readonly("weight_scale", &SteadyState::weight_scale)
        .def_readonly("fired_history", &SteadyState::fired_history)
        .def("ratio", &SteadyState::ratio)
        .def("period_unscaled", &SteadyState::period_unscaled);

    py::class_<SinkSequence>(m, "SinkSequence")
        .def_readonly("transient", &SinkSequence::transient)
        .def_readonly("period", &SinkSequence::period)
        .def_readonly("multiplicity", &SinkSequence::multiplicity)
        .def_readonly("sink_pattern", &SinkSequence::sink_pattern)
        .def_readonly("sink_history", &SinkSequence::sink_history)
        .def("ratio", &SinkSequence::ratio);

    m.def("run_to_steady_state", &run_to_steady_state, py::arg("digraph"), py::arg("marking"),
          py::arg("pulse_cap") = 0);
    m.def("sink_reversal_step", &sink_reversal_step);
    m.def("sink_sequence", &sink_sequence, py::arg("orientation"), py::arg("step_cap") = 0);
    m.def("unit_dynamics_equivalence", &unit_dynamics_equivalence, py::arg("orientation"),
          py::arg("cap") = 0);

    py::class_<CircularColoring>(m, "CircularColoring")
        .def(py::init<Rational, std::vector<Rational>>(), py::arg("perimeter"), py::arg("points"))
        .def_property_readonly("perimeter", &CircularColoring::perimeter)
        .def_property_readonly("points", &CircularColoring::points);

    py::class_<KdColoring>(m, "KdColoring")
        .def(py::init<long long, long long, std::vector<long long>>(), py::arg("k"), py::arg("d"),
             py::arg("colors"))
        .def_property_readonly("k", &KdColoring::k)
        .def_property_readonly("d", &KdColoring::d)
        .def_property_readonly("colors", &KdColoring::colors);

    py::class_<PeriodicSchedule>(m, "PeriodicSchedule")
        .def(py::init([](Rational period, std::vector<Rational> offsets) {
                 return PeriodicSchedule{std::move(period), std::move(offsets)};
             }),
             py::arg("period"), py::arg("offsets"))
        .def_readonly("period", &PeriodicSchedule::period)
        .def_readonly("offsets", &PeriodicSchedule::offsets);

    py::class_<WeakColoringReport>(m, "WeakColoringReport")
        .def_readonly("coloring", &WeakColoringReport::coloring)
        .def_readonly("valid", &WeakColoringReport::valid)
        .def_readonly("tight_dicycle", &WeakColoringReport::tight_dicycle);

    py::class_<ChiCKdResult>(m, "ChiCKdResult")
        .def_readonly("value", &ChiCKdResult::value)
        .def_readonly("witness", &ChiCKdResult::witness);
    py::class_<ChiCMintyResult>(m, "ChiCMintyResult")
        .def_readonly("value", &ChiCMintyResult::value)
        .def_readonly("witness", &ChiCMintyResult::witness);
    py::class_<ChiCDynamicsResult>(m, "ChiCDynamicsResult")
        .def_readonly("value", &ChiCDynamicsResult::value)
        .def_readonly("witness", &ChiCDynamicsResult::witness);

    m.def("circ_dist", &circ_dist);
    m.def("verify_circular_coloring", &verify_circular_coloring);
    m.def("verify_kd_coloring", &verify_kd_coloring);
    m.def("kd_to_circular", &kd_to_circular);
    m.def("find_kd_coloring", &find_kd_coloring);
    m.def("chi_c_exact_kd", &chi_c_exact_kd);
    m.def("chi_c_exact_minty", &chi_c_exact_minty, py::arg("digraph"),
          py::arg("orientation_cap") = 0);
    m.def("chi_c_via_dynamics", &chi_c_via_dynamics, py::arg("graph"),
          py::arg("orientation_cap") = 0);
    m.def("chi_c_via_token_game", &chi_c_via_token_game, py::arg("digraph"),
          py::arg("orientation_cap") = 0, py::arg("pulse_cap") = 0);
    m.def("schedule_from_coloring", &schedule_from_coloring);
    m.def("marking_from_coloring", &marking_from_coloring);
    m.def("coloring_from_schedule", &coloring_from_schedule);
    m.def("replay_schedule_admissible", &replay_schedule_admissible, py::arg("digraph"),
          py::arg("marking"), py::arg("schedule"), py::arg("firings_per_vertex") = 4);
    m.def("verify_weak_circular_coloring", &verify_weak_circular_coloring);
    m.def("weak_coloring_from_marking", &weak_coloring_from_marking);
    m.def("find_tight_dicycle", &find_tight_dicycle);

    py::class_<HypothesisCheck>(m, "HypothesisCheck")
        .def_readonly("property", &HypothesisCheck::property)
        .def_readonly("holds", &HypothesisCheck::holds)
        .def_readonly("witness", &HypothesisCheck::witness);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("bound_name", &BoundReport::bound_name)
        .def_readonly("applicable", &BoundReport::applicable)
        .def_readonly("hypotheses", &BoundReport::hypotheses)
        .def_readonly("value", &BoundReport::value);

    py::class_<BoundConfig>(m, "BoundConfig")
        .def(py::init<>())
        .def_readwrite("t_values", &BoundConfig::t_values)
        .def_readwrite("alpha_t_cap", &BoundConfig::alpha_t_cap)
        .def_readwrite("independent_sets_cap", &BoundConfig::independent_sets_cap);

    py::class_<BestBounds>(m, "BestBounds")
        .def_readonly("reports", &BestBounds::reports)
        .def_readonly("best", &BestBounds::best);

    m.def("chromatic_number", &chromatic_number);
    m.def("is_k_colorable", &is_k_colorable);
    m.def("independence_number", &independence_number);
    m.def("all_maximum_independent_sets", &all_maximum_independent_sets, py::arg("graph"),
          py::arg("vertex_cap") = 24);
    m.def("alpha_t", &alpha_t, py::arg("graph"), py::arg("t"), py::arg("vertex_cap") = 20);
    m.def("bound_d1", &bound_d1);
    m.def("bound_alphat", &bound_alphat, py::arg("graph"), py::arg("t"),
          py::arg("vertex_cap") = 20);
    m.def("bound_new", &bound_new);
    m.def("bound_d2", &bound_d2);
    m.def("bound_alpha2", &bound_alpha2, py::arg("graph"), py::arg("alpha_t_cap") = 20);
    m.def("bound_alpha1_1", &bound_alpha1_1, py::arg("graph"), py::arg("t"),
          py::arg("independent_sets_cap") = 24);
    m.def("best_lower_bound", &best_lower_bound, py::arg("graph"),
          py::arg("config") = BoundConfig{});

    // File formats and DOT exports.
    m.def("load_ug", &load_ug);
    m.def("save_ug", &save_ug);
    m.def("load_tmg", [](const std::string& path) {
        TimedMarkedGraph tm = load_tmg(path);
        return py::make_tuple(tm.digraph, tm.marking);
    });
    m.def("save_tmg", &save_tmg);
    m.def("load_col", &load_col);
    m.def("save_col", &save_col);
    m.def("load_kd", &load_kd);
    m.def("save_kd", &save_kd);
    m.def("dot_graph", &dot_graph);
    m.def("dot_orientation", &dot_orientation);
    m.def("dot_coloring", &dot_coloring);
}
