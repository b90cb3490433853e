// circhi: circular chromatic numbers of graphs and timed marked graphs.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 domain violation
// (goodness, acyclicity, invalid colorings), 3 cap exceeded.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "circhi/bounds.hpp"
#include "circhi/catalog.hpp"
#include "circhi/circular.hpp"
#include "circhi/dynamics.hpp"
#include "circhi/io.hpp"
#include "circhi/serialize.hpp"

using namespace circhi;
using nlohmann::json;

namespace {

struct Options {
    bool json = false;
    std::optional<std::uint64_t> seed;
    long long orientation_cap = 0;
    long long pulse_cap = 0;
    int alpha_t_cap = 20;
    int independent_sets_cap = 24;
};

bool is_catalog_spec(const std::string& input) {
    return input.rfind("catalog:", 0) == 0;
}

UndirectedGraph load_graph_input(const std::string& input) {
    if (is_catalog_spec(input)) return catalog(input.substr(8));
    return load_ug(input);
}

bool is_tmg_path(const std::string& input) {
    return !is_catalog_spec(input) && input.size() > 4 &&
           input.compare(input.size() - 4, 4, ".tmg") == 0;
}

std::vector<Edge> parse_orientation_spec(const std::string& spec) {
    std::vector<Edge> arcs;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item =
            comma == std::string::npos ? spec.substr(pos) : spec.substr(pos, comma - pos);
        if (!item.empty()) {
            std::size_t gt = item.find('>');
            std::size_t used1 = 0, used2 = 0;
            try {
                if (gt == std::string::npos) throw std::invalid_argument(item);
                int tail = std::stoi(item.substr(0, gt), &used1);
                int head = std::stoi(item.substr(gt + 1), &used2);
                if (used1 != gt || used2 != item.size() - gt - 1)
                    throw std::invalid_argument(item);
                arcs.emplace_back(tail, head);
            } catch (const std::exception&) {
                throw ParseError("orientation entries look like 'u>v': got '" + item + "'");
            }
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return arcs;
}

std::string orientation_spec_string(const std::vector<Edge>& arcs) {
    std::string out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(arcs[i].first) + ">" + std::to_string(arcs[i].second);
    }
    return out;
}

std::vector<Edge> marking_token_arcs(const Marking& t) {
    std::vector<Edge> arcs;
    for (std::size_t i = 0; i < t.arcs().size(); ++i)
        if (t.tokens_by_arc()[i] > 0) arcs.push_back(t.arcs()[i]);
    return arcs;
}

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

// ---- chi ---------------------------------------------------------------

int cmd_chi(const Options& global, const std::string& input, std::string method) {
    if (is_tmg_path(input)) {
        TimedMarkedGraph tm = load_tmg(input);
        if (method == "kd") throw DomainError("method kd needs an undirected graph input");
        if (method == "auto") method = "all";
        std::optional<Rational> minty, game;
        if (method == "minty" || method == "all")
            minty = chi_c_exact_minty(tm.digraph, global.orientation_cap).value;
        if (method == "dynamics" || method == "all")
            game = chi_c_via_token_game(tm.digraph, global.orientation_cap, global.pulse_cap).value;
        if (minty && game && *minty != *game)
            throw Error("method disagreement: minty=" + minty->str() +
                        " dynamics=" + game->str());
        Rational value = minty ? *minty : *game;
        int methods = (minty ? 1 : 0) + (game ? 1 : 0);
        if (global.json) {
            emit({{"chi_c", json_rational(value)}, {"methods", methods}});
        } else if (methods > 1) {
            std::cout << "chi_c = " << value.str() << " (" << methods << " methods agree)\n";
        } else {
            std::cout << "chi_c = " << value.str() << "\n";
        }
        return 0;
    }

    UndirectedGraph g = load_graph_input(input);
    if (method == "auto") method = g.vertex_count() <= 6 ? "all" : "kd";

    std::optional<ChiCKdResult> kd;
    std::optional<ChiCMintyResult> minty;
    std::optional<ChiCDynamicsResult> dynamics;
    if (method == "kd" || method == "all") kd = chi_c_exact_kd(g);
    if (method == "minty" || method == "all")
        minty = chi_c_exact_minty(to_symmetric_digraph(g, 1), global.orientation_cap);
    if (method == "dynamics" || method == "all")
        dynamics = chi_c_via_dynamics(g, global.orientation_cap);

    std::vector<Rational> values;
    if (kd) values.push_back(kd->value);
    if (minty) values.push_back(minty->value);
    if (dynamics) values.push_back(dynamics->value);
    for (const auto& v : values)
        if (v != values.front()) throw Error("method disagreement on " + input);

    if (global.json) {
        json out;
        out["chi_c"] = json_rational(values.front());
        out["methods"] = values.size();
        if (kd && kd->witness) out["witness_kd"] = json_kd_coloring(*kd->witness);
        if (minty)
            out["witness_marking"] = orientation_spec_string(marking_token_arcs(minty->witness));
        if (dynamics)
            out["witness_orientation"] = orientation_spec_string(dynamics->witness.arcs());
        emit(out);
        return 0;
    }
    std::cout << "chi_c = " << values.front().str();
    if (values.size() > 1) std::cout << " (" << values.size() << " methods agree)";
    std::cout << "\n";
    if (kd && kd->witness) {
        std::cout << "witness: (" << kd->witness->k() << "," << kd->witness->d() << ")-coloring";
        for (long long c : kd->witness->colors()) std::cout << " " << c;
        std::cout << "\n";
    }
    if (minty)
        std::cout << "witness-marking: "
                  << orientation_spec_string(marking_token_arcs(minty->witness)) << "\n";
    if (dynamics)
        std::cout << "witness-orientation: " << orientation_spec_string(dynamics->witness.arcs())
                  << "\n";
    return 0;
}

// ---- bounds ------------------------------------------------------------

int cmd_bounds(const Options& global, const std::string& input, const std::vector<int>& ts) {
    UndirectedGraph g = load_graph_input(input);
    BoundConfig config;
    config.t_values = ts;
    config.alpha_t_cap = global.alpha_t_cap;
    config.independent_sets_cap = global.independent_sets_cap;
    BestBounds bounds = best_lower_bound(g, config);
    if (global.json) {
        json reports = json::array();
        for (const auto& r : bounds.reports) reports.push_back(json_bound_report(r));
        emit({{"reports", reports}, {"best", bounds.best ? json_rational(*bounds.best) : json()}});
        return 0;
    }
    for (const auto& r : bounds.reports) {
        std::cout << r.bound_name << "  "
                  << (r.applicable ? "value=" + r.value->str() : "not applicable") << "\n";
        for (const auto& h : r.hypotheses)
            std::cout << "    [" << (h.holds ? "ok" : "--") << "] " << h.property << ": "
                      << h.witness << "\n";
    }
    if (bounds.best) std::cout << "combined lower bound = " << bounds.best->str() << "\n";
    return 0;
}

// ---- simulate ----------------------------------------------------------

int cmd_simulate(const Options& global, const std::string& input, bool check_ratio, bool trace) {
    TimedMarkedGraph tm = load_tmg(input);
    if (trace) {
        if (!is_good_marking(tm.digraph, tm.marking))
            throw GoodnessViolation("initial marking is not good");
        long long scale = 1;
        for (int i = 0; i < tm.digraph.arc_count(); ++i)
            scale = detail::checked_lcm(scale, tm.digraph.weight(i).den());
        std::vector<long long> weights;
        for (int i = 0; i < tm.digraph.arc_count(); ++i)
            weights.push_back((tm.digraph.weight(i) * Rational(scale)).num());
        TokenGameState state = initial_token_state(tm.digraph, tm.marking);
        long long horizon = global.pulse_cap > 0 ? global.pulse_cap : 50;
        for (long long pulse = 1; pulse <= horizon; ++pulse) {
            TokenGameStep step = step_token_game(state, tm.digraph, weights);
            state = std::move(step.next);
            json tokens;
            for (int i = 0; i < tm.digraph.arc_count(); ++i) {
                auto [u, v] = tm.digraph.arcs()[i];
                tokens[std::to_string(u) + ">" + std::to_string(v)] = state.available[i];
            }
            std::cout << json{{"t", pulse}, {"fired", step.fired}, {"tokens", tokens}}.dump()
                      << "\n";
        }
        return 0;
    }

    SteadyState steady = run_to_steady_state(tm.digraph, tm.marking, global.pulse_cap);
    std::optional<Rational> ratio;
    if (check_ratio) ratio = max_cycle_ratio(tm.digraph, tm.marking).ratio;
    if (global.json) {
        json out = json_steady_state(steady);
        if (ratio) {
            out["max_cycle_ratio"] = json_rational(*ratio);
            out["ratio_matches"] = (*ratio == steady.ratio());
        }
        emit(out);
        return 0;
    }
    std::cout << "M=" << steady.transient << " p=" << steady.period
              << " m=" << steady.multiplicity << " p/m=" << steady.ratio().str();
    if (steady.weight_scale != 1) std::cout << " (weights scaled by " << steady.weight_scale << ")";
    if (ratio)
        std::cout << " ratio=" << ratio->str() << (*ratio == steady.ratio() ? " OK" : " MISMATCH");
    std::cout << "\n";
    return 0;
}

// ---- sinkseq -----------------------------------------------------------

int cmd_sinkseq(const Options& global, const std::string& input, const std::string& orient,
                std::optional<std::uint64_t> random_seed, const std::string& dot_dir) {
    // --random-seed wins; the global --seed is the fallback.
    UndirectedGraph g = load_graph_input(input);
    if (!random_seed && orient.empty()) random_seed = global.seed;
    if (orient.empty() == !random_seed.has_value())
        throw ParseError("give exactly one of --orient or --random-seed (or a global --seed)");
    AcyclicOrientation start =
        random_seed ? random_acyclic_orientation(g, *random_seed)
                    : AcyclicOrientation::from_arcs(g, parse_orientation_spec(orient));
    SinkSequence seq = sink_sequence(start, global.pulse_cap);

    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (long long i = seq.transient; i < seq.transient + seq.period; ++i) {
            std::ofstream out(dot_dir + "/omega_" + std::to_string(i) + ".dot");
            out << dot_orientation(seq.orientations[i]);
        }
    }
    if (global.json) {
        json out = json_sink_sequence(seq);
        out["start"] = orientation_spec_string(start.arcs());
        emit(out);
        return 0;
    }
    std::cout << "M=" << seq.transient << " p=" << seq.period << " m=" << seq.multiplicity
              << " p/m=" << seq.ratio().str() << " pattern=<";
    for (std::size_t i = 0; i < seq.sink_pattern.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << seq.sink_pattern[i];
    }
    std::cout << ">\n";
    return 0;
}

// ---- ratio -------------------------------------------------------------

int cmd_ratio(const Options& global, const std::string& input) {
    TimedMarkedGraph tm = load_tmg(input);
    CycleRatioResult result = max_cycle_ratio(tm.digraph, tm.marking);
    if (global.json) {
        emit(json_cycle_ratio(result));
        return 0;
    }
    std::cout << "ratio = " << result.ratio.str() << "\nwitness:";
    for (int v : result.witness_cycle) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}

// ---- verify-coloring ---------------------------------------------------

int cmd_verify(const Options& global, const std::string& input, const std::string& col_path,
               const std::string& kd_path) {
    if (col_path.empty() == kd_path.empty())
        throw ParseError("give exactly one of --coloring or --kd");
    bool valid = false;
    json detail;
    if (!kd_path.empty()) {
        UndirectedGraph g = load_graph_input(input);
        KdColoring f = load_kd(kd_path, g.vertex_count());
        valid = verify_kd_coloring(g, f);
        detail = json_kd_coloring(f);
    } else if (is_tmg_path(input)) {
        TimedMarkedGraph tm = load_tmg(input);
        CircularColoring phi = load_col(col_path, tm.digraph.vertex_count());
        valid = verify_circular_coloring(tm.digraph, phi);
        detail = json_coloring(phi);
    } else {
        UndirectedGraph g = load_graph_input(input);
        CircularColoring phi = load_col(col_path, g.vertex_count());
        valid = verify_circular_coloring(to_symmetric_digraph(g, 1), phi);
        detail = json_coloring(phi);
    }
    if (global.json)
        emit({{"valid", valid}, {"coloring", detail}});
    else
        std::cout << (valid ? "valid" : "invalid") << "\n";
    return valid ? 0 : 2;
}

// ---- catalog / convert -------------------------------------------------

int cmd_catalog(const Options& global, const std::string& name, const std::string& output,
                bool dot) {
    UndirectedGraph g = catalog(name);
    std::string body;
    if (dot) {
        body = dot_graph(g);
    } else {
        std::ostringstream out;
        write_ug(out, g);
        body = out.str();
    }
    if (global.json) {
        emit(json_graph(g));
    } else if (output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write '" + output + "'");
        out << body;
    }
    return 0;
}

int cmd_convert(const Options&, const std::string& input, const std::string& orient,
                const std::string& weight_text, const std::string& output) {
    UndirectedGraph g = load_graph_input(input);
    Rational weight = Rational::parse(weight_text);
    AcyclicOrientation w = AcyclicOrientation::from_arcs(g, parse_orientation_spec(orient));
    WeightedSymmetricDigraph d = to_symmetric_digraph(g, weight);
    std::vector<long long> tokens(d.arc_count(), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        if (w.directs(u, v)) tokens[i] = 1;
    }
    Marking t(d, std::move(tokens));
    if (output.empty())
        write_tmg(std::cout, d, t);
    else
        save_tmg(output, d, t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular chromatic numbers via colorings, cycle ratios and token games"};
    app.require_subcommand(1);

    Options global;
    app.add_flag("--json", global.json, "emit JSON instead of text");
    app.add_option("--seed", global.seed, "default seed for randomized helpers");
    app.add_option("--orientation-cap", global.orientation_cap,
                   "max acyclic orientations to enumerate");
    app.add_option("--pulse-cap", global.pulse_cap, "max simulation pulses / reversal steps");
    app.add_option("--alpha-t-cap", global.alpha_t_cap, "vertex cap for alpha_t");
    app.add_option("--sets-cap", global.independent_sets_cap,
                   "vertex cap for independent-set enumeration");

    std::string input, method = "auto", orient, col_path, kd_path, output, dot_dir;
    std::string weight_text = "1", name;
    std::vector<int> ts;
    bool check_ratio = false, trace = false, dot = false;
    std::optional<std::uint64_t> random_seed;

    auto* chi = app.add_subcommand("chi", "compute the circular chromatic number");
    chi->add_option("input", input, "graph path (.ug/.tmg) or catalog:<name>[:<param>]")
        ->required();
    chi->add_option("--method", method,
                    "kd | minty | dynamics | all (default: all up to 6 vertices, else kd)")
        ->check(CLI::IsMember({"auto", "kd", "minty", "dynamics", "all"}));

    auto* bounds = app.add_subcommand("bounds", "lower bounds with hypothesis logs");
    bounds->add_option("input", input, "graph path or catalog spec")->required();
    bounds->add_option("--t", ts, "extra t values for the alpha_t and alpha1-1 bounds");

    auto* simulate = app.add_subcommand("simulate", "token game to its steady state");
    simulate->add_option("input", input, "timed marked graph (.tmg)")->required();
    simulate->add_flag("--check-ratio", check_ratio, "compare p/m with the max cycle ratio");
    simulate->add_flag("--trace", trace, "stream per-pulse JSON records");

    auto* sinkseq = app.add_subcommand("sinkseq", "sink-reversal orientation dynamics");
    sinkseq->add_option("input", input, "graph path or catalog spec")->required();
    sinkseq->add_option("--orient", orient, "orientation as u>v,... covering every edge");
    sinkseq->add_option("--random-seed", random_seed, "seeded random acyclic orientation");
    sinkseq->add_option("--dot-dir", dot_dir, "dump one DOT file per orientation over a period");

    auto* ratio = app.add_subcommand("ratio", "maximum cycle ratio of a timed marked graph");
    ratio->add_option("input", input, "timed marked graph (.tmg)")->required();

    auto* verify = app.add_subcommand("verify-coloring", "check a coloring file against a graph");
    verify->add_option("input", input, "graph path or catalog spec")->required();
    verify->add_option("--coloring", col_path, "circular coloring (.col)");
    verify->add_option("--kd", kd_path, "(k,d)-coloring file");

    auto* cat = app.add_subcommand("catalog", "write a named graph");
    cat->add_option("name", name, "cycle:<n> oddwheel:<k> petersen petersen-line q gn:<n> w:<n>")
        ->required();
    cat->add_option("-o,--output", output, "output path (stdout if omitted)");
    cat->add_flag("--dot", dot, "emit DOT instead of .ug");

    auto* convert = app.add_subcommand("convert", "orient a graph into a unit-marking .tmg");
    convert->add_option("input", input, "graph path or catalog spec")->required();
    convert->add_option("--orient", orient, "orientation as u>v,...")->required();
    convert->add_option("--weight", weight_text, "uniform arc weight (default 1)");
    convert->add_option("-o,--output", output, "output path (stdout if omitted)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (chi->parsed()) return cmd_chi(global, input, method);
        if (bounds->parsed()) return cmd_bounds(global, input, ts);
        if (simulate->parsed()) return cmd_simulate(global, input, check_ratio, trace);
        if (sinkseq->parsed()) return cmd_sinkseq(global, input, orient, random_seed, dot_dir);
        if (ratio->parsed()) return cmd_ratio(global, input);
        if (verify->parsed()) return cmd_verify(global, input, col_path, kd_path);
        if (cat->parsed()) return cmd_catalog(global, name, output, dot);
        if (convert->parsed()) return cmd_convert(global, input, orient, weight_text, output);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
