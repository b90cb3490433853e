#include "circhi/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <tuple>
#include <vector>

namespace circhi {

namespace {

// Splits a file into whitespace-separated records, dropping '#' comments and
// blank lines; keeps line numbers for error messages.
struct LineReader {
    std::istream& in;
    std::string name;
    int line_no = 0;

    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            fields.assign(std::istream_iterator<std::string>(ss),
                          std::istream_iterator<std::string>());
            if (!fields.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(name + ":" + std::to_string(line_no) + ": " + message);
    }
};

long long to_ll(const LineReader& reader, const std::string& field) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return value;
    } catch (const std::exception&) {
        reader.fail("expected an integer, got '" + field + "'");
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    return out;
}

}  // namespace

UndirectedGraph parse_ug(std::istream& in, const std::string& name) {
    LineReader reader{in, name};
    std::vector<std::string> fields;
    if (!reader.next(fields)) reader.fail("missing 'n <vertex_count>' header");
    if (fields.size() != 2 || fields[0] != "n") reader.fail("expected 'n <vertex_count>'");
    int n = static_cast<int>(to_ll(reader, fields[1]));
    std::vector<Edge> edges;
    while (reader.next(fields)) {
        if (fields.size() != 3 || fields[0] != "e") reader.fail("expected 'e u v'");
        edges.emplace_back(static_cast<int>(to_ll(reader, fields[1])),
                           static_cast<int>(to_ll(reader, fields[2])));
    }
    try {
        return UndirectedGraph(n, std::move(edges));
    } catch (const DomainError& e) {
        throw ParseError(name + ": " + e.what());
    }
}

UndirectedGraph load_ug(const std::string& path) {
    auto in = open_input(path);
    return parse_ug(in, path);
}

void write_ug(std::ostream& out, const UndirectedGraph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void save_ug(const std::string& path, const UndirectedGraph& g) {
    auto out = open_output(path);
    write_ug(out, g);
}

TimedMarkedGraph parse_tmg(std::istream& in, const std::string& name) {
    LineReader reader{in, name};
    std::vector<std::string> fields;
    if (!reader.next(fields)) reader.fail("missing 'n <vertex_count>' header");
    if (fields.size() != 2 || fields[0] != "n") reader.fail("expected 'n <vertex_count>'");
    int n = static_cast<int>(to_ll(reader, fields[1]));
    std::vector<std::tuple<int, int, Rational>> arcs;
    std::vector<long long> tokens;
    while (reader.next(fields)) {
        if (fields.size() != 5 || fields[0] != "a") reader.fail("expected 'a u v <weight> <tokens>'");
        Rational weight;
        try {
            weight = Rational::parse(fields[3]);
        } catch (const ParseError&) {
            reader.fail("bad weight '" + fields[3] + "'");
        }
        arcs.emplace_back(static_cast<int>(to_ll(reader, fields[1])),
                          static_cast<int>(to_ll(reader, fields[2])), weight);
        tokens.push_back(to_ll(reader, fields[4]));
    }
    try {
        WeightedSymmetricDigraph digraph(n, arcs);
        // Token values arrive in file order; realign to the digraph's arc order.
        std::vector<long long> by_arc(digraph.arc_count(), 0);
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            int id = digraph.arc_index(std::get<0>(arcs[i]), std::get<1>(arcs[i]));
            by_arc[id] = tokens[i];
        }
        Marking marking(digraph, std::move(by_arc));
        return TimedMarkedGraph{std::move(digraph), std::move(marking)};
    } catch (const DomainError& e) {
        throw ParseError(name + ": " + e.what());
    }
}

TimedMarkedGraph load_tmg(const std::string& path) {
    auto in = open_input(path);
    return parse_tmg(in, path);
}

void write_tmg(std::ostream& out, const WeightedSymmetricDigraph& d, const Marking& t) {
    t.check_domain(d);
    out << "n " << d.vertex_count() << "\n";
    for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arcs()[i];
        out << "a " << u << " " << v << " " << d.weight(i).str() << " " << t.tokens(i) << "\n";
    }
}

void save_tmg(const std::string& path, const WeightedSymmetricDigraph& d, const Marking& t) {
    auto out = open_output(path);
    write_tmg(out, d, t);
}

CircularColoring parse_col(std::istream& in, int vertex_count, const std::string& name) {
    LineReader reader{in, name};
    std::vector<std::string> fields;
    if (!reader.next(fields)) reader.fail("missing 'p <perimeter>' header");
    if (fields.size() != 2 || fields[0] != "p") reader.fail("expected 'p <perimeter>'");
    Rational perimeter = Rational::parse(fields[1]);
    std::vector<Rational> points(vertex_count, Rational(0));
    std::vector<char> seen(vertex_count, 0);
    while (reader.next(fields)) {
        if (fields.size() != 3 || fields[0] != "c") reader.fail("expected 'c <v> <point>'");
        long long v = to_ll(reader, fields[1]);
        if (v < 0 || v >= vertex_count) reader.fail("vertex out of range");
        if (seen[v]) reader.fail("vertex colored twice");
        seen[v] = 1;
        points[v] = Rational::parse(fields[2]);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v]) reader.fail("vertex " + std::to_string(v) + " has no point");
    try {
        return CircularColoring(perimeter, std::move(points));
    } catch (const DomainError& e) {
        throw ParseError(name + ": " + e.what());
    }
}

CircularColoring load_col(const std::string& path, int vertex_count) {
    auto in = open_input(path);
    return parse_col(in, vertex_count, path);
}

void write_col(std::ostream& out, const CircularColoring& phi) {
    out << "p " << phi.perimeter().str() << "\n";
    for (int v = 0; v < phi.vertex_count(); ++v)
        out << "c " << v << " " << phi.point(v).str() << "\n";
}

void save_col(const std::string& path, const CircularColoring& phi) {
    auto out = open_output(path);
    write_col(out, phi);
}

KdColoring parse_kd(std::istream& in, int vertex_count, const std::string& name) {
    LineReader reader{in, name};
    std::vector<std::string> fields;
    if (!reader.next(fields)) reader.fail("missing 'kd <k> <d>' header");
    if (fields.size() != 3 || fields[0] != "kd") reader.fail("expected 'kd <k> <d>'");
    long long k = to_ll(reader, fields[1]);
    long long d = to_ll(reader, fields[2]);
    std::vector<long long> colors(vertex_count, -1);
    while (reader.next(fields)) {
        if (fields.size() != 3 || fields[0] != "c") reader.fail("expected 'c <v> <color>'");
        long long v = to_ll(reader, fields[1]);
        if (v < 0 || v >= vertex_count) reader.fail("vertex out of range");
        if (colors[v] >= 0) reader.fail("vertex colored twice");
        colors[v] = to_ll(reader, fields[2]);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (colors[v] < 0) reader.fail("vertex " + std::to_string(v) + " has no color");
    try {
        return KdColoring(k, d, std::move(colors));
    } catch (const DomainError& e) {
        throw ParseError(name + ": " + e.what());
    }
}

KdColoring load_kd(const std::string& path, int vertex_count) {
    auto in = open_input(path);
    return parse_kd(in, vertex_count, path);
}

void write_kd(std::ostream& out, const KdColoring& f) {
    out << "kd " << f.k() << " " << f.d() << "\n";
    for (std::size_t v = 0; v < f.colors().size(); ++v)
        out << "c " << v << " " << f.colors()[v] << "\n";
}

void save_kd(const std::string& path, const KdColoring& f) {
    auto out = open_output(path);
    write_kd(out, f);
}

std::string dot_graph(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_orientation(const AcyclicOrientation& w) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < w.host().vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [tail, head] : w.arcs()) out << "  " << tail << " -> " << head << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_coloring(const UndirectedGraph& g, const CircularColoring& phi) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << v << ": " << phi.point(v).str() << "\"];\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace circhi
