#pragma once

#include <iosfwd>
#include <string>

#include "circhi/circular.hpp"
#include "circhi/digraph.hpp"
#include "circhi/graph.hpp"

namespace circhi {

// Undirected graph file (.ug): '#' comments, "n <count>", then "e u v" lines.
UndirectedGraph parse_ug(std::istream& in, const std::string& name = "<stream>");
UndirectedGraph load_ug(const std::string& path);
void write_ug(std::ostream& out, const UndirectedGraph& g);
void save_ug(const std::string& path, const UndirectedGraph& g);

// Timed marked graph file (.tmg): "n <count>", then "a u v <weight> <tokens>"
// per arc, weight as an integer or num/den. Symmetry is validated on load.
struct TimedMarkedGraph {
    WeightedSymmetricDigraph digraph;
    Marking marking;
};
TimedMarkedGraph parse_tmg(std::istream& in, const std::string& name = "<stream>");
TimedMarkedGraph load_tmg(const std::string& path);
void write_tmg(std::ostream& out, const WeightedSymmetricDigraph& d, const Marking& t);
void save_tmg(const std::string& path, const WeightedSymmetricDigraph& d, const Marking& t);

// Circular coloring file (.col): "p <num>/<den>", then "c <v> <num>/<den>".
CircularColoring parse_col(std::istream& in, int vertex_count, const std::string& name = "<stream>");
CircularColoring load_col(const std::string& path, int vertex_count);
void write_col(std::ostream& out, const CircularColoring& phi);
void save_col(const std::string& path, const CircularColoring& phi);

// (k,d)-coloring file (.kd): "kd <k> <d>", then "c <v> <color>".
KdColoring parse_kd(std::istream& in, int vertex_count, const std::string& name = "<stream>");
KdColoring load_kd(const std::string& path, int vertex_count);
void write_kd(std::ostream& out, const KdColoring& f);
void save_kd(const std::string& path, const KdColoring& f);

std::string dot_graph(const UndirectedGraph& g);
std::string dot_orientation(const AcyclicOrientation& w);
std::string dot_coloring(const UndirectedGraph& g, const CircularColoring& phi);

}  // namespace circhi
