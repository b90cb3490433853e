#pragma once

#include <optional>
#include <vector>

#include "circhi/cycle_ratio.hpp"
#include "circhi/digraph.hpp"
#include "circhi/graph.hpp"

namespace circhi {

// Points on the circle [0, perimeter), one per vertex.
class CircularColoring {
  public:
    CircularColoring(Rational perimeter, std::vector<Rational> points);
    const Rational& perimeter() const { return perimeter_; }
    const std::vector<Rational>& points() const { return points_; }
    const Rational& point(int v) const { return points_[v]; }
    int vertex_count() const { return static_cast<int>(points_.size()); }

  private:
    Rational perimeter_;
    std::vector<Rational> points_;
};

// Colors 0..k-1 with every edge difference in [d, k-d]; k >= 2d >= 2.
class KdColoring {
  public:
    KdColoring(long long k, long long d, std::vector<long long> colors);
    long long k() const { return k_; }
    long long d() const { return d_; }
    const std::vector<long long>& colors() const { return colors_; }

  private:
    long long k_, d_;
    std::vector<long long> colors_;
};

// Firing times f_u(k) = offset_u + period * (k - 1).
struct PeriodicSchedule {
    Rational period;
    std::vector<Rational> offsets;
};

struct WeakColoringReport {
    CircularColoring coloring;
    bool valid = false;
    std::optional<std::vector<int>> tight_dicycle;
};

// Arcs that are tight (or weight-0 monochromatic) under a weak coloring.
struct TightnessDigraph {
    int vertex_count = 0;
    std::vector<Arc> arcs;
};

// Clockwise arc length from x to y on the circle of perimeter p; 0 for x == y.
Rational circ_dist(const Rational& x, const Rational& y, const Rational& p);

// d(phi(u), phi(v)) >= c_uv on every arc, by exact comparison.
bool verify_circular_coloring(const WeightedSymmetricDigraph& d, const CircularColoring& phi);

bool verify_kd_coloring(const UndirectedGraph& g, const KdColoring& f);

// Points f(v)/d on the circle of perimeter k/d.
CircularColoring kd_to_circular(const KdColoring& f);

// Deterministic backtracking: lowest-index vertex next, colors ascending,
// forward checking on the circular interval domains; the first vertex is
// pinned to color 0 (colorings are closed under rotation).
std::optional<KdColoring> find_kd_coloring(const UndirectedGraph& g, long long k, long long d);

struct ChiCKdResult {
    Rational value;
    std::optional<KdColoring> witness;  // absent only for edgeless graphs
};

// Least colorable reduced k/d with k <= |V|, d <= alpha(G) and
// |V|/alpha(G) <= k/d <= chi(G), searched in increasing order.
ChiCKdResult chi_c_exact_kd(const UndirectedGraph& g);

struct ChiCMintyResult {
    Rational value;
    Marking witness;
};

// min over good markings (equivalently acyclic orientations of the underlying
// graph) of the maximum cycle ratio.
ChiCMintyResult chi_c_exact_minty(const WeightedSymmetricDigraph& d, long long orientation_cap = 0);

struct ChiCDynamicsResult {
    Rational value;
    AcyclicOrientation witness;
};

// min over acyclic orientations of p_w / m_w from the sink-reversal sequence.
ChiCDynamicsResult chi_c_via_dynamics(const UndirectedGraph& g, long long orientation_cap = 0);

// min over good markings of the simulated steady-state ratio p/m: the
// token-game counterpart of chi_c_exact_minty for weighted digraphs.
ChiCMintyResult chi_c_via_token_game(const WeightedSymmetricDigraph& d,
                                     long long orientation_cap = 0, long long pulse_cap = 0);

PeriodicSchedule schedule_from_coloring(const CircularColoring& phi);

// Token toward the earlier point on each edge pair: T_uv = 0, T_vu = 1 when
// phi(v) > phi(u), and T_uv = 1, T_vu = 0 otherwise (pairs read with u < v).
// Requires phi to be a valid circular coloring of d.
Marking marking_from_coloring(const WeightedSymmetricDigraph& d, const CircularColoring& phi);

// offsets mod period must verify as a circular coloring of d.
CircularColoring coloring_from_schedule(const WeightedSymmetricDigraph& d,
                                        const PeriodicSchedule& s);

// Event-by-event replay of the schedule on (d, t): true iff every firing finds
// a token on each in-arc, checked for the first `firings_per_vertex` firings.
bool replay_schedule_admissible(const WeightedSymmetricDigraph& d, const Marking& t,
                                const PeriodicSchedule& s, long long firings_per_vertex = 4);

// Either endpoints coincide or the distance condition holds, and no color
// class contains a dicycle of strictly positive-weight arcs. The perimeter
// must be at least max(c_uv + c_vu).
bool verify_weak_circular_coloring(const WeightedSymmetricDigraph& d, const CircularColoring& phi);

TightnessDigraph tightness_digraph(const WeightedSymmetricDigraph& d, const CircularColoring& phi);

// Smallest dicycle of the tightness digraph, or nullopt if it is acyclic.
std::optional<std::vector<int>> find_tight_dicycle(const WeightedSymmetricDigraph& d,
                                                   const CircularColoring& phi);

// Longest-walk construction under weights c - r T, reduced mod r. Requires a
// good marking and r at least the maximum cycle ratio (throws PositiveCycle
// below it).
WeakColoringReport weak_coloring_from_marking(const WeightedSymmetricDigraph& d, const Marking& t,
                                              const Rational& r);

}  // namespace circhi
