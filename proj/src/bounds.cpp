#include "circhi/bounds.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <string>

#include "circhi/catalog.hpp"

namespace circhi {

namespace {

std::vector<int> by_descending_degree(const UndirectedGraph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Greedy clique along descending degrees: a quick chromatic lower bound.
int greedy_clique_size(const UndirectedGraph& g) {
    std::vector<int> clique;
    for (int v : by_descending_degree(g)) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](int u) { return g.has_edge(u, v); });
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

int greedy_coloring_size(const UndirectedGraph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    int used = 0;
    for (int v : by_descending_degree(g)) {
        std::vector<char> taken(g.degree(v) + 1, 0);
        for (int w : g.neighbors(v))
            if (color[w] >= 0 && color[w] <= g.degree(v)) taken[color[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

std::string vertex_list(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

}  // namespace

std::optional<std::vector<int>> is_k_colorable(const UndirectedGraph& g, int k) {
    int n = g.vertex_count();
    if (n == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;
    std::vector<int> order = by_descending_degree(g);
    std::vector<int> color(n, -1);

    // New colors are introduced in order, which prunes color permutations.
    std::function<bool(int, int)> assign = [&](int pos, int used) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool free = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                     [&](int w) { return color[w] == c; });
            if (!free) continue;
            color[v] = c;
            if (assign(pos + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!assign(0, 0)) return std::nullopt;
    return color;
}

int chromatic_number(const UndirectedGraph& g) {
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    int low = std::max(2, greedy_clique_size(g));
    int high = greedy_coloring_size(g);
    for (int k = low; k < high; ++k)
        if (is_k_colorable(g, k)) return k;
    return high;
}

namespace {

// Branch and bound on the highest-degree remaining vertex.
void mis_search(const UndirectedGraph& g, std::vector<int>& candidates, std::vector<int>& chosen,
                std::vector<int>& best) {
    if (chosen.size() + candidates.size() <= best.size()) return;
    if (candidates.empty()) {
        best = chosen;
        return;
    }
    int pick = candidates[0];
    for (int v : candidates) {
        if (g.degree(v) > g.degree(pick)) pick = v;
    }
    std::vector<int> without;
    for (int v : candidates)
        if (v != pick) without.push_back(v);

    // Include pick.
    std::vector<int> reduced;
    for (int v : without)
        if (!g.has_edge(pick, v)) reduced.push_back(v);
    chosen.push_back(pick);
    mis_search(g, reduced, chosen, best);
    chosen.pop_back();

    // Exclude pick.
    mis_search(g, without, chosen, best);
}

}  // namespace

int independence_number(const UndirectedGraph& g) {
    std::vector<int> candidates(g.vertex_count());
    std::iota(candidates.begin(), candidates.end(), 0);
    std::vector<int> chosen, best;
    mis_search(g, candidates, chosen, best);
    return static_cast<int>(best.size());
}

std::vector<std::vector<int>> all_maximum_independent_sets(const UndirectedGraph& g,
                                                           int vertex_cap) {
    if (g.vertex_count() > vertex_cap)
        throw CapExceeded("independent set enumeration capped at " + std::to_string(vertex_cap) +
                          " vertices");
    int alpha = independence_number(g);
    std::vector<std::vector<int>> result;
    std::vector<int> chosen;
    // Lexicographic enumeration of all independent sets of size alpha.
    std::function<void(int)> extend = [&](int next) {
        if (static_cast<int>(chosen.size()) == alpha) {
            result.push_back(chosen);
            return;
        }
        int missing = alpha - static_cast<int>(chosen.size());
        for (int v = next; v + missing <= g.vertex_count(); ++v) {
            bool free = std::none_of(chosen.begin(), chosen.end(),
                                     [&](int u) { return g.has_edge(u, v); });
            if (!free) continue;
            chosen.push_back(v);
            extend(v + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    return result;
}

namespace {

bool is_bipartite(const UndirectedGraph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool subgraph_t_colorable(const UndirectedGraph& sub, int t) {
    if (t == 1) return sub.edge_count() == 0;
    if (t == 2) return is_bipartite(sub);
    return is_k_colorable(sub, t).has_value();
}

}  // namespace

int alpha_t(const UndirectedGraph& g, int t, int vertex_cap) {
    if (t < 1) throw DomainError("alpha_t needs t >= 1");
    if (g.vertex_count() > vertex_cap)
        throw CapExceeded("alpha_t capped at " + std::to_string(vertex_cap) + " vertices");
    int n = g.vertex_count();
    // Remove j vertices, fewest first: alpha_t = n - min removals.
    for (int removals = 0; removals <= n; ++removals) {
        std::vector<int> removed;
        std::function<bool(int)> choose = [&](int next) -> bool {
            if (static_cast<int>(removed.size()) == removals) {
                std::vector<char> keep(n, 1);
                for (int v : removed) keep[v] = 0;
                std::vector<int> kept;
                for (int v = 0; v < n; ++v)
                    if (keep[v]) kept.push_back(v);
                return subgraph_t_colorable(g.induced(kept), t);
            }
            for (int v = next; v < n; ++v) {
                removed.push_back(v);
                if (choose(v + 1)) return true;
                removed.pop_back();
            }
            return false;
        };
        if (choose(0)) return n - removals;
    }
    return 0;
}

namespace {

int neighborhood_chromatic(const UndirectedGraph& g, const std::vector<int>& vertices) {
    return chromatic_number(g.induced(vertices));
}

}  // namespace

BoundReport bound_d1(const UndirectedGraph& g) {
    BoundReport report{"d1", true, {}, std::nullopt};
    int best = -1, best_vertex = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int chi = neighborhood_chromatic(g, g.neighbors(u));
        if (chi > best) {
            best = chi;
            best_vertex = u;
        }
    }
    report.hypotheses.push_back(
        {"max_u chi(N_1(u))", true,
         "u=" + std::to_string(best_vertex) + ": chi(N_1)=" + std::to_string(best)});
    report.value = Rational(best + 1);
    return report;
}

BoundReport bound_alphat(const UndirectedGraph& g, int t, int vertex_cap) {
    if (t < 1) throw DomainError("bound_alphat needs t >= 1");
    BoundReport report{"alphat(t=" + std::to_string(t) + ")", false, {}, std::nullopt};
    int worst = -1, worst_vertex = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int chi = neighborhood_chromatic(g, g.neighbors(u));
        if (worst < 0 || chi < worst) {
            worst = chi;
            worst_vertex = u;
        }
    }
    bool holds = worst >= t - 1;
    report.hypotheses.push_back({"chi(N_1(u)) >= t-1 for every u", holds,
                                 "min at u=" + std::to_string(worst_vertex) +
                                     ": chi(N_1)=" + std::to_string(worst)});
    if (!holds) return report;
    int at = alpha_t(g, t, vertex_cap);
    report.hypotheses.push_back({"alpha_t computed", true,
                                 "alpha_" + std::to_string(t) + "=" + std::to_string(at)});
    report.applicable = true;
    report.value = Rational(static_cast<long long>(t) * g.vertex_count(), at);
    return report;
}

std::pair<UndirectedGraph, BoundReport> bound_new(const UndirectedGraph& h,
                                                  const std::vector<UndirectedGraph>& parts) {
    UndirectedGraph composed = compose_new(h, parts);
    BoundReport report{"new", false, {}, std::nullopt};

    int t = parts.empty() ? 0 : chromatic_number(parts[0]);
    bool equal_chromatic = !parts.empty();
    std::string chi_list;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int chi = chromatic_number(parts[i]);
        if (i) chi_list += ",";
        chi_list += std::to_string(chi);
        if (chi != t) equal_chromatic = false;
    }
    report.hypotheses.push_back({"all parts t-chromatic", equal_chromatic,
                                 "chi(H_i)=[" + chi_list + "]"});
    int chi_h = chromatic_number(h);
    bool h_ok = chi_h >= 3;
    report.hypotheses.push_back({"chi(H) >= 3", h_ok, "chi(H)=" + std::to_string(chi_h)});
    if (equal_chromatic && h_ok) {
        report.applicable = true;
        report.value = Rational(t + 2);
    }
    return {std::move(composed), std::move(report)};
}

BoundReport bound_d2(const UndirectedGraph& g) {
    BoundReport report{"d2", false, {}, std::nullopt};
    int best = -1, best_vertex = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int chi = neighborhood_chromatic(g, neighborhood(g, u, 2));
        if (chi > best) {
            best = chi;
            best_vertex = u;
        }
    }
    bool holds = best >= 3;
    report.hypotheses.push_back({"chi(N_2(u)) >= 3 for some u", holds,
                                 "max at u=" + std::to_string(best_vertex) +
                                     ": chi(N_2)=" + std::to_string(best)});
    if (holds) {
        report.applicable = true;
        report.value = Rational(3);
    }
    return report;
}

BoundReport bound_alpha2(const UndirectedGraph& g, int alpha_t_cap) {
    BoundReport report{"alpha2", false, {}, std::nullopt};
    int n = g.vertex_count();
    int alpha = independence_number(g);

    bool p1 = true;
    std::string p1_witness = "all nonadjacent pairs pass";
    for (int u = 0; u < n && p1; ++u) {
        for (int v = u + 1; v < n && p1; ++v) {
            if (g.has_edge(u, v)) continue;
            int chi = neighborhood_chromatic(g, neighborhood_of_set(g, {u, v}));
            if (chi < 2) {
                p1 = false;
                p1_witness = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                             "): chi(N_1(u,v))=" + std::to_string(chi);
            }
        }
    }
    report.hypotheses.push_back({"P1: chi(N_1(u,v)) >= 2 for nonadjacent u,v", p1, p1_witness});

    bool p2 = n <= 3 * alpha - 3;
    report.hypotheses.push_back({"P2: |V| <= 3 alpha - 3", p2,
                                 "|V|=" + std::to_string(n) + ", alpha=" + std::to_string(alpha)});

    int a2 = alpha_t(g, 2, alpha_t_cap);
    bool p3 = a2 < 2 * alpha;
    report.hypotheses.push_back({"P3: alpha_2 < 2 alpha", p3,
                                 "alpha_2=" + std::to_string(a2) +
                                     ", alpha=" + std::to_string(alpha)});

    int chi = chromatic_number(g);
    bool p4 = chi >= 3;
    report.hypotheses.push_back({"P4: chi(G) >= 3", p4, "chi=" + std::to_string(chi)});

    if (p1 && p2 && p3 && p4) {
        report.applicable = true;
        report.value = Rational(3LL * n, 3LL * alpha - 2);
    }
    return report;
}

BoundReport bound_alpha1_1(const UndirectedGraph& g, int t, int independent_sets_cap) {
    if (t < 1) throw DomainError("bound_alpha1_1 needs t >= 1");
    BoundReport report{"alpha1-1(t=" + std::to_string(t) + ")", false, {}, std::nullopt};
    int n = g.vertex_count();
    int alpha = independence_number(g);

    bool p1 = true;
    std::string p1_witness = "all vertices pass";
    for (int v = 0; v < n; ++v) {
        int chi = neighborhood_chromatic(g, g.neighbors(v));
        if (chi < t - 2) {
            p1 = false;
            p1_witness = "v=" + std::to_string(v) + ": chi(N_1)=" + std::to_string(chi);
            break;
        }
    }
    report.hypotheses.push_back({"P1: chi(N_1(v)) >= t-2 for every v", p1, p1_witness});

    auto max_sets = all_maximum_independent_sets(g, independent_sets_cap);

    bool p2 = true;
    std::string p2_witness = std::to_string(max_sets.size()) + " maximum independent sets pass";
    for (const auto& set : max_sets) {
        int chi = neighborhood_chromatic(g, neighborhood_of_set(g, set));
        if (chi < t - 1) {
            p2 = false;
            p2_witness = "I=" + vertex_list(set) + ": chi(N_1(I))=" + std::to_string(chi);
            break;
        }
    }
    report.hypotheses.push_back({"P2: chi(N_1(I)) >= t-1 for every maximum independent set", p2,
                                 p2_witness});

    bool p3 = n <= static_cast<long long>(t) * alpha - t;
    report.hypotheses.push_back({"P3: |V| <= t alpha - t", p3,
                                 "|V|=" + std::to_string(n) + ", alpha=" + std::to_string(alpha)});

    bool p4 = true;
    std::string p4_witness = std::to_string(max_sets.size()) + " sets, all pairs meet in one vertex";
    for (std::size_t i = 0; i < max_sets.size() && p4; ++i) {
        for (std::size_t j = i + 1; j < max_sets.size() && p4; ++j) {
            std::vector<int> common;
            std::set_intersection(max_sets[i].begin(), max_sets[i].end(), max_sets[j].begin(),
                                  max_sets[j].end(), std::back_inserter(common));
            if (common.size() != 1) {
                p4 = false;
                p4_witness = "I=" + vertex_list(max_sets[i]) + ", J=" + vertex_list(max_sets[j]) +
                             ": |I and J|=" + std::to_string(common.size());
            }
        }
    }
    report.hypotheses.push_back(
        {"P4: distinct maximum independent sets intersect in exactly one vertex", p4, p4_witness});

    int chi = chromatic_number(g);
    bool p5 = chi >= t;
    report.hypotheses.push_back({"P5: chi(G) >= t", p5, "chi=" + std::to_string(chi)});

    if (p1 && p2 && p3 && p4 && p5) {
        report.applicable = true;
        report.value = Rational(static_cast<long long>(t) * n,
                                static_cast<long long>(t) * alpha - (t - 1));
    }
    return report;
}

BestBounds best_lower_bound(const UndirectedGraph& g, const BoundConfig& config) {
    BestBounds result;
    int alpha = independence_number(g);
    {
        BoundReport trivial{"trivial", true, {}, Rational(g.vertex_count(), alpha)};
        trivial.hypotheses.push_back({"|V| / alpha", true, "alpha=" + std::to_string(alpha)});
        result.reports.push_back(std::move(trivial));
    }
    result.reports.push_back(bound_d1(g));
    std::vector<int> ts = config.t_values;
    if (ts.empty()) {
        int chi = chromatic_number(g);
        for (int t = 2; t <= chi; ++t) ts.push_back(t);
    }
    for (int t : ts) result.reports.push_back(bound_alphat(g, t, config.alpha_t_cap));
    result.reports.push_back(bound_d2(g));
    result.reports.push_back(bound_alpha2(g, config.alpha_t_cap));
    for (int t : ts) result.reports.push_back(bound_alpha1_1(g, t, config.independent_sets_cap));

    for (const auto& report : result.reports) {
        if (!report.applicable) continue;
        if (!result.best || *report.value > *result.best) result.best = report.value;
    }
    return result;
}

}  // namespace circhi
