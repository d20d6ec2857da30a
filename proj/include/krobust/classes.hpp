#pragma once

// Membership in the universal class (every solution is k-robust) and the
// existential class (some solution is), plus the structural recognizers the
// closed-form characterizations rest on:
//
//   mds, any k >= 1 or infinite:  member iff the graph is a sputnik
//                                 (every vertex on a cycle has a degree-1
//                                 neighbor hanging off it);
//   mm, k = 1:                    member iff tree, balanced complete
//                                 bipartite, or even clique;
//   mm, k >= 2 or infinite:       member iff tree or the 4-cycle.
//
// Universal mis has no closed form here; brute force is the only route, and
// a strict-hierarchy witness family separates consecutive budgets (see
// gk_witness in construct.hpp).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "krobust/enumerate.hpp"
#include "krobust/graph.hpp"
#include "krobust/robustness.hpp"
#include "krobust/solution.hpp"

namespace krobust {

// ----- recognizers ------------------------------------------------------------

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

inline bool is_even_clique(const Graph& g) {
    const int n = g.vertex_count();
    return n >= 2 && n % 2 == 0 && g.edge_count() == n * (n - 1) / 2;
}

inline bool is_balanced_complete_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || n % 2 != 0 || !is_connected(g)) return false;
    // 2-color by BFS; connectivity makes the coloring unique up to swap.
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    color[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (std::uint64_t nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
            int w = std::countr_zero(nb);
            if (color[static_cast<std::size_t>(w)] == -1) {
                color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                queue.push_back(w);
            } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    int a = 0;
    for (int v = 0; v < n; ++v) a += color[static_cast<std::size_t>(v)] == 0 ? 1 : 0;
    return a * 2 == n && g.edge_count() == a * (n - a);
}

inline bool is_cycle4(const Graph& g) {
    if (g.vertex_count() != 4 || g.edge_count() != 4 || !is_connected(g)) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Every vertex that lies on a cycle has an antenna: a neighbor of degree 1.
inline bool is_sputnik(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_sputnik: graph must be connected");
    const EdgeSet br = bridges(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool on_cycle = false;
        for (std::uint64_t nb = g.neighbors(v); nb != 0 && !on_cycle; nb &= nb - 1)
            on_cycle = !std::binary_search(br.begin(), br.end(),
                                           make_edge(v, std::countr_zero(nb)));
        if (!on_cycle) continue;
        bool antenna = false;
        for (std::uint64_t nb = g.neighbors(v); nb != 0 && !antenna; nb &= nb - 1)
            antenna = g.degree(std::countr_zero(nb)) == 1;
        if (!antenna) return false;
    }
    return true;
}

// ----- class verdicts ----------------------------------------------------------

enum class Mode { universal, existential };
enum class Method { theorem, bruteforce };

struct ClassVerdict {
    Problem problem = Problem::mis;
    Budget k;
    Mode mode = Mode::universal;
    bool member = false;
    Method method = Method::bruteforce;
    // universal non-member: first failing solution plus its verdict.
    // existential member: first robust solution.
    std::optional<Solution> witness_solution;
    std::optional<RobustnessVerdict> witness_verdict;
};

inline ClassVerdict universal_class_check(Problem p, const Graph& g, Budget k, Method method,
                                          bool override_guard = false) {
    if (!is_connected(g))
        throw std::invalid_argument("class membership is defined on connected graphs only");
    ClassVerdict out;
    out.problem = p;
    out.k = k;
    out.mode = Mode::universal;
    out.method = method;

    if (method == Method::theorem) {
        if (p == Problem::mis)
            throw std::invalid_argument(
                "universal mis has no closed-form characterization; use bruteforce");
        if (!k.infinite && k.value == 0)
            throw std::invalid_argument(
                "closed-form characterizations cover budgets k >= 1 only");
        if (g.vertex_count() == 0)
            throw std::invalid_argument("closed-form characterizations need a nonempty graph");
        if (p == Problem::mds) {
            out.member = is_sputnik(g);
        } else {
            const bool k1 = !k.infinite && k.value == 1;
            out.member = k1 ? is_tree(g) || is_balanced_complete_bipartite(g) || is_even_clique(g)
                            : is_tree(g) || is_cycle4(g);
        }
        return out;
    }

    SolutionList all = enumerate_solutions(p, g, override_guard);
    for (const Solution& s : all.items) {
        RobustnessVerdict v = check_k_robust(p, g, s, k, override_guard);
        if (!v.robust) {
            out.member = false;
            out.witness_solution = s;
            out.witness_verdict = std::move(v);
            return out;
        }
    }
    out.member = true;
    return out;
}

inline ClassVerdict existential_search(Problem p, const Graph& g, Budget k,
                                       bool override_guard = false) {
    if (!is_connected(g))
        throw std::invalid_argument("class membership is defined on connected graphs only");
    ClassVerdict out;
    out.problem = p;
    out.k = k;
    out.mode = Mode::existential;
    out.method = Method::bruteforce;
    SolutionList all = enumerate_solutions(p, g, override_guard);
    for (const Solution& s : all.items) {
        if (check_k_robust(p, g, s, k, override_guard).robust) {
            out.member = true;
            out.witness_solution = s;
            return out;
        }
    }
    out.member = false;
    return out;
}

// Lexicographically least independent 2-dominating set, if one exists.
// Exhaustive over vertex masks, hence the n <= 24 guard.
inline std::optional<std::vector<int>> find_independent_2_dominating(const Graph& g,
                                                                     bool override_guard = false) {
    const int n = g.vertex_count();
    if (n > 24 && !override_guard)
        throw std::invalid_argument("independent 2-dominating search over " + std::to_string(n) +
                                    " vertices refused (guard: n <= 24); pass the override");
    const auto& adj = g.adjacency();
    const std::uint64_t all = g.vertex_mask();
    bool have = false;
    std::uint64_t best = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (std::uint64_t t = mask; ok && t != 0; t &= t - 1)
            ok = (adj[std::countr_zero(t)] & mask) == 0;
        for (std::uint64_t r = all & ~mask; ok && r != 0; r &= r - 1)
            ok = std::popcount(adj[std::countr_zero(r)] & mask) >= 2;
        if (ok && (!have || detail::lex_less_mask(mask, best))) {
            best = mask;
            have = true;
        }
    }
    if (!have) return std::nullopt;
    std::vector<int> out;
    for (std::uint64_t t = best; t != 0; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

// On 2-edge-connected graphs, a 1-robust maximal independent set is exactly
// an independent 2-dominating set, so existence reduces to that search.
inline std::optional<std::vector<int>> exists_1_robust_mis_via_equivalence(
    const Graph& g, bool override_guard = false) {
    if (!is_t_edge_connected(g, 2, override_guard))
        throw std::invalid_argument("the equivalence requires a 2-edge-connected graph");
    return find_independent_2_dominating(g, override_guard);
}

inline int min_mis_size(const Graph& g, bool override_guard = false) {
    SolutionList all = enumerate_solutions(Problem::mis, g, override_guard);
    std::size_t best = static_cast<std::size_t>(g.vertex_count());
    for (const Solution& s : all.items) best = std::min(best, s.vertices.size());
    return static_cast<int>(best);
}

}  // namespace krobust
