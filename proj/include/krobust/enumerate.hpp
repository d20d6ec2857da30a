#pragma once

// Exhaustive solution enumeration by subset filtering. Deliberately the
// dumbest correct thing: every vertex mask (mis/mds) or edge mask (mm) is
// tested against the full validity predicate. Guards keep it at desk scale.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "krobust/graph.hpp"
#include "krobust/solution.hpp"

namespace krobust {

struct SolutionList {
    Problem problem = Problem::mis;
    std::vector<Solution> items;  // canonical order: sorted member tuples
};

inline SolutionList enumerate_solutions(Problem p, const Graph& g, bool override_guard = false) {
    if (!is_connected(g))
        throw std::invalid_argument("enumeration is defined on connected graphs only");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    SolutionList out;
    out.problem = p;

    if (p == Problem::mm) {
        if (m > 24 && !override_guard)
            throw std::invalid_argument("matching enumeration over " + std::to_string(m) +
                                        " edges refused (guard: m <= 24); pass the override");
        const auto& es = g.edges();
        const std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t emask = 0; emask < total; ++emask) {
            if (!detail::mm_valid(es, emask)) continue;
            EdgeSet sel;
            for (std::uint64_t t = emask; t != 0; t &= t - 1)
                sel.push_back(es[static_cast<std::size_t>(std::countr_zero(t))]);
            out.items.push_back(Solution{Problem::mm, {}, std::move(sel)});
        }
        std::sort(out.items.begin(), out.items.end(),
                  [](const Solution& a, const Solution& b) { return a.edge_pairs < b.edge_pairs; });
        return out;
    }

    if (n > 20 && !override_guard)
        throw std::invalid_argument("vertex-set enumeration over " + std::to_string(n) +
                                    " vertices refused (guard: n <= 20); pass the override");
    const auto& adj = g.adjacency();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = p == Problem::mis ? detail::mis_valid(adj, n, mask)
                                    : detail::mds_valid(adj, n, mask);
        if (!ok) continue;
        std::vector<int> vs;
        for (std::uint64_t t = mask; t != 0; t &= t - 1) vs.push_back(std::countr_zero(t));
        out.items.push_back(Solution{p, std::move(vs), {}});
    }
    std::sort(out.items.begin(), out.items.end(),
              [](const Solution& a, const Solution& b) { return a.vertices < b.vertices; });
    return out;
}

}  // namespace krobust
