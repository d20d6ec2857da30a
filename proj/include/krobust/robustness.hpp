#pragma once

// k-robustness of a solution: after removing any set of at most k edges that
// keeps the graph connected, the solution must still be valid for what is
// left. An infinite budget behaves exactly like k = m. Removal sets are
// swept by increasing size, lexicographically within a size, and the first
// failure is reported, so counterexamples are minimum-size and canonical.
//
// Validity under removal uses the reduced checks that the full predicates
// justify: independence cannot break when edges disappear, so a maximal
// independent set only needs the domination half re-checked; a minimal
// dominating set that still dominates is automatically still minimal (each
// selected vertex keeps a private neighbor when dominator sets shrink); a
// matching minus the removed edges stays a matching, so only maximality is
// re-checked, against the surviving edges.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "krobust/graph.hpp"
#include "krobust/solution.hpp"

namespace krobust {

struct Budget {
    bool infinite = false;
    int value = 0;

    static Budget inf() { return Budget{true, 0}; }
    static Budget at(int k) {
        if (k < 0) throw std::invalid_argument("robustness budget must be >= 0");
        return Budget{false, k};
    }
    int cap(int m) const { return infinite ? m : std::min(value, m); }

    friend bool operator==(const Budget& a, const Budget& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

inline std::string format_budget(const Budget& b) {
    return b.infinite ? "inf" : std::to_string(b.value);
}

inline Budget parse_budget(std::string_view s) {
    if (s == "inf") return Budget::inf();
    try {
        std::size_t pos = 0;
        int k = std::stoi(std::string(s), &pos);
        if (pos == s.size()) return Budget::at(k);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad budget '" + std::string(s) +
                                "' (expected a nonnegative integer or 'inf')");
}

// What breaks: an addable vertex (mis), an undominated vertex (mds), or an
// addable edge (mm).
using Witness = std::variant<int, Edge>;

struct Counterexample {
    EdgeSet removed;
    Witness witness;
};

struct RobustnessVerdict {
    bool robust = true;
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline RobustnessVerdict robustness_sweep(Problem p, const Graph& g, const Solution& s, int cap,
                                          bool filter_connectivity) {
    const EdgeSet& es = g.edges();
    const int n = g.vertex_count();
    const int m = static_cast<int>(es.size());

    std::vector<std::uint64_t> adj = g.adjacency();
    std::uint64_t smask = 0;
    std::uint64_t covered0 = 0;
    std::vector<char> in_matching(static_cast<std::size_t>(m), 0);
    if (p == Problem::mm) {
        std::size_t j = 0;
        for (const Edge& e : s.edge_pairs) {
            while (j < es.size() && es[j] < e) ++j;
            in_matching[j] = 1;
            covered0 |= bit(e.u) | bit(e.v);
        }
    } else {
        smask = vertex_mask_of(s.vertices);
    }
    const std::uint64_t all = g.vertex_mask();
    std::vector<char> removed(static_cast<std::size_t>(m), 0);

    auto find_violation = [&](std::uint64_t covered) -> std::optional<Witness> {
        if (p == Problem::mm) {
            for (std::size_t j = 0; j < es.size(); ++j) {
                if (removed[j] != 0) continue;
                if ((covered & (bit(es[j].u) | bit(es[j].v))) == 0) return Witness{es[j]};
            }
            return std::nullopt;
        }
        for (std::uint64_t r = all & ~smask; r != 0; r &= r - 1) {
            int v = std::countr_zero(r);
            if ((adj[static_cast<std::size_t>(v)] & smask) == 0) return Witness{v};
        }
        return std::nullopt;
    };

    for (int t = 0; t <= cap; ++t) {
        std::optional<Counterexample> found;
        for_each_combination(m, t, [&](const std::vector<int>& idx) {
            std::uint64_t covered = covered0;
            for (int i : idx) {
                const Edge& e = es[static_cast<std::size_t>(i)];
                adj[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
                adj[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
                removed[static_cast<std::size_t>(i)] = 1;
                if (in_matching[static_cast<std::size_t>(i)] != 0)
                    covered &= ~(bit(e.u) | bit(e.v));
            }
            std::optional<Witness> w;
            if (!filter_connectivity || mask_connected(adj, n)) w = find_violation(covered);
            for (int i : idx) {
                const Edge& e = es[static_cast<std::size_t>(i)];
                adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
                adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
                removed[static_cast<std::size_t>(i)] = 0;
            }
            if (!w) return false;
            EdgeSet rem;
            rem.reserve(idx.size());
            for (int i : idx) rem.push_back(es[static_cast<std::size_t>(i)]);
            found = Counterexample{std::move(rem), *w};
            return true;
        });
        if (found) return RobustnessVerdict{false, std::move(found)};
    }
    return RobustnessVerdict{true, std::nullopt};
}

inline void check_robustness_preconditions(Problem p, const Graph& g, const Solution& s) {
    if (!is_connected(g))
        throw std::invalid_argument("robustness is defined on connected graphs only");
    if (!check_solution(p, g, s))
        throw std::invalid_argument("solution is not valid for the graph");
}

}  // namespace detail

// Sweep all removal sets up to the budget, skipping those that disconnect
// the graph. Throws on a disconnected graph or an invalid solution.
inline RobustnessVerdict check_k_robust(Problem p, const Graph& g, const Solution& s, Budget k,
                                        bool override_guard = false) {
    detail::check_robustness_preconditions(p, g, s);
    const int cap = k.cap(g.edge_count());
    detail::ensure_sweep_budget(g.edge_count(), cap, override_guard);
    return detail::robustness_sweep(p, g, s, cap, /*filter_connectivity=*/true);
}

// Same sweep with the connectivity filter off: every removal set counts,
// disconnecting or not. On (k+1)-edge-connected graphs this must agree with
// check_k_robust, which the tests assert wholesale.
inline RobustnessVerdict check_k_robust_unfiltered(Problem p, const Graph& g, const Solution& s,
                                                   Budget k, bool override_guard = false) {
    detail::check_robustness_preconditions(p, g, s);
    const int cap = k.cap(g.edge_count());
    detail::ensure_sweep_budget(g.edge_count(), cap, override_guard);
    return detail::robustness_sweep(p, g, s, cap, /*filter_connectivity=*/false);
}

// Smallest k at which the solution stops being k-robust, or an infinite
// budget if it survives every connectivity-preserving removal.
inline Budget min_break_budget(Problem p, const Graph& g, const Solution& s,
                               bool override_guard = false) {
    detail::check_robustness_preconditions(p, g, s);
    const int m = g.edge_count();
    detail::ensure_sweep_budget(m, m, override_guard);
    RobustnessVerdict v = detail::robustness_sweep(p, g, s, m, /*filter_connectivity=*/true);
    if (v.robust) return Budget::inf();
    return Budget::at(static_cast<int>(v.counterexample->removed.size()));
}

inline std::string render_witness(const Witness& w) {
    if (std::holds_alternative<int>(w)) return std::to_string(std::get<int>(w));
    return edge_to_string(std::get<Edge>(w));
}

inline std::string render_verdict(const RobustnessVerdict& v) {
    if (v.robust) return "ROBUST\n";
    std::string out = "NOT-ROBUST\nREMOVE:";
    for (const Edge& e : v.counterexample->removed) out += " " + edge_to_string(e);
    out += "\nWITNESS: " + render_witness(v.counterexample->witness) + "\n";
    return out;
}

}  // namespace krobust
