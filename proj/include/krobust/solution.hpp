#pragma once

// Candidate solutions for the three problems (maximal independent set,
// minimal dominating set, maximal matching), validity predicates, and a
// deterministic completion of partial solutions.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "krobust/graph.hpp"

namespace krobust {

enum class Problem { mis, mds, mm };

inline std::string_view problem_name(Problem p) {
    switch (p) {
        case Problem::mis: return "mis";
        case Problem::mds: return "mds";
        case Problem::mm: return "mm";
    }
    return "?";
}

inline Problem parse_problem(std::string_view s) {
    if (s == "mis") return Problem::mis;
    if (s == "mds") return Problem::mds;
    if (s == "mm") return Problem::mm;
    throw std::invalid_argument("unknown problem '" + std::string(s) + "' (expected mis|mds|mm)");
}

// Exactly one payload is populated, selected by `problem`: vertex ids for
// mis/mds, edges for mm. Both payloads stay sorted and duplicate-free.
struct Solution {
    Problem problem = Problem::mis;
    std::vector<int> vertices;
    EdgeSet edge_pairs;

    friend bool operator==(const Solution&, const Solution&) = default;
};

inline Solution make_vertex_solution(Problem p, std::vector<int> vs) {
    if (p == Problem::mm)
        throw std::invalid_argument("matching solutions carry edges, not vertices");
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i] == vs[i - 1])
            throw std::invalid_argument("duplicate vertex " + std::to_string(vs[i]) +
                                        " in solution");
    return Solution{p, std::move(vs), {}};
}

inline Solution make_matching_solution(EdgeSet es) {
    for (auto& e : es) e = make_edge(e.u, e.v);
    std::sort(es.begin(), es.end());
    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i] == es[i - 1])
            throw std::invalid_argument("duplicate edge " + edge_to_string(es[i]) +
                                        " in solution");
    return Solution{Problem::mm, {}, std::move(es)};
}

namespace detail {

inline std::uint64_t vertex_mask_of(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

// Shape checks shared by every consumer: payload matches the problem, members
// exist in the graph, ordering is canonical. Violations throw; they are
// malformed inputs, not "invalid solutions".
inline void validate_solution_shape(Problem p, const Graph& g, const Solution& s) {
    if (s.problem != p)
        throw std::invalid_argument("solution tagged '" + std::string(problem_name(s.problem)) +
                                    "' used where '" + std::string(problem_name(p)) +
                                    "' was required");
    if (p == Problem::mm) {
        if (!s.vertices.empty())
            throw std::invalid_argument("matching solution must not carry vertices");
        for (std::size_t i = 0; i < s.edge_pairs.size(); ++i) {
            const Edge& e = s.edge_pairs[i];
            if (e.u < 0 || e.v >= g.vertex_count() || e.u >= e.v || !g.has_edge(e.u, e.v))
                throw std::invalid_argument(edge_to_string(e) + " is not an edge of the graph");
            if (i > 0 && !(s.edge_pairs[i - 1] < e))
                throw std::invalid_argument("solution edges not in canonical order");
        }
    } else {
        if (!s.edge_pairs.empty())
            throw std::invalid_argument("vertex solution must not carry edges");
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            int v = s.vertices[i];
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
            if (i > 0 && s.vertices[i - 1] >= v)
                throw std::invalid_argument("solution vertices not in canonical order");
        }
    }
}

// Raw mask predicates, shared by check_solution and the enumerators.

inline bool mis_valid(const std::vector<std::uint64_t>& adj, int n, std::uint64_t mask) {
    std::uint64_t all = n == kMaxVertices ? ~std::uint64_t{0} : (bit(n) - 1);
    for (std::uint64_t s = mask; s != 0; s &= s - 1)
        if ((adj[std::countr_zero(s)] & mask) != 0) return false;  // not independent
    for (std::uint64_t r = all & ~mask; r != 0; r &= r - 1)
        if ((adj[std::countr_zero(r)] & mask) == 0) return false;  // vertex addable
    return true;
}

inline bool mds_valid(const std::vector<std::uint64_t>& adj, int n, std::uint64_t mask) {
    // Dominating: every vertex sees the set through its closed neighborhood.
    for (int v = 0; v < n; ++v)
        if (((adj[static_cast<std::size_t>(v)] | bit(v)) & mask) == 0) return false;
    // Minimal: every selected vertex keeps a private closed neighbor.
    std::uint64_t has_private = 0;
    for (int w = 0; w < n; ++w) {
        std::uint64_t doms = (adj[static_cast<std::size_t>(w)] | bit(w)) & mask;
        if (std::popcount(doms) == 1) has_private |= doms;
    }
    return (mask & ~has_private) == 0;
}

// Matching validity from an edge-index mask over `es`.
inline bool mm_valid(const EdgeSet& es, std::uint64_t emask) {
    std::uint64_t covered = 0;
    for (std::uint64_t s = emask; s != 0; s &= s - 1) {
        const Edge& e = es[static_cast<std::size_t>(std::countr_zero(s))];
        std::uint64_t ends = bit(e.u) | bit(e.v);
        if ((covered & ends) != 0) return false;  // shares a vertex
        covered |= ends;
    }
    for (std::size_t j = 0; j < es.size(); ++j) {
        if ((emask >> j & 1) != 0) continue;
        if ((covered & (bit(es[j].u) | bit(es[j].v))) == 0) return false;  // edge addable
    }
    return true;
}

}  // namespace detail

// Full validity: maximal independent set, minimal dominating set, or maximal
// matching of g. Malformed input (wrong payload, members outside g) throws.
inline bool check_solution(Problem p, const Graph& g, const Solution& s) {
    detail::validate_solution_shape(p, g, s);
    const int n = g.vertex_count();
    switch (p) {
        case Problem::mis:
            return detail::mis_valid(g.adjacency(), n, detail::vertex_mask_of(s.vertices));
        case Problem::mds:
            return detail::mds_valid(g.adjacency(), n, detail::vertex_mask_of(s.vertices));
        case Problem::mm: {
            std::uint64_t emask = 0;
            const auto& es = g.edges();
            std::size_t j = 0;
            for (const Edge& e : s.edge_pairs) {
                while (j < es.size() && es[j] < e) ++j;
                emask |= detail::bit(static_cast<int>(j));  // shape check guarantees es[j] == e
            }
            return detail::mm_valid(es, emask);
        }
    }
    return false;
}

// m is a matching of g covering every vertex.
inline bool is_perfect_matching(const Graph& g, const EdgeSet& m) {
    std::uint64_t covered = 0;
    for (const Edge& e : m) {
        if (e.u < 0 || e.v >= g.vertex_count() || e.u >= e.v || !g.has_edge(e.u, e.v))
            throw std::invalid_argument(edge_to_string(e) + " is not an edge of the graph");
        std::uint64_t ends = detail::bit(e.u) | detail::bit(e.v);
        if ((covered & ends) != 0) return false;
        covered |= ends;
    }
    return covered == g.vertex_mask();
}

// s is independent and every non-selected vertex has at least two selected
// neighbors.
inline bool is_independent_2_dominating(const Graph& g, const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        mask |= detail::bit(v);
    }
    const auto& adj = g.adjacency();
    for (std::uint64_t t = mask; t != 0; t &= t - 1)
        if ((adj[std::countr_zero(t)] & mask) != 0) return false;
    for (std::uint64_t r = g.vertex_mask() & ~mask; r != 0; r &= r - 1)
        if (std::popcount(adj[std::countr_zero(r)] & mask) < 2) return false;
    return true;
}

// ----- deterministic completion ----------------------------------------------
//
// Extends (mis, mm) or shrinks (mds) a partial solution into the canonical
// full one: the lexicographically least valid solution that contains the
// partial (mis, mm) respectively is contained in it (mds). For mis/mm a
// lowest-index greedy scan realizes exactly that; for mds the minimal
// dominating subsets of the seed are swept outright, so seeds are capped at
// 20 members.

inline Solution greedy_complete(Problem p, const Graph& g, const Solution& partial) {
    detail::validate_solution_shape(p, g, partial);
    const int n = g.vertex_count();
    const auto& adj = g.adjacency();

    if (p == Problem::mis) {
        std::uint64_t mask = detail::vertex_mask_of(partial.vertices);
        for (std::uint64_t t = mask; t != 0; t &= t - 1)
            if ((adj[std::countr_zero(t)] & mask) != 0)
                throw std::invalid_argument("infeasible partial: not independent");
        std::vector<int> out;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v & 1) != 0 || (adj[static_cast<std::size_t>(v)] & mask) == 0) {
                mask |= detail::bit(v);
                out.push_back(v);
            }
        }
        return Solution{Problem::mis, std::move(out), {}};
    }

    if (p == Problem::mm) {
        std::uint64_t covered = 0;
        for (const Edge& e : partial.edge_pairs) {
            std::uint64_t ends = detail::bit(e.u) | detail::bit(e.v);
            if ((covered & ends) != 0)
                throw std::invalid_argument("infeasible partial: not a matching");
            covered |= ends;
        }
        EdgeSet out = partial.edge_pairs;
        for (const Edge& e : g.edges()) {
            std::uint64_t ends = detail::bit(e.u) | detail::bit(e.v);
            if ((covered & ends) == 0) {
                covered |= ends;
                out.push_back(e);
            }
        }
        std::sort(out.begin(), out.end());
        return Solution{Problem::mm, {}, std::move(out)};
    }

    // mds: seed must dominate; pick the lexicographically least minimal
    // dominating subset.
    std::uint64_t seed = detail::vertex_mask_of(partial.vertices);
    for (int v = 0; v < n; ++v)
        if (((adj[static_cast<std::size_t>(v)] | detail::bit(v)) & seed) == 0)
            throw std::invalid_argument("infeasible partial: not dominating");
    if (std::popcount(seed) > 20)
        throw std::invalid_argument("mds completion seed exceeds 20 vertices");
    bool have = false;
    std::uint64_t best = 0;
    std::uint64_t sub = seed;
    while (true) {
        if (detail::mds_valid(adj, n, sub)) {
            if (!have || detail::lex_less_mask(sub, best)) {
                best = sub;
                have = true;
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & seed;
    }
    // A dominating seed always contains a minimal dominating subset.
    std::vector<int> out;
    for (std::uint64_t t = best; t != 0; t &= t - 1) out.push_back(std::countr_zero(t));
    return Solution{Problem::mds, std::move(out), {}};
}

// ----- solution text format ---------------------------------------------------
//
// mis/mds: one line of space-separated vertex ids. mm: one "u v" line per
// edge. Readers are whitespace-agnostic (any token stream works), writers
// emit the canonical layout.

inline std::string format_solution(const Solution& s) {
    if (s.problem == Problem::mm) {
        std::string out;
        for (const Edge& e : s.edge_pairs)
            out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
        return out;
    }
    std::string out;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(s.vertices[i]);
    }
    out += "\n";
    return out;
}

inline Solution parse_solution(Problem p, std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    std::vector<long long> tokens;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {  // comment runs to end of line
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        std::size_t pos = 0;
        long long val = 0;
        try {
            val = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed solution token '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("malformed solution token '" + tok + "'");
        tokens.push_back(val);
    }
    Solution s;
    if (p == Problem::mm) {
        if (tokens.size() % 2 != 0)
            throw std::invalid_argument("matching file must hold an even number of ids");
        EdgeSet es;
        for (std::size_t i = 0; i < tokens.size(); i += 2)
            es.push_back(make_edge(static_cast<int>(tokens[i]), static_cast<int>(tokens[i + 1])));
        s = make_matching_solution(std::move(es));
    } else {
        std::vector<int> vs;
        for (long long t : tokens) vs.push_back(static_cast<int>(t));
        s = make_vertex_solution(p, std::move(vs));
    }
    detail::validate_solution_shape(p, g, s);
    return s;
}

}  // namespace krobust
