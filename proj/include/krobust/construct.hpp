#pragma once

// Graph families and the structured constructions the class results lean on:
// join, the hierarchy witness G_k, the universal-vertex reduction, the
// k-copies blowup, and sputnikification.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "krobust/graph.hpp"

namespace krobust {

enum class Family { path, cycle, clique, complete_bipartite, star };

struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;  // path/cycle/clique/star: n; complete_bipartite: a, b
};

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    EdgeSet es;
    for (int v = 0; v + 1 < n; ++v) es.push_back(Edge{v, v + 1});
    return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    EdgeSet es;
    for (int v = 0; v + 1 < n; ++v) es.push_back(Edge{v, v + 1});
    es.push_back(Edge{0, n - 1});
    return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("clique needs n >= 1");
    EdgeSet es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back(Edge{u, v});
    return Graph(n, std::move(es));
}

// Sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs both sides >= 1");
    EdgeSet es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back(Edge{u, a + v});
    return Graph(a + b, std::move(es));
}

// n vertices total: center 0, leaves 1..n-1.
inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    EdgeSet es;
    for (int v = 1; v < n; ++v) es.push_back(Edge{0, v});
    return Graph(n, std::move(es));
}

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::clique: return "clique";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "path") return Family::path;
    if (s == "cycle") return Family::cycle;
    if (s == "clique") return Family::clique;
    if (s == "complete_bipartite") return Family::complete_bipartite;
    if (s == "star") return Family::star;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

inline Graph gen_family(const FamilySpec& spec) {
    const auto& ps = spec.params;
    auto need = [&](std::size_t count) {
        if (ps.size() != count)
            throw std::invalid_argument(std::string(family_name(spec.family)) + " takes " +
                                        std::to_string(count) + " parameter(s)");
    };
    switch (spec.family) {
        case Family::path: need(1); return path_graph(ps[0]);
        case Family::cycle: need(1); return cycle_graph(ps[0]);
        case Family::clique: need(1); return complete_graph(ps[0]);
        case Family::complete_bipartite: need(2); return complete_bipartite_graph(ps[0], ps[1]);
        case Family::star: need(1); return star_graph(ps[0]);
    }
    throw std::invalid_argument("unknown family");
}

// Disjoint union plus every cross edge; h's vertices are shifted by
// g.vertex_count(). m' = m_g + m_h + n_g * n_h.
inline Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng + nh > kMaxVertices)
        throw std::invalid_argument("join would exceed the 64-vertex limit");
    EdgeSet es = g.edges();
    for (const Edge& e : h.edges()) es.push_back(Edge{e.u + ng, e.v + ng});
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) es.push_back(Edge{u, ng + v});
    return Graph(ng + nh, std::move(es));
}

// Complete bipartite K_{k+2,k+2} with one pendant vertex v attached to
// u = 0 on side A. It has exactly three maximal independent sets: A,
// {v} + B, and {v} + (A minus u); the last one is k-robust but not
// (k+1)-robust, while the first two survive any budget.
struct GkWitness {
    Graph graph;
    int u = 0;
    int v = 0;
    std::vector<int> side_a;
    std::vector<int> side_b;
};

inline GkWitness gk_witness(int k) {
    if (k < 1) throw std::invalid_argument("hierarchy witness needs k >= 1");
    const int side = k + 2;
    Graph base = complete_bipartite_graph(side, side);
    EdgeSet es = base.edges();
    const int v = 2 * side;  // pendant vertex id
    es.push_back(Edge{0, v});
    GkWitness out;
    out.graph = Graph(v + 1, std::move(es));
    out.u = 0;
    out.v = v;
    for (int i = 0; i < side; ++i) out.side_a.push_back(i);
    for (int i = 0; i < side; ++i) out.side_b.push_back(side + i);
    return out;
}

// New vertex n adjacent to everything. Input must be connected with at
// least two vertices and one edge; the result is 2-edge-connected and
// preserves whether an independent 2-dominating set exists.
inline Graph add_universal_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() < 1)
        throw std::invalid_argument("universal-vertex construction needs n >= 2 and an edge");
    if (!is_connected(g))
        throw std::invalid_argument("universal-vertex construction needs a connected graph");
    if (n + 1 > kMaxVertices)
        throw std::invalid_argument("universal-vertex construction would exceed the vertex limit");
    EdgeSet es = g.edges();
    for (int v = 0; v < n; ++v) es.push_back(Edge{v, n});
    return Graph(n + 1, std::move(es));
}

// k copies of every vertex; copy x of u is u + x*n. Copies of adjacent
// vertices are all adjacent (including across equal copy indices), copies of
// the same vertex never are. m' = k^2 * m, and every maximal independent
// set of the blowup is a base one replicated across all copies.
inline Graph k_copies_blowup(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("blowup needs k >= 1");
    if (!is_connected(g)) throw std::invalid_argument("blowup needs a connected graph");
    const int n = g.vertex_count();
    if (n * k > kMaxVertices)
        throw std::invalid_argument("blowup would exceed the 64-vertex limit");
    EdgeSet es;
    es.reserve(static_cast<std::size_t>(g.edge_count()) * static_cast<std::size_t>(k) *
               static_cast<std::size_t>(k));
    for (const Edge& e : g.edges())
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) es.push_back(make_edge(e.u + x * n, e.v + y * n));
    return Graph(n * k, std::move(es));
}

// Hang a fresh degree-1 antenna off every cycle vertex that lacks one. The
// result is always a sputnik, sputniks (trees included) come back unchanged,
// and the construction is idempotent.
inline Graph sputnikify(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("sputnikify needs a connected graph");
    const int n = g.vertex_count();
    const EdgeSet br = bridges(g);
    std::vector<int> cycle_vertices;
    for (int v = 0; v < n; ++v) {
        bool on_cycle = false;
        for (std::uint64_t nb = g.neighbors(v); nb != 0 && !on_cycle; nb &= nb - 1)
            on_cycle = !std::binary_search(br.begin(), br.end(),
                                           make_edge(v, std::countr_zero(nb)));
        if (!on_cycle) continue;
        bool antenna = false;
        for (std::uint64_t nb = g.neighbors(v); nb != 0 && !antenna; nb &= nb - 1)
            antenna = g.degree(std::countr_zero(nb)) == 1;
        if (!antenna) cycle_vertices.push_back(v);
    }
    if (n + static_cast<int>(cycle_vertices.size()) > kMaxVertices)
        throw std::invalid_argument("sputnikify would exceed the 64-vertex limit");
    EdgeSet es = g.edges();
    int next = n;
    for (int v : cycle_vertices) es.push_back(Edge{v, next++});
    return Graph(next, std::move(es));
}

}  // namespace krobust
