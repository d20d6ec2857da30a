#pragma once

// Immutable simple undirected graphs on dense vertex ids 0..n-1, plus the
// small-graph connectivity primitives (bridges, t-edge-connectivity, cycle
// membership) that the robustness machinery is built on. Vertex sets are
// 64-bit masks throughout, which caps instances at 64 vertices; everything
// here is meant for exhaustive desk-scale analysis, not large graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace krobust {

inline constexpr int kMaxVertices = 64;

struct Edge {
    int u = 0;
    int v = 0;  // invariant: u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge sets are kept sorted lexicographically by (u,v) and duplicate-free.
using EdgeSet = std::vector<Edge>;

// Normalizes endpoint order. Self-loops are never representable.
inline Edge make_edge(int a, int b) {
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::string edge_to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace detail {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Orders vertex masks as their sorted member tuples: {0,2} < {1}, and a
// proper prefix precedes its extensions.
inline bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        int x = std::countr_zero(a);
        int y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Mask-level BFS; `adj` holds one neighbor mask per vertex.
inline bool mask_connected(const std::vector<std::uint64_t>& adj, int n) {
    if (n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return std::popcount(seen) == n;
}

}  // namespace detail

class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes: endpoints in range, no self-loops (already
    // unrepresentable via make_edge, but aggregate-built edges are checked
    // too), no duplicates. Edges are stored sorted.
    Graph(int n, EdgeSet edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n > kMaxVertices)
            throw std::invalid_argument("vertex count exceeds supported maximum of 64");
        for (auto& e : edges) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= n)
                throw std::invalid_argument("endpoint out of range: " + edge_to_string(e));
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw std::invalid_argument("duplicate edge " + edge_to_string(edges[i]));
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), 0);
        for (const auto& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)] |= detail::bit(e.v);
            adj_[static_cast<std::size_t>(e.v)] |= detail::bit(e.u);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeSet& edges() const { return edges_; }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    std::uint64_t closed_neighbors(int v) const { return neighbors(v) | detail::bit(v); }
    int degree(int v) const { return std::popcount(neighbors(v)); }

    bool has_edge(int a, int b) const {
        check_vertex(a);
        check_vertex(b);
        return a != b && (adj_[static_cast<std::size_t>(a)] >> b & 1) != 0;
    }

    // Mask with one bit per vertex of the graph.
    std::uint64_t vertex_mask() const {
        return n_ == kMaxVertices ? ~std::uint64_t{0} : detail::bit(n_) - 1;
    }

    const std::vector<std::uint64_t>& adjacency() const { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    EdgeSet edges_;
    std::vector<std::uint64_t> adj_;
};

// ----- edge-list text format ------------------------------------------------
//
// Header "n m", then m lines "u v" with 0 <= u < v < n. Blank lines and lines
// starting with '#' are ignored, so generated files may carry comments.

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw std::invalid_argument("malformed header: empty input");
    long long n = 0, m = 0;
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw std::invalid_argument("malformed header: '" + header + "'");
    }
    if (n < 0 || m < 0)
        throw std::invalid_argument("malformed header: negative count in '" + header + "'");
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count exceeds supported maximum of 64");

    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_line(el))
            throw std::invalid_argument("edge list ends early: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        long long a = 0, b = 0;
        {
            std::istringstream es(el);
            std::string extra;
            if (!(es >> a >> b) || (es >> extra))
                throw std::invalid_argument("malformed edge line: '" + el + "'");
        }
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("endpoint out of range: (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        edges.push_back(make_edge(static_cast<int>(a), static_cast<int>(b)));
    }
    std::string rest;
    if (next_line(rest))
        throw std::invalid_argument("trailing content after edge list: '" + rest + "'");

    // The constructor rejects duplicate edges with its own diagnostic.
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// ----- connectivity ----------------------------------------------------------

// Graphs on zero or one vertex count as connected.
inline bool is_connected(const Graph& g) {
    return detail::mask_connected(g.adjacency(), g.vertex_count());
}

// All bridges (edges whose removal disconnects the graph), sorted.
// Lowpoint DFS; a definition-level oracle cross-checks this in the tests.
inline EdgeSet bridges(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("bridges: graph must be connected");
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    EdgeSet out;
    int timer = 0;
    auto dfs = [&](auto&& self, int u, int parent) -> void {
        disc[u] = low[u] = timer++;
        for (std::uint64_t nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
            int w = std::countr_zero(nb);
            if (w == parent) continue;  // simple graph: the parent edge occurs once
            if (disc[w] == -1) {
                self(self, w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] > disc[u]) out.push_back(make_edge(u, w));
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    if (n > 0) dfs(dfs, 0, -1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Sum of C(m,i) for i <= cap, saturated. Guards every edge-subset sweep: the
// full-powerset case degenerates to 2^m, so the classic "refuse m > 30"
// rule is the special case cap >= m.
inline constexpr long long kSweepBudget = 1LL << 30;

inline long long subset_sweep_cost(int m, int cap) {
    long long total = 0;
    long long binom = 1;  // C(m, 0)
    for (int i = 0; i <= std::min(cap, m); ++i) {
        total += binom;
        // Early exit also bounds binom by the budget, so the multiply below
        // cannot overflow (budget * max edge count is far below LLONG_MAX).
        if (total > kSweepBudget) return kSweepBudget + 1;
        binom = binom * (m - i) / (i + 1);
    }
    return total;
}

inline void ensure_sweep_budget(int m, int cap, bool override_guard) {
    if (override_guard) return;
    if (subset_sweep_cost(m, cap) > kSweepBudget)
        throw std::invalid_argument(
            "edge-subset sweep over " + std::to_string(m) + " edges up to size " +
            std::to_string(cap) + " exceeds the size guard; pass the override to force it");
}

// Lexicographic combination enumerator over {0..m-1}, size t. Calls f(idx);
// stops early if f returns true. Returns whether f ever returned true.
template <class F>
bool for_each_combination(int m, int t, F&& f) {
    if (t > m) return false;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (f(idx)) return true;
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - t + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// True iff every removal of at most t-1 edges leaves g connected. t >= 1.
// t = 1 is plain connectivity and t = 2 reduces to bridge-freeness; larger t
// sweeps subsets directly (guarded; see ensure_sweep_budget).
inline bool is_t_edge_connected(const Graph& g, int t, bool override_guard = false) {
    if (t <= 0) throw std::invalid_argument("t-edge-connectivity needs t >= 1");
    if (!is_connected(g)) return false;
    const int n = g.vertex_count();
    if (n <= 1) return true;
    int min_deg = kMaxVertices + 1;
    for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
    if (t > min_deg) return false;  // removing all edges at a vertex isolates it
    if (t == 1) return true;
    if (t == 2) return bridges(g).empty();

    const int m = g.edge_count();
    const int cap = std::min(t - 1, m);
    detail::ensure_sweep_budget(m, cap, override_guard);
    std::vector<std::uint64_t> adj = g.adjacency();
    const auto& es = g.edges();
    bool found_cut = false;
    for (int size = 1; size <= cap && !found_cut; ++size) {
        found_cut = detail::for_each_combination(m, size, [&](const std::vector<int>& idx) {
            for (int i : idx) {
                adj[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].u)] &=
                    ~detail::bit(es[static_cast<std::size_t>(i)].v);
                adj[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].v)] &=
                    ~detail::bit(es[static_cast<std::size_t>(i)].u);
            }
            bool disconnected = !detail::mask_connected(adj, n);
            for (int i : idx) {
                adj[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].u)] |=
                    detail::bit(es[static_cast<std::size_t>(i)].v);
                adj[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].v)] |=
                    detail::bit(es[static_cast<std::size_t>(i)].u);
            }
            return disconnected;
        });
    }
    return !found_cut;
}

// True iff v lies on some cycle, i.e. has an incident non-bridge edge.
inline bool vertex_on_cycle(const Graph& g, int v) {
    if (!is_connected(g)) throw std::invalid_argument("vertex_on_cycle: graph must be connected");
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    const EdgeSet br = bridges(g);
    for (std::uint64_t nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
        Edge e = make_edge(v, std::countr_zero(nb));
        if (!std::binary_search(br.begin(), br.end(), e)) return true;
    }
    return false;
}

// New graph with the edges of s deleted. Every element of s must be an edge
// of g; s is treated as a set (duplicates collapse).
inline Graph remove_edges(const Graph& g, const EdgeSet& s) {
    EdgeSet drop = s;
    for (auto& e : drop) e = make_edge(e.u, e.v);
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (const auto& e : drop)
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
            throw std::invalid_argument(edge_to_string(e) + " is not an edge of the graph");
    EdgeSet kept;
    kept.reserve(g.edges().size() - drop.size());
    std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    return Graph(g.vertex_count(), std::move(kept));
}

}  // namespace krobust
