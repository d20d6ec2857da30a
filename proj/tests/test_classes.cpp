#include <catch2/catch_amalgamated.hpp>

#include "krobust/classes.hpp"
#include "krobust/construct.hpp"
#include "oracles.hpp"

using namespace krobust;
using Catch::Matchers::ContainsSubstring;

namespace {

const Graph kP3 = path_graph(3);
const Graph kP4 = path_graph(4);
const Graph kC4 = cycle_graph(4);
const Graph kC5 = cycle_graph(5);
const Graph kK3 = complete_graph(3);
const Graph kK4 = complete_graph(4);
const Graph kK33 = complete_bipartite_graph(3, 3);
const Graph kNet = sputnikify(complete_graph(3));

}  // namespace

TEST_CASE("structural recognizers", "[classes]") {
    REQUIRE(is_tree(kP4));
    REQUIRE(is_tree(Graph(1, {})));
    REQUIRE(is_tree(star_graph(5)));
    REQUIRE_FALSE(is_tree(kC4));
    REQUIRE_FALSE(is_tree(Graph(2, {})));

    REQUIRE(is_even_clique(complete_graph(2)));
    REQUIRE(is_even_clique(kK4));
    REQUIRE_FALSE(is_even_clique(kK3));
    REQUIRE_FALSE(is_even_clique(complete_graph(5)));
    REQUIRE_FALSE(is_even_clique(kC4));

    REQUIRE(is_balanced_complete_bipartite(kK33));
    REQUIRE(is_balanced_complete_bipartite(kC4));  // C4 is K22
    REQUIRE(is_balanced_complete_bipartite(complete_graph(2)));
    REQUIRE_FALSE(is_balanced_complete_bipartite(complete_bipartite_graph(2, 3)));
    REQUIRE_FALSE(is_balanced_complete_bipartite(kP4));
    REQUIRE_FALSE(is_balanced_complete_bipartite(kK4));
    REQUIRE_FALSE(is_balanced_complete_bipartite(kC5));

    REQUIRE(is_cycle4(kC4));
    REQUIRE_FALSE(is_cycle4(kK4));
    REQUIRE_FALSE(is_cycle4(kP4));
    REQUIRE_FALSE(is_cycle4(kC5));
    REQUIRE_FALSE(is_cycle4(parse_graph("4 4\n0 1\n0 2\n1 2\n2 3\n")));
}

TEST_CASE("sputnik recognition", "[classes]") {
    REQUIRE(is_sputnik(kP4));           // no cycles, nothing to demand
    REQUIRE(is_sputnik(star_graph(6)));
    REQUIRE(is_sputnik(kNet));          // triangle with an antenna per corner
    REQUIRE_FALSE(is_sputnik(kC4));
    REQUIRE_FALSE(is_sputnik(kK4));
    REQUIRE(is_sputnik(sputnikify(kC4)));
    // One missing antenna spoils it.
    REQUIRE_FALSE(is_sputnik(parse_graph("5 5\n0 1\n0 2\n1 2\n0 3\n1 4\n")));
    REQUIRE_THROWS_WITH(is_sputnik(Graph(2, {})), ContainsSubstring("must be connected"));

    // Against the cycle oracle: sputnik means every cycle vertex keeps a
    // degree-1 neighbor.
    oracle::for_each_connected_up_to(5, [&](const Graph& g) {
        bool expect = true;
        for (int v = 0; v < g.vertex_count() && expect; ++v) {
            if (!oracle::has_cycle_through(g, v)) continue;
            bool antenna = false;
            for (std::uint64_t nb = g.neighbors(v); nb != 0 && !antenna; nb &= nb - 1)
                antenna = g.degree(std::countr_zero(nb)) == 1;
            expect = antenna;
        }
        REQUIRE(is_sputnik(g) == expect);
    });
}

TEST_CASE("universal class via closed forms", "[classes]") {
    auto member = [](Problem p, const Graph& g, Budget k) {
        return universal_class_check(p, g, k, Method::theorem).member;
    };

    REQUIRE(member(Problem::mm, kK4, Budget::at(1)));        // even clique
    REQUIRE_FALSE(member(Problem::mm, kK4, Budget::at(2)));  // survives only at k = 1
    REQUIRE(member(Problem::mm, kK33, Budget::at(1)));
    REQUIRE_FALSE(member(Problem::mm, kK33, Budget::inf()));
    REQUIRE(member(Problem::mm, kC4, Budget::at(1)));
    REQUIRE(member(Problem::mm, kC4, Budget::at(100)));      // the one cyclic survivor
    REQUIRE(member(Problem::mm, kC4, Budget::inf()));
    REQUIRE(member(Problem::mm, kP4, Budget::at(3)));        // trees always
    REQUIRE_FALSE(member(Problem::mm, kC5, Budget::at(1)));
    REQUIRE_FALSE(member(Problem::mm, kK3, Budget::at(1)));

    for (Budget k : {Budget::at(1), Budget::at(2), Budget::inf()}) {
        REQUIRE(member(Problem::mds, kNet, k));
        REQUIRE(member(Problem::mds, kP4, k));
        REQUIRE_FALSE(member(Problem::mds, kC4, k));
        REQUIRE_FALSE(member(Problem::mds, kK4, k));
    }

    REQUIRE_THROWS_WITH(universal_class_check(Problem::mis, kC4, Budget::at(1), Method::theorem),
                        ContainsSubstring("no closed-form characterization"));
    REQUIRE_THROWS_WITH(universal_class_check(Problem::mds, kC4, Budget::at(0), Method::theorem),
                        ContainsSubstring("k >= 1"));
    REQUIRE_THROWS_WITH(universal_class_check(Problem::mds, Graph(0, {}), Budget::at(1),
                                              Method::theorem),
                        ContainsSubstring("nonempty graph"));
    REQUIRE_THROWS_WITH(universal_class_check(Problem::mds, Graph(2, {}), Budget::at(1),
                                              Method::theorem),
                        ContainsSubstring("connected graphs only"));
}

TEST_CASE("universal class via brute force", "[classes]") {
    auto v = universal_class_check(Problem::mds, kC4, Budget::at(1), Method::bruteforce);
    REQUIRE_FALSE(v.member);
    REQUIRE(v.method == Method::bruteforce);
    REQUIRE(v.mode == Mode::universal);
    // First dominating set in canonical order that breaks, with its canonical
    // counterexample.
    REQUIRE(v.witness_solution->vertices == std::vector<int>{0, 1});
    REQUIRE(v.witness_verdict->counterexample->removed == EdgeSet{{0, 3}});
    REQUIRE(v.witness_verdict->counterexample->witness == Witness{3});

    REQUIRE(universal_class_check(Problem::mis, kC4, Budget::at(1), Method::bruteforce).member);
    auto c5 = universal_class_check(Problem::mis, kC5, Budget::at(1), Method::bruteforce);
    REQUIRE_FALSE(c5.member);
    REQUIRE(c5.witness_solution->vertices == std::vector<int>{0, 2});

    // k = 0 is fine for brute force: every valid solution trivially survives.
    REQUIRE(universal_class_check(Problem::mds, kC4, Budget::at(0), Method::bruteforce).member);
}

TEST_CASE("theorem and brute force agree on the small universe", "[classes][sweep]") {
    oracle::for_each_connected_up_to(5, [&](const Graph& g) {
        if (g.vertex_count() == 0) return;
        for (Budget k : {Budget::at(1), Budget::at(2), Budget::inf()})
            REQUIRE(universal_class_check(Problem::mds, g, k, Method::theorem).member ==
                    universal_class_check(Problem::mds, g, k, Method::bruteforce).member);
        for (Budget k : {Budget::at(1), Budget::at(2), Budget::at(3), Budget::inf()})
            REQUIRE(universal_class_check(Problem::mm, g, k, Method::theorem).member ==
                    universal_class_check(Problem::mm, g, k, Method::bruteforce).member);
    });
}

TEST_CASE("graphs whose maximal matchings are all perfect", "[classes][sweep]") {
    // Exactly the balanced complete bipartite graphs and even cliques; the
    // k = 1 matching characterization adds the trees on top of these.
    oracle::for_each_connected_up_to(5, [&](const Graph& g) {
        bool all_perfect = true;
        for (const Solution& s : enumerate_solutions(Problem::mm, g).items)
            all_perfect = all_perfect && is_perfect_matching(g, s.edge_pairs);
        REQUIRE(all_perfect == (is_balanced_complete_bipartite(g) || is_even_clique(g)));
    });
}

TEST_CASE("existential search", "[classes]") {
    auto v = existential_search(Problem::mis, kC4, Budget::at(1));
    REQUIRE(v.member);
    REQUIRE(v.mode == Mode::existential);
    REQUIRE(v.witness_solution->vertices == std::vector<int>{0, 2});

    REQUIRE_FALSE(existential_search(Problem::mis, kC5, Budget::at(1)).member);
    REQUIRE_FALSE(existential_search(Problem::mm, kK3, Budget::at(1)).member);
    REQUIRE_FALSE(existential_search(Problem::mds, kK3, Budget::at(1)).member);
    REQUIRE(existential_search(Problem::mds, kNet, Budget::inf()).member);

    // Budget 0 always admits the first solution.
    auto zero = existential_search(Problem::mm, kK3, Budget::at(0));
    REQUIRE(zero.member);
    REQUIRE(zero.witness_solution->edge_pairs == EdgeSet{{0, 1}});

    REQUIRE_THROWS_WITH(existential_search(Problem::mis, Graph(2, {}), Budget::at(1)),
                        ContainsSubstring("connected graphs only"));
}

TEST_CASE("independent 2-dominating search", "[classes]") {
    REQUIRE(find_independent_2_dominating(kC4) == std::vector<int>{0, 2});
    REQUIRE(find_independent_2_dominating(cycle_graph(6)) == std::vector<int>{0, 2, 4});
    REQUIRE(find_independent_2_dominating(complete_bipartite_graph(2, 3)) ==
            std::vector<int>{0, 1});
    REQUIRE(find_independent_2_dominating(kP3) == std::vector<int>{0, 2});
    REQUIRE_FALSE(find_independent_2_dominating(kC5).has_value());
    REQUIRE_FALSE(find_independent_2_dominating(kK4).has_value());
    REQUIRE_THROWS_WITH(find_independent_2_dominating(path_graph(25)),
                        ContainsSubstring("guard: n <= 24"));
}

TEST_CASE("existence of 1-robust independent sets via 2-domination", "[classes]") {
    REQUIRE(exists_1_robust_mis_via_equivalence(kC4) == std::vector<int>{0, 2});
    REQUIRE_FALSE(exists_1_robust_mis_via_equivalence(kC5).has_value());
    REQUIRE_FALSE(exists_1_robust_mis_via_equivalence(kK4).has_value());
    REQUIRE_THROWS_WITH(exists_1_robust_mis_via_equivalence(kP3),
                        ContainsSubstring("requires a 2-edge-connected graph"));

    // On the whole 2-edge-connected universe the shortcut and the direct
    // search agree, witness for witness.
    oracle::for_each_connected_up_to(5, [&](const Graph& g) {
        if (!is_t_edge_connected(g, 2)) return;
        auto via = exists_1_robust_mis_via_equivalence(g);
        auto direct = existential_search(Problem::mis, g, Budget::at(1));
        REQUIRE(via.has_value() == direct.member);
        if (via)
            REQUIRE(make_vertex_solution(Problem::mis, *via) == *direct.witness_solution);
    });
}

TEST_CASE("min_mis_size", "[classes]") {
    REQUIRE(min_mis_size(kK4) == 1);
    REQUIRE(min_mis_size(kC4) == 2);
    REQUIRE(min_mis_size(kK33) == 3);
    REQUIRE(min_mis_size(star_graph(5)) == 1);
    REQUIRE(min_mis_size(kP4) == 2);
    REQUIRE(min_mis_size(Graph(1, {})) == 1);
}
