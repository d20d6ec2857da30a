#include <catch2/catch_amalgamated.hpp>

#include "krobust/construct.hpp"
#include "krobust/enumerate.hpp"
#include "oracles.hpp"

using namespace krobust;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<std::vector<int>> vertex_lists(const SolutionList& l) {
    std::vector<std::vector<int>> out;
    for (const Solution& s : l.items) out.push_back(s.vertices);
    return out;
}

std::vector<EdgeSet> edge_lists(const SolutionList& l) {
    std::vector<EdgeSet> out;
    for (const Solution& s : l.items) out.push_back(s.edge_pairs);
    return out;
}

}  // namespace

TEST_CASE("enumeration fixtures", "[enumerate]") {
    Graph c4 = cycle_graph(4);
    REQUIRE(vertex_lists(enumerate_solutions(Problem::mis, c4)) ==
            std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    Graph p3 = path_graph(3);
    REQUIRE(vertex_lists(enumerate_solutions(Problem::mds, p3)) ==
            std::vector<std::vector<int>>{{0, 2}, {1}});

    Graph k3 = complete_graph(3);
    REQUIRE(edge_lists(enumerate_solutions(Problem::mm, k3)) ==
            std::vector<EdgeSet>{{{0, 1}}, {{0, 2}}, {{1, 2}}});

    // The hierarchy witness at k=1 has exactly the three expected independent
    // sets: the a-side, the a-side with 0 traded for the pendant, and the
    // b-side plus the pendant.
    GkWitness w = gk_witness(1);
    REQUIRE(vertex_lists(enumerate_solutions(Problem::mis, w.graph)) ==
            std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 6}, {3, 4, 5, 6}});
}

TEST_CASE("enumeration rejects disconnected graphs", "[enumerate]") {
    REQUIRE_THROWS_WITH(enumerate_solutions(Problem::mis, Graph(2, {})),
                        ContainsSubstring("connected graphs only"));
}

TEST_CASE("enumeration guards", "[enumerate]") {
    Graph wide = path_graph(21);
    REQUIRE_THROWS_WITH(enumerate_solutions(Problem::mis, wide),
                        ContainsSubstring("guard: n <= 20"));
    REQUIRE_THROWS_WITH(enumerate_solutions(Problem::mds, wide),
                        ContainsSubstring("guard: n <= 20"));

    Graph dense = complete_graph(8);  // 28 edges
    REQUIRE_THROWS_WITH(enumerate_solutions(Problem::mm, dense),
                        ContainsSubstring("guard: m <= 24"));

    // The override lifts the vertex guard; a path this long is still instant.
    auto lifted = enumerate_solutions(Problem::mis, wide, true);
    REQUIRE(lifted.items.size() > 100);
    for (const Solution& s : lifted.items) REQUIRE(check_solution(Problem::mis, wide, s));
}

TEST_CASE("enumeration matches backtracking references", "[enumerate][sweep]") {
    oracle::for_each_connected_up_to(5, [&](const Graph& g) {
        REQUIRE(vertex_lists(enumerate_solutions(Problem::mis, g)) == oracle::all_mis(g));
        REQUIRE(vertex_lists(enumerate_solutions(Problem::mds, g)) == oracle::all_mds(g));
        REQUIRE(edge_lists(enumerate_solutions(Problem::mm, g)) == oracle::all_mm(g));
    });
}

TEST_CASE("enumerated solutions all check out and are distinct", "[enumerate][sweep]") {
    oracle::for_each_connected_up_to(5, [&](const Graph& g) {
        for (Problem p : {Problem::mis, Problem::mds, Problem::mm}) {
            auto list = enumerate_solutions(p, g);
            REQUIRE(!list.items.empty());  // every connected graph has a solution
            REQUIRE(list.problem == p);
            for (const Solution& s : list.items) REQUIRE(check_solution(p, g, s));
            for (std::size_t i = 1; i < list.items.size(); ++i)
                REQUIRE(!(list.items[i] == list.items[i - 1]));
        }
    });
}
