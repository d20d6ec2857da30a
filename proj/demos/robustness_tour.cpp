// A short tour: three matchings on three small graphs, and what a single
// connectivity-preserving edge removal does to each.

#include <iostream>

#include "krobust/krobust.hpp"

int main() {
    using namespace krobust;

    Graph c6 = cycle_graph(6);
    Solution perfect = make_matching_solution({{0, 1}, {2, 3}, {4, 5}});
    Solution near = make_matching_solution({{0, 1}, {3, 4}});

    std::cout << "C6 with the perfect matching {(0,1),(2,3),(4,5)} at k=1:\n"
              << render_verdict(check_k_robust(Problem::mm, c6, perfect, Budget::at(1)));
    std::cout << "\nC6 with {(0,1),(3,4)} at k=1:\n"
              << render_verdict(check_k_robust(Problem::mm, c6, near, Budget::at(1)));

    Graph k33 = complete_bipartite_graph(3, 3);
    std::cout << "\nK_{3,3}: every maximal matching is perfect, and perfect matchings\n"
                 "survive one removal but not two. Break budgets:\n";
    for (const Solution& s : enumerate_solutions(Problem::mm, k33).items)
        std::cout << "  " << format_budget(min_break_budget(Problem::mm, k33, s));
    std::cout << "\n";

    Graph k3 = complete_graph(3);
    std::cout << "\nK3: every maximal matching is a single edge and dies immediately:\n";
    for (const Solution& s : enumerate_solutions(Problem::mm, k3).items)
        std::cout << "  " << format_budget(min_break_budget(Problem::mm, k3, s));
    std::cout << "\n";
    return 0;
}
