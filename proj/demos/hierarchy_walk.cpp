// Walks the strict hierarchy of universal maximal-independent-set classes:
// for each k the witness graph keeps every solution k-robust while one
// solution breaks at k+1.

#include <iostream>

#include "krobust/krobust.hpp"

int main() {
    using namespace krobust;

    for (int k = 1; k <= 3; ++k) {
        GkWitness w = gk_witness(k);
        std::cout << "k=" << k << ": witness on " << w.graph.vertex_count() << " vertices, "
                  << w.graph.edge_count() << " edges\n";
        for (const Solution& s : enumerate_solutions(Problem::mis, w.graph).items) {
            Budget b = min_break_budget(Problem::mis, w.graph, s);
            std::cout << "  mis {";
            for (std::size_t i = 0; i < s.vertices.size(); ++i)
                std::cout << (i > 0 ? "," : "") << s.vertices[i];
            if (b.infinite)
                std::cout << "} never breaks\n";
            else
                std::cout << "} breaks at " << format_budget(b) << "\n";
        }
        ClassVerdict at_k = universal_class_check(Problem::mis, w.graph, Budget::at(k),
                                                  Method::bruteforce);
        ClassVerdict at_k1 = universal_class_check(Problem::mis, w.graph, Budget::at(k + 1),
                                                   Method::bruteforce);
        std::cout << "  universal member at k: " << (at_k.member ? "yes" : "no")
                  << ", at k+1: " << (at_k1.member ? "yes" : "no") << "\n";
    }
    return 0;
}
