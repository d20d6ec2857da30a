// Command-line front end: generate graphs, verify solutions, check
// robustness, classify graphs, search for witnesses, enumerate solutions,
// build the structured constructions, and run the verification sweeps.
//
// Exit codes: 0 = yes/success, 1 = no (not robust / non-member / nothing
// found / a sweep failed), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "krobust/krobust.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

krobust::Graph load_graph(const std::string& path) { return krobust::parse_graph(slurp(path)); }

krobust::Solution load_solution(krobust::Problem p, const std::string& path,
                                const krobust::Graph& g) {
    return krobust::parse_solution(p, slurp(path), g);
}

std::string render_solution_inline(const krobust::Solution& s) {
    using krobust::Problem;
    std::string out;
    if (s.problem == Problem::mm) {
        for (const auto& e : s.edge_pairs) {
            if (!out.empty()) out += " ";
            out += krobust::edge_to_string(e);
        }
    } else {
        for (int v : s.vertices) {
            if (!out.empty()) out += " ";
            out += std::to_string(v);
        }
    }
    return out.empty() ? "(empty)" : out;
}

int parse_int_arg(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    return value;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace krobust;

    CLI::App app{"k-robust solutions for maximal independent set, minimal dominating set, "
                 "and maximal matching on small graphs"};
    app.require_subcommand(1);

    std::string problem_str = "mis";
    std::string k_str = "1";
    std::string mode_str = "universal";
    std::string method_str = "bruteforce";
    std::string graph_path;
    std::string solution_path;
    bool override_guards = false;
    int max_n = 6;

    auto add_common = [&](CLI::App* sub, bool with_solution) {
        sub->add_option("--problem", problem_str, "mis, mds, or mm")->capture_default_str();
        sub->add_option("--k", k_str, "removal budget: nonnegative integer or 'inf'")
            ->capture_default_str();
        sub->add_option("--graph", graph_path, "edge-list file")->required();
        if (with_solution)
            sub->add_option("--solution", solution_path, "solution file")->required();
        sub->add_flag("--override-guards", override_guards,
                      "lift the desk-scale enumeration guards");
    };

    // generate <family> <params...>
    auto* gen = app.add_subcommand("generate", "emit a family graph as an edge list");
    std::string family_str;
    std::vector<std::string> family_params;
    gen->add_option("family", family_str, "path|cycle|clique|complete_bipartite|star")
        ->required();
    gen->add_option("params", family_params, "size parameters")->expected(-1);

    // construct <what> <args...>
    auto* con = app.add_subcommand("construct", "emit a structured construction");
    std::string construct_what;
    std::vector<std::string> construct_args;
    con->add_option("what", construct_what, "gk|join|universal|blowup|sputnikify")->required();
    con->add_option("args", construct_args, "construction arguments")->expected(-1);

    auto* verify = app.add_subcommand("verify", "is the solution valid for the graph?");
    add_common(verify, true);

    auto* robust = app.add_subcommand("robust", "is the solution k-robust?");
    add_common(robust, true);

    auto* classify = app.add_subcommand("classify", "class membership for the graph");
    add_common(classify, false);
    classify->add_option("--mode", mode_str, "universal or existential")->capture_default_str();
    classify->add_option("--method", method_str, "theorem or bruteforce")->capture_default_str();

    auto* find = app.add_subcommand("find", "search for a k-robust solution");
    add_common(find, false);
    bool via_2dom = false;
    find->add_flag("--via-2domination", via_2dom,
                   "mis/k=1 on 2-edge-connected graphs: use the independent 2-dominating "
                   "search instead of enumeration");

    auto* enumerate = app.add_subcommand("enumerate", "list every solution, one per line");
    add_common(enumerate, false);

    auto* sweep = app.add_subcommand("sweep", "run the verification sweeps");
    sweep->add_option("--max-n", max_n, "universe bound for exhaustive sweeps")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            FamilySpec spec;
            spec.family = parse_family(family_str);
            for (const auto& p : family_params)
                spec.params.push_back(parse_int_arg(p, "family parameter"));
            std::cout << format_graph(gen_family(spec));
            return 0;
        }

        if (con->parsed()) {
            const auto& args = construct_args;
            auto need = [&](std::size_t count) {
                if (args.size() != count)
                    throw std::invalid_argument("construct " + construct_what + " takes " +
                                                std::to_string(count) + " argument(s)");
            };
            if (construct_what == "gk") {
                need(1);
                GkWitness w = gk_witness(parse_int_arg(args[0], "k"));
                std::cout << format_graph(w.graph);
                std::cout << "# u=" << w.u << " v=" << w.v << " A=" << w.side_a.front() << ".."
                          << w.side_a.back() << " B=" << w.side_b.front() << ".."
                          << w.side_b.back() << "\n";
                return 0;
            }
            if (construct_what == "join") {
                need(2);
                std::cout << format_graph(join(load_graph(args[0]), load_graph(args[1])));
                return 0;
            }
            if (construct_what == "universal") {
                need(1);
                std::cout << format_graph(add_universal_vertex(load_graph(args[0])));
                return 0;
            }
            if (construct_what == "blowup") {
                need(2);
                std::cout << format_graph(
                    k_copies_blowup(load_graph(args[0]), parse_int_arg(args[1], "k")));
                return 0;
            }
            if (construct_what == "sputnikify") {
                need(1);
                std::cout << format_graph(sputnikify(load_graph(args[0])));
                return 0;
            }
            throw std::invalid_argument("unknown construction '" + construct_what + "'");
        }

        const Problem problem = parse_problem(problem_str);

        if (verify->parsed()) {
            Graph g = load_graph(graph_path);
            Solution s = load_solution(problem, solution_path, g);
            bool ok = check_solution(problem, g, s);
            std::cout << (ok ? "VALID" : "INVALID") << "\n";
            return ok ? 0 : 1;
        }

        if (robust->parsed()) {
            Graph g = load_graph(graph_path);
            Solution s = load_solution(problem, solution_path, g);
            RobustnessVerdict v = check_k_robust(problem, g, s, parse_budget(k_str),
                                                 override_guards);
            std::cout << render_verdict(v);
            return v.robust ? 0 : 1;
        }

        if (classify->parsed()) {
            Graph g = load_graph(graph_path);
            Budget k = parse_budget(k_str);
            ClassVerdict cv;
            if (mode_str == "universal") {
                Method method;
                if (method_str == "theorem") method = Method::theorem;
                else if (method_str == "bruteforce") method = Method::bruteforce;
                else throw std::invalid_argument("unknown method '" + method_str + "'");
                cv = universal_class_check(problem, g, k, method, override_guards);
            } else if (mode_str == "existential") {
                if (method_str == "theorem")
                    throw std::invalid_argument("existential search has no theorem method");
                cv = existential_search(problem, g, k, override_guards);
            } else {
                throw std::invalid_argument("unknown mode '" + mode_str + "'");
            }
            std::cout << (cv.member ? "MEMBER" : "NON-MEMBER") << "\n";
            if (cv.method == Method::theorem) {
                std::cout << "METHOD: theorem\n";
            } else if (problem == Problem::mis && cv.mode == Mode::universal) {
                std::cout << "METHOD: oracle (no known characterization)\n";
            } else {
                std::cout << "METHOD: bruteforce\n";
            }
            if (cv.witness_solution)
                std::cout << "SOLUTION: " << render_solution_inline(*cv.witness_solution) << "\n";
            if (cv.witness_verdict && !cv.witness_verdict->robust) {
                const auto& ce = *cv.witness_verdict->counterexample;
                std::cout << "REMOVE:";
                for (const Edge& e : ce.removed) std::cout << " " << edge_to_string(e);
                std::cout << "\nWITNESS: " << render_witness(ce.witness) << "\n";
            }
            return cv.member ? 0 : 1;
        }

        if (find->parsed()) {
            Graph g = load_graph(graph_path);
            Budget k = parse_budget(k_str);
            if (via_2dom) {
                if (problem != Problem::mis || !(k == Budget::at(1)))
                    throw std::invalid_argument(
                        "--via-2domination applies to --problem mis --k 1 only");
                auto found = exists_1_robust_mis_via_equivalence(g, override_guards);
                if (!found) {
                    std::cout << "NONE\n";
                    return 1;
                }
                std::cout << format_solution(make_vertex_solution(Problem::mis, *found));
                return 0;
            }
            ClassVerdict cv = existential_search(problem, g, k, override_guards);
            if (!cv.member) {
                std::cout << "NONE\n";
                return 1;
            }
            std::cout << format_solution(*cv.witness_solution);
            return 0;
        }

        if (enumerate->parsed()) {
            Graph g = load_graph(graph_path);
            SolutionList all = enumerate_solutions(problem, g, override_guards);
            for (const Solution& s : all.items) {
                if (problem == Problem::mm) {
                    std::string line;
                    for (const Edge& e : s.edge_pairs) {
                        if (!line.empty()) line += " ";
                        line += std::to_string(e.u) + " " + std::to_string(e.v);
                    }
                    std::cout << line << "\n";
                } else {
                    std::string line;
                    for (int v : s.vertices) {
                        if (!line.empty()) line += " ";
                        line += std::to_string(v);
                    }
                    std::cout << line << "\n";
                }
            }
            return 0;
        }

        if (sweep->parsed()) {
            if (max_n < 1 || max_n > 7)
                throw std::invalid_argument("--max-n must be between 1 and 7");
            bool all_pass = true;
            for (const CriterionResult& r : run_all_sweeps(max_n, &std::cout))
                all_pass = all_pass && r.pass;
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "error: no subcommand\n";
    return 2;
}
