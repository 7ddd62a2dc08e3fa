// Command-line front end for the linear-domino edge-deletion toolkit:
// exact solvers, bag decomposition, compression/kernelization, the 3SAT
// hardness reduction, verification, and deterministic instance
// generators.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lindo/lindo.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lindo::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lindo::Error("cannot open " + path + " for writing");
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        spill(path, text);
}

void print_solution(const lindo::SolveResult& r) {
    if (!r.yes) {
        std::cout << "SOLUTION no\n";
        return;
    }
    std::cout << "SOLUTION yes\n";
    for (lindo::Edge e : r.witness) std::cout << "d " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

// Deletion lists are the solver output format, so "SOLUTION" verdict
// lines and comments pass through unharmed.
lindo::EdgeSet parse_deletions(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<lindo::Edge> es;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag == "SOLUTION") continue;
        if (tag != "d") throw lindo::ParseError(lineno, "expected 'd <u> <v>'");
        long long u, v;
        if (!(ls >> u >> v)) throw lindo::ParseError(lineno, "expected 'd <u> <v>'");
        if (u < 1 || v < 1) throw lindo::ParseError(lineno, "vertex id out of range");
        if (u == v) throw lindo::ParseError(lineno, "self-loop");
        es.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return lindo::EdgeSet(std::move(es));
}

void run_check_invariants(const std::string& input, std::optional<int> k) {
    using namespace lindo;
    Graph g = parse_graph(slurp(input));
    std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
    auto ob = find_obstruction(g);
    if (!ob) {
        std::cout << "claw/diamond-free: yes\n";
        auto d = bag_decomposition(g);
        auto rep = validate_decomposition(g, d);
        std::cout << "bags: " << d.bag_count() << " (bound " << g.vertex_count() + g.edge_count()
                  << ")\n";
        if (rep.ok)
            std::cout << "decomposition: PASS\n";
        else
            std::cout << "decomposition: FAIL " << rep.property << " (" << rep.witness << ")\n";
    } else {
        std::cout << "claw/diamond-free: no (induced " << ob->describe() << ")\n";
    }
    if (!k) return;

    auto bm = build_modulator(g, *k);
    if (bm.no_instance) {
        std::cout << "modulator: no-instance (more than " << *k
                  << " edge-disjoint obstructions)\n";
        return;
    }
    const auto& mod = bm.modulator;
    std::cout << "modulator: " << mod.packing.size() << " obstructions, |X| = " << mod.x.size()
              << " (bound " << 4 * *k << ")\n";
    if (mod.x.empty()) return;
    auto ms = decompose_around_modulator(g, mod.x);
    std::size_t max_attached = 0;
    for (const auto& a : ms.attachment.attached) max_attached = std::max(max_attached, a.size());
    std::cout << "attachment: PASS (max attached bags per x = " << max_attached << ")\n";
    auto marking = mark_and_extract_s(g, mod, *k);
    std::cout << "marking: " << marking.marked.size() << " bags, |S| = " << marking.s_set.size()
              << "\n";
    auto built = build_u(g, marking.s_set, *k);
    std::cout << "compression: |U| = " << built.u_set.size() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"{claw,diamond}-free edge deletion toolkit"};
    app.require_subcommand(1);

    std::string input, input2, output, layout_path;
    int k = 0;
    bool annotated = false;
    std::uint64_t seed = 0;
    int gen_n = 0, gen_m = 0;
    double gen_p = 0.5;
    std::int64_t max_subsets = 20'000'000;

    auto* solve = app.add_subcommand("solve", "bounded search-tree decision");
    solve->add_option("input", input)->required();
    solve->add_option("--k", k, "deletion budget");
    solve->add_flag("--annotated", annotated, "input is an annotated instance");

    auto* oracle = app.add_subcommand("oracle", "exhaustive brute-force decision");
    oracle->add_option("input", input)->required();
    oracle->add_option("--k", k, "deletion budget");
    oracle->add_flag("--annotated", annotated, "input is an annotated instance");
    oracle->add_option("--max-subsets", max_subsets, "scale guard for subset enumeration");

    auto* kernelize = app.add_subcommand("kernelize", "same-problem polynomial kernel");
    kernelize->add_option("input", input)->required();
    kernelize->add_option("--k", k, "deletion budget")->required();
    kernelize->add_option("-o,--output", output, "output graph file")->required();

    auto* compress = app.add_subcommand("compress", "compression to an annotated instance");
    compress->add_option("input", input)->required();
    compress->add_option("--k", k, "deletion budget")->required();
    compress->add_option("-o,--output", output, "output annotated instance file");

    auto* decompose = app.add_subcommand("decompose", "bag decomposition of a linear domino");
    decompose->add_option("input", input)->required();

    auto* reduce_sat = app.add_subcommand("reduce-sat", "3SAT to edge-deletion instance");
    reduce_sat->add_option("input", input)->required();
    reduce_sat->add_option("-o,--output", output, "output graph file")->required();
    reduce_sat->add_option("--layout", layout_path, "gadget layout sidecar file");

    auto* encode = app.add_subcommand("encode-annotated", "annotated instance to DIMACS cnf");
    encode->add_option("input", input)->required();
    encode->add_option("-o,--output", output, "output cnf file");

    auto* verify = app.add_subcommand("verify", "check a deletion set");
    verify->add_option("graph", input)->required();
    verify->add_option("deletions", input2)->required();

    auto* gen_random = app.add_subcommand("gen-random", "seeded Erdos-Renyi graph");
    gen_random->add_option("--n", gen_n)->required();
    gen_random->add_option("--p", gen_p);
    gen_random->add_option("--seed", seed);
    gen_random->add_option("-o,--output", output);

    auto* gen_domino_cmd = app.add_subcommand(
        "gen-domino", "seeded line graph of a random triangle-free graph");
    gen_domino_cmd->add_option("--n", gen_n, "vertices of the triangle-free preimage")
        ->required();
    gen_domino_cmd->add_option("--p", gen_p);
    gen_domino_cmd->add_option("--seed", seed);
    gen_domino_cmd->add_option("-o,--output", output);

    auto* gen_sat = app.add_subcommand("gen-3sat", "seeded strict 3SAT formula");
    gen_sat->add_option("--vars", gen_n)->required();
    gen_sat->add_option("--clauses", gen_m)->required();
    gen_sat->add_option("--seed", seed);
    gen_sat->add_option("-o,--output", output);

    auto* check = app.add_subcommand("check-invariants", "validation report for an input");
    check->add_option("input", input)->required();
    auto* check_k = check->add_option("--k", k, "also exercise the modulator pipeline");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace lindo;
        if (*solve) {
            SolveResult r = annotated ? solve_annotated(parse_annotated(slurp(input)))
                                      : solve_branching(parse_graph(slurp(input)), k);
            print_solution(r);
        } else if (*oracle) {
            SolveResult r;
            if (annotated) {
                AnnotatedInstance a = parse_annotated(slurp(input));
                r = brute_force_min_hds(a.graph, a.k, &a.s_set, max_subsets).result;
            } else {
                r = brute_force_min_hds(parse_graph(slurp(input)), k, nullptr, max_subsets)
                        .result;
            }
            print_solution(r);
        } else if (*kernelize) {
            KernelOutput out = kernelize_full(parse_graph(slurp(input)), k);
            spill(output, write_graph(out.graph));
            std::cout << "k " << out.k << '\n';
        } else if (*compress) {
            CompressionResult c = lindo::compress(parse_graph(slurp(input)), k);
            emit(output, write_annotated(c.instance));
            const char* kind = c.kind == CompressionResult::Kind::Annotated ? "annotated"
                               : c.kind == CompressionResult::Kind::TrivialYes ? "trivial-yes"
                                                                               : "trivial-no";
            std::cerr << "compress: " << kind << '\n';
        } else if (*decompose) {
            Graph g = parse_graph(slurp(input));
            auto d = bag_decomposition(g);
            for (int b = 0; b < d.bag_count(); ++b) {
                std::cout << "b " << b + 1 << ':';
                for (int v : d.bags[b]) std::cout << ' ' << v + 1;
                std::cout << '\n';
            }
        } else if (*reduce_sat) {
            CnfFormula phi = parse_dimacs(slurp(input));
            if (!is_strict_3sat(phi)) phi = cnf_to_3sat(phi);
            SatReduction red = sat3_to_graph(phi);
            spill(output, write_graph(red.graph));
            if (!layout_path.empty()) spill(layout_path, write_layout(red.layout));
            std::cout << "k " << red.k << '\n';
        } else if (*encode) {
            AnnotatedInstance a = parse_annotated(slurp(input));
            AnnotatedEncoding enc = annotated_to_cnf(a);
            emit(output, write_dimacs(enc.formula));
        } else if (*verify) {
            Graph g = parse_graph(slurp(input));
            EdgeSet f = parse_deletions(slurp(input2));
            std::cout << (is_hds(g, f) ? "HDS yes\n" : "HDS no\n");
        } else if (*gen_random) {
            emit(output, write_graph(gen_random_graph(seed, gen_n, gen_p)));
        } else if (*gen_domino_cmd) {
            emit(output, write_graph(gen_domino(seed, gen_n, gen_p)));
        } else if (*gen_sat) {
            emit(output, write_dimacs(gen_3sat(seed, gen_n, gen_m)));
        } else if (*check) {
            run_check_invariants(input,
                                 check_k->count() ? std::optional<int>(k) : std::nullopt);
        }
    } catch (const lindo::ScaleGuardError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
