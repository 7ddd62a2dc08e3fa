#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace lindo;
using namespace testsup;

namespace {

// instances small enough for the double brute force
Graph seeded_instance(std::uint64_t seed, int max_n = 10) {
    int n = 5 + static_cast<int>(seed % (max_n - 4));
    double p = 0.2 + 0.1 * static_cast<double>(seed % 3);
    return gen_random_graph(seed * 977 + 101, n, p);
}

} // namespace

TEST_CASE("marking on an empty modulator") {
    Graph g = gen_domino(21, 9, 0.3);
    auto r = build_modulator(g, 2);
    REQUIRE_FALSE(r.no_instance);
    auto marking = mark_and_extract_s(g, r.modulator, 2);
    CHECK(marking.marked.empty());
    CHECK(marking.s_set.empty());
    CHECK(marking.small_threshold == 6);
}

TEST_CASE("marking on a single claw covers the whole graph") {
    auto r = build_modulator(claw(), 1);
    REQUIRE_FALSE(r.no_instance);
    REQUIRE(r.modulator.x == std::vector<int>{0, 1, 2, 3});
    auto marking = mark_and_extract_s(claw(), r.modulator, 1);
    CHECK(marking.s_set == std::vector<int>{0, 1, 2, 3});
    // E(S) = E(G): every minimal HDS is trivially inside
    auto bf = brute_force_min_hds(claw(), 1);
    EdgeSet es(claw().edges());
    for (const auto& f : bf.minimal_hds)
        for (Edge e : f) CHECK(es.contains(e));
}

TEST_CASE("every minimal HDS lives inside E(S) on seeded instances") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 200 && tested < 50; ++seed) {
        Graph g = seeded_instance(seed);
        int k = 1 + static_cast<int>(seed % 2);
        auto bm = build_modulator(g, k);
        if (bm.no_instance) continue;
        ++tested;
        auto marking = mark_and_extract_s(g, bm.modulator, k);
        std::vector<bool> in_s(g.vertex_count(), false);
        for (int v : marking.s_set) in_s[v] = true;
        auto bf = brute_force_min_hds(g, k);
        for (const auto& f : bf.minimal_hds)
            for (Edge e : f) {
                CHECK(in_s[e.u]);
                CHECK(in_s[e.v]);
            }
    }
    CHECK(tested >= 50);
}

TEST_CASE("build_u on trivial shapes") {
    Graph free_g = gen_domino(31, 8, 0.25);
    auto built = build_u(free_g, {}, 2);
    CHECK(built.u_set.empty());
    CHECK(built.instance.graph.vertex_count() == 0);

    auto whole = build_u(claw(), {0, 1, 2, 3}, 1);
    CHECK(whole.u_set == std::vector<int>{0, 1, 2, 3});
    CHECK(whole.instance.graph == claw());
    CHECK(whole.instance.s_set == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("build_u preserves the answer under the marking guarantee") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 150 && tested < 40; ++seed) {
        Graph g = seeded_instance(seed, 9);
        int k = 1 + static_cast<int>(seed % 2);
        auto bm = build_modulator(g, k);
        if (bm.no_instance || bm.modulator.x.empty()) continue;
        ++tested;
        auto marking = mark_and_extract_s(g, bm.modulator, k);
        auto built = build_u(g, marking.s_set, k);
        bool lhs = brute_force_min_hds(g, k).result.yes;
        bool rhs = brute_force_min_hds(built.instance.graph, k, &built.instance.s_set)
                       .result.yes;
        CHECK(lhs == rhs);
    }
    CHECK(tested >= 40);
}

TEST_CASE("compress short-circuits the trivial cases") {
    Graph free_g = gen_domino(41, 8, 0.3);
    auto yes = compress(free_g, 0);
    CHECK(yes.kind == CompressionResult::Kind::TrivialYes);
    CHECK(solve_annotated(yes.instance).yes);

    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i)
        for (int leaf = 1; leaf < 4; ++leaf) es.emplace_back(4 * i, 4 * i + leaf);
    Graph claws(12, es);
    auto no = compress(claws, 2);
    CHECK(no.kind == CompressionResult::Kind::TrivialNo);
    CHECK_FALSE(solve_annotated(no.instance).yes);
}

TEST_CASE("compress preserves the answer and the size chain") {
    int annotated_seen = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = seeded_instance(seed);
        int k = static_cast<int>(seed % 3);
        auto c = compress(g, k);
        bool expected = solve_branching(g, k).yes;
        CHECK(solve_annotated(c.instance).yes == expected);
        if (c.kind != CompressionResult::Kind::Annotated) continue;
        ++annotated_seen;
        auto X = static_cast<long long>(c.modulator.x.size());
        auto S = static_cast<long long>(c.marking.s_set.size());
        auto U = static_cast<long long>(c.u_set.size());
        CHECK(X <= 4 * k);
        CHECK(S <= X + (2 * X + 2 * X * (2 * k + 1) + X * X * (k + 1)) * (2 * k + 1));
        CHECK(U <= S + 128 * S * S * S);
    }
    CHECK(annotated_seen >= 30);
}

TEST_CASE("unattached bags lose edges only down to a clique plus isolated vertices") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 200 && tested < 30; ++seed) {
        Graph g = seeded_instance(seed, 9);
        const int k = 2;
        auto bm = build_modulator(g, k);
        if (bm.no_instance || bm.modulator.x.empty()) continue;
        auto ms = decompose_around_modulator(g, bm.modulator.x);
        auto bf = brute_force_min_hds(g, k);
        if (bf.minimal_hds.empty()) continue;
        ++tested;
        for (const auto& f : bf.minimal_hds)
            for (int b = 0; b < ms.bags.bag_count(); ++b) {
                if (ms.bag_attached_to_any(b)) continue;
                // within the bag, non-isolated vertices must form a clique
                const auto& bag = ms.host_bags[b];
                Graph after = delete_edges(g, f);
                std::vector<int> live;
                for (int v : bag) {
                    bool isolated = true;
                    for (int u : bag)
                        if (u != v && after.adjacent(u, v)) isolated = false;
                    if (!isolated) live.push_back(v);
                }
                for (std::size_t i = 0; i < live.size(); ++i)
                    for (std::size_t j = i + 1; j < live.size(); ++j)
                        CHECK(after.adjacent(live[i], live[j]));
            }
    }
    CHECK(tested >= 30);
}

TEST_CASE("no small deletion set touches a big clique") {
    // a claw shares one leaf with K_{2k+2}; the clique must stay intact
    for (int k : {1, 2}) {
        const int cs = 2 * k + 2; // clique vertices 3 .. 3+cs-1
        std::vector<Edge> es{Edge(0, 1), Edge(0, 2), Edge(0, 3)};
        EdgeSet clique_edges;
        for (int i = 3; i < 3 + cs; ++i)
            for (int j = i + 1; j < 3 + cs; ++j) {
                es.emplace_back(i, j);
                clique_edges.insert(Edge(i, j));
            }
        Graph g(3 + cs, es);
        auto bf = brute_force_min_hds(g, k);
        CHECK(bf.result.yes);
        int count = 0;
        for (const auto& f : bf.minimal_hds) {
            ++count;
            for (Edge e : f) CHECK_FALSE(clique_edges.contains(e));
        }
        CHECK(count > 0);
    }
    // seeded instances with a big clique glued onto a random graph
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int k = 1 + static_cast<int>(seed % 2);
        const int cs = 2 * k + 2;
        Graph base = gen_random_graph(seed * 61 + 9, 6, 0.35);
        int n = base.vertex_count() + cs - 1; // clique shares vertex 0
        std::vector<Edge> es = base.edges();
        EdgeSet clique_edges;
        std::vector<int> clique{0};
        for (int i = base.vertex_count(); i < n; ++i) clique.push_back(i);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                es.emplace_back(clique[i], clique[j]);
                clique_edges.insert(Edge(clique[i], clique[j]));
            }
        Graph g(n, es);
        auto bf = brute_force_min_hds(g, k);
        for (const auto& f : bf.minimal_hds)
            for (Edge e : f) CHECK_FALSE(clique_edges.contains(e));
    }
}

TEST_CASE("kernelize_full short-circuits") {
    Graph free_g = gen_domino(51, 8, 0.3);
    auto yes = kernelize_full(free_g, 3);
    CHECK(yes.graph.vertex_count() == 0);
    CHECK(yes.k == 0);

    std::vector<Edge> es;
    for (int i = 0; i < 2; ++i)
        for (int leaf = 1; leaf < 4; ++leaf) es.emplace_back(4 * i, 4 * i + leaf);
    auto no = kernelize_full(Graph(8, es), 1);
    CHECK(no.k == 0);
    auto ob = find_obstruction(no.graph);
    REQUIRE(ob);
    CHECK(ob->kind == ObstructionKind::Claw);
}

TEST_CASE("kernelize_full preserves the answer through the CNF leg") {
    int through_cnf = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = seeded_instance(seed, 8);
        const int k = static_cast<int>(seed % 2);
        bool expected = solve_branching(g, k).yes;
        auto c = compress(g, k);
        if (c.kind == CompressionResult::Kind::TrivialYes) {
            CHECK(expected);
            continue;
        }
        if (c.kind == CompressionResult::Kind::TrivialNo) {
            CHECK_FALSE(expected);
            continue;
        }
        ++through_cnf;
        AnnotatedEncoding enc = annotated_to_cnf(c.instance);
        CnfFormula three = cnf_to_3sat(enc.formula);
        CHECK(satisfiable_exhaustive(enc.formula, 40) == expected);
        CHECK(satisfiable_exhaustive(three, 60) == expected);
        auto out = kernelize_full(g, k);
        // final instance carries the hardness construction's structure
        CHECK_FALSE(has_induced_k4(out.graph));
        CHECK_FALSE(detect_diamond(out.graph));
        if (!three.clauses.empty()) {
            SatReduction red = sat3_to_graph(three);
            CHECK(out.graph == red.graph);
            CHECK(out.k == red.k);
        }
    }
    CHECK(through_cnf >= 15);
}
