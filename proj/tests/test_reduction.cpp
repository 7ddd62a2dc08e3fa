#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace lindo;
using namespace testsup;

namespace {

// brute-force satisfying assignment by enumeration, or empty
std::optional<std::vector<bool>> find_assignment(const CnfFormula& phi) {
    for (std::uint64_t bits = 0; bits < (1ull << phi.num_vars); ++bits) {
        std::vector<bool> a(phi.num_vars + 1, false);
        for (int v = 1; v <= phi.num_vars; ++v) a[v] = bits >> (v - 1) & 1;
        if (evaluates_true(phi, a)) return a;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("sat3_to_graph on a single clause") {
    CnfFormula phi{3, {{1, 2, 3}}};
    SatReduction red = sat3_to_graph(phi);
    CHECK(red.graph.vertex_count() == 37); // 25m + 4n
    CHECK(red.graph.edge_count() == 48);   // 36m + 4n: thick edges shared with cycles
    CHECK(red.k == 13);                    // 10m + n

    CHECK_FALSE(has_induced_k4(red.graph));
    CHECK_FALSE(detect_diamond(red.graph));

    int deg6 = 0, deg1 = 0, maxdeg = 0;
    for (int v = 0; v < red.graph.vertex_count(); ++v) {
        maxdeg = std::max(maxdeg, red.graph.degree(v));
        deg6 += red.graph.degree(v) == 6;
        deg1 += red.graph.degree(v) == 1;
    }
    CHECK(maxdeg == 6);
    CHECK(deg6 == 4);  // u and the three v-vertices
    CHECK(deg1 == 12); // clause s-vertices plus the per-variable pair
    const ClauseGadget& cg = red.layout.clauses[0];
    CHECK(red.graph.degree(cg.u) == 6);
    for (const ClauseSlot& s : cg.slots) {
        CHECK(red.graph.degree(s.v) == 6);
        CHECK(red.graph.degree(s.s) == 1);
        CHECK(red.graph.degree(s.s_t) == 1);
    }
}

TEST_CASE("sat3_to_graph insists on strict 3SAT") {
    CHECK_THROWS_AS(sat3_to_graph(CnfFormula{2, {{1, 2}}}), ContractViolation);
    CHECK_THROWS_AS(sat3_to_graph(CnfFormula{3, {{1, 1, 2}}}), ContractViolation);
}

TEST_CASE("thick edges land on the assignment side that falsifies them") {
    CnfFormula phi{3, {{1, -2, 3}}};
    SatReduction red = sat3_to_graph(phi);
    for (const VariableCycle& vc : red.layout.variables) {
        CHECK(vc.edges_false.size() == vc.pos_clauses.size() + vc.neg_clauses.size() + 1);
        CHECK(vc.edges_false.size() == vc.edges_true.size());
        for (int ci : vc.pos_clauses) {
            const ClauseSlot* slot = nullptr;
            for (const ClauseSlot& s : red.layout.clauses[ci].slots)
                if (s.var == vc.var) slot = &s;
            REQUIRE(slot);
            Edge thick(slot->t, slot->t_t);
            CHECK(EdgeSet(vc.edges_false).contains(thick));
        }
        for (int ci : vc.neg_clauses) {
            const ClauseSlot* slot = nullptr;
            for (const ClauseSlot& s : red.layout.clauses[ci].slots)
                if (s.var == vc.var) slot = &s;
            REQUIRE(slot);
            CHECK(EdgeSet(vc.edges_true).contains(Edge(slot->t, slot->t_t)));
        }
    }
}

TEST_CASE("zero-occurrence variables are dropped and recorded") {
    CnfFormula phi{5, {{1, 2, 4}}};
    SatReduction red = sat3_to_graph(phi);
    CHECK(red.layout.free_vars == std::vector<int>{3, 5});
    CHECK(red.layout.variables.size() == 3);
    CHECK(red.graph.vertex_count() == 25 + 12);
    CHECK(red.k == 13);
}

TEST_CASE("the proof's deletion set is an HDS of size k") {
    for (std::uint64_t seed : {1u, 2u, 5u, 9u}) {
        CnfFormula phi = gen_3sat(seed, 4, 3);
        auto assignment = find_assignment(phi);
        if (!assignment) continue;
        SatReduction red = sat3_to_graph(phi);
        EdgeSet f = hds_from_assignment(red.layout, *assignment);
        CHECK(static_cast<int>(f.size()) == red.k);
        CHECK(is_hds(red.graph, f));
    }
}

TEST_CASE("claims packing: k edge-disjoint claws spanning the bound") {
    CnfFormula phi = gen_3sat(3, 5, 4);
    SatReduction red = sat3_to_graph(phi);
    std::vector<Obstruction> packing;
    for (const ClauseGadget& cg : red.layout.clauses)
        for (auto& c : clause_gadget_claws(cg)) packing.push_back(c);
    for (const VariableCycle& vc : red.layout.variables)
        for (auto& c : variable_gadget_claws(vc, red.layout)) packing.push_back(c);
    CHECK(static_cast<int>(packing.size()) == red.k);
    EdgeSet used;
    for (const Obstruction& c : packing) {
        // genuinely induced claws of the construction
        auto sub = induced_subgraph(red.graph, c.vertex_set());
        CHECK(sub.graph.edge_count() == 3);
        for (Edge e : c.edges()) {
            CHECK(red.graph.has_edge(e));
            CHECK_FALSE(used.contains(e));
            used.insert(e);
        }
    }
}

TEST_CASE("verify_clause_gadget recognizes the proof deletions") {
    CnfFormula phi{3, {{1, 2, 3}}};
    SatReduction red = sat3_to_graph(phi);
    const ClauseGadget& cg = red.layout.clauses[0];

    // F_c with y = first slot
    EdgeSet fc{Edge(cg.u, cg.slots[0].v), Edge(cg.u, cg.slots[0].v_t),
               Edge(cg.slots[0].v, cg.slots[0].v_t)};
    for (int si : {1, 2}) {
        fc.insert(Edge(cg.slots[si].v, cg.slots[si].t));
        fc.insert(Edge(cg.slots[si].v, cg.slots[si].t_t));
    }
    auto rep = verify_clause_gadget(red.layout, 0, fc);
    CHECK(rep.nonthick_deleted == 7);
    CHECK(rep.thick_deleted == 0);
    CHECK(rep.hits_all_claws);
    CHECK_FALSE(rep.forbidden_equality_case);

    // F_c is an HDS of the isolated gadget
    std::vector<int> gadget_verts{cg.u};
    for (const ClauseSlot& s : cg.slots)
        for (int v : {s.v, s.v_t, s.w, s.w_t, s.t, s.t_t}) gadget_verts.push_back(v);
    auto sub = induced_subgraph(red.graph, gadget_verts);
    std::vector<Edge> fc_sub;
    for (Edge e : fc) fc_sub.emplace_back(sub.from_host[e.u], sub.from_host[e.v]);
    CHECK(is_hds(sub.graph, EdgeSet(fc_sub)));

    auto rep_empty = verify_clause_gadget(red.layout, 0, {});
    CHECK_FALSE(rep_empty.hits_all_claws);
    CHECK(rep_empty.nonthick_deleted == 0);
}

TEST_CASE("verify_variable_gadget brute force at p=1, q=0") {
    CnfFormula phi{3, {{1, 2, 3}}};
    SatReduction red = sat3_to_graph(phi);
    const VariableCycle& vc = red.layout.variables[0];
    REQUIRE(vc.cycle.size() == 4);

    // collect the gadget's 8 edges: 4 cycle + 4 pendants
    std::vector<Edge> gedges = vc.edges_false;
    gedges.insert(gedges.end(), vc.edges_true.begin(), vc.edges_true.end());
    const ClauseSlot& slot = red.layout.clauses[0].slots[0];
    gedges.emplace_back(slot.t, slot.s);
    gedges.emplace_back(slot.t_t, slot.s_t);
    gedges.emplace_back(vc.t_top, vc.s_top);
    gedges.emplace_back(vc.t_bot, vc.s_bot);
    REQUIRE(gedges.size() == 8);

    int minimum = 9;
    std::vector<EdgeSet> best;
    for (int mask = 0; mask < (1 << 8); ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) es.push_back(gedges[i]);
        EdgeSet f(std::move(es));
        auto rep = verify_variable_gadget(red.layout, vc.var, f);
        CHECK(rep.meets_lower_bound);
        CHECK(rep.equality_forces_side);
        if (!rep.is_hds_of_gadget) continue;
        int size = static_cast<int>(f.size());
        if (size < minimum) {
            minimum = size;
            best = {f};
        } else if (size == minimum) {
            best.push_back(f);
        }
    }
    CHECK(minimum == 2);
    REQUIRE(best.size() == 2);
    CHECK(((best[0] == EdgeSet(vc.edges_false) && best[1] == EdgeSet(vc.edges_true)) ||
           (best[0] == EdgeSet(vc.edges_true) && best[1] == EdgeSet(vc.edges_false))));
}

TEST_CASE("annotated_to_cnf basics") {
    // obstruction-free, nothing annotated: empty satisfiable formula
    Graph free_g = gen_domino(11, 8, 0.3);
    AnnotatedEncoding e0 = annotated_to_cnf({free_g, {}, 0});
    CHECK(e0.formula.clauses.empty());
    CHECK(satisfiable_exhaustive(e0.formula));

    // a claw with everything annotated but no budget: unsatisfiable
    AnnotatedEncoding e1 = annotated_to_cnf({claw(), {0, 1, 2, 3}, 0});
    CHECK_FALSE(satisfiable_exhaustive(e1.formula));

    // obstruction with no deletable edge: the canonical FALSE formula
    AnnotatedEncoding e2 = annotated_to_cnf({claw(), {}, 3});
    CHECK(e2.formula.is_false());
}

TEST_CASE("annotated_to_cnf matches the annotated solver on seeded instances") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 120 && tested < 60; ++seed) {
        Graph g = gen_random_graph(seed * 41 + 2, 7, 0.4);
        std::vector<int> s;
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((seed >> (v % 16)) & 1) s.push_back(v);
        AnnotatedInstance a{g, s, static_cast<int>(seed % 3)};
        if (a.deletable_edges().size() > 8) continue;
        ++tested;
        AnnotatedEncoding enc = annotated_to_cnf(a);
        CHECK(satisfiable_exhaustive(enc.formula) == solve_annotated(a).yes);
    }
    CHECK(tested >= 60);
}

TEST_CASE("layout sidecar names the gadget vertices") {
    CnfFormula phi{3, {{1, -2, 3}}};
    SatReduction red = sat3_to_graph(phi);
    std::string text = write_layout(red.layout);
    CHECK(text.find("u 1 1\n") == 0);
    CHECK(text.find("\nT 1 ") != std::string::npos);
    CHECK(text.find("\ncyc 2 ") != std::string::npos);
    CHECK(text.find("free") == std::string::npos);
}
