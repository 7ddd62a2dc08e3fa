#ifndef LINDO_REDUCTION_HPP
#define LINDO_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lindo/annotated.hpp"
#include "lindo/cnf.hpp"
#include "lindo/graph.hpp"
#include "lindo/obstruction.hpp"

namespace lindo {

// --- 3SAT -> {claw,diamond}-free Edge Deletion -------------------------

// Per-clause gadget: a central vertex u and, for each of the three
// variables, the triangle fan v,~v,w,~w,t,~t plus pendant s,~s. 19 core
// vertices, 27 edges in 9 triangles; the pendants join it to the
// variable cycles.
struct ClauseSlot {
    int var = 0;        // 1-based variable id
    bool positive = true;
    int v = -1, v_t = -1; // v and tilde-v
    int w = -1, w_t = -1;
    int t = -1, t_t = -1;
    int s = -1, s_t = -1;
};

struct ClauseGadget {
    int u = -1;
    std::array<ClauseSlot, 3> slots; // ascending variable id
};

// Per-variable cycle through all of its t-vertices: t_top, then the
// positive occurrences (t,~t per clause), then t_bot, then the negative
// occurrences. Even-position edges form the "false" deletion set, odd
// the "true" one.
struct VariableCycle {
    int var = 0;
    int t_top = -1, t_bot = -1, s_top = -1, s_bot = -1;
    std::vector<int> cycle;             // vertex order around the cycle
    std::vector<Edge> edges_false;      // even edges (1-based position)
    std::vector<Edge> edges_true;       // odd edges
    std::vector<int> pos_clauses, neg_clauses; // clause indices, ascending
};

struct GadgetLayout {
    std::vector<ClauseGadget> clauses;
    std::vector<VariableCycle> variables; // occurring variables, ascending
    std::vector<int> free_vars;           // zero-occurrence variables, dropped
    int n_vertices = 0;

    const VariableCycle* find_variable(int var) const {
        for (const auto& vc : variables)
            if (vc.var == var) return &vc;
        return nullptr;
    }
};

struct SatReduction {
    Graph graph;
    int k = 0;
    GadgetLayout layout;
};

namespace detail {

inline void check_strict_3sat(const CnfFormula& phi) {
    phi.validate();
    if (!is_strict_3sat(phi))
        throw ContractViolation(
            "formula is not strict 3SAT (three distinct variables per clause); "
            "run cnf_to_3sat first");
}

} // namespace detail

// The hardness construction: disjoint clause gadgets wired together by
// variable cycles with pendant s-vertices. For m clauses and n occurring
// variables the output has 25m + 4n vertices, budget k = 10m + n, no
// induced K4 or diamond, and maximum degree 6 (for m >= 1). Deleting
// exactly one of edges_false/edges_true per variable corresponds to a
// truth assignment.
inline SatReduction sat3_to_graph(const CnfFormula& phi) {
    detail::check_strict_3sat(phi);
    SatReduction out;
    GadgetLayout& L = out.layout;

    int next_id = 0;
    std::vector<Edge> edges;
    auto add_edge = [&edges](int a, int b) { edges.emplace_back(a, b); };
    auto add_triangle = [&](int a, int b, int c) {
        add_edge(a, b);
        add_edge(a, c);
        add_edge(b, c);
    };

    const int m = static_cast<int>(phi.clauses.size());
    for (int ci = 0; ci < m; ++ci) {
        ClauseGadget cg;
        cg.u = next_id++;
        std::array<int, 3> lits{phi.clauses[ci][0], phi.clauses[ci][1], phi.clauses[ci][2]};
        std::sort(lits.begin(), lits.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        for (int si = 0; si < 3; ++si) {
            ClauseSlot& slot = cg.slots[si];
            slot.var = std::abs(lits[si]);
            slot.positive = lits[si] > 0;
            slot.v = next_id++;
            slot.v_t = next_id++;
            slot.w = next_id++;
            slot.w_t = next_id++;
            slot.t = next_id++;
            slot.t_t = next_id++;
            slot.s = next_id++;
            slot.s_t = next_id++;
            add_triangle(cg.u, slot.v, slot.v_t);
            add_triangle(slot.v, slot.w, slot.w_t);
            add_triangle(slot.v, slot.t, slot.t_t);
            add_edge(slot.t, slot.s);
            add_edge(slot.t_t, slot.s_t);
        }
        L.clauses.push_back(cg);
    }

    // occurrence lists
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> occ; // var -> (pos, neg clauses)
    for (int ci = 0; ci < m; ++ci)
        for (const ClauseSlot& slot : L.clauses[ci].slots)
            (slot.positive ? occ[slot.var].first : occ[slot.var].second).push_back(ci);
    for (int var = 1; var <= phi.num_vars; ++var)
        if (!occ.contains(var)) L.free_vars.push_back(var);

    auto slot_of = [&L](int clause, int var) -> const ClauseSlot& {
        for (const ClauseSlot& s : L.clauses[clause].slots)
            if (s.var == var) return s;
        throw ContractViolation("variable not in clause");
    };

    for (const auto& [var, lists] : occ) { // std::map: ascending variable id
        VariableCycle vc;
        vc.var = var;
        vc.pos_clauses = lists.first;
        vc.neg_clauses = lists.second;
        vc.t_top = next_id++;
        vc.t_bot = next_id++;
        vc.s_top = next_id++;
        vc.s_bot = next_id++;
        add_edge(vc.t_top, vc.s_top);
        add_edge(vc.t_bot, vc.s_bot);

        vc.cycle.push_back(vc.t_top);
        for (int ci : vc.pos_clauses) {
            const ClauseSlot& s = slot_of(ci, var);
            vc.cycle.push_back(s.t);
            vc.cycle.push_back(s.t_t);
        }
        vc.cycle.push_back(vc.t_bot);
        for (int ci : vc.neg_clauses) {
            const ClauseSlot& s = slot_of(ci, var);
            vc.cycle.push_back(s.t);
            vc.cycle.push_back(s.t_t);
        }
        const int len = static_cast<int>(vc.cycle.size());
        for (int i = 0; i < len; ++i) {
            Edge e(vc.cycle[i], vc.cycle[(i + 1) % len]);
            add_edge(e.u, e.v);
            // 1-based edge position: odd edges -> true-side set
            if ((i + 1) % 2 == 1)
                vc.edges_true.push_back(e);
            else
                vc.edges_false.push_back(e);
        }
        L.variables.push_back(std::move(vc));
    }

    L.n_vertices = next_id;
    out.graph = Graph(next_id, edges);
    const int n_occ = static_cast<int>(L.variables.size());
    out.k = 10 * m + n_occ;

    // structural guarantees of the construction; a failure here is a bug
    if (out.graph.vertex_count() != 25 * m + 4 * n_occ)
        throw Error("reduction vertex count mismatch");
    if (has_induced_k4(out.graph) || detect_diamond(out.graph))
        throw Error("reduction output is not {K4,diamond}-free");
    int max_deg = 0;
    for (int v = 0; v < out.graph.vertex_count(); ++v)
        max_deg = std::max(max_deg, out.graph.degree(v));
    if (m > 0 && max_deg != 6) throw Error("reduction output has wrong maximum degree");
    return out;
}

// The deletion set the satisfiability proof builds from an assignment:
// the chosen side of every variable cycle, plus per clause the full
// u-triangle of one satisfied variable and the two v-t edges of the
// other two. Size exactly k; an HDS whenever the assignment satisfies
// the formula.
inline EdgeSet hds_from_assignment(const GadgetLayout& layout,
                                   const std::vector<bool>& assignment) {
    std::vector<Edge> f;
    std::vector<char> satisfied_by(layout.clauses.size(), -1);
    for (const VariableCycle& vc : layout.variables) {
        const auto& side = assignment[vc.var] ? vc.edges_true : vc.edges_false;
        f.insert(f.end(), side.begin(), side.end());
    }
    for (std::size_t ci = 0; ci < layout.clauses.size(); ++ci) {
        const ClauseGadget& cg = layout.clauses[ci];
        int chosen = -1;
        for (int si = 0; si < 3; ++si)
            if (assignment[cg.slots[si].var] == cg.slots[si].positive) {
                chosen = si;
                break;
            }
        if (chosen < 0)
            throw ContractViolation("assignment does not satisfy clause " +
                                    std::to_string(ci + 1));
        satisfied_by[ci] = static_cast<char>(chosen);
        for (int si = 0; si < 3; ++si) {
            const ClauseSlot& slot = cg.slots[si];
            if (si == chosen) {
                f.emplace_back(cg.u, slot.v);
                f.emplace_back(cg.u, slot.v_t);
                f.emplace_back(slot.v, slot.v_t);
            } else {
                f.emplace_back(slot.v, slot.t);
                f.emplace_back(slot.v, slot.t_t);
            }
        }
    }
    return EdgeSet(std::move(f));
}

// The 7 edge-disjoint claws of the clause-gadget lower bound: the
// central claw on u and, per variable, one claw at v on the plain side
// and one on the tilde side. None of them touches a thick t-~t edge.
inline std::vector<Obstruction> clause_gadget_claws(const ClauseGadget& cg) {
    std::vector<Obstruction> claws;
    claws.push_back(
        Obstruction::claw(cg.u, cg.slots[0].v_t, cg.slots[1].v_t, cg.slots[2].v_t));
    for (const ClauseSlot& s : cg.slots) {
        claws.push_back(Obstruction::claw(s.v, cg.u, s.w, s.t));
        claws.push_back(Obstruction::claw(s.v, s.v_t, s.w_t, s.t_t));
    }
    return claws;
}

// The p+q+1 edge-disjoint claws of the variable-cycle lower bound:
// every second cycle vertex is the center of a claw formed by its two
// cycle neighbors and its pendant.
inline std::vector<Obstruction> variable_gadget_claws(const VariableCycle& vc,
                                                      const GadgetLayout& layout) {
    auto pendant_of = [&](int t_vertex) {
        if (t_vertex == vc.t_top) return vc.s_top;
        if (t_vertex == vc.t_bot) return vc.s_bot;
        for (const ClauseGadget& cg : layout.clauses)
            for (const ClauseSlot& s : cg.slots) {
                if (s.t == t_vertex) return s.s;
                if (s.t_t == t_vertex) return s.s_t;
            }
        throw ContractViolation("vertex is not on the cycle");
    };
    std::vector<Obstruction> claws;
    const int len = static_cast<int>(vc.cycle.size());
    for (int i = 0; i < len; i += 2) {
        int c = vc.cycle[i];
        int prev = vc.cycle[(i + len - 1) % len];
        int next = vc.cycle[(i + 1) % len];
        claws.push_back(Obstruction::claw(c, prev, next, pendant_of(c)));
    }
    return claws;
}

struct ClauseGadgetReport {
    int nonthick_deleted = 0;   // deletions outside the three thick t-~t edges
    int thick_deleted = 0;
    bool hits_all_claws = false; // at least one edge of each of the 7 packed claws
    // exactly 7 non-thick deletions with all three thick edges gone:
    // impossible for an HDS by the gadget lower bound
    bool forbidden_equality_case = false;
};

inline ClauseGadgetReport verify_clause_gadget(const GadgetLayout& layout, int clause_index,
                                               const EdgeSet& f) {
    const ClauseGadget& cg = layout.clauses.at(clause_index);
    EdgeSet thick;
    std::vector<Edge> gadget_edges;
    for (const ClauseSlot& s : cg.slots) {
        thick.insert(Edge(s.t, s.t_t));
        for (Edge e : {Edge(cg.u, s.v), Edge(cg.u, s.v_t), Edge(s.v, s.v_t), Edge(s.v, s.w),
                       Edge(s.v, s.w_t), Edge(s.w, s.w_t), Edge(s.v, s.t), Edge(s.v, s.t_t),
                       Edge(s.t, s.t_t)})
            gadget_edges.push_back(e);
    }
    EdgeSet gadget(gadget_edges);
    for (Edge e : f)
        if (!gadget.contains(e))
            throw ContractViolation("deletion set leaves the clause gadget");

    ClauseGadgetReport rep;
    for (Edge e : f)
        thick.contains(e) ? ++rep.thick_deleted : ++rep.nonthick_deleted;
    rep.hits_all_claws = true;
    for (const Obstruction& claw : clause_gadget_claws(cg)) {
        bool hit = false;
        for (Edge e : claw.edges()) hit = hit || f.contains(e);
        rep.hits_all_claws = rep.hits_all_claws && hit;
    }
    rep.forbidden_equality_case = rep.thick_deleted == 3 && rep.nonthick_deleted == 7;
    return rep;
}

struct VariableGadgetReport {
    bool is_hds_of_gadget = false;
    int deleted = 0;
    int lower_bound = 0;        // p + q + 1
    bool meets_lower_bound = false;
    bool equality_forces_side = false; // at the bound, f is one full cycle side
};

inline VariableGadgetReport verify_variable_gadget(const GadgetLayout& layout, int var,
                                                   const EdgeSet& f) {
    const VariableCycle* vc = layout.find_variable(var);
    if (!vc) throw ContractViolation("variable " + std::to_string(var) + " has no gadget");

    // induced variable gadget: the cycle vertices plus their pendants
    std::vector<int> verts = vc->cycle;
    auto pendant_pair = [&](int t_vertex) {
        if (t_vertex == vc->t_top) return vc->s_top;
        if (t_vertex == vc->t_bot) return vc->s_bot;
        for (const ClauseGadget& cg : layout.clauses)
            for (const ClauseSlot& s : cg.slots) {
                if (s.t == t_vertex) return s.s;
                if (s.t_t == t_vertex) return s.s_t;
            }
        throw ContractViolation("vertex is not on the cycle");
    };
    std::vector<Edge> gedges;
    const int len = static_cast<int>(vc->cycle.size());
    for (int i = 0; i < len; ++i) {
        verts.push_back(pendant_pair(vc->cycle[i]));
        gedges.emplace_back(vc->cycle[i], pendant_pair(vc->cycle[i]));
        gedges.emplace_back(vc->cycle[i], vc->cycle[(i + 1) % len]);
    }
    EdgeSet gadget(gedges);
    for (Edge e : f)
        if (!gadget.contains(e))
            throw ContractViolation("deletion set leaves the variable gadget");

    std::sort(verts.begin(), verts.end());
    auto sub = induced_subgraph(Graph(layout.n_vertices, gedges), verts);
    // map f into subgraph ids
    std::vector<Edge> f_sub;
    for (Edge e : f) f_sub.emplace_back(sub.from_host[e.u], sub.from_host[e.v]);

    VariableGadgetReport rep;
    rep.deleted = static_cast<int>(f.size());
    rep.lower_bound =
        static_cast<int>(vc->pos_clauses.size() + vc->neg_clauses.size()) + 1;
    rep.is_hds_of_gadget = is_hds(sub.graph, EdgeSet(f_sub));
    rep.meets_lower_bound = !rep.is_hds_of_gadget || rep.deleted >= rep.lower_bound;
    rep.equality_forces_side = true;
    if (rep.is_hds_of_gadget && rep.deleted == rep.lower_bound)
        rep.equality_forces_side =
            f == EdgeSet(vc->edges_false) || f == EdgeSet(vc->edges_true);
    return rep;
}

// --- Annotated instance -> CNF -----------------------------------------

struct AnnotatedEncoding {
    CnfFormula formula;
    std::vector<Edge> edge_vars; // variable i+1 <-> edge_vars[i] deleted
    int first_aux_var = 0;       // sequential-counter auxiliaries start here
};

namespace detail {

// Sinz sequential counter for "at most k of lits are true". Auxiliary
// variables are allocated from phi.num_vars upward.
inline void encode_at_most_k(CnfFormula& phi, const std::vector<int>& lits, int k) {
    const int n = static_cast<int>(lits.size());
    if (k >= n) return;
    if (k == 0) {
        for (int lit : lits) phi.clauses.push_back({-lit});
        return;
    }
    const int base = phi.num_vars;
    auto reg = [base, k](int i, int j) { // register s_{i,j}, i in 1..n-1, j in 1..k
        return base + (i - 1) * k + j;
    };
    phi.num_vars += (n - 1) * k;

    phi.clauses.push_back({-lits[0], reg(1, 1)});
    for (int j = 2; j <= k; ++j) phi.clauses.push_back({-reg(1, j)});
    for (int i = 2; i <= n - 1; ++i) {
        phi.clauses.push_back({-lits[i - 1], reg(i, 1)});
        phi.clauses.push_back({-reg(i - 1, 1), reg(i, 1)});
        for (int j = 2; j <= k; ++j) {
            phi.clauses.push_back({-lits[i - 1], -reg(i - 1, j - 1), reg(i, j)});
            phi.clauses.push_back({-reg(i - 1, j), reg(i, j)});
        }
        phi.clauses.push_back({-lits[i - 1], -reg(i - 1, k)});
    }
    phi.clauses.push_back({-lits[n - 1], -reg(n - 1, k)});
}

} // namespace detail

// One decision variable per deletable edge; for every 4-subset of
// vertices, every deletion pattern that would leave an induced claw or
// diamond is excluded by a blocking clause; a sequential counter caps
// the number of deletions at k. Satisfiable iff the annotated instance
// is a yes-instance.
inline AnnotatedEncoding annotated_to_cnf(const AnnotatedInstance& a,
                                          std::int64_t max_work = 200'000'000) {
    const Graph& g = a.graph;
    const int n = g.vertex_count();
    {
        std::int64_t quads = static_cast<std::int64_t>(n) * n * n * n / 24;
        if (quads * 64 > max_work)
            throw ScaleGuardError("blocking-clause enumeration over " + std::to_string(n) +
                                  " vertices exceeds guard");
    }

    AnnotatedEncoding enc;
    enc.edge_vars = a.deletable_edges().edges();
    std::map<Edge, int> var_of;
    for (std::size_t i = 0; i < enc.edge_vars.size(); ++i)
        var_of[enc.edge_vars[i]] = static_cast<int>(i) + 1;
    enc.formula.num_vars = static_cast<int>(enc.edge_vars.size());

    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    const std::array<int, 4> quad{p, q, r, s};
                    // present edges and which of them are deletable
                    std::vector<Edge> present, deletable;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(quad[i], quad[j])) {
                                Edge e(quad[i], quad[j]);
                                present.push_back(e);
                                if (var_of.contains(e)) deletable.push_back(e);
                            }
                    const int dn = static_cast<int>(deletable.size());
                    for (int mask = 0; mask < (1 << dn); ++mask) {
                        // adjacency after deleting pattern `mask`
                        EdgeSet dropped;
                        for (int i = 0; i < dn; ++i)
                            if (mask >> i & 1) dropped.insert(deletable[i]);
                        int deg[4] = {0, 0, 0, 0};
                        int cnt = 0;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) {
                                Edge e(quad[i], quad[j]);
                                if (g.adjacent(quad[i], quad[j]) && !dropped.contains(e)) {
                                    ++cnt;
                                    ++deg[i];
                                    ++deg[j];
                                }
                            }
                        bool claw = cnt == 3 && (deg[0] == 3 || deg[1] == 3 || deg[2] == 3 ||
                                                 deg[3] == 3);
                        bool diamond = cnt == 5;
                        if (!claw && !diamond) continue;
                        // forbid exactly this pattern
                        std::vector<int> clause;
                        for (int i = 0; i < dn; ++i)
                            clause.push_back(mask >> i & 1 ? -var_of[deletable[i]]
                                                           : var_of[deletable[i]]);
                        if (clause.empty()) {
                            enc.formula = CnfFormula::canonical_false();
                            enc.edge_vars.clear();
                            enc.first_aux_var = 0;
                            return enc;
                        }
                        enc.formula.clauses.push_back(std::move(clause));
                    }
                }

    enc.first_aux_var = enc.formula.num_vars + 1;
    std::vector<int> dvars(enc.edge_vars.size());
    for (std::size_t i = 0; i < dvars.size(); ++i) dvars[i] = static_cast<int>(i) + 1;
    detail::encode_at_most_k(enc.formula, dvars, a.k);
    return enc;
}

// --- layout sidecar file ------------------------------------------------

// Line-oriented description of the gadget vertex ids (all 1-based):
//   u <clause> <uid>
//   v|w|t|s <clause> <var> <vid> <vid_tilde>
//   T <var> <t_top> <t_bot>
//   S <var> <s_top> <s_bot>
//   cyc <var> <vid>...
//   free <var>
inline void write_layout(std::ostream& os, const GadgetLayout& L) {
    for (std::size_t ci = 0; ci < L.clauses.size(); ++ci) {
        const ClauseGadget& cg = L.clauses[ci];
        os << "u " << ci + 1 << ' ' << cg.u + 1 << '\n';
        for (const ClauseSlot& s : cg.slots) {
            os << "v " << ci + 1 << ' ' << s.var << ' ' << s.v + 1 << ' ' << s.v_t + 1 << '\n';
            os << "w " << ci + 1 << ' ' << s.var << ' ' << s.w + 1 << ' ' << s.w_t + 1 << '\n';
            os << "t " << ci + 1 << ' ' << s.var << ' ' << s.t + 1 << ' ' << s.t_t + 1 << '\n';
            os << "s " << ci + 1 << ' ' << s.var << ' ' << s.s + 1 << ' ' << s.s_t + 1 << '\n';
        }
    }
    for (const VariableCycle& vc : L.variables) {
        os << "T " << vc.var << ' ' << vc.t_top + 1 << ' ' << vc.t_bot + 1 << '\n';
        os << "S " << vc.var << ' ' << vc.s_top + 1 << ' ' << vc.s_bot + 1 << '\n';
        os << "cyc " << vc.var;
        for (int v : vc.cycle) os << ' ' << v + 1;
        os << '\n';
    }
    for (int var : L.free_vars) os << "free " << var << '\n';
}

inline std::string write_layout(const GadgetLayout& L) {
    std::ostringstream os;
    write_layout(os, L);
    return os.str();
}

} // namespace lindo

#endif
