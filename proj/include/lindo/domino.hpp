#ifndef LINDO_DOMINO_HPP
#define LINDO_DOMINO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lindo/graph.hpp"
#include "lindo/obstruction.hpp"

namespace lindo {

// The input of bag_decomposition is not {claw,diamond}-free.
struct NotDominoError : Error {
    explicit NotDominoError(Obstruction w)
        : Error("graph is not a linear domino: induced " + w.describe()), witness(w) {}
    Obstruction witness;
};

// Attachment counts contradict the modulator guarantees: the x_set
// passed to compute_attachment does not hit every obstruction.
struct ModulatorViolation : Error {
    using Error::Error;
};

// Bags of a {claw,diamond}-free graph: every maximal clique plus a
// singleton {v} for each simplicial vertex v. Every non-isolated vertex
// lies in exactly two bags, every edge in exactly one.
struct BagDecomposition {
    std::vector<std::vector<int>> bags;        // sorted vertex lists
    std::vector<std::vector<int>> vertex_bags; // per vertex: ids of bags containing it
    std::map<Edge, int> edge_bag;              // per edge: its unique bag

    int bag_count() const { return static_cast<int>(bags.size()); }
};

// Outcome of checking the five decomposition invariants. "property" and
// "witness" name the first violation; both empty on a pass.
struct ValidationReport {
    bool ok = true;
    std::string property;
    std::string witness;
};

inline ValidationReport validate_decomposition(const Graph& g, const BagDecomposition& d);

// Construction per the decomposition's definition: singleton bags for
// simplicial (and isolated) vertices first, then for every edge the
// unique maximal clique containing it, grown greedily in ascending
// vertex id. Throws NotDominoError with a witness otherwise.
inline BagDecomposition bag_decomposition(const Graph& g) {
    if (auto ob = detect_obstruction(g)) throw NotDominoError(*ob);

    BagDecomposition d;
    d.vertex_bags.assign(g.vertex_count(), {});
    auto add_bag = [&](std::vector<int> verts) {
        int id = d.bag_count();
        for (int v : verts) d.vertex_bags[v].push_back(id);
        d.bags.push_back(std::move(verts));
        return id;
    };

    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_simplicial(g, v)) add_bag({v});

    for (Edge e : g.edges()) {
        if (d.edge_bag.contains(e)) continue;
        // Grow the unique maximal clique containing e. Any common
        // neighbor of the current clique belongs to it, so greedy
        // absorption in ascending id cannot miss a vertex.
        std::vector<int> clique{e.u, e.v};
        Bitset common = g.neighbors(e.u) & g.neighbors(e.v);
        for (int w = common.first(); w >= 0; w = common.first()) {
            clique.push_back(w);
            common &= g.neighbors(w);
        }
        std::sort(clique.begin(), clique.end());
        int id = add_bag(clique);
        for (std::size_t i = 0; i < d.bags[id].size(); ++i)
            for (std::size_t j = i + 1; j < d.bags[id].size(); ++j)
                d.edge_bag[Edge(d.bags[id][i], d.bags[id][j])] = id;
    }
#ifndef NDEBUG
    // debug profile self-check; release skips the O(bags^2) pass
    if (auto rep = validate_decomposition(g, d); !rep.ok)
        throw Error("bag decomposition self-check failed: " + rep.property + " (" +
                    rep.witness + ")");
#endif
    return d;
}

inline ValidationReport validate_decomposition(const Graph& g, const BagDecomposition& d) {
    auto fail = [](std::string prop, std::string wit) {
        return ValidationReport{false, std::move(prop), std::move(wit)};
    };
    std::vector<Bitset> members;
    members.reserve(d.bags.size());
    for (const auto& bag : d.bags) {
        Bitset b(g.vertex_count());
        for (int v : bag) {
            if (v < 0 || v >= g.vertex_count())
                throw ContractViolation("bag vertex out of range: " + std::to_string(v));
            b.set(v);
        }
        members.push_back(std::move(b));
    }

    // every edge inside exactly one bag (checked first: a spurious bag
    // shows up here before it distorts the per-vertex counts)
    for (Edge e : g.edges()) {
        int in = 0;
        for (const Bitset& b : members) in += b.test(e.u) && b.test(e.v);
        if (in != 1)
            return fail("edge-in-one-bag", "edge " + std::to_string(e.u + 1) + "-" +
                                               std::to_string(e.v + 1) + " is in " +
                                               std::to_string(in) + " bags");
    }

    // non-isolated vertices in exactly two bags, isolated in exactly one
    for (int v = 0; v < g.vertex_count(); ++v) {
        int in = 0;
        for (const Bitset& b : members) in += b.test(v);
        int want = g.is_isolated(v) ? 1 : 2;
        if (in != want)
            return fail("vertex-in-two-bags", "vertex " + std::to_string(v + 1) + " is in " +
                                                  std::to_string(in) + " bags, expected " +
                                                  std::to_string(want));
    }

    // (c) two bags share at most one vertex; (d) no edge between A-v and B-v
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Bitset common = members[i] & members[j];
            int shared = common.count();
            if (shared > 1)
                return fail("bags-share-at-most-one", "bags " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " share " +
                                                          std::to_string(shared) + " vertices");
            if (shared == 1) {
                int v = common.first();
                for (int a : d.bags[i]) {
                    if (a == v) continue;
                    for (int b : d.bags[j]) {
                        if (b == v) continue;
                        if (g.adjacent(a, b))
                            return fail("no-edge-across-shared-vertex",
                                        "edge " + std::to_string(a + 1) + "-" +
                                            std::to_string(b + 1) + " crosses bags " +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            " sharing vertex " + std::to_string(v + 1));
                    }
                }
            }
        }

    // bag count bound
    if (d.bag_count() > g.vertex_count() + g.edge_count())
        return fail("bag-count-bound", std::to_string(d.bag_count()) + " bags > |V|+|E| = " +
                                           std::to_string(g.vertex_count() + g.edge_count()));
    return {};
}

// Which bags of G-X are attached to which modulator vertices. A bag B is
// attached to x when B is fully adjacent to x, with the singleton
// tie-break: {v} for non-isolated v counts only if the other bag of v is
// not fully adjacent to x.
struct AttachmentMap {
    std::vector<int> x_vertices;            // sorted, host ids
    std::vector<std::vector<int>> attached; // per x (parallel): attached bag ids

    bool is_attached(int x_index, int bag) const {
        const auto& a = attached[x_index];
        return std::find(a.begin(), a.end(), bag) != a.end();
    }
};

// d must decompose the induced subgraph g - x_set whose id map is
// to_host. Verifies the two structural consequences of the modulator
// property (at most two attached bags per x; exactly one attached bag
// among the bags of each X-adjacent vertex) and throws
// ModulatorViolation if either fails.
inline AttachmentMap compute_attachment(const Graph& g, const std::vector<int>& x_set,
                                        const BagDecomposition& d,
                                        const std::vector<int>& to_host) {
    AttachmentMap am;
    am.x_vertices = x_set;
    std::sort(am.x_vertices.begin(), am.x_vertices.end());
    am.attached.assign(am.x_vertices.size(), {});

    auto fully_adjacent = [&](int x, const std::vector<int>& bag) {
        for (int v : bag)
            if (!g.adjacent(x, to_host[v])) return false;
        return true;
    };

    std::vector<char> full(d.bag_count());
    for (std::size_t xi = 0; xi < am.x_vertices.size(); ++xi) {
        int x = am.x_vertices[xi];
        for (int b = 0; b < d.bag_count(); ++b) full[b] = fully_adjacent(x, d.bags[b]);
        for (int b = 0; b < d.bag_count(); ++b) {
            if (!full[b]) continue;
            if (d.bags[b].size() == 1) {
                int v = d.bags[b][0];
                if (d.vertex_bags[v].size() == 2) { // non-isolated simplicial vertex
                    int other = d.vertex_bags[v][0] == b ? d.vertex_bags[v][1]
                                                         : d.vertex_bags[v][0];
                    if (full[other]) continue; // tie-break: the clique wins
                }
            }
            am.attached[xi].push_back(b);
        }
        if (am.attached[xi].size() > 2)
            throw ModulatorViolation("vertex " + std::to_string(x + 1) + " has " +
                                     std::to_string(am.attached[xi].size()) +
                                     " attached bags; modulator property violated");
        // every neighbor of x in G-X must have exactly one attached bag
        for (std::size_t v = 0; v < to_host.size(); ++v) {
            if (!g.adjacent(x, to_host[v])) continue;
            int cnt = 0;
            for (int b : d.vertex_bags[v]) cnt += am.is_attached(static_cast<int>(xi), b);
            if (cnt != 1)
                throw ModulatorViolation(
                    "vertex " + std::to_string(to_host[v] + 1) + " adjacent to " +
                    std::to_string(x + 1) + " has " + std::to_string(cnt) +
                    " attached bags among its own; modulator property violated");
        }
    }
    return am;
}

// One-stop structure for the kernelizer: G-X, its decomposition, and the
// attachment relation, with host-id bags precomputed.
struct ModulatorStructure {
    InducedSubgraph rest; // g minus X
    BagDecomposition bags;
    AttachmentMap attachment;
    std::vector<std::vector<int>> host_bags; // bags in host vertex ids

    bool bag_attached_to_any(int bag) const {
        for (const auto& a : attachment.attached)
            for (int b : a)
                if (b == bag) return true;
        return false;
    }
};

inline ModulatorStructure decompose_around_modulator(const Graph& g,
                                                     const std::vector<int>& x_set) {
    ModulatorStructure ms;
    ms.rest = induced_subgraph(g, complement_vertices(g, x_set));
    ms.bags = bag_decomposition(ms.rest.graph);
    ms.attachment = compute_attachment(g, x_set, ms.bags, ms.rest.to_host);
    ms.host_bags.reserve(ms.bags.bags.size());
    for (const auto& bag : ms.bags.bags) {
        std::vector<int> hb;
        hb.reserve(bag.size());
        for (int v : bag) hb.push_back(ms.rest.to_host[v]);
        ms.host_bags.push_back(std::move(hb));
    }
    return ms;
}

} // namespace lindo

#endif
