#ifndef LINDO_OBSTRUCTION_HPP
#define LINDO_OBSTRUCTION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lindo/graph.hpp"

namespace lindo {

enum class ObstructionKind { Claw, Diamond };

// A witnessed induced claw or diamond.
//
// Claw: center c adjacent to three pairwise non-adjacent leaves.
// Diamond on {u,v,w,x}: edges {uv,uw,vw,vx,wx}, ux absent; v,w are the
// degree-3 pair, u,x the degree-2 pair.
struct Obstruction {
    ObstructionKind kind;
    // Claw: {center, leaf1, leaf2, leaf3} with leaves ascending.
    // Diamond: {v, w, u, x} with v < w (degree 3) and u < x (degree 2).
    std::array<int, 4> vtx;

    static Obstruction claw(int center, int l1, int l2, int l3) {
        std::array<int, 3> ls{l1, l2, l3};
        std::sort(ls.begin(), ls.end());
        return {ObstructionKind::Claw, {center, ls[0], ls[1], ls[2]}};
    }

    static Obstruction diamond(int v, int w, int u, int x) {
        if (v > w) std::swap(v, w);
        if (u > x) std::swap(u, x);
        return {ObstructionKind::Diamond, {v, w, u, x}};
    }

    int center() const { return vtx[0]; } // claw only
    std::array<int, 3> leaves() const { return {vtx[1], vtx[2], vtx[3]}; }
    std::array<int, 2> degree3_pair() const { return {vtx[0], vtx[1]}; } // diamond only
    std::array<int, 2> degree2_pair() const { return {vtx[2], vtx[3]}; }

    // 3 claw legs or 5 diamond edges, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        if (kind == ObstructionKind::Claw) {
            es = {Edge(vtx[0], vtx[1]), Edge(vtx[0], vtx[2]), Edge(vtx[0], vtx[3])};
        } else {
            int v = vtx[0], w = vtx[1], u = vtx[2], x = vtx[3];
            es = {Edge(u, v), Edge(u, w), Edge(v, w), Edge(v, x), Edge(w, x)};
        }
        std::sort(es.begin(), es.end());
        return es;
    }

    std::vector<int> vertex_set() const {
        std::vector<int> vs(vtx.begin(), vtx.end());
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    std::string describe() const {
        std::string s = kind == ObstructionKind::Claw ? "claw" : "diamond";
        for (int v : vertex_set()) s += ' ' + std::to_string(v + 1);
        return s;
    }

    bool operator==(const Obstruction&) const = default;
};

namespace detail {

// Classify the subgraph induced by {a<b<c<d}. Returns nothing unless it
// is exactly a claw (3 edges forming a star) or a diamond (5 edges).
inline std::optional<Obstruction> classify_quad(const Graph& g, int a, int b, int c, int d) {
    const std::array<int, 4> q{a, b, c, d};
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (edges == 3) {
        for (int i = 0; i < 4; ++i)
            if (deg[i] == 3)
                return Obstruction::claw(q[i], q[(i + 1) % 4], q[(i + 2) % 4], q[(i + 3) % 4]);
        return std::nullopt; // path or triangle+isolated
    }
    if (edges == 5) {
        int u = -1, x = -1, v = -1, w = -1;
        for (int i = 0; i < 4; ++i)
            (deg[i] == 2 ? (u < 0 ? u : x) : (v < 0 ? v : w)) = q[i];
        return Obstruction::diamond(v, w, u, x);
    }
    return std::nullopt;
}

} // namespace detail

// Canonically-first induced claw or diamond that uses no forbidden edge.
// Enumerates 4-subsets in lexicographic vertex order; within a subset the
// induced shape is unique. Returns nothing iff every induced obstruction
// uses a forbidden edge (with no forbidden edges: iff g is
// {claw,diamond}-free).
inline std::optional<Obstruction> find_obstruction(const Graph& g,
                                                   const EdgeSet& forbidden = {}) {
    for (Edge e : forbidden)
        if (!g.has_edge(e))
            throw ContractViolation("forbidden set contains non-edge " + std::to_string(e.u + 1) +
                                    "-" + std::to_string(e.v + 1));
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    auto ob = detail::classify_quad(g, a, b, c, d);
                    if (!ob) continue;
                    bool eligible = true;
                    for (Edge e : ob->edges())
                        if (forbidden.contains(e)) {
                            eligible = false;
                            break;
                        }
                    if (eligible) return ob;
                }
    return std::nullopt;
}

// Fast detection path used inside solvers and brute-force loops, where
// the canonical subset order does not matter. Claw: look for a vertex
// with three pairwise non-adjacent neighbors. Diamond: look for an edge
// whose common neighborhood holds a non-adjacent pair.
inline std::optional<Obstruction> detect_claw(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.neighbors(v);
        if (nb.count() < 3) continue;
        for (int a = nb.first(); a >= 0; a = nb.next(a))
            for (int b = nb.next(a); b >= 0; b = nb.next(b)) {
                if (g.adjacent(a, b)) continue;
                Bitset rest = nb;
                rest.subtract(g.neighbors(a));
                rest.subtract(g.neighbors(b));
                rest.reset(a);
                rest.reset(b);
                if (int c = rest.first(); c >= 0) return Obstruction::claw(v, a, b, c);
            }
    }
    return std::nullopt;
}

inline std::optional<Obstruction> detect_diamond(const Graph& g) {
    for (Edge e : g.edges()) {
        Bitset common = g.neighbors(e.u) & g.neighbors(e.v);
        if (common.count() < 2) continue;
        for (int a = common.first(); a >= 0; a = common.next(a)) {
            Bitset rest = common;
            rest.subtract(g.neighbors(a));
            rest.reset(a);
            if (int x = rest.first(); x >= 0) return Obstruction::diamond(e.u, e.v, a, x);
        }
    }
    return std::nullopt;
}

inline std::optional<Obstruction> detect_obstruction(const Graph& g) {
    if (auto c = detect_claw(g)) return c;
    return detect_diamond(g);
}

inline bool has_obstruction(const Graph& g) { return detect_obstruction(g).has_value(); }

// Induced K4 detection (used by the hardness-reduction checks).
inline bool has_induced_k4(const Graph& g) {
    for (Edge e : g.edges()) {
        Bitset common = g.neighbors(e.u) & g.neighbors(e.v);
        for (int a = common.first(); a >= 0; a = common.next(a))
            if ((common & g.neighbors(a)).any()) return true;
    }
    return false;
}

// True iff G - F contains no induced claw and no induced diamond.
inline bool is_hds(const Graph& g, const EdgeSet& f) {
    return !has_obstruction(delete_edges(g, f));
}

// Maximal edge-disjoint packing of induced obstructions plus the vertex
// modulator X it spans. Every induced claw/diamond of the host graph has
// an edge inside E(X).
struct Modulator {
    std::vector<Obstruction> packing;
    std::vector<int> x; // sorted union of packing vertex sets
};

struct BuildModulatorResult {
    bool no_instance = false; // more than k edge-disjoint obstructions packed
    Modulator modulator;      // valid iff !no_instance
};

// Greedy packing: repeatedly take the canonically-first obstruction that
// avoids all previously used edges. Stops early once k+1 obstructions
// certify a no-instance.
inline BuildModulatorResult build_modulator(const Graph& g, int k) {
    if (k < 0) throw ContractViolation("negative budget");
    BuildModulatorResult out;
    EdgeSet used;
    while (true) {
        auto ob = find_obstruction(g, used);
        if (!ob) break;
        out.modulator.packing.push_back(*ob);
        if (static_cast<int>(out.modulator.packing.size()) > k) {
            out.no_instance = true;
            return out;
        }
        for (Edge e : ob->edges()) used.insert(e);
    }
    std::vector<int> xs;
    for (const Obstruction& ob : out.modulator.packing)
        for (int v : ob.vtx) xs.push_back(v);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    out.modulator.x = std::move(xs);
    return out;
}

} // namespace lindo

#endif
