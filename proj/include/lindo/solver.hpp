#ifndef LINDO_SOLVER_HPP
#define LINDO_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lindo/annotated.hpp"
#include "lindo/graph.hpp"
#include "lindo/obstruction.hpp"

namespace lindo {

struct SolveStats {
    std::int64_t nodes = 0;
    int max_depth = 0;
};

struct SolveResult {
    bool yes = false;
    EdgeSet witness; // HDS of size <= k when yes
    SolveStats stats;
};

namespace detail {

// Lower bound: size of a greedy edge-disjoint obstruction packing. Any
// HDS must hit every packed obstruction, so packing > budget prunes.
inline bool packing_exceeds(const Graph& g, int budget) {
    EdgeSet used;
    int packed = 0;
    while (packed <= budget) {
        auto ob = find_obstruction(g, used);
        if (!ob) return false;
        ++packed;
        for (Edge e : ob->edges()) used.insert(e);
    }
    return true;
}

inline bool branch(const Graph& g, int budget, const EdgeSet* deletable, EdgeSet& acc,
                   SolveStats& stats, int depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    auto ob = find_obstruction(g);
    if (!ob) return true;
    if (budget == 0) return false;
    if (packing_exceeds(g, budget)) return false;
    for (Edge e : ob->edges()) { // sorted: canonical branch order
        if (deletable && !deletable->contains(e)) continue;
        acc.insert(e);
        Graph next = delete_edges(g, EdgeSet{e});
        if (branch(next, budget - 1, deletable, acc, stats, depth + 1)) return true;
        acc = acc.minus(EdgeSet{e});
    }
    return false;
}

} // namespace detail

// Bounded search tree: pick one obstruction, branch on deleting each of
// its <= 5 edges with budget k-1. At most 5^k leaves.
inline SolveResult solve_branching(const Graph& g, int k) {
    if (k < 0) throw ContractViolation("negative budget");
    SolveResult res;
    EdgeSet acc;
    res.yes = detail::branch(g, k, nullptr, acc, res.stats, 0);
    if (res.yes) res.witness = acc;
    return res;
}

// Same search, but only edges inside E(S) may be deleted; an obstruction
// with no deletable edge kills its branch immediately.
inline SolveResult solve_annotated(const AnnotatedInstance& a) {
    if (a.k < 0) throw ContractViolation("negative budget");
    SolveResult res;
    EdgeSet deletable = a.deletable_edges();
    EdgeSet acc;
    res.yes = detail::branch(a.graph, a.k, &deletable, acc, res.stats, 0);
    if (res.yes) res.witness = acc;
    return res;
}

// Exhaustive oracle: enumerates every edge subset of size <= k in
// size-then-lexicographic order and records all inclusion-minimal HDSs.
// The ground truth for every equivalence claim; refuses beyond the work
// guard rather than answering partially.
struct BruteForceResult {
    SolveResult result;
    std::vector<EdgeSet> minimal_hds; // all inclusion-minimal HDSs of size <= k
};

inline BruteForceResult brute_force_min_hds(const Graph& g, int k,
                                            const std::vector<int>* restrict = nullptr,
                                            std::int64_t max_subsets = 20'000'000) {
    if (k < 0) throw ContractViolation("negative budget");
    std::vector<Edge> pool;
    if (restrict) {
        std::vector<bool> in(g.vertex_count(), false);
        for (int v : *restrict) in[v] = true;
        for (Edge e : g.edges())
            if (in[e.u] && in[e.v]) pool.push_back(e);
    } else {
        pool = g.edges();
    }
    const int m = static_cast<int>(pool.size());
    const int kk = std::min(k, m);

    std::int64_t total = 0, binom = 1;
    for (int i = 0; i <= kk; ++i) {
        total += binom;
        if (total > max_subsets)
            throw ScaleGuardError("subset enumeration too large: C(" + std::to_string(m) +
                                  ", <=" + std::to_string(k) + ") exceeds guard");
        binom = binom * (m - i) / (i + 1);
    }

    BruteForceResult out;
    // HDS-ness is not monotone (removing extra edges can create new
    // claws), so inclusion-minimality must be checked against every
    // smaller HDS, not just the co-size-1 subsets. Enumeration runs in
    // increasing size, so all candidate subsets are already recorded.
    std::vector<EdgeSet> all_hds;
    auto is_strict_subset = [](const EdgeSet& a, const EdgeSet& b) {
        return a.size() < b.size() &&
               std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto consider = [&](const std::vector<int>& idx) {
        std::vector<Edge> es;
        es.reserve(idx.size());
        for (int i : idx) es.push_back(pool[i]);
        EdgeSet f(std::move(es));
        ++out.result.stats.nodes;
        if (!is_hds(g, f)) return;
        if (!out.result.yes) {
            out.result.yes = true;
            out.result.witness = f;
        }
        bool minimal = true;
        for (const EdgeSet& h : all_hds)
            if (is_strict_subset(h, f)) {
                minimal = false;
                break;
            }
        if (minimal) out.minimal_hds.push_back(f);
        all_hds.push_back(std::move(f));
    };

    std::vector<int> idx;
    for (int size = 0; size <= kk; ++size) {
        idx.assign(size, 0);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            consider(idx);
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        out.result.stats.max_depth = std::max(out.result.stats.max_depth, size);
    }
    return out;
}

} // namespace lindo

#endif
