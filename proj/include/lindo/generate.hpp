#ifndef LINDO_GENERATE_HPP
#define LINDO_GENERATE_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "lindo/cnf.hpp"
#include "lindo/graph.hpp"

namespace lindo {

namespace detail {

// mt19937_64 draws are pinned by the standard, so raw-draw helpers keep
// generator output byte-identical across platforms (distributions are
// not portable).
inline bool coin(std::mt19937_64& rng, double p) {
    return (rng() >> 11) * 0x1.0p-53 < p;
}

inline int uniform_below(std::mt19937_64& rng, int bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(bound);
    while (true) {
        std::uint64_t r = rng();
        if (r < limit) return static_cast<int>(r % static_cast<std::uint64_t>(bound));
    }
}

} // namespace detail

// Erdos-Renyi graph, deterministic from seed.
inline Graph gen_random_graph(std::uint64_t seed, int n, double p) {
    if (n < 0) throw ContractViolation("negative vertex count");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::coin(rng, p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Line graph: one vertex per edge of h, adjacency = shared endpoint.
inline Graph line_graph(const Graph& h) {
    const auto& he = h.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < he.size(); ++i)
        for (std::size_t j = i + 1; j < he.size(); ++j)
            if (he[i].u == he[j].u || he[i].u == he[j].v || he[i].v == he[j].u ||
                he[i].v == he[j].v)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(he.size()), edges);
}

// Random linear domino: the line graph of a random triangle-free graph.
// H is built edge by edge in canonical pair order, skipping any edge
// that would close a triangle. The output is always {claw,diamond}-free.
inline Graph gen_domino(std::uint64_t seed, int h_vertices, double p) {
    if (h_vertices < 0) throw ContractViolation("negative vertex count");
    std::mt19937_64 rng(seed);
    Bitset none(h_vertices);
    std::vector<Bitset> adj(h_vertices, none);
    std::vector<Edge> edges;
    for (int u = 0; u < h_vertices; ++u)
        for (int v = u + 1; v < h_vertices; ++v) {
            if (!detail::coin(rng, p)) continue;
            if ((adj[u] & adj[v]).any()) continue; // would close a triangle
            adj[u].set(v);
            adj[v].set(u);
            edges.emplace_back(u, v);
        }
    return line_graph(Graph(h_vertices, edges));
}

// Uniform strict 3SAT: every clause picks three distinct variables and
// random signs. m = 0 yields the empty formula; otherwise n >= 3.
inline CnfFormula gen_3sat(std::uint64_t seed, int n, int m) {
    if (n < 0 || m < 0) throw ContractViolation("negative size parameter");
    if (m > 0 && n < 3)
        throw ContractViolation("strict 3SAT needs at least 3 variables per clause");
    std::mt19937_64 rng(seed);
    CnfFormula phi;
    phi.num_vars = n;
    for (int c = 0; c < m; ++c) {
        int a = detail::uniform_below(rng, n);
        int b, d;
        do b = detail::uniform_below(rng, n);
        while (b == a);
        do d = detail::uniform_below(rng, n);
        while (d == a || d == b);
        std::array<int, 3> vars{a + 1, b + 1, d + 1};
        std::sort(vars.begin(), vars.end());
        std::vector<int> clause;
        for (int v : vars) clause.push_back(detail::coin(rng, 0.5) ? v : -v);
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

} // namespace lindo

#endif
