#ifndef LINDO_TEST_SUPPORT_HPP
#define LINDO_TEST_SUPPORT_HPP

// Shared fixtures and the independent naive oracle the library is
// checked against. The oracle deliberately avoids the library's
// detection code paths: plain adjacency-matrix loops over 4-subsets.

#include <optional>
#include <vector>

#include "lindo/lindo.hpp"

namespace testsup {

using lindo::Edge;
using lindo::Graph;

inline Graph claw() { return Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}); }

// diamond on {u,v,w,x} = {2,0,1,3}: degree-3 pair 0,1; degree-2 pair 2,3
inline Graph diamond() {
    return Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3)});
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

inline Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

// Exhaustive 4-subset scan over a plain adjacency matrix.
struct NaiveQuad {
    bool claw = false, diamond = false;
    std::array<int, 4> vertices{};
};

inline std::optional<NaiveQuad> naive_find_obstruction(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (Edge e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int q[4] = {a, b, c, d};
                    int edges = 0, deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (adj[q[i]][q[j]]) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    bool is_claw =
                        edges == 3 && (deg[0] == 3 || deg[1] == 3 || deg[2] == 3 || deg[3] == 3);
                    bool is_diamond = edges == 5;
                    if (is_claw || is_diamond)
                        return NaiveQuad{is_claw, is_diamond, {a, b, c, d}};
                }
    return std::nullopt;
}

inline bool naive_obstruction_free(const Graph& g) { return !naive_find_obstruction(g); }

// Every induced obstruction of g has an edge with both endpoints in x.
inline bool naive_modulator_ok(const Graph& g, const std::vector<int>& x) {
    const int n = g.vertex_count();
    std::vector<bool> in_x(n, false);
    for (int v : x) in_x[v] = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int q[4] = {a, b, c, d};
                    int edges = 0, deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    bool obstruction =
                        (edges == 3 &&
                         (deg[0] == 3 || deg[1] == 3 || deg[2] == 3 || deg[3] == 3)) ||
                        edges == 5;
                    if (!obstruction) continue;
                    bool hit = false;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j]) && in_x[q[i]] && in_x[q[j]]) hit = true;
                    if (!hit) return false;
                }
    return true;
}

} // namespace testsup

#endif
