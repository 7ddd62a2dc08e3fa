#ifndef LINDO_ANNOTATED_HPP
#define LINDO_ANNOTATED_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lindo/graph.hpp"

namespace lindo {

// Instance of the annotated edge-deletion problem: does the graph have
// an HDS of size at most k whose edges lie entirely inside E(s_set)?
struct AnnotatedInstance {
    Graph graph;
    std::vector<int> s_set; // sorted annotated vertices
    int k = 0;

    // Edges of the graph with both endpoints annotated.
    EdgeSet deletable_edges() const {
        std::vector<bool> in_s(graph.vertex_count(), false);
        for (int v : s_set) in_s[v] = true;
        std::vector<Edge> es;
        for (Edge e : graph.edges())
            if (in_s[e.u] && in_s[e.v]) es.push_back(e);
        return EdgeSet(std::move(es));
    }
};

// File format: the graph format plus "s <v>" per annotated vertex and a
// single "k <int>" line.
inline AnnotatedInstance parse_annotated(std::istream& in) {
    auto c = detail::read_graph_lines(in, true);
    if (!c.have_k) throw ParseError(0, "missing 'k <int>' line");
    return AnnotatedInstance{Graph(c.n, c.edges), std::move(c.s_verts), c.k};
}

inline AnnotatedInstance parse_annotated(const std::string& text) {
    std::istringstream in(text);
    return parse_annotated(in);
}

inline void write_annotated(std::ostream& os, const AnnotatedInstance& a) {
    write_graph(os, a.graph);
    for (int v : a.s_set) os << "s " << v + 1 << '\n';
    os << "k " << a.k << '\n';
}

inline std::string write_annotated(const AnnotatedInstance& a) {
    std::ostringstream os;
    write_annotated(os, a);
    return os.str();
}

} // namespace lindo

#endif
