#ifndef LINDO_GRAPH_HPP
#define LINDO_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lindo/bitset.hpp"
#include "lindo/error.hpp"

namespace lindo {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0, v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw ContractViolation("edge endpoints must differ: " + std::to_string(a));
    }

    auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free edge collection. Used both for deletion sets F
// and for the forbidden sets of the greedy packing.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> es) : edges_(es) { normalize(); }
    explicit EdgeSet(std::vector<Edge> es) : edges_(std::move(es)) { normalize(); }

    bool contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    void insert(Edge e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) edges_.insert(it, e);
    }

    void insert(const EdgeSet& o) {
        for (Edge e : o.edges_) insert(e);
    }

    EdgeSet united(const EdgeSet& o) const {
        EdgeSet r = *this;
        r.insert(o);
        return r;
    }

    EdgeSet minus(const EdgeSet& o) const {
        std::vector<Edge> r;
        std::set_difference(edges_.begin(), edges_.end(), o.edges_.begin(), o.edges_.end(),
                            std::back_inserter(r));
        return EdgeSet(std::move(r));
    }

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const EdgeSet&) const = default;

private:
    void normalize() {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    std::vector<Edge> edges_;
};

// Simple undirected graph on vertices 0..n-1. Immutable after
// construction; adjacency rows are bitsets for O(1) queries.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, {}) {}

    Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n, Bitset(n)) {
        if (n < 0) throw ContractViolation("negative vertex count");
        edges_.assign(edges.begin(), edges.end());
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (Edge e : edges_) {
            if (e.u < 0 || e.v >= n_)
                throw ContractViolation("edge endpoint out of range: " + std::to_string(e.v));
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
        }
    }

    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges)) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
    bool has_edge(Edge e) const { return adj_[e.u].test(e.v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    bool is_isolated(int v) const { return adj_[v].none(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Edge> edges_;
};

// G - F. Every edge of f must exist in g.
inline Graph delete_edges(const Graph& g, const EdgeSet& f) {
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (Edge e : f)
        if (!g.has_edge(e))
            throw ContractViolation("deletion set contains non-edge " + std::to_string(e.u + 1) +
                                    "-" + std::to_string(e.v + 1));
    for (Edge e : g.edges())
        if (!f.contains(e)) kept.push_back(e);
    return Graph(g.vertex_count(), kept);
}

// Induced subgraph plus the id maps between host and subgraph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;   // subgraph id -> host id (ascending)
    std::vector<int> from_host; // host id -> subgraph id, -1 if absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw ContractViolation("vertex id out of range: " + std::to_string(v));

    InducedSubgraph out;
    out.to_host = verts;
    out.from_host.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) out.from_host[verts[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.graph = Graph(static_cast<int>(verts.size()), edges);
    return out;
}

// Complement of a vertex set, as a sorted vector.
inline std::vector<int> complement_vertices(const Graph& g, std::span<const int> s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : s) in[v] = true;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

// True iff N(v) induces a clique (vacuously for degree <= 1).
inline bool is_simplicial(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw ContractViolation("vertex id out of range: " + std::to_string(v));
    const Bitset& nb = g.neighbors(v);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
        // need nb \ {u} subset of N(u)
        Bitset rest = nb;
        rest.reset(u);
        if (!rest.subset_of(g.neighbors(u))) return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

inline long long parse_int(std::string_view tok, int line) {
    long long val = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return val;
}

// Shared DIMACS-style reader for the plain graph format and the
// annotated extension ("s <v>" lines plus one "k <int>" line).
struct GraphFileContents {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> s_verts;
    bool have_k = false;
    int k = 0;
};

inline GraphFileContents read_graph_lines(std::istream& in, bool annotated) {
    GraphFileContents out;
    std::string line;
    int lineno = 0;
    long long declared_m = -1;
    long long edge_lines = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (declared_m >= 0) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
            long long n = parse_int(toks[2], lineno);
            declared_m = parse_int(toks[3], lineno);
            if (n < 0 || declared_m < 0) throw ParseError(lineno, "negative count in header");
            out.n = static_cast<int>(n);
            continue;
        }
        if (declared_m < 0) throw ParseError(lineno, "expected 'p edge <n> <m>' header first");
        if (toks[0] == "e") {
            if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            long long u = parse_int(toks[1], lineno);
            long long v = parse_int(toks[2], lineno);
            if (u < 1 || u > out.n || v < 1 || v > out.n)
                throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            if (++edge_lines > declared_m)
                throw ParseError(lineno, "more edge lines than declared");
            out.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        if (annotated && toks[0] == "s") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 's <v>'");
            long long v = parse_int(toks[1], lineno);
            if (v < 1 || v > out.n) throw ParseError(lineno, "vertex id out of range");
            out.s_verts.push_back(static_cast<int>(v - 1));
            continue;
        }
        if (annotated && toks[0] == "k") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'k <int>'");
            if (out.have_k) throw ParseError(lineno, "duplicate k line");
            long long k = parse_int(toks[1], lineno);
            if (k < 0) throw ParseError(lineno, "negative budget");
            out.have_k = true;
            out.k = static_cast<int>(k);
            continue;
        }
        throw ParseError(lineno, "unrecognized line '" + std::string(toks[0]) + " ...'");
    }
    if (declared_m < 0) throw ParseError(lineno, "missing 'p edge' header");
    if (edge_lines != declared_m)
        throw ParseError(lineno, "expected " + std::to_string(declared_m) + " edge lines, found " +
                                     std::to_string(edge_lines));
    std::sort(out.s_verts.begin(), out.s_verts.end());
    out.s_verts.erase(std::unique(out.s_verts.begin(), out.s_verts.end()), out.s_verts.end());
    return out;
}

} // namespace detail

// DIMACS-style graph file: comment lines "c ...", one "p edge <n> <m>"
// header, then m lines "e <u> <v>" (1-based). Duplicate edge lines
// collapse to one edge.
inline Graph parse_graph(std::istream& in) {
    auto c = detail::read_graph_lines(in, false);
    return Graph(c.n, c.edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& os, const Graph& g) {
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Edge e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

} // namespace lindo

#endif
