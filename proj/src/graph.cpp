#include "storient/graph.hpp"

#include <algorithm>
#include <string>

namespace storient {

Edge make_edge(int u, int v) {
    if (u == v) throw ArgumentError("edge endpoints must differ: " + std::to_string(u));
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

Graph::Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(std::max(vertices, 0))) {
    if (vertices < 0 || vertices > kMaxVertices)
        throw ArgumentError("vertex count out of range [0, 62]: " + std::to_string(vertices));
}

Graph::Graph(int vertices, std::initializer_list<std::pair<int, int>> edge_list) : Graph(vertices) {
    for (auto [u, v] : edge_list) set_edge(u, v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

void Graph::set_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw ArgumentError("vertex index out of range");
    if (u == v) throw ArgumentError("loops are not supported");
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
}

void Graph::clear_edge(int u, int v) {
    adj[u] &= ~(std::uint64_t{1} << v);
    adj[v] &= ~(std::uint64_t{1} << u);
}

void validate(const Graph& g) {
    if (g.n < 0 || g.n > kMaxVertices) throw ArgumentError("vertex count out of range");
    if (static_cast<int>(g.adj.size()) != g.n) throw ArgumentError("adjacency row count mismatch");
    for (int u = 0; u < g.n; ++u) {
        if (g.adj[u] & ~g.vertex_mask()) throw ArgumentError("adjacency bit beyond vertex range");
        if ((g.adj[u] >> u) & 1u) throw ArgumentError("loop at vertex " + std::to_string(u));
        for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (!g.has_edge(v, u)) throw ArgumentError("asymmetric adjacency");
        }
    }
}

std::vector<Edge> edges(const Graph& g) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int u = 0; u < g.n; ++u)
        for (std::uint64_t m = g.adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
            out.push_back(Edge{u, std::countr_zero(m)});
    return out;
}

namespace {

void require_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw ArgumentError("no such vertex: " + std::to_string(v));
}

void require_edge(const Graph& g, int u, int v) {
    require_vertex(g, u);
    require_vertex(g, v);
    if (!g.has_edge(u, v))
        throw ArgumentError("no such edge: {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

// Drops bit position v from a row, shifting higher bits down.
std::uint64_t squeeze_bit(std::uint64_t row, int v) {
    std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
    std::uint64_t high = (row >> (v + 1)) << v;
    return low | high;
}

}  // namespace

Graph delete_vertex(const Graph& g, int v) {
    require_vertex(g, v);
    Graph out(g.n - 1);
    for (int u = 0; u < g.n; ++u) {
        if (u == v) continue;
        out.adj[u < v ? u : u - 1] = squeeze_bit(g.adj[u], v);
    }
    return out;
}

Graph delete_edge(const Graph& g, Edge e) {
    require_edge(g, e.u, e.v);
    Graph out = g;
    out.clear_edge(e.u, e.v);
    return out;
}

Graph add_edge(const Graph& g, int u, int v) {
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v) throw ArgumentError("loops are not supported");
    if (g.has_edge(u, v))
        throw ArgumentError("edge already present: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    Graph out = g;
    out.set_edge(u, v);
    return out;
}

Graph subdivide_edge(const Graph& g, Edge e, int t) {
    require_edge(g, e.u, e.v);
    if (t < 1) throw ArgumentError("subdivision count must be >= 1");
    if (g.n + t > kMaxVertices) throw UnsupportedSizeError("subdivision exceeds 62 vertices");
    Graph out(g.n + t);
    for (int u = 0; u < g.n; ++u) out.adj[u] = g.adj[u];
    out.clear_edge(e.u, e.v);
    int prev = e.u;
    for (int i = 0; i < t; ++i) {
        out.set_edge(prev, g.n + i);
        prev = g.n + i;
    }
    out.set_edge(prev, e.v);
    return out;
}

Graph lift_path(const Graph& g, int u, int v, int w) {
    require_edge(g, u, v);
    require_edge(g, v, w);
    if (u == w) throw ArgumentError("lift endpoints must differ");
    Graph out = g;
    out.clear_edge(u, v);
    out.clear_edge(v, w);
    if (!out.has_edge(u, w)) out.set_edge(u, w);
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    require_edge(g, e.u, e.v);
    Graph merged = g;
    merged.clear_edge(e.u, e.v);
    // Fold v's neighbors into u, then drop v. Keeps the lower index.
    for (std::uint64_t m = merged.adj[e.v]; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (w != e.u && !merged.has_edge(e.u, w)) merged.set_edge(e.u, w);
    }
    return delete_vertex(merged, e.v);
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> verts = mask_vertices(mask);
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) out.set_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
    std::vector<int> verts;
    for (std::uint64_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    return verts;
}

Graph complement(const Graph& g) {
    Graph out(g.n);
    std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < g.n; ++v)
        out.adj[v] = all & ~g.adj[v] & ~(std::uint64_t{1} << v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == g.vertex_mask();
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n * (g.n - 1) / 2;
}

bool is_complete_multipartite(const Graph& g) {
    Graph co = complement(g);
    std::uint64_t left = co.vertex_mask();
    while (left) {
        int start = std::countr_zero(left);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= co.adj[std::countr_zero(m)];
            frontier = next & ~comp;
            comp |= frontier;
        }
        for (std::uint64_t m = comp; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if ((co.adj[v] & comp) != (comp & ~(std::uint64_t{1} << v))) return false;
        }
        left &= ~comp;
    }
    return true;
}

std::vector<int> k4_containing_edge(const Graph& g, Edge e) {
    require_edge(g, e.u, e.v);
    std::uint64_t common = g.adj[e.u] & g.adj[e.v];
    for (std::uint64_t m = common; m; m &= m - 1) {
        int w = std::countr_zero(m);
        std::uint64_t rest = common & g.adj[w] & ~((std::uint64_t{1} << (w + 1)) - 1);
        if (rest) {
            int x = std::countr_zero(rest);
            std::vector<int> k4 = {e.u, e.v, w, x};
            std::sort(k4.begin(), k4.end());
            return k4;
        }
    }
    return {};
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle length must be >= 3");
    Graph g = path_graph(n);
    g.set_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw ArgumentError("part sizes must be nonnegative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.set_edge(u, v);
    return g;
}

Graph wheel(int rim) {
    if (rim < 3) throw ArgumentError("wheel rim must have >= 3 vertices");
    Graph g = cycle_graph(rim);
    Graph out(rim + 1);
    for (int v = 0; v < rim; ++v) out.adj[v] = g.adj[v];
    for (int v = 0; v < rim; ++v) out.set_edge(v, rim);
    return out;
}

Graph diamond() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
}

}  // namespace storient
