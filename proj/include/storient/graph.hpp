#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "storient/errors.hpp"

namespace storient {

inline constexpr int kMaxVertices = 62;

// Normalized undirected edge, u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int u, int v);

// Undirected simple graph on vertices 0..n-1. One 64-bit adjacency row per
// vertex; bit v of adj[u] means edge uv. Rows stay symmetric and loop-free,
// all set bits are below n.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int vertices);
    Graph(int vertices, std::initializer_list<std::pair<int, int>> edge_list);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return std::popcount(adj[v]); }
    std::uint64_t vertex_mask() const { return n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n); }

    int edge_count() const;
    int max_degree() const;

    // Mutating builders; the pure edit operations below wrap these.
    void set_edge(int u, int v);
    void clear_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Throws unless adjacency is symmetric, loop-free, and within range.
void validate(const Graph& g);

// Normalized edge list, sorted lexicographically.
std::vector<Edge> edges(const Graph& g);

// --- pure edits -----------------------------------------------------------
// delete_vertex shifts indices above v down by one; contract_edge merges the
// higher index into the lower and then deletes it, dropping loops/parallels.
// subdivide_edge appends the t new path vertices as n..n+t-1 in order from
// e.u to e.v. lift_path removes uv and vw and adds uw if absent.

Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, int u, int v);
Graph subdivide_edge(const Graph& g, Edge e, int t);
Graph lift_path(const Graph& g, int u, int v, int w);
Graph contract_edge(const Graph& g, Edge e);

// Subgraph induced on the vertices in mask, compacted in ascending order.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);
// Original vertex indices in ascending order (the compaction map).
std::vector<int> mask_vertices(std::uint64_t mask);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
// True iff non-adjacency is transitive, i.e. the complement is a disjoint
// union of cliques.
bool is_complete_multipartite(const Graph& g);

// Some K4 of g containing e, if any (the four vertices, ascending).
std::vector<int> k4_containing_edge(const Graph& g, Edge e);

// --- generators -----------------------------------------------------------

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);       // n >= 3
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // parts {0..a-1}, {a..a+b-1}
Graph wheel(int rim);           // rim >= 3; rim cycle 0..rim-1, hub = rim
Graph diamond();                // K4 minus the edge {1,3}

}  // namespace storient
