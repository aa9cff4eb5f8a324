#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "storient/graph.hpp"

namespace storient {

// Direction assignment over the edges of a base graph. out[u] holds the
// heads of all arcs u->*; every base edge carries exactly one arc.
struct Orientation {
    Graph base;
    std::vector<std::uint64_t> out;

    Orientation() = default;
    explicit Orientation(Graph g)
        : base(std::move(g)), out(static_cast<std::size_t>(base.n), 0) {}

    bool forward(int u, int v) const { return (out[u] >> v) & 1u; }
    void orient(int u, int v);  // assigns arc u->v; the edge must exist and be unassigned
    bool fully_oriented() const;
    std::vector<std::uint64_t> in_rows() const;
};

// Throws unless every base edge has exactly one direction and no arc lies
// outside the base.
void validate(const Orientation& o);

// Witness of non-semi-transitivity: a directed path on >= 4 vertices whose
// endpoints also carry the arc path.front() -> path.back(), plus a
// non-adjacent vertex pair from the path (listed in path order).
struct Shortcut {
    std::vector<int> path;
    std::pair<int, int> missing;
};

// Source-stripping level decomposition of an acyclic digraph. levels[0] is
// the set of sources; each level is an independent set.
struct GoodPartition {
    std::vector<std::vector<int>> levels;
    std::vector<int> level_of;
};

bool is_acyclic(const Orientation& o);
GoodPartition topological_levels(const Orientation& o);  // requires acyclic
bool is_transitive(const Orientation& o);
std::optional<Shortcut> find_shortcut(const Orientation& o);  // requires acyclic
bool is_semi_transitive(const Orientation& o);

// Independent brute force over all vertex subsets of size >= 4: checks for a
// directed Hamiltonian path whose endpoints carry a chord and explicit
// non-transitivity of the induced subdigraph. n <= 10.
std::optional<Shortcut> shortcut_oracle(const Orientation& o);

bool shortcut_is_valid(const Orientation& o, const Shortcut& s);

// Same arcs on a spanning subgraph (sub.n == base.n, sub edges a subset).
Orientation restrict_to_subgraph(const Orientation& o, const Graph& sub);
Orientation orientation_delete_vertex(const Orientation& o, int v);

// Text form: first line "n=<k>", then one "u->v" line per arc, sorted.
std::string write_digraph(const Orientation& o);
Orientation parse_digraph(std::string_view text);

}  // namespace storient
