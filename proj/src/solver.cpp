#include "storient/solver.hpp"

#include <algorithm>

namespace storient {

namespace {

constexpr int kSolverCap = 20;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

bool is_clique_mask(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((g.adj[v] & mask) != (mask ^ bit(v))) return false;
    }
    return true;
}

struct Search {
    const Graph& g;
    SolveMode mode;
    std::uint64_t budget;
    SolveStats stats;
    std::vector<Edge> order;
    std::vector<std::uint64_t> out, in;
    std::optional<Orientation> result;

    Search(const Graph& graph, SolveMode m, const SolveOptions& opts)
        : g(graph),
          mode(m),
          budget(opts.node_budget),
          out(static_cast<std::size_t>(graph.n), 0),
          in(static_cast<std::size_t>(graph.n), 0) {
        order = edges(g);
        // Constrained edges first: descending endpoint-degree sum, ties lex.
        std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
            return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
        });
    }

    bool reaches(int from, int to) const {
        std::uint64_t seen = bit(from);
        std::uint64_t frontier = seen;
        while (frontier) {
            if ((seen >> to) & 1u) return true;
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= out[std::countr_zero(m)];
            frontier = next & ~seen;
            seen |= frontier;
        }
        return (seen >> to) & 1u;
    }

    // --- semi-transitive pruning ------------------------------------------
    // A directed path plus an assigned chord whose vertex set is not a clique
    // dooms every completion: the missing pair stays missing. Only structures
    // using the newest arc can be new, so the probe pivots on a->b.

    // Case 1: a->b as the chord. Simple directed paths a ->* b with at least
    // two internal vertices among assigned arcs.
    bool chord_case(int a, int b) const {
        std::uint64_t visited = bit(a);
        return chord_dfs(a, b, visited, 1);
    }

    bool chord_dfs(int cur, int target, std::uint64_t& visited, int len) const {
        for (std::uint64_t m = out[cur] & ~visited; m; m &= m - 1) {
            int next = std::countr_zero(m);
            if (next == target) {
                if (len >= 3 && !is_clique_mask(g, visited | bit(target))) return true;
                continue;
            }
            visited |= bit(next);
            if (chord_dfs(next, target, visited, len + 1)) return true;
            visited &= ~bit(next);
        }
        return false;
    }

    // Case 2: a->b inside the path. Walk backward from a and forward from b;
    // any combined path x ->* a -> b ->* y on >= 4 vertices with an assigned
    // chord x->y and a non-clique vertex set is fatal.
    bool path_case(int a, int b) const {
        std::uint64_t back = bit(a);
        return back_dfs(a, a, b, back, 1);
    }

    bool back_dfs(int x, int a, int b, std::uint64_t& back, int back_len) const {
        std::uint64_t fwd = bit(b);
        if (fwd_dfs(x, b, back, fwd, back_len + 1)) return true;
        for (std::uint64_t m = in[x] & ~back & ~bit(b); m; m &= m - 1) {
            int prev = std::countr_zero(m);
            back |= bit(prev);
            if (back_dfs(prev, a, b, back, back_len + 1)) return true;
            back &= ~bit(prev);
        }
        return false;
    }

    bool fwd_dfs(int x, int y, std::uint64_t back, std::uint64_t& fwd, int len) const {
        if (len >= 4 && ((out[x] >> y) & 1u) && !is_clique_mask(g, back | fwd)) return true;
        for (std::uint64_t m = out[y] & ~fwd & ~back; m; m &= m - 1) {
            int next = std::countr_zero(m);
            fwd |= bit(next);
            if (fwd_dfs(x, next, back, fwd, len + 1)) return true;
            fwd &= ~bit(next);
        }
        return false;
    }

    // A 2-path through the new arc whose closing pair is a non-edge can never
    // become transitive.
    bool transitive_conflict(int a, int b) const {
        for (std::uint64_t m = in[a]; m; m &= m - 1)
            if (!g.has_edge(std::countr_zero(m), b)) return true;
        for (std::uint64_t m = out[b]; m; m &= m - 1)
            if (!g.has_edge(a, std::countr_zero(m))) return true;
        return false;
    }

    bool leaf_accepts() {
        Orientation o(g);
        o.out = out;
        bool ok = mode == SolveMode::semi_transitive ? is_semi_transitive(o) : is_transitive(o);
        if (ok) result = std::move(o);
        return ok;
    }

    bool try_arc(std::size_t depth, int a, int b) {
        if (reaches(b, a)) {
            ++stats.prunings;
            return false;
        }
        out[a] |= bit(b);
        in[b] |= bit(a);
        bool pruned = mode == SolveMode::semi_transitive
                          ? (chord_case(a, b) || path_case(a, b))
                          : transitive_conflict(a, b);
        bool found = false;
        if (pruned)
            ++stats.prunings;
        else
            found = dfs(depth + 1);
        if (!found) {
            out[a] &= ~bit(b);
            in[b] &= ~bit(a);
        }
        return found;
    }

    bool dfs(std::size_t depth) {
        if (++stats.nodes > budget)
            throw ResourceError("orientation search exceeded the node budget", stats.nodes, stats.prunings);
        if (depth == order.size()) return leaf_accepts();
        const Edge& e = order[depth];
        if (try_arc(depth, e.u, e.v)) return true;
        if (depth == 0) return false;  // reversing all arcs preserves the property
        return try_arc(depth, e.v, e.u);
    }
};

std::optional<Orientation> run_search(const Graph& g, SolveMode mode, const SolveOptions& opts,
                                      SolveStats* stats) {
    if (g.n > kSolverCap)
        throw UnsupportedSizeError("orientation search supports n <= 20, got " + std::to_string(g.n));
    Search s(g, mode, opts);
    bool found = s.dfs(0);
    if (stats) *stats = s.stats;
    if (!found) return std::nullopt;
    return std::move(s.result);
}

}  // namespace

std::optional<int> neighborhood_filter(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        // Graphs on at most 4 vertices are all comparability graphs, so
        // only neighborhoods of degree >= 5 can fail.
        if (g.degree(v) <= 4) continue;
        Graph nbhd = induced_subgraph(g, g.adj[v]);
        if (!find_transitive_orientation(nbhd)) return v;
    }
    return std::nullopt;
}

std::optional<Orientation> find_semi_transitive_orientation(const Graph& g, const SolveOptions& opts,
                                                            SolveStats* stats) {
    return run_search(g, SolveMode::semi_transitive, opts, stats);
}

std::optional<Orientation> find_transitive_orientation(const Graph& g, const SolveOptions& opts,
                                                       SolveStats* stats) {
    return run_search(g, SolveMode::transitive, opts, stats);
}

SolveVerdict decide(const Graph& g, SolveMode mode, const SolveOptions& opts) {
    if (g.n > kSolverCap)
        throw UnsupportedSizeError("decide supports n <= 20, got " + std::to_string(g.n));
    SolveVerdict verdict;
    if (mode == SolveMode::semi_transitive) {
        if (auto v = neighborhood_filter(g)) {
            verdict.status = SolveVerdict::Status::filtered;
            verdict.filtered_vertex = *v;
            return verdict;
        }
    }
    auto found = run_search(g, mode, opts, &verdict.stats);
    if (found) {
        verdict.status = SolveVerdict::Status::orientable;
        verdict.orientation = std::move(found);
    } else {
        verdict.status = SolveVerdict::Status::not_orientable;
    }
    return verdict;
}

}  // namespace storient
