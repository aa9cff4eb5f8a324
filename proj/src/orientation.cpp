#include "storient/orientation.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace storient {

void Orientation::orient(int u, int v) {
    if (u < 0 || v < 0 || u >= base.n || v >= base.n || !base.has_edge(u, v))
        throw ArgumentError("cannot orient a non-edge: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (forward(u, v) || forward(v, u))
        throw ArgumentError("edge already oriented: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    out[u] |= std::uint64_t{1} << v;
}

bool Orientation::fully_oriented() const {
    for (int u = 0; u < base.n; ++u)
        for (std::uint64_t m = base.adj[u] >> (u + 1) << (u + 1); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (!forward(u, v) && !forward(v, u)) return false;
        }
    return true;
}

std::vector<std::uint64_t> Orientation::in_rows() const {
    std::vector<std::uint64_t> in(static_cast<std::size_t>(base.n), 0);
    for (int u = 0; u < base.n; ++u)
        for (std::uint64_t m = out[u]; m; m &= m - 1) in[std::countr_zero(m)] |= std::uint64_t{1} << u;
    return in;
}

void validate(const Orientation& o) {
    validate(o.base);
    if (static_cast<int>(o.out.size()) != o.base.n) throw ArgumentError("arc row count mismatch");
    for (int u = 0; u < o.base.n; ++u) {
        if (o.out[u] & ~o.base.adj[u]) throw ArgumentError("arc outside the base graph");
        for (std::uint64_t m = o.base.adj[u]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (o.forward(u, v) == o.forward(v, u))
                throw ArgumentError("edge without exactly one direction: {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
        }
    }
}

namespace {

// Strips sources until nothing is left (acyclic) or no source exists.
// Returns the leftover vertex mask (0 iff acyclic); appends levels if asked.
std::uint64_t strip_sources(const Orientation& o, std::vector<std::vector<int>>* levels,
                            std::vector<int>* level_of) {
    std::vector<std::uint64_t> in = o.in_rows();
    std::uint64_t remaining = o.base.vertex_mask();
    int level = 0;
    while (remaining) {
        std::uint64_t sources = 0;
        for (std::uint64_t m = remaining; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (!(in[v] & remaining)) sources |= std::uint64_t{1} << v;
        }
        if (!sources) return remaining;
        if (levels) {
            levels->push_back(mask_vertices(sources));
            for (std::uint64_t m = sources; m; m &= m - 1) (*level_of)[std::countr_zero(m)] = level;
        }
        remaining &= ~sources;
        ++level;
    }
    return 0;
}

}  // namespace

bool is_acyclic(const Orientation& o) {
    return strip_sources(o, nullptr, nullptr) == 0;
}

GoodPartition topological_levels(const Orientation& o) {
    GoodPartition p;
    p.level_of.assign(static_cast<std::size_t>(o.base.n), -1);
    if (strip_sources(o, &p.levels, &p.level_of) != 0)
        throw PreconditionError("topological_levels requires an acyclic orientation");
    return p;
}

bool is_transitive(const Orientation& o) {
    for (int u = 0; u < o.base.n; ++u)
        for (std::uint64_t m = o.out[u]; m; m &= m - 1)
            if (o.out[std::countr_zero(m)] & ~o.out[u]) return false;
    return true;
}

namespace {

std::uint64_t reaches_target(const Orientation& o, int target) {
    std::vector<std::uint64_t> in = o.in_rows();
    std::uint64_t seen = std::uint64_t{1} << target;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= in[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

// First non-adjacent pair among the path vertices, by position pair (i, j).
std::optional<std::pair<int, int>> first_missing_pair(const Graph& g, const std::vector<int>& path) {
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            if (!g.has_edge(path[i], path[j])) return std::make_pair(path[i], path[j]);
    return std::nullopt;
}

struct PathSearch {
    const Orientation& o;
    int target;
    std::uint64_t allowed;  // vertices that can still reach the target
    std::vector<int> path;
    std::uint64_t visited = 0;
    std::optional<Shortcut> found;

    // Extends the path to out-neighbors in index order. Closing at the
    // target with >= 2 internal vertices yields a candidate; a candidate is
    // a shortcut iff its vertex set is not a clique (acyclicity makes a
    // clique a transitive tournament).
    void dfs(int cur) {
        if (found) return;
        for (std::uint64_t m = o.out[cur] & allowed & ~visited; m; m &= m - 1) {
            int next = std::countr_zero(m);
            if (next == target) {
                if (path.size() >= 3) {
                    path.push_back(target);
                    if (auto missing = first_missing_pair(o.base, path)) {
                        found = Shortcut{path, *missing};
                        return;
                    }
                    path.pop_back();
                }
                continue;
            }
            path.push_back(next);
            visited |= std::uint64_t{1} << next;
            dfs(next);
            if (found) return;
            visited &= ~(std::uint64_t{1} << next);
            path.pop_back();
        }
    }
};

std::optional<Shortcut> find_shortcut_acyclic(const Orientation& o) {
    for (const Edge& e : edges(o.base)) {
        int a = o.forward(e.u, e.v) ? e.u : e.v;
        int b = a == e.u ? e.v : e.u;
        PathSearch search{o, b, reaches_target(o, b)};
        search.path = {a};
        search.visited = std::uint64_t{1} << a;
        search.dfs(a);
        if (search.found) return search.found;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Shortcut> find_shortcut(const Orientation& o) {
    if (!is_acyclic(o)) throw PreconditionError("find_shortcut requires an acyclic orientation");
    return find_shortcut_acyclic(o);
}

bool is_semi_transitive(const Orientation& o) {
    if (!is_acyclic(o)) return false;
    return !find_shortcut_acyclic(o).has_value();
}

namespace {

bool induced_is_transitive(const Orientation& o, std::uint64_t subset) {
    for (std::uint64_t mu = subset; mu; mu &= mu - 1) {
        int u = std::countr_zero(mu);
        for (std::uint64_t mv = o.out[u] & subset; mv; mv &= mv - 1) {
            int v = std::countr_zero(mv);
            if (o.out[v] & subset & ~o.out[u]) return false;
        }
    }
    return true;
}

// Directed Hamiltonian path of the induced subdigraph from f to l, if any.
std::optional<std::vector<int>> hamiltonian_path(const Orientation& o, const std::vector<int>& verts,
                                                 int f, int l) {
    int s = static_cast<int>(verts.size());
    std::vector<std::uint32_t> arcs(static_cast<std::size_t>(s), 0);
    int fi = -1, li = -1;
    for (int i = 0; i < s; ++i) {
        if (verts[i] == f) fi = i;
        if (verts[i] == l) li = i;
        for (int j = 0; j < s; ++j)
            if (o.forward(verts[i], verts[j])) arcs[i] |= std::uint32_t{1} << j;
    }
    std::uint32_t full = (std::uint32_t{1} << s) - 1;
    // ends[mask] = possible last vertices of a path from fi covering mask
    std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
    ends[std::uint32_t{1} << fi] = std::uint32_t{1} << fi;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        for (std::uint32_t m = e; m; m &= m - 1) {
            int last = std::countr_zero(m);
            for (std::uint32_t ext = arcs[last] & ~mask; ext; ext &= ext - 1) {
                int next = std::countr_zero(ext);
                ends[mask | (std::uint32_t{1} << next)] |= std::uint32_t{1} << next;
            }
        }
    }
    if (!((ends[full] >> li) & 1u)) return std::nullopt;
    // Walk the DP backwards to recover one path.
    std::vector<int> path(static_cast<std::size_t>(s));
    std::uint32_t mask = full;
    int cur = li;
    for (int pos = s - 1; pos > 0; --pos) {
        path[static_cast<std::size_t>(pos)] = verts[cur];
        std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << cur);
        for (std::uint32_t m = ends[prev_mask]; m; m &= m - 1) {
            int prev = std::countr_zero(m);
            if ((arcs[prev] >> cur) & 1u) {
                cur = prev;
                break;
            }
        }
        mask = prev_mask;
    }
    path[0] = verts[cur];
    return path;
}

}  // namespace

std::optional<Shortcut> shortcut_oracle(const Orientation& o) {
    int n = o.base.n;
    if (n > 10) throw UnsupportedSizeError("shortcut_oracle supports n <= 10, got " + std::to_string(n));
    if (!is_acyclic(o)) throw PreconditionError("shortcut_oracle requires an acyclic orientation");
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        if (std::popcount(subset) < 4) continue;
        if (induced_is_transitive(o, subset)) continue;
        std::vector<int> verts = mask_vertices(subset);
        for (int f : verts) {
            for (std::uint64_t m = o.out[f] & subset; m; m &= m - 1) {
                int l = std::countr_zero(m);
                auto path = hamiltonian_path(o, verts, f, l);
                if (!path) continue;
                auto missing = first_missing_pair(o.base, *path);
                // Non-transitive induced subdigraph with a Hamiltonian path
                // always has a non-adjacent pair under acyclicity.
                if (missing) return Shortcut{*path, *missing};
            }
        }
    }
    return std::nullopt;
}

bool shortcut_is_valid(const Orientation& o, const Shortcut& s) {
    const std::vector<int>& p = s.path;
    if (p.size() < 4) return false;
    std::uint64_t seen = 0;
    for (int v : p) {
        if (v < 0 || v >= o.base.n || ((seen >> v) & 1u)) return false;
        seen |= std::uint64_t{1} << v;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!o.forward(p[i], p[i + 1])) return false;
    if (!o.forward(p.front(), p.back())) return false;
    if (o.base.has_edge(s.missing.first, s.missing.second)) return false;
    auto pos = [&](int v) {
        return std::find(p.begin(), p.end(), v) - p.begin();
    };
    auto i = pos(s.missing.first), j = pos(s.missing.second);
    return i < static_cast<std::ptrdiff_t>(p.size()) && j < static_cast<std::ptrdiff_t>(p.size()) && i < j;
}

Orientation restrict_to_subgraph(const Orientation& o, const Graph& sub) {
    if (sub.n != o.base.n) throw ArgumentError("subgraph must keep the vertex set");
    Orientation r(sub);
    for (int u = 0; u < sub.n; ++u) {
        if (sub.adj[u] & ~o.base.adj[u]) throw ArgumentError("not a subgraph");
        r.out[u] = o.out[u] & sub.adj[u];
    }
    return r;
}

Orientation orientation_delete_vertex(const Orientation& o, int v) {
    Orientation r(delete_vertex(o.base, v));
    auto squeeze = [v](std::uint64_t row) {
        std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
        return low | ((row >> (v + 1)) << v);
    };
    for (int u = 0; u < o.base.n; ++u) {
        if (u == v) continue;
        r.out[u < v ? u : u - 1] = squeeze(o.out[u]);
    }
    return r;
}

std::string write_digraph(const Orientation& o) {
    std::string s = "n=" + std::to_string(o.base.n) + "\n";
    for (int u = 0; u < o.base.n; ++u)
        for (std::uint64_t m = o.out[u]; m; m &= m - 1)
            s += std::to_string(u) + "->" + std::to_string(std::countr_zero(m)) + "\n";
    return s;
}

Orientation parse_digraph(std::string_view text) {
    std::size_t pos = 0;
    auto next_line = [&]() -> std::optional<std::pair<std::string_view, std::size_t>> {
        if (pos >= text.size()) return std::nullopt;
        std::size_t start = pos;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            pos = text.size();
            return std::make_pair(text.substr(start), start);
        }
        pos = end + 1;
        return std::make_pair(text.substr(start, end - start), start);
    };

    auto header = next_line();
    if (!header || header->first.substr(0, 2) != "n=")
        throw FormatError("digraph text must start with n=<count>", 0);
    int n = 0;
    {
        std::string_view v = header->first.substr(2);
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
        if (ec != std::errc() || p != v.data() + v.size())
            throw FormatError("bad vertex count", header->second + 2);
    }
    Graph base(n);
    std::vector<std::pair<int, int>> arcs;
    while (auto line = next_line()) {
        if (line->first.empty()) continue;
        std::size_t sep = line->first.find("->");
        if (sep == std::string_view::npos) throw FormatError("expected u->v", line->second);
        int u = 0, v = 0;
        std::string_view lhs = line->first.substr(0, sep);
        std::string_view rhs = line->first.substr(sep + 2);
        auto [pu, eu] = std::from_chars(lhs.data(), lhs.data() + lhs.size(), u);
        auto [pv, ev] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), v);
        if (eu != std::errc() || pu != lhs.data() + lhs.size() || ev != std::errc() ||
            pv != rhs.data() + rhs.size())
            throw FormatError("bad arc endpoints", line->second);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw FormatError("arc endpoint out of range", line->second);
        for (auto [au, av] : arcs)
            if ((au == u && av == v) || (au == v && av == u))
                throw FormatError("duplicate or conflicting arc", line->second);
        arcs.emplace_back(u, v);
        base.set_edge(u, v);
    }
    Orientation o(std::move(base));
    for (auto [u, v] : arcs) o.orient(u, v);
    return o;
}

}  // namespace storient
