#include "storient/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "storient/canonical.hpp"
#include "storient/solver.hpp"

namespace storient {

const char* to_string(ProductKind k) {
    switch (k) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::tensor: return "tensor";
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::strong: return "strong";
    }
    return "?";
}

std::optional<ProductKind> product_kind_from_string(std::string_view s) {
    if (s == "cartesian") return ProductKind::cartesian;
    if (s == "tensor") return ProductKind::tensor;
    if (s == "lexicographic") return ProductKind::lexicographic;
    if (s == "strong") return ProductKind::strong;
    return std::nullopt;
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
    if (g.n * h.n > kMaxVertices)
        throw UnsupportedSizeError("product order " + std::to_string(g.n * h.n) + " exceeds 62");
    Graph p(g.n * h.n);
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int a2 = 0; a2 < h.n; ++a2)
            for (int b1 = 0; b1 < g.n; ++b1)
                for (int b2 = 0; b2 < h.n; ++b2) {
                    int u = a1 * h.n + a2;
                    int v = b1 * h.n + b2;
                    if (u >= v) continue;
                    bool g_adj = g.has_edge(a1, b1);
                    bool h_adj = h.has_edge(a2, b2);
                    bool joined = false;
                    switch (kind) {
                        case ProductKind::cartesian:
                            joined = (a1 == b1 && h_adj) || (g_adj && a2 == b2);
                            break;
                        case ProductKind::tensor:
                            joined = g_adj && h_adj;
                            break;
                        case ProductKind::lexicographic:
                            joined = g_adj || (a1 == b1 && h_adj);
                            break;
                        case ProductKind::strong:
                            joined = (a1 == b1 && h_adj) || (g_adj && a2 == b2) || (g_adj && h_adj);
                            break;
                    }
                    if (joined) p.set_edge(u, v);
                }
    return p;
}

namespace {

// All connected graphs on 1..max_order vertices up to isomorphism, as their
// canonical representatives, sorted by (order, code).
std::vector<Graph> connected_factors(int max_order) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        std::set<std::uint32_t> seen;
        int npairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << npairs); ++mask) {
            Graph g(n);
            int pair = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++pair)
                    if ((mask >> pair) & 1u) g.set_edge(u, v);
            if (!is_connected(g)) continue;
            seen.insert(canonical_form(g).bits);
        }
        for (std::uint32_t code : seen) out.push_back(graph_from_code(CanonicalCode{n, code}));
    }
    return out;
}

}  // namespace

std::optional<W5Hit> find_w5_in_product(ProductKind kind, int max_order) {
    if (max_order > 5) throw ArgumentError("find_w5_in_product caps factors at 5 vertices");
    std::vector<Graph> factors = connected_factors(max_order);
    std::erase_if(factors, [](const Graph& g) { return !find_semi_transitive_orientation(g); });
    Graph w5 = wheel(5);
    for (const Graph& g : factors) {
        for (const Graph& h : factors) {
            Graph p = product(g, h, kind);
            if (p.n < w5.n) continue;
            if (auto emb = induced_contains(p, w5))
                return W5Hit{g, h, std::move(p), *std::move(emb)};
        }
    }
    return std::nullopt;
}

Graph odd_girth_blowup(const Graph& h) {
    Graph g = h;
    for (int x = 0; x < h.n; ++x) {
        for (int y = x + 1; y < h.n; ++y) {
            if (g.has_edge(x, y)) continue;
            bool linked = false;
            // simple path x - a - b - y
            for (std::uint64_t ma = h.adj[x] & ~(std::uint64_t{1} << y); ma && !linked; ma &= ma - 1) {
                int a = std::countr_zero(ma);
                std::uint64_t mb = h.adj[a] & h.adj[y];
                mb &= ~(std::uint64_t{1} << x);
                mb &= ~(std::uint64_t{1} << a);
                if (mb) linked = true;
            }
            if (linked) g.set_edge(x, y);
        }
    }
    return g;
}

std::optional<int> odd_girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(g.n));
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::uint64_t frontier = std::uint64_t{1} << s;
        std::uint64_t seen = frontier;
        int d = 0;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
            next &= ~seen;
            ++d;
            for (std::uint64_t m = next; m; m &= m - 1) dist[std::countr_zero(m)] = d;
            seen |= next;
            frontier = next;
        }
        // Any edge inside one BFS layer closes an odd closed walk through s,
        // and the shortest odd cycle is hit this way for s on that cycle.
        for (const Edge& e : edges(g)) {
            if (dist[e.u] < 0 || dist[e.v] < 0 || dist[e.u] != dist[e.v]) continue;
            int len = dist[e.u] + dist[e.v] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<char> word_alphabet(const Word& w) {
    if (w.letters.empty()) throw ArgumentError("word must be nonempty");
    std::set<char> letters(w.letters.begin(), w.letters.end());
    if (letters.size() > static_cast<std::size_t>(kMaxVertices))
        throw UnsupportedSizeError("alphabet exceeds 62 letters");
    return std::vector<char>(letters.begin(), letters.end());
}

Graph alternation_graph(const Word& w) {
    std::vector<char> alphabet = word_alphabet(w);
    std::map<char, int> index;
    for (std::size_t i = 0; i < alphabet.size(); ++i) index[alphabet[i]] = static_cast<int>(i);
    int n = static_cast<int>(alphabet.size());
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int last = -1;
            bool alternates = true;
            for (char c : w.letters) {
                int idx = index[c];
                if (idx != u && idx != v) continue;
                if (idx == last) {
                    alternates = false;
                    break;
                }
                last = idx;
            }
            if (alternates) g.set_edge(u, v);
        }
    }
    return g;
}

}  // namespace storient
