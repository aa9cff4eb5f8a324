#include "storient/subgraph.hpp"

#include <algorithm>

namespace storient {

namespace {

// Pattern vertices reordered so each one (after the first) touches as many
// already-placed vertices as possible; ties broken by degree, then index.
std::vector<int> search_order(const Graph& pattern) {
    int n = pattern.n;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_links = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1u) continue;
            int links = std::popcount(pattern.adj[v] & placed);
            int deg = pattern.degree(v);
            if (links > pick_links || (links == pick_links && deg > pick_deg)) {
                pick = v;
                pick_links = links;
                pick_deg = deg;
            }
        }
        order.push_back(pick);
        placed |= std::uint64_t{1} << pick;
    }
    return order;
}

struct Searcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<int> image;  // by order position
    std::uint64_t used = 0;

    bool place(std::size_t pos) {
        if (pos == order.size()) return true;
        int p = order[pos];
        int pdeg = pattern.degree(p);
        for (int c = 0; c < host.n; ++c) {
            if ((used >> c) & 1u) continue;
            if (host.degree(c) < pdeg) continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos; ++q) {
                if (pattern.has_edge(p, order[q]) != host.has_edge(c, image[q])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[pos] = c;
            used |= std::uint64_t{1} << c;
            if (place(pos + 1)) return true;
            used &= ~(std::uint64_t{1} << c);
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> induced_contains(const Graph& host, const Graph& pattern) {
    if (pattern.n > 8) throw UnsupportedSizeError("pattern cap is 8 vertices");
    if (pattern.n > host.n) throw ArgumentError("pattern larger than host");
    Searcher s{host, pattern, search_order(pattern), std::vector<int>(static_cast<std::size_t>(pattern.n))};
    if (!s.place(0)) return std::nullopt;
    Embedding emb;
    emb.map.assign(static_cast<std::size_t>(pattern.n), -1);
    for (std::size_t pos = 0; pos < s.order.size(); ++pos) emb.map[s.order[pos]] = s.image[pos];
    return emb;
}

bool embedding_is_induced(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (static_cast<int>(emb.map.size()) != pattern.n) return false;
    std::uint64_t used = 0;
    for (int img : emb.map) {
        if (img < 0 || img >= host.n || ((used >> img) & 1u)) return false;
        used |= std::uint64_t{1} << img;
    }
    for (int u = 0; u < pattern.n; ++u)
        for (int v = u + 1; v < pattern.n; ++v)
            if (pattern.has_edge(u, v) != host.has_edge(emb.map[u], emb.map[v])) return false;
    return true;
}

}  // namespace storient
