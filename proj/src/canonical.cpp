#include "storient/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace storient {

namespace {

constexpr int kCanonicalCap = 8;

struct Minimizer {
    const Graph& g;
    int n;
    int npairs;
    std::uint32_t best;
    std::array<int, kCanonicalCap> perm{};

    explicit Minimizer(const Graph& graph)
        : g(graph), n(graph.n), npairs(graph.n * (graph.n - 1) / 2), best(~std::uint32_t{0}) {}

    // Branch and bound over positions. acc holds the bits of columns
    // 0..depth-1; a branch survives only while acc is no larger than the
    // matching prefix of the incumbent.
    void descend(int depth, std::uint32_t acc, std::uint32_t used) {
        if (depth == n) {
            best = std::min(best, acc);
            return;
        }
        int prefix_bits = (depth + 1) * depth / 2;
        // Candidates sorted by their column value: cheapest extension first,
        // which tightens the incumbent early.
        std::array<std::pair<std::uint32_t, int>, kCanonicalCap> cand;
        int count = 0;
        for (int x = 0; x < n; ++x) {
            if ((used >> x) & 1u) continue;
            std::uint32_t column = 0;
            for (int pos = 0; pos < depth; ++pos)
                column = (column << 1) | (g.has_edge(perm[pos], x) ? 1u : 0u);
            cand[count++] = {column, x};
        }
        std::sort(cand.begin(), cand.begin() + count);
        for (int i = 0; i < count; ++i) {
            std::uint32_t next = (acc << depth) | cand[i].first;
            if (next > (best >> (npairs - prefix_bits))) break;  // sorted: the rest are worse
            perm[depth] = cand[i].second;
            descend(depth + 1, next, used | (1u << cand[i].second));
        }
    }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
    if (g.n > kCanonicalCap)
        throw UnsupportedSizeError("canonical_form supports n <= 8, got " + std::to_string(g.n));
    Minimizer m(g);
    if (g.n == 0) return CanonicalCode{0, 0};
    m.descend(0, 0, 0);
    return CanonicalCode{g.n, m.best};
}

Graph graph_from_code(const CanonicalCode& code) {
    Graph g(code.n);
    int npairs = code.n * (code.n - 1) / 2;
    int pair = 0;
    for (int v = 1; v < code.n; ++v)
        for (int u = 0; u < v; ++u, ++pair)
            if ((code.bits >> (npairs - 1 - pair)) & 1u) g.set_edge(u, v);
    return g;
}

std::string CanonicalCode::hex() const {
    int npairs = n * (n - 1) / 2;
    int width = std::max(1, (npairs + 3) / 4);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%0*x", width, bits);
    return buf;
}

}  // namespace storient
