#pragma once

// Test-only reference implementations, deliberately independent of the
// production code paths they cross-check.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "storient/graph.hpp"
#include "storient/orientation.hpp"

namespace testutil {

using storient::Edge;
using storient::Graph;
using storient::Orientation;

// graph6 via an explicit '0'/'1' string, padded and chunked by hand.
inline std::string reference_graph6(const Graph& g) {
    std::string bits;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(g.n + 63));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (std::size_t j = 0; j < 6; ++j) val = val * 2 + (bits[i + j] - '0');
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.set_edge(u, v);
    return g;
}

// Orientation from a direction mask over the sorted edge list; bit i clear
// means edge i points low -> high.
inline Orientation orientation_from_mask(const Graph& g, const std::vector<Edge>& es,
                                         std::uint64_t mask) {
    Orientation o(g);
    for (std::size_t i = 0; i < es.size(); ++i) {
        if ((mask >> i) & 1u)
            o.orient(es[i].v, es[i].u);
        else
            o.orient(es[i].u, es[i].v);
    }
    return o;
}

// Brute-force orientability: sweep all orientations, keep the acyclic ones,
// and ask the subset-enumeration shortcut oracle.
inline bool oracle_orientable(const Graph& g) {
    std::vector<Edge> es = storient::edges(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << es.size()); ++mask) {
        Orientation o = orientation_from_mask(g, es, mask);
        if (!storient::is_acyclic(o)) continue;
        if (!storient::shortcut_oracle(o)) return true;
    }
    return false;
}

// Induced-subgraph existence by subsets and all bijections.
inline bool exhaustive_induced_contains(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n) return false;
    std::vector<int> verts(static_cast<std::size_t>(host.n));
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<int> pick(static_cast<std::size_t>(pattern.n));
    // enumerate subsets of size pattern.n via combinations
    std::vector<int> idx(static_cast<std::size_t>(pattern.n));
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() {
        int k = pattern.n;
        for (int i = k - 1; i >= 0; --i) {
            if (idx[i] < host.n - (k - i)) {
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    if (pattern.n == 0) return true;
    do {
        std::vector<int> subset(idx.begin(), idx.end());
        std::sort(subset.begin(), subset.end());
        do {
            bool ok = true;
            for (int u = 0; u < pattern.n && ok; ++u)
                for (int v = u + 1; v < pattern.n && ok; ++v)
                    if (pattern.has_edge(u, v) != host.has_edge(subset[u], subset[v])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(subset.begin(), subset.end()));
    } while (advance());
    return false;
}

}  // namespace testutil
