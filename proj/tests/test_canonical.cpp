#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "storient/canonical.hpp"

using namespace storient;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.set_edge(perm[u], perm[v]);
    return h;
}

}  // namespace

TEST_CASE("isomorphic labelings share a code, non-isomorphic differ") {
    Graph p3a(3, {{0, 1}, {1, 2}});
    Graph p3b(3, {{0, 2}, {2, 1}});
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(p3a) != canonical_form(complete_graph(3)));
}

TEST_CASE("random relabelings of W5 keep the canonical code") {
    std::mt19937 rng(4242);
    Graph w5 = wheel(5);
    CanonicalCode code = canonical_form(w5);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted(w5, perm)) == code);
    }
}

TEST_CASE("invariance under relabeling, random graphs n <= 7") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(rng, n, 0.5);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(permuted(g, perm)));
    }
}

TEST_CASE("codes separate all isomorphism classes on 4 vertices") {
    // 11 classes on 4 vertices is a known count
    std::set<std::uint32_t> codes;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int pair = 0;
        for (int v = 1; v < 4; ++v)
            for (int u = 0; u < v; ++u, ++pair)
                if ((mask >> pair) & 1u) g.set_edge(u, v);
        codes.insert(canonical_form(g).bits);
    }
    CHECK(codes.size() == 11);
}

TEST_CASE("graph_from_code rebuilds the canonical representative") {
    Graph w5 = wheel(5);
    CanonicalCode code = canonical_form(w5);
    Graph rep = graph_from_code(code);
    CHECK(canonical_form(rep) == code);
    CHECK(rep.edge_count() == w5.edge_count());
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(canonical_form(empty_graph(9)), UnsupportedSizeError);
    CHECK(canonical_form(empty_graph(0)).bits == 0);
}
