#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "storient/orientation.hpp"

using namespace storient;
using testutil::orientation_from_mask;

namespace {

Orientation from_arcs(const Graph& g, std::initializer_list<std::pair<int, int>> arcs) {
    Orientation o(g);
    for (auto [u, v] : arcs) o.orient(u, v);
    return o;
}

// The canonical shortcut digraph: a->b->c->d plus chord a->d, no other edges.
Orientation canonical_shortcut() {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    return from_arcs(g, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Orientation transitive_tournament(int n) {
    Graph k = complete_graph(n);
    Orientation o(k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) o.orient(u, v);
    return o;
}

}  // namespace

TEST_CASE("acyclicity") {
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_acyclic(from_arcs(k3, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK(is_acyclic(from_arcs(k3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(is_acyclic(transitive_tournament(4)));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        // any orientation of a forest is acyclic
        Graph tree(7);
        for (int v = 1; v < 7; ++v) tree.set_edge(static_cast<int>(rng() % v), v);
        std::vector<Edge> es = edges(tree);
        CHECK(is_acyclic(orientation_from_mask(tree, es, rng())));
    }
}

TEST_CASE("topological levels") {
    Orientation chain = from_arcs(path_graph(3), {{0, 1}, {1, 2}});
    GoodPartition p = topological_levels(chain);
    REQUIRE(p.levels.size() == 3);
    CHECK(p.levels[0] == std::vector<int>{0});
    CHECK(p.levels[1] == std::vector<int>{1});
    CHECK(p.levels[2] == std::vector<int>{2});

    // C4 with two sources and two sinks
    Orientation c4 = from_arcs(cycle_graph(4), {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    GoodPartition pc = topological_levels(c4);
    REQUIRE(pc.levels.size() == 2);
    CHECK(pc.levels[0].size() == 2);
    CHECK(pc.levels[1].size() == 2);

    GoodPartition pk = topological_levels(transitive_tournament(4));
    CHECK(pk.levels.size() == 4);

    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(topological_levels(from_arcs(k3, {{0, 1}, {1, 2}, {2, 0}})), PreconditionError);
}

TEST_CASE("good partition structure on random acyclic orientations") {
    std::mt19937 rng(123);
    int checked = 0;
    while (checked < 200) {
        Graph g = testutil::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
        std::vector<Edge> es = edges(g);
        Orientation o = orientation_from_mask(g, es, rng());
        if (!is_acyclic(o)) continue;
        ++checked;
        GoodPartition p = topological_levels(o);
        // levels cover every vertex, are independent, and order every arc
        std::size_t covered = 0;
        for (const auto& level : p.levels) {
            covered += level.size();
            for (std::size_t i = 0; i < level.size(); ++i)
                for (std::size_t j = i + 1; j < level.size(); ++j)
                    CHECK_FALSE(g.has_edge(level[i], level[j]));
        }
        CHECK(covered == static_cast<std::size_t>(g.n));
        for (int u = 0; u < g.n; ++u)
            for (std::uint64_t m = o.out[u]; m; m &= m - 1)
                CHECK(p.level_of[u] < p.level_of[std::countr_zero(m)]);
        // sources are exactly level 0; deeper vertices have an in-neighbor
        // one level down and none further down
        std::vector<std::uint64_t> in = o.in_rows();
        for (int v = 0; v < g.n; ++v) {
            if (p.level_of[v] == 0) {
                CHECK(in[v] == 0);
                continue;
            }
            bool direct = false;
            for (std::uint64_t m = in[v]; m; m &= m - 1) {
                int u = std::countr_zero(m);
                CHECK(p.level_of[u] <= p.level_of[v] - 1);
                if (p.level_of[u] == p.level_of[v] - 1) direct = true;
            }
            CHECK(direct);
        }
    }
}

TEST_CASE("transitivity") {
    CHECK(is_transitive(transitive_tournament(3)));
    CHECK_FALSE(is_transitive(from_arcs(path_graph(3), {{0, 1}, {1, 2}})));
    // alternately oriented C4 has no directed 2-path
    CHECK(is_transitive(from_arcs(cycle_graph(4), {{0, 1}, {2, 1}, {2, 3}, {0, 3}})));
}

TEST_CASE("find_shortcut returns the canonical certificate") {
    auto s = find_shortcut(canonical_shortcut());
    REQUIRE(s.has_value());
    CHECK(s->path == std::vector<int>{0, 1, 2, 3});
    CHECK(s->missing == std::pair<int, int>{0, 2});
    CHECK(shortcut_is_valid(canonical_shortcut(), *s));

    CHECK_FALSE(find_shortcut(transitive_tournament(4)).has_value());
    CHECK_FALSE(find_shortcut(from_arcs(cycle_graph(4), {{0, 1}, {2, 1}, {2, 3}, {0, 3}})).has_value());

    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(find_shortcut(from_arcs(k3, {{0, 1}, {1, 2}, {2, 0}})), PreconditionError);
}

TEST_CASE("semi-transitivity basics") {
    CHECK(is_semi_transitive(transitive_tournament(5)));
    CHECK_FALSE(is_semi_transitive(canonical_shortcut()));
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_semi_transitive(from_arcs(k3, {{0, 1}, {1, 2}, {2, 0}})));  // cyclic
    // every acyclic orientation on <= 3 vertices is semi-transitive
    for (int n = 0; n <= 3; ++n) {
        int npairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << npairs); ++mask) {
            Graph g(n);
            int pair = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++pair)
                    if ((mask >> pair) & 1u) g.set_edge(u, v);
            std::vector<Edge> es = edges(g);
            for (std::uint64_t dirs = 0; dirs < (std::uint64_t{1} << es.size()); ++dirs) {
                Orientation o = orientation_from_mask(g, es, dirs);
                if (is_acyclic(o)) CHECK(is_semi_transitive(o));
            }
        }
    }
}

TEST_CASE("oracle examples") {
    auto s = shortcut_oracle(canonical_shortcut());
    REQUIRE(s.has_value());
    CHECK(shortcut_is_valid(canonical_shortcut(), *s));

    // K5 transitive tournament with the source-sink edge deleted
    Orientation t5 = transitive_tournament(5);
    Graph k5_minus = delete_edge(complete_graph(5), make_edge(0, 4));
    Orientation o = restrict_to_subgraph(t5, k5_minus);
    CHECK_FALSE(shortcut_oracle(o).has_value());
    CHECK(is_semi_transitive(o));

    CHECK_FALSE(shortcut_oracle(transitive_tournament(3)).has_value());
    CHECK_THROWS_AS(shortcut_oracle(Orientation(empty_graph(11))), UnsupportedSizeError);
}

TEST_CASE("oracle equivalence on random graphs up to 6 vertices") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n, 0.5);
        std::vector<Edge> es = edges(g);
        bool exhaustive = es.size() <= 12;
        std::uint64_t sweeps = exhaustive ? (std::uint64_t{1} << es.size()) : 2048;
        for (std::uint64_t k = 0; k < sweeps; ++k) {
            std::uint64_t dirs = exhaustive ? k : rng();
            Orientation o = orientation_from_mask(g, es, dirs);
            if (!is_acyclic(o)) continue;
            auto fast = find_shortcut(o);
            auto slow = shortcut_oracle(o);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(shortcut_is_valid(o, *fast));
            if (slow) CHECK(shortcut_is_valid(o, *slow));
        }
    }
}

TEST_CASE("transitive implies semi-transitive on sampled orientations") {
    std::mt19937 rng(2718);
    int seen = 0;
    while (seen < 100) {
        Graph g = testutil::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        std::vector<Edge> es = edges(g);
        Orientation o = orientation_from_mask(g, es, rng());
        if (!is_acyclic(o) || !is_transitive(o)) continue;
        ++seen;
        CHECK(is_semi_transitive(o));
    }
}

TEST_CASE("transitive tournaments have one source and one sink") {
    for (int n = 2; n <= 7; ++n) {
        Orientation t = transitive_tournament(n);
        std::vector<std::uint64_t> in = t.in_rows();
        int sources = 0, sinks = 0;
        for (int v = 0; v < n; ++v) {
            if (in[v] == 0) ++sources;
            if (t.out[v] == 0) ++sinks;
        }
        CHECK(sources == 1);
        CHECK(sinks == 1);
    }
}

TEST_CASE("digraph text round trip") {
    Orientation t = transitive_tournament(3);
    std::string text = write_digraph(t);
    CHECK(text == "n=3\n0->1\n0->2\n1->2\n");
    Orientation parsed = parse_digraph(text);
    CHECK(parsed.base == t.base);
    CHECK(parsed.out == t.out);

    CHECK(write_digraph(Orientation(empty_graph(2))) == "n=2\n");
    CHECK_THROWS_AS(parse_digraph("x"), FormatError);
    CHECK_THROWS_AS(parse_digraph("n=2\n0->0\n"), FormatError);
    CHECK_THROWS_AS(parse_digraph("n=2\n0->1\n1->0\n"), FormatError);
    CHECK_THROWS_AS(parse_digraph("n=2\n0->5\n"), FormatError);

    std::mt19937 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
        Orientation o = orientation_from_mask(g, edges(g), rng());
        Orientation back = parse_digraph(write_digraph(o));
        CHECK(back.base == o.base);
        CHECK(back.out == o.out);
    }
}

TEST_CASE("orientation validation") {
    Graph p3 = path_graph(3);
    Orientation o(p3);
    o.orient(0, 1);
    CHECK_THROWS_AS(validate(o), ArgumentError);  // edge {1,2} undirected
    o.orient(2, 1);
    CHECK_NOTHROW(validate(o));
    CHECK_THROWS_AS(o.orient(1, 0), ArgumentError);  // already oriented
    CHECK_THROWS_AS(o.orient(0, 2), ArgumentError);  // not an edge
}
