#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "storient/graph6.hpp"

using namespace storient;

TEST_CASE("known encodings agree with the reference encoder") {
    Graph k2 = complete_graph(2);
    CHECK(testutil::reference_graph6(k2) == "A_");
    CHECK(write_graph6(k2) == "A_");
    Graph parsed = parse_graph6("A_");
    CHECK(parsed.n == 2);
    CHECK(parsed.has_edge(0, 1));

    CHECK(testutil::reference_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(parse_graph6("@").n == 1);

    Graph p3 = path_graph(3);
    CHECK(testutil::reference_graph6(p3) == "Bg");
    CHECK(write_graph6(p3) == "Bg");
    Graph bg = parse_graph6("Bg");
    CHECK(bg.has_edge(0, 1));
    CHECK(bg.has_edge(1, 2));
    CHECK_FALSE(bg.has_edge(0, 2));
}

TEST_CASE("parse/write round trip, exhaustive n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        int npairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << npairs); ++mask) {
            Graph g(n);
            int pair = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++pair)
                    if ((mask >> pair) & 1u) g.set_edge(u, v);
            std::string s = write_graph6(g);
            CHECK(s == testutil::reference_graph6(g));
            CHECK(parse_graph6(s) == g);
            CHECK(write_graph6(parse_graph6(s)) == s);
        }
    }
}

TEST_CASE("round trip on random graphs up to n = 10") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng() % 11);
        Graph g = testutil::random_graph(rng, n, 0.4);
        std::string s = write_graph6(g);
        CHECK(s == testutil::reference_graph6(g));
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("format errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    CHECK_THROWS_AS(parse_graph6("~AAA"), FormatError);   // long form
    CHECK_THROWS_AS(parse_graph6("A"), FormatError);      // truncated
    CHECK_THROWS_AS(parse_graph6("A_X"), FormatError);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6(std::string(1, 20) + "_"), FormatError);  // byte < 63

    try {
        parse_graph6("A_X");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.byte_offset == 2);
    }
    try {
        Graph c5 = cycle_graph(5);
        std::string s = write_graph6(c5);
        s[1] = static_cast<char>(200);
        parse_graph6(s);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("nonzero padding is rejected") {
    // K2's record has four padding bits; flip one.
    std::string s = "A_";
    s[1] = static_cast<char>(s[1] + 1);
    CHECK_THROWS_AS(parse_graph6(s), FormatError);
}
