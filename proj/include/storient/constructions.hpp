#pragma once

#include <optional>
#include <string>
#include <vector>

#include "storient/graph.hpp"
#include "storient/subgraph.hpp"

namespace storient {

enum class ProductKind { cartesian, tensor, lexicographic, strong };

const char* to_string(ProductKind k);
std::optional<ProductKind> product_kind_from_string(std::string_view s);

// Vertex set V(g) x V(h), pair (a, b) at index a*h.n + b.
Graph product(const Graph& g, const Graph& h, ProductKind kind);

struct W5Hit {
    Graph g, h;
    Graph prod;
    Embedding embedding;
};

// Scans ordered pairs of connected graphs on up to max_order vertices (up to
// isomorphism, in canonical-code order), keeps pairs whose factors are both
// semi-transitively orientable, and returns the first product containing an
// induced W5. max_order <= 5.
std::optional<W5Hit> find_w5_in_product(ProductKind kind, int max_order);

// Same vertex set; adds an edge between every pair joined by a simple path
// of exactly three edges.
Graph odd_girth_blowup(const Graph& h);

// Length of a shortest odd cycle; nullopt iff bipartite.
std::optional<int> odd_girth(const Graph& g);

struct Word {
    std::string letters;
};

std::vector<char> word_alphabet(const Word& w);

// Vertices are the distinct letters in sorted order; an edge joins two
// letters iff their restriction subword strictly alternates.
Graph alternation_graph(const Word& w);

}  // namespace storient
