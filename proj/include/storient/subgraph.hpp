#pragma once

#include <optional>
#include <vector>

#include "storient/graph.hpp"

namespace storient {

// Injective map pattern vertex -> host vertex preserving adjacency and
// non-adjacency (induced embedding).
struct Embedding {
    std::vector<int> map;
};

// First induced embedding of pattern in host, backtracking over
// degree-compatible candidates in index order. pattern.n <= 8.
std::optional<Embedding> induced_contains(const Graph& host, const Graph& pattern);

bool embedding_is_induced(const Graph& host, const Graph& pattern, const Embedding& emb);

}  // namespace storient
