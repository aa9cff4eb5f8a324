#pragma once

#include <cstdint>
#include <string>

#include "storient/graph.hpp"

namespace storient {

// Canonical form for graphs on at most 8 vertices: the lexicographically
// minimal upper-triangle bitstring over all vertex relabelings, in the same
// column-major pair order graph6 uses. Equal codes <=> isomorphic graphs.
struct CanonicalCode {
    int n = 0;
    std::uint32_t bits = 0;  // packed MSB-first, so integer order = lex order

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

    std::string hex() const;
};

CanonicalCode canonical_form(const Graph& g);   // n <= 8
Graph graph_from_code(const CanonicalCode& code);

}  // namespace storient
