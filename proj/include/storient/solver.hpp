#pragma once

#include <cstdint>
#include <optional>

#include "storient/orientation.hpp"

namespace storient {

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunings = 0;
};

struct SolveOptions {
    std::uint64_t node_budget = 100'000'000;  // node-count cap, not wall time
};

enum class SolveMode { semi_transitive, transitive };

struct SolveVerdict {
    enum class Status { orientable, not_orientable, filtered };
    Status status = Status::not_orientable;
    std::optional<Orientation> orientation;
    int filtered_vertex = -1;
    SolveStats stats;
};

// A vertex whose neighborhood induces a non-comparability graph, if any.
// Such a vertex certifies that no semi-transitive orientation exists.
std::optional<int> neighborhood_filter(const Graph& g);

// Backtracking over edge directions, constrained edges first, first edge
// direction fixed (reversing all arcs preserves the target properties).
// n <= 20.
std::optional<Orientation> find_semi_transitive_orientation(const Graph& g, const SolveOptions& opts = {},
                                                            SolveStats* stats = nullptr);
std::optional<Orientation> find_transitive_orientation(const Graph& g, const SolveOptions& opts = {},
                                                       SolveStats* stats = nullptr);

// Prefilter (semi-transitive mode only), then the raw search.
SolveVerdict decide(const Graph& g, SolveMode mode, const SolveOptions& opts = {});

}  // namespace storient
