#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "storient/canonical.hpp"
#include "storient/solver.hpp"

namespace storient {

struct CensusOptions {
    int n = 0;
    bool connected_only = false;
    int workers = 1;
    SolveOptions solve;
};

struct CensusClass {
    CanonicalCode code;
    std::string graph6_rep;  // graph6 of the canonical representative
};

struct CensusReport {
    int n = 0;
    bool connected_only = false;
    std::uint64_t total_labeled = 0;     // all labeled graphs on n vertices
    std::uint64_t examined = 0;          // after the optional connectivity skip
    std::uint64_t non_orientable_labeled = 0;
    std::vector<CensusClass> classes;    // deduplicated, sorted by code
    std::int64_t elapsed_ms = 0;
};

// Enumerates every labeled graph on n vertices (optionally connected only),
// decides semi-transitive orientability per graph, and canonicalizes the
// failures. Worker partitioning never changes the report content. n <= 7.
CensusReport run_census(const CensusOptions& opts);

nlohmann::json census_to_json(const CensusReport& report);

}  // namespace storient
