#pragma once

#include <iostream>
#include <string>

#include "storient/census.hpp"
#include "storient/constructions.hpp"
#include "storient/solver.hpp"
#include "storient/transforms.hpp"

namespace storient {

enum class TransformMode { to_empty, to_complete, to_matching };

// Node budget from STORIENT_NODE_BUDGET, falling back to the default cap.
SolveOptions solve_options_from_env();

// One JSON record per graph6 input line, order preserving; parse failures
// become error records and the stream keeps going. Returns the process exit
// code: 0 clean, 1 if any record failed.
int cmd_check(std::istream& in, std::ostream& out, SolveMode mode, const SolveOptions& opts);

// Digraph text per orientable input line, "not-orientable" otherwise.
int cmd_orient(std::istream& in, std::ostream& out, SolveMode mode, const SolveOptions& opts);

// Single graph6 input line -> validated trace JSON document.
int cmd_transform(std::istream& in, std::ostream& out, TransformMode mode, const SolveOptions& opts);

int cmd_census(std::ostream& out, const CensusOptions& opts);

int cmd_product(std::ostream& out, const std::string& g6_a, const std::string& g6_b, ProductKind kind,
                bool check, const SolveOptions& opts);
int cmd_product_find_w5(std::ostream& out, ProductKind kind, int max_order);
int cmd_blowup(std::istream& in, std::ostream& out, bool check, const SolveOptions& opts);
int cmd_word(std::ostream& out, const std::string& word, bool check, const SolveOptions& opts);

}  // namespace storient
