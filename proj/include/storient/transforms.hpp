#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "storient/orientation.hpp"

namespace storient {

enum class StepKind { input, delete_edge, add_edge, lift_path, subdivide_edge };
enum class AddPhase { semi_to_comparability, to_multipartite, to_complete };

const char* to_string(StepKind k);
const char* to_string(AddPhase p);

// Why a step is safe: which sink/clique/source justified a deletion, which
// partition levels and middle vertex justified an addition or lift, which
// path orientation variant a subdivision used.
struct StepCertificate {
    int sink = -1;
    int source = -1;
    std::vector<int> clique;
    std::optional<AddPhase> phase;
    int via = -1;
    int level_u = -1, level_via = -1, level_w = -1;
    bool fallback = false;
    char subdivision_variant = 0;  // 'A', 'B' or 'C'
};

struct StepOp {
    StepKind kind = StepKind::input;
    Edge edge{};                          // delete_edge / add_edge / subdivide_edge
    std::array<int, 3> path{{-1, -1, -1}};  // lift_path: u, v, w
    int t = 0;                            // subdivide_edge
    StepCertificate cert;
};

struct TransformStep {
    StepOp op;
    Graph graph;
    Orientation orientation;
};

// Certified transformation run. steps[0] is the input with op.kind == input;
// each later step applies its op to the previous graph and keeps every
// surviving edge's direction.
struct TransformTrace {
    std::vector<TransformStep> steps;
};

struct DeletableEdge {
    Edge edge;
    Orientation remaining;
    StepCertificate cert;
};

struct AddablePair {
    Edge pair;
    Orientation extended;
    AddPhase phase;
    StepCertificate cert;
};

struct LiftablePath {
    std::array<int, 3> path;
    Orientation lifted;
    StepCertificate cert;
};

// Sink + maximal clique + tournament source selection; the resulting edge is
// always safe to delete under the input orientation.
DeletableEdge deletable_edge(const Graph& g, const Orientation& o);

// Deleting an edge that lies in no K4 keeps the orientation semi-transitive.
Orientation safe_delete_k4free(const Graph& g, const Orientation& o, Edge e);

// One edge addition extending o: an open directed 2-path closure while o is
// not transitive, then the multipartite completion phases.
AddablePair addable_pair(const Graph& g, const Orientation& o);

// One lift extending o; requires max degree >= 2.
LiftablePath liftable_path(const Graph& g, const Orientation& o);

TransformTrace delete_to_empty(const Graph& g, const Orientation& o);
TransformTrace add_to_complete(const Graph& g, const Orientation& o);
TransformTrace lift_to_matching(const Graph& g, const Orientation& o);

// Orientation of g with edge e subdivided t times that restricts to o on
// g minus e. Tries the three path orientations in order (source-split,
// all-toward-u, and for t=1 the forward path) and returns the first that is
// semi-transitive.
Orientation extend_to_subdivision(const Graph& g, Edge e, const Orientation& o_minus_e, int t);

// Re-checks every step: declared op replay, semi-transitivity, and the
// surviving-edge extension property.
bool validate_trace(const TransformTrace& tr);

nlohmann::json trace_to_json(const TransformTrace& tr);

}  // namespace storient
