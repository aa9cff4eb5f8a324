#include "storient/transforms.hpp"

#include <algorithm>
#include <climits>
#include <tuple>

#include "storient/graph6.hpp"

namespace storient {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::input: return "input";
        case StepKind::delete_edge: return "delete_edge";
        case StepKind::add_edge: return "add_edge";
        case StepKind::lift_path: return "lift_path";
        case StepKind::subdivide_edge: return "subdivide_edge";
    }
    return "?";
}

const char* to_string(AddPhase p) {
    switch (p) {
        case AddPhase::semi_to_comparability: return "semi_to_comparability";
        case AddPhase::to_multipartite: return "to_multipartite";
        case AddPhase::to_complete: return "to_complete";
    }
    return "?";
}

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void require_matching_base(const Graph& g, const Orientation& o, const char* who) {
    if (o.base != g) throw ArgumentError(std::string(who) + ": orientation base differs from the graph");
}

// Keeps o's arcs on a same-vertex-set subgraph and orients one extra pair.
Orientation extend_with_arc(const Orientation& o, const Graph& target, int tail, int head) {
    Orientation r(target);
    for (int u = 0; u < target.n && u < o.base.n; ++u) r.out[u] = o.out[u] & target.adj[u];
    r.out[tail] |= bit(head);
    return r;
}

struct SpanPair {
    int u = -1, via = -1, w = -1;
    int lu = -1, lvia = -1, lw = -1;
};

// Non-adjacent pair u, w at levels i < k with k-i >= 2 and a common neighbor
// strictly between, minimizing k-i; ties by (u, w, via) ascending. Such a
// pair exists exactly when the orientation is not transitive.
std::optional<SpanPair> min_span_pair(const Graph& g, const GoodPartition& p) {
    std::optional<SpanPair> best;
    auto better = [&](int span, const SpanPair& c) {
        if (!best) return true;
        int bspan = best->lw - best->lu;
        return std::tie(span, c.u, c.w, c.via) < std::tie(bspan, best->u, best->w, best->via);
    };
    for (int u = 0; u < g.n; ++u) {
        for (int w = 0; w < g.n; ++w) {
            if (u == w || g.has_edge(u, w)) continue;
            int i = p.level_of[u], k = p.level_of[w];
            if (k - i < 2) continue;
            int via = -1;
            for (int v = 0; v < g.n; ++v) {
                if (p.level_of[v] > i && p.level_of[v] < k && g.has_edge(u, v) && g.has_edge(v, w)) {
                    via = v;
                    break;
                }
            }
            if (via < 0) continue;
            SpanPair cand{u, via, w, i, p.level_of[via], k};
            if (better(k - i, cand)) best = cand;
        }
    }
    return best;
}

}  // namespace

DeletableEdge deletable_edge(const Graph& g, const Orientation& o) {
    require_matching_base(g, o, "deletable_edge");
    if (g.edge_count() == 0) throw PreconditionError("deletable_edge requires a non-empty graph");
    std::vector<std::uint64_t> in = o.in_rows();
    int sink = -1;
    for (int v = 0; v < g.n; ++v) {
        if (o.out[v] == 0 && in[v] != 0) {
            sink = v;
            break;
        }
    }
    if (sink < 0) throw PreconditionError("no sink with incoming arcs; is the orientation acyclic?");

    // Maximal clique through the sink, grown by ascending index.
    std::uint64_t clique = bit(sink);
    for (int u = 0; u < g.n; ++u)
        if (u != sink && (g.adj[u] & clique) == clique) clique |= bit(u);

    // The induced tournament on a clique of a semi-transitive orientation is
    // transitive, so it has a unique source.
    int source = -1;
    for (std::uint64_t m = clique; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((o.out[v] & clique) == (clique ^ bit(v))) {
            source = v;
            break;
        }
    }
    if (source < 0) throw PreconditionError("clique tournament has no source; orientation is not semi-transitive");

    Edge e = make_edge(source, sink);
    DeletableEdge result{e, restrict_to_subgraph(o, delete_edge(g, e)), {}};
    result.cert.sink = sink;
    result.cert.source = source;
    result.cert.clique = mask_vertices(clique);
    return result;
}

Orientation safe_delete_k4free(const Graph& g, const Orientation& o, Edge e) {
    require_matching_base(g, o, "safe_delete_k4free");
    std::vector<int> k4 = k4_containing_edge(g, e);
    if (!k4.empty())
        throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} lies in the K4 {" + std::to_string(k4[0]) + "," + std::to_string(k4[1]) +
                                "," + std::to_string(k4[2]) + "," + std::to_string(k4[3]) + "}");
    return restrict_to_subgraph(o, delete_edge(g, e));
}

namespace {

// Exhaustive non-adjacent pair search keeping the orientation transitive.
// Only reachable if one of the lemma selections below fails to validate.
std::optional<AddablePair> transitive_pair_fallback(const Graph& g, const Orientation& o, AddPhase phase) {
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (a == b || g.has_edge(a, b)) continue;
            Graph g2 = add_edge(g, a, b);
            Orientation o2 = extend_with_arc(o, g2, a, b);
            if (!is_transitive(o2)) continue;
            AddablePair r{make_edge(a, b), std::move(o2), phase, {}};
            r.cert.phase = phase;
            r.cert.fallback = true;
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace

AddablePair addable_pair(const Graph& g, const Orientation& o) {
    require_matching_base(g, o, "addable_pair");
    if (is_complete(g)) throw PreconditionError("addable_pair requires a non-complete graph");
    GoodPartition part = topological_levels(o);

    if (!is_transitive(o)) {
        auto sp = min_span_pair(g, part);
        if (!sp) throw Error("non-transitive orientation without an open cross-level pair");
        Graph g2 = add_edge(g, sp->u, sp->w);
        AddablePair r{make_edge(sp->u, sp->w), extend_with_arc(o, g2, sp->u, sp->w),
                      AddPhase::semi_to_comparability, {}};
        r.cert.phase = r.phase;
        r.cert.via = sp->via;
        r.cert.level_u = sp->lu;
        r.cert.level_via = sp->lvia;
        r.cert.level_w = sp->lw;
        return r;
    }

    int m = static_cast<int>(part.levels.size());
    if (!is_complete_multipartite(g)) {
        // Highest level holding a vertex with a lower-level non-neighbor,
        // subject to every level above being fully joined to the rest.
        bool suffix_joined = true;
        for (int k = m - 1; k >= 0; --k) {
            if (suffix_joined) {
                for (int v : part.levels[k]) {
                    int pick_u = -1;
                    for (int kk = 0; kk < k && pick_u < 0; ++kk)
                        for (int u : part.levels[kk])
                            if (!g.has_edge(u, v)) {
                                pick_u = u;
                                break;
                            }
                    if (pick_u < 0) continue;
                    Graph g2 = add_edge(g, pick_u, v);
                    Orientation o2 = extend_with_arc(o, g2, pick_u, v);
                    if (is_transitive(o2)) {
                        AddablePair r{make_edge(pick_u, v), std::move(o2), AddPhase::to_multipartite, {}};
                        r.cert.phase = r.phase;
                        r.cert.level_u = part.level_of[pick_u];
                        r.cert.level_w = k;
                        return r;
                    }
                }
            }
            std::uint64_t lvl = 0;
            for (int w : part.levels[k]) lvl |= bit(w);
            for (int w : part.levels[k])
                if ((~g.adj[w] & g.vertex_mask() & ~lvl) != 0) suffix_joined = false;
        }
        auto fb = transitive_pair_fallback(g, o, AddPhase::to_multipartite);
        if (fb) return *std::move(fb);
        throw Error("no transitively extendable pair found on a non-multipartite comparability graph");
    }

    // Complete multipartite: close a pair inside one level, lower index first.
    for (int u = 0; u < g.n; ++u) {
        for (int v : part.levels[part.level_of[u]]) {
            if (v <= u) continue;
            Graph g2 = add_edge(g, u, v);
            Orientation o2 = extend_with_arc(o, g2, u, v);
            if (is_transitive(o2)) {
                AddablePair r{make_edge(u, v), std::move(o2), AddPhase::to_complete, {}};
                r.cert.phase = r.phase;
                r.cert.level_u = part.level_of[u];
                r.cert.level_w = part.level_of[u];
                return r;
            }
        }
    }
    auto fb = transitive_pair_fallback(g, o, AddPhase::to_complete);
    if (fb) return *std::move(fb);
    throw Error("no transitively extendable pair found on a complete multipartite graph");
}

LiftablePath liftable_path(const Graph& g, const Orientation& o) {
    require_matching_base(g, o, "liftable_path");
    if (g.max_degree() < 2) throw PreconditionError("liftable_path requires maximum degree >= 2");
    GoodPartition part = topological_levels(o);
    int m = static_cast<int>(part.levels.size());

    if (m >= 3) {
        if (auto sp = min_span_pair(g, part)) {
            Graph lifted = lift_path(g, sp->u, sp->via, sp->w);
            LiftablePath r{{sp->u, sp->via, sp->w}, extend_with_arc(o, lifted, sp->u, sp->w), {}};
            r.cert.via = sp->via;
            r.cert.level_u = sp->lu;
            r.cert.level_via = sp->lvia;
            r.cert.level_w = sp->lw;
            return r;
        }
    } else {
        // Two levels: lifting any length-2 path works; new edge low -> high.
        for (int u = 0; u < g.n; ++u) {
            for (int w = u + 1; w < g.n; ++w) {
                std::uint64_t common = g.adj[u] & g.adj[w];
                if (g.has_edge(u, w) || !common) continue;
                int v = std::countr_zero(common);
                Graph lifted = lift_path(g, u, v, w);
                LiftablePath r{{u, v, w}, extend_with_arc(o, lifted, u, w), {}};
                r.cert.level_u = part.level_of[u];
                r.cert.level_via = part.level_of[v];
                r.cert.level_w = part.level_of[w];
                return r;
            }
        }
        throw PreconditionError("no length-2 path found");
    }

    // No qualifying cross-level pair (e.g. complete multipartite inputs):
    // try every length-2 path, keeping the surviving arcs and checking the
    // result directly.
    for (int u = 0; u < g.n; ++u) {
        for (int w = u + 1; w < g.n; ++w) {
            for (std::uint64_t cm = g.adj[u] & g.adj[w]; cm; cm &= cm - 1) {
                int v = std::countr_zero(cm);
                Graph lifted = lift_path(g, u, v, w);
                bool fresh = !g.has_edge(u, w);
                for (int dir = 0; dir < (fresh ? 2 : 1); ++dir) {
                    Orientation cand(lifted);
                    for (int x = 0; x < g.n; ++x) cand.out[x] = o.out[x] & lifted.adj[x];
                    if (fresh) {
                        int tail = dir == 0 ? u : w;
                        int head = dir == 0 ? w : u;
                        cand.out[tail] |= bit(head);
                    }
                    if (is_semi_transitive(cand)) {
                        LiftablePath r{{u, v, w}, std::move(cand), {}};
                        r.cert.via = v;
                        r.cert.fallback = true;
                        return r;
                    }
                }
            }
        }
    }
    throw Error("no liftable path preserved the orientation");
}

namespace {

TransformStep input_step(const Graph& g, const Orientation& o) {
    return TransformStep{StepOp{}, g, o};
}

}  // namespace

TransformTrace delete_to_empty(const Graph& g, const Orientation& o) {
    require_matching_base(g, o, "delete_to_empty");
    TransformTrace tr;
    tr.steps.push_back(input_step(g, o));
    Graph cur = g;
    Orientation curo = o;
    while (cur.edge_count() > 0) {
        DeletableEdge del = deletable_edge(cur, curo);
        cur = delete_edge(cur, del.edge);
        curo = std::move(del.remaining);
        StepOp op;
        op.kind = StepKind::delete_edge;
        op.edge = del.edge;
        op.cert = std::move(del.cert);
        tr.steps.push_back({std::move(op), cur, curo});
    }
    return tr;
}

TransformTrace add_to_complete(const Graph& g, const Orientation& o) {
    require_matching_base(g, o, "add_to_complete");
    TransformTrace tr;
    tr.steps.push_back(input_step(g, o));
    Graph cur = g;
    Orientation curo = o;
    while (!is_complete(cur)) {
        AddablePair add = addable_pair(cur, curo);
        cur = add_edge(cur, add.pair.u, add.pair.v);
        curo = std::move(add.extended);
        StepOp op;
        op.kind = StepKind::add_edge;
        op.edge = add.pair;
        op.cert = std::move(add.cert);
        tr.steps.push_back({std::move(op), cur, curo});
    }
    return tr;
}

TransformTrace lift_to_matching(const Graph& g, const Orientation& o) {
    require_matching_base(g, o, "lift_to_matching");
    TransformTrace tr;
    tr.steps.push_back(input_step(g, o));
    Graph cur = g;
    Orientation curo = o;
    while (cur.max_degree() >= 2) {
        LiftablePath lift = liftable_path(cur, curo);
        cur = lift_path(cur, lift.path[0], lift.path[1], lift.path[2]);
        curo = std::move(lift.lifted);
        StepOp op;
        op.kind = StepKind::lift_path;
        op.path = lift.path;
        op.cert = std::move(lift.cert);
        tr.steps.push_back({std::move(op), cur, curo});
    }
    return tr;
}

Orientation extend_to_subdivision(const Graph& g, Edge e, const Orientation& o_minus_e, int t) {
    Graph without = delete_edge(g, e);
    if (o_minus_e.base != without)
        throw ArgumentError("extend_to_subdivision: orientation must live on g minus e");
    if (!is_semi_transitive(o_minus_e))
        throw PreconditionError("extend_to_subdivision requires a semi-transitive orientation of g minus e");
    Graph sub = subdivide_edge(g, e, t);
    int x = e.u, y = e.v;
    int first = g.n, last = g.n + t - 1;

    auto with_path = [&](char variant) {
        Orientation o(sub);
        for (int u = 0; u < g.n; ++u) o.out[u] = o_minus_e.out[u];
        if (variant == 'A') {  // x <- p1 -> ... -> pt -> y
            o.out[first] |= bit(x);
            for (int p = first; p < last; ++p) o.out[p] |= bit(p + 1);
            o.out[last] |= bit(y);
        } else if (variant == 'B') {  // x <- p1 <- ... <- pt <- y
            o.out[first] |= bit(x);
            for (int p = first; p < last; ++p) o.out[p + 1] |= bit(p);
            o.out[y] |= bit(last);
        } else {  // 'C', t == 1 only: x -> p1 -> y
            o.out[x] |= bit(first);
            o.out[first] |= bit(y);
        }
        return o;
    };

    for (char variant : {'A', 'B', 'C'}) {
        if (variant == 'C' && t != 1) continue;
        Orientation o = with_path(variant);
        if (is_semi_transitive(o)) return o;
    }
    throw Error("no subdivision path orientation is semi-transitive");
}

bool validate_trace(const TransformTrace& tr) {
    try {
        for (std::size_t i = 0; i < tr.steps.size(); ++i) {
            const TransformStep& step = tr.steps[i];
            if ((step.op.kind == StepKind::input) != (i == 0)) return false;
            if (step.orientation.base != step.graph) return false;
            validate(step.orientation);
            if (!is_semi_transitive(step.orientation)) return false;
            if (i == 0) continue;

            const TransformStep& prev = tr.steps[i - 1];
            Graph expected;
            switch (step.op.kind) {
                case StepKind::delete_edge: expected = delete_edge(prev.graph, step.op.edge); break;
                case StepKind::add_edge: expected = add_edge(prev.graph, step.op.edge.u, step.op.edge.v); break;
                case StepKind::lift_path:
                    expected = lift_path(prev.graph, step.op.path[0], step.op.path[1], step.op.path[2]);
                    break;
                case StepKind::subdivide_edge: expected = subdivide_edge(prev.graph, step.op.edge, step.op.t); break;
                case StepKind::input: return false;
            }
            if (expected != step.graph) return false;

            // Extension property: shared edges keep their direction.
            int shared = std::min(prev.graph.n, step.graph.n);
            for (int u = 0; u < shared; ++u) {
                for (std::uint64_t m = prev.graph.adj[u] & step.graph.adj[u]; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    if (v >= shared) continue;
                    if (prev.orientation.forward(u, v) != step.orientation.forward(u, v)) return false;
                }
            }
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

nlohmann::json trace_to_json(const TransformTrace& tr) {
    nlohmann::json steps = nlohmann::json::array();
    for (const TransformStep& step : tr.steps) {
        nlohmann::json op;
        op["kind"] = to_string(step.op.kind);
        switch (step.op.kind) {
            case StepKind::delete_edge:
            case StepKind::add_edge:
                op["edge"] = {step.op.edge.u, step.op.edge.v};
                break;
            case StepKind::subdivide_edge:
                op["edge"] = {step.op.edge.u, step.op.edge.v};
                op["t"] = step.op.t;
                break;
            case StepKind::lift_path:
                op["path"] = step.op.path;
                break;
            case StepKind::input:
                break;
        }
        if (step.op.kind != StepKind::input) {
            nlohmann::json cert;
            const StepCertificate& c = step.op.cert;
            if (c.sink >= 0) cert["sink"] = c.sink;
            if (c.source >= 0) cert["source"] = c.source;
            if (!c.clique.empty()) cert["clique"] = c.clique;
            if (c.phase) cert["phase"] = to_string(*c.phase);
            if (c.via >= 0) cert["via"] = c.via;
            if (c.level_u >= 0) cert["levels"] = {c.level_u, c.level_via, c.level_w};
            if (c.fallback) cert["fallback"] = true;
            if (c.subdivision_variant) cert["variant"] = std::string(1, c.subdivision_variant);
            op["certificate"] = std::move(cert);
        }
        steps.push_back({{"op", std::move(op)},
                         {"graph6", write_graph6(step.graph)},
                         {"digraph", write_digraph(step.orientation)}});
    }
    return nlohmann::json{{"schema", 1}, {"steps", std::move(steps)}};
}

}  // namespace storient
