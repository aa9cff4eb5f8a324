#include "storient/commands.hpp"

#include <cstdlib>

#include <json.hpp>

#include "storient/graph6.hpp"

namespace storient {

using nlohmann::json;

SolveOptions solve_options_from_env() {
    SolveOptions opts;
    if (const char* env = std::getenv("STORIENT_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) opts.node_budget = v;
    }
    return opts;
}

namespace {

const char* verdict_key(SolveMode mode) {
    return mode == SolveMode::semi_transitive ? "st_orientable" : "transitively_orientable";
}

json verdict_record(const SolveVerdict& v, SolveMode mode) {
    json rec;
    rec["ok"] = true;
    switch (v.status) {
        case SolveVerdict::Status::orientable:
            rec[verdict_key(mode)] = true;
            rec["witness"] = write_digraph(*v.orientation);
            break;
        case SolveVerdict::Status::filtered:
            rec[verdict_key(mode)] = false;
            rec["filtered_vertex"] = v.filtered_vertex;
            break;
        case SolveVerdict::Status::not_orientable:
            rec[verdict_key(mode)] = false;
            break;
    }
    rec["nodes"] = v.stats.nodes;
    return rec;
}

json error_record(const std::exception& e) {
    json rec;
    rec["ok"] = false;
    rec["error"] = e.what();
    if (auto* fe = dynamic_cast<const FormatError*>(&e)) rec["byte_offset"] = fe->byte_offset;
    return rec;
}

}  // namespace

int cmd_check(std::istream& in, std::ostream& out, SolveMode mode, const SolveOptions& opts) {
    int exit_code = 0;
    std::string line;
    std::uint64_t index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec;
        try {
            Graph g = parse_graph6(line);
            rec = verdict_record(decide(g, mode, opts), mode);
        } catch (const std::exception& e) {
            rec = error_record(e);
            exit_code = 1;
        }
        rec["schema"] = 1;
        rec["index"] = index++;
        rec["input"] = line;
        out << rec.dump() << "\n";
    }
    return exit_code;
}

int cmd_orient(std::istream& in, std::ostream& out, SolveMode mode, const SolveOptions& opts) {
    int exit_code = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            Graph g = parse_graph6(line);
            SolveVerdict v = decide(g, mode, opts);
            if (v.status == SolveVerdict::Status::orientable)
                out << write_digraph(*v.orientation);
            else if (v.status == SolveVerdict::Status::filtered)
                out << "not-orientable filtered_vertex=" << v.filtered_vertex << "\n";
            else
                out << "not-orientable\n";
        } catch (const std::exception& e) {
            out << "error: " << e.what() << "\n";
            exit_code = 1;
        }
    }
    return exit_code;
}

int cmd_transform(std::istream& in, std::ostream& out, TransformMode mode, const SolveOptions& opts) {
    std::string line;
    while (std::getline(in, line) && line.empty()) {
    }
    json rec;
    try {
        if (line.empty()) throw FormatError("no graph6 input", 0);
        Graph g = parse_graph6(line);
        SolveVerdict v = decide(g, SolveMode::semi_transitive, opts);
        if (v.status != SolveVerdict::Status::orientable) {
            json err{{"schema", 1}, {"ok", false}, {"error", "input is not semi-transitively orientable"}};
            if (v.status == SolveVerdict::Status::filtered) err["filtered_vertex"] = v.filtered_vertex;
            out << err.dump(2) << "\n";
            return 1;
        }
        TransformTrace tr;
        switch (mode) {
            case TransformMode::to_empty: tr = delete_to_empty(g, *v.orientation); break;
            case TransformMode::to_complete: tr = add_to_complete(g, *v.orientation); break;
            case TransformMode::to_matching: tr = lift_to_matching(g, *v.orientation); break;
        }
        if (!validate_trace(tr)) {
            out << json{{"schema", 1}, {"ok", false}, {"error", "trace failed validation"}}.dump(2) << "\n";
            return 1;
        }
        json doc = trace_to_json(tr);
        doc["ok"] = true;
        out << doc.dump(2) << "\n";
        return 0;
    } catch (const std::exception& e) {
        rec = error_record(e);
        rec["schema"] = 1;
        out << rec.dump(2) << "\n";
        return 1;
    }
}

int cmd_census(std::ostream& out, const CensusOptions& opts) {
    out << census_to_json(run_census(opts)).dump(2) << "\n";
    return 0;
}

namespace {

int emit_graph(std::ostream& out, const Graph& g, bool check, const SolveOptions& opts, json extra = {}) {
    if (!check) {
        out << write_graph6(g) << "\n";
        return 0;
    }
    json rec{{"schema", 1}, {"graph6", write_graph6(g)}};
    for (auto& [k, v] : extra.items()) rec[k] = v;
    try {
        rec.update(verdict_record(decide(g, SolveMode::semi_transitive, opts), SolveMode::semi_transitive));
    } catch (const std::exception& e) {
        rec.update(error_record(e));
        out << rec.dump() << "\n";
        return 1;
    }
    out << rec.dump() << "\n";
    return 0;
}

}  // namespace

int cmd_product(std::ostream& out, const std::string& g6_a, const std::string& g6_b, ProductKind kind,
                bool check, const SolveOptions& opts) {
    try {
        Graph a = parse_graph6(g6_a);
        Graph b = parse_graph6(g6_b);
        return emit_graph(out, product(a, b, kind), check, opts, json{{"kind", to_string(kind)}});
    } catch (const std::exception& e) {
        out << error_record(e).dump() << "\n";
        return 1;
    }
}

int cmd_product_find_w5(std::ostream& out, ProductKind kind, int max_order) {
    json rec{{"schema", 1}, {"kind", to_string(kind)}, {"max_order", max_order}};
    auto hit = find_w5_in_product(kind, max_order);
    rec["found"] = hit.has_value();
    if (hit) {
        rec["g"] = write_graph6(hit->g);
        rec["h"] = write_graph6(hit->h);
        rec["product"] = write_graph6(hit->prod);
        rec["embedding"] = hit->embedding.map;
    }
    out << rec.dump(2) << "\n";
    return 0;
}

int cmd_blowup(std::istream& in, std::ostream& out, bool check, const SolveOptions& opts) {
    int exit_code = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            Graph g = parse_graph6(line);
            Graph blown = odd_girth_blowup(g);
            json extra;
            auto og_in = odd_girth(g);
            auto og_out = odd_girth(blown);
            extra["odd_girth_input"] = og_in ? json(*og_in) : json(nullptr);
            extra["odd_girth"] = og_out ? json(*og_out) : json(nullptr);
            if (emit_graph(out, blown, check, opts, extra) != 0) exit_code = 1;
        } catch (const std::exception& e) {
            out << error_record(e).dump() << "\n";
            exit_code = 1;
        }
    }
    return exit_code;
}

int cmd_word(std::ostream& out, const std::string& word, bool check, const SolveOptions& opts) {
    try {
        Word w{word};
        std::vector<char> alphabet = word_alphabet(w);
        return emit_graph(out, alternation_graph(w), check, opts,
                          json{{"alphabet", std::string(alphabet.begin(), alphabet.end())}});
    } catch (const std::exception& e) {
        out << error_record(e).dump() << "\n";
        return 1;
    }
}

}  // namespace storient
