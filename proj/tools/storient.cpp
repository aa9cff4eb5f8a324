#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "storient/commands.hpp"

namespace {

// Concatenates the given files (or stdin when none) into one record stream.
std::string slurp_inputs(const std::vector<std::string>& files) {
    std::ostringstream buf;
    if (files.empty()) {
        buf << std::cin.rdbuf();
    } else {
        for (const std::string& path : files) {
            std::ifstream in(path);
            if (!in) throw storient::ArgumentError("cannot open input file: " + path);
            buf << in.rdbuf();
            buf << "\n";
        }
    }
    return buf.str();
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw storient::ArgumentError("cannot open output file: " + path);
        stream = &file;
    }
};

}  // namespace

int main(int argc, char** argv) {
    using namespace storient;

    CLI::App app{"Exact tools for semi-transitive orientations of graphs"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_path;
    std::string mode_str = "semi";
    std::string transform_mode_str;
    std::string kind_str = "cartesian";
    std::string g6_a, g6_b, word_str;
    int census_n = 0;
    bool connected_only = false;
    int workers = 1;
    bool check_flag = false;
    bool find_w5 = false;
    int max_order = 5;

    auto* check = app.add_subcommand("check", "Decide orientability per graph6 line (JSON lines)");
    check->add_option("files", files, "graph6 input files (default: stdin)");
    check->add_option("--mode", mode_str, "semi|transitive")->check(CLI::IsMember({"semi", "transitive"}));
    check->add_option("--out", out_path, "output file");

    auto* orient = app.add_subcommand("orient", "Print a found orientation per graph6 line");
    orient->add_option("files", files, "graph6 input files (default: stdin)");
    orient->add_option("--mode", mode_str, "semi|transitive")->check(CLI::IsMember({"semi", "transitive"}));
    orient->add_option("--out", out_path, "output file");

    auto* transform = app.add_subcommand("transform", "Run a certified transformation pipeline (JSON)");
    transform->add_option("files", files, "graph6 input file (default: stdin)");
    transform->add_option("--mode", transform_mode_str, "to-empty|to-complete|to-matching")
        ->required()
        ->check(CLI::IsMember({"to-empty", "to-complete", "to-matching"}));
    transform->add_option("--out", out_path, "output file");

    auto* census = app.add_subcommand("census", "Exhaustive orientability census (JSON report)");
    census->add_option("--n", census_n, "vertex count (<= 7)")->required();
    census->add_flag("--connected-only", connected_only, "skip disconnected graphs");
    census->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
    census->add_option("--out", out_path, "output file");

    auto* productc = app.add_subcommand("product", "Graph products");
    productc->add_option("--kind", kind_str, "cartesian|tensor|lexicographic|strong")
        ->check(CLI::IsMember({"cartesian", "tensor", "lexicographic", "strong"}));
    productc->add_option("g", g6_a, "first factor, graph6");
    productc->add_option("h", g6_b, "second factor, graph6");
    productc->add_flag("--check", check_flag, "attach a solver verdict (JSON)");
    productc->add_flag("--find-w5", find_w5, "search factor pairs whose product contains induced W5");
    productc->add_option("--max-order", max_order, "factor order cap for --find-w5");
    productc->add_option("--out", out_path, "output file");

    auto* blowup = app.add_subcommand("blowup", "Add an edge for every length-3 path (per graph6 line)");
    blowup->add_option("files", files, "graph6 input files (default: stdin)");
    blowup->add_flag("--check", check_flag, "attach odd girth and a solver verdict (JSON)");
    blowup->add_option("--out", out_path, "output file");

    auto* wordc = app.add_subcommand("word", "Alternation graph of a word");
    wordc->add_option("word", word_str, "the word")->required();
    wordc->add_flag("--check", check_flag, "attach a solver verdict (JSON)");
    wordc->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        SolveOptions solve = solve_options_from_env();
        OutputTarget out;
        out.open(out_path);
        SolveMode mode = mode_str == "transitive" ? SolveMode::transitive : SolveMode::semi_transitive;

        if (*check || *orient || *transform || *blowup) {
            std::istringstream in(slurp_inputs(files));
            if (*check) return cmd_check(in, *out.stream, mode, solve);
            if (*orient) return cmd_orient(in, *out.stream, mode, solve);
            if (*blowup) return cmd_blowup(in, *out.stream, check_flag, solve);
            TransformMode tmode = transform_mode_str == "to-empty"      ? TransformMode::to_empty
                                  : transform_mode_str == "to-complete" ? TransformMode::to_complete
                                                                        : TransformMode::to_matching;
            return cmd_transform(in, *out.stream, tmode, solve);
        }
        if (*census) {
            CensusOptions opts;
            opts.n = census_n;
            opts.connected_only = connected_only;
            opts.workers = workers;
            opts.solve = solve;
            return cmd_census(*out.stream, opts);
        }
        if (*productc) {
            ProductKind kind = *product_kind_from_string(kind_str);
            if (find_w5) return cmd_product_find_w5(*out.stream, kind, max_order);
            if (g6_a.empty() || g6_b.empty()) {
                std::cerr << "product requires two graph6 arguments (or --find-w5)\n";
                return 2;
            }
            return cmd_product(*out.stream, g6_a, g6_b, kind, check_flag, solve);
        }
        if (*wordc) return cmd_word(*out.stream, word_str, check_flag, solve);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
