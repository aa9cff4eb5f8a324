#include "storient/census.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "storient/graph6.hpp"

namespace storient {

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int pair = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++pair)
            if ((mask >> pair) & 1u) g.set_edge(u, v);
    return g;
}

struct WorkerTally {
    std::uint64_t examined = 0;
    std::uint64_t failures = 0;
    std::vector<CanonicalCode> codes;
};

}  // namespace

CensusReport run_census(const CensusOptions& opts) {
    if (opts.n < 0 || opts.n > 7)
        throw UnsupportedSizeError("census supports n <= 7, got " + std::to_string(opts.n));
    auto start = std::chrono::steady_clock::now();

    const int n = opts.n;
    const int npairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << npairs;
    const int workers = std::max(1, opts.workers);

    std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
    auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
        WorkerTally& tally = tallies[static_cast<std::size_t>(w)];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (opts.connected_only && !is_connected(g)) continue;
            ++tally.examined;
            SolveVerdict v = decide(g, SolveMode::semi_transitive, opts.solve);
            if (v.status == SolveVerdict::Status::orientable) continue;
            ++tally.failures;
            tally.codes.push_back(canonical_form(g));
        }
    };

    if (workers == 1) {
        run_range(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = std::min(total, chunk * static_cast<std::uint64_t>(w));
            std::uint64_t hi = std::min(total, lo + chunk);
            threads.emplace_back(run_range, w, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    CensusReport report;
    report.n = n;
    report.connected_only = opts.connected_only;
    report.total_labeled = total;
    std::vector<CanonicalCode> codes;
    for (const WorkerTally& tally : tallies) {
        report.examined += tally.examined;
        report.non_orientable_labeled += tally.failures;
        codes.insert(codes.end(), tally.codes.begin(), tally.codes.end());
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    for (const CanonicalCode& code : codes)
        report.classes.push_back(CensusClass{code, write_graph6(graph_from_code(code))});

    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

nlohmann::json census_to_json(const CensusReport& report) {
    nlohmann::json classes = nlohmann::json::array();
    for (const CensusClass& c : report.classes)
        classes.push_back({{"code", c.code.hex()}, {"graph6", c.graph6_rep}});
    return nlohmann::json{{"schema", 1},
                          {"n", report.n},
                          {"connected_only", report.connected_only},
                          {"total_labeled", report.total_labeled},
                          {"examined", report.examined},
                          {"non_orientable_labeled", report.non_orientable_labeled},
                          {"non_orientable_iso_classes", std::move(classes)},
                          {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace storient
