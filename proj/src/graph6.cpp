#include "storient/graph6.hpp"

namespace storient {

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw FormatError("empty graph6 record", 0);
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) throw FormatError("long-form graph6 is not supported", 0);
    if (first < 63 || first > 125)
        throw FormatError("vertex-count byte out of range", 0);
    int n = first - 63;
    int npairs = n * (n - 1) / 2;
    std::size_t need = 1 + static_cast<std::size_t>((npairs + 5) / 6);
    if (line.size() < need) throw FormatError("truncated graph6 record", line.size());
    if (line.size() > need) throw FormatError("trailing garbage after graph6 record", need);

    Graph g(n);
    int u = 0, v = 1;  // column-major upper-triangle cursor
    int pair = 0;
    for (std::size_t i = 1; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw FormatError("data byte out of range", i);
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++pair) {
            int bit = (group >> b) & 1;
            if (pair >= npairs) {
                if (bit) throw FormatError("nonzero padding bits", i);
                continue;
            }
            if (bit) g.set_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    if (g.n > kMaxVertices) throw UnsupportedSizeError("graph6 short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int group = 0;
    int filled = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

}  // namespace storient
