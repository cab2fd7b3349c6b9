#include "locdom/graph6.hpp"

#include <string>

#include "locdom/errors.hpp"

namespace locdom {

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty line", 0);
    for (std::size_t i = 0; i < line.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", i);
    }
    if (line[0] == '~') throw ParseError("graph6: long form (n > 62) is not supported", 0);
    const int n = line[0] - 63;
    if (n == 0) throw ParseError("graph6: graph with no vertices", 0);
    if (n > vertex_limit())
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds the vertex limit", 0);

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t want = 1 + (bit_count + 5) / 6;
    if (line.size() != want)
        throw ParseError("graph6: expected " + std::to_string(want) + " bytes for order " + std::to_string(n) +
                             ", got " + std::to_string(line.size()),
                         std::min(line.size(), want));

    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    std::size_t k = 0;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = line[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
        }
    if (k % 6 != 0) {
        const int last = line.back() - 63;
        const int pad_mask = (1 << (6 - k % 6)) - 1;
        if (last & pad_mask) throw ParseError("graph6: nonzero padding bits", line.size() - 1);
    }
    return Graph(std::move(adj));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw UnsupportedError("graph6 short form holds at most 62 vertices, got " + std::to_string(n));
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = filled = 0;
            }
        }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

std::optional<Graph6Reader::Entry> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            if (line.empty()) continue;
        }
        try {
            Graph g = parse_graph6(line);
            return Entry{std::move(g), std::move(line), line_number_};
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_number_) + ": " + e.what(), e.offset());
        }
    }
    return std::nullopt;
}

}  // namespace locdom
