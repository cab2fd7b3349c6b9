#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

/// Largest order the short graph6 form can carry.
inline constexpr int kGraph6MaxOrder = 62;

/// One graph6 line, short form, no header. Throws ParseError with the byte
/// offset of the problem.
Graph parse_graph6(std::string_view line);

/// Minimal short-form encoding. Throws UnsupportedError above order 62.
std::string emit_graph6(const Graph& g);

/// Reads a graph6 file line by line. Skips a leading ">>graph6<<" header and
/// blank lines.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}

    struct Entry {
        Graph graph;
        std::string line;
        std::size_t line_number;
    };

    /// nullopt at end of input; ParseError (message carries the line number) on a bad line.
    std::optional<Entry> next();

private:
    std::istream& in_;
    std::size_t line_number_ = 0;
};

}  // namespace locdom
