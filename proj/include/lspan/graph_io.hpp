#ifndef LSPAN_GRAPH_IO_HPP
#define LSPAN_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "lspan/graph.hpp"

namespace lspan {

enum class GraphFormat { edgelist, dimacs };

/// Input rejected; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Parses a graph from text.
///
/// edgelist: header "n m", then m lines "u v" with 0-based endpoints;
/// '#' lines and blank lines are ignored.
/// dimacs: "c" comments, one "p edge n m" line, then m lines "e u v"
/// with 1-based endpoints (mapped to 0-based).
///
/// Self-loops, duplicate edges, out-of-range endpoints and malformed or
/// surplus lines raise ParseError.
Graph parse_graph(std::string_view text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace lspan

#endif
