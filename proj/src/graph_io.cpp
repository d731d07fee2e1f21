#include "lspan/graph_io.hpp"

#include <memory>
#include <sstream>
#include <vector>

namespace lspan {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

// Splits into lines, dropping blank ones but keeping original numbering.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        ++number;
        std::string line(text.substr(pos, end - pos));
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            out.push_back({number, std::move(line)});
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

bool read_two_ints(std::istringstream& in, long long& a, long long& b) {
    if (!(in >> a >> b)) return false;
    std::string rest;
    return !(in >> rest);
}

class EdgeAccumulator {
public:
    EdgeAccumulator(int n, int header_line) : n_(n) {
        if (n < 0) throw ParseError(header_line, "negative vertex count");
        if (n > VertexSet::capacity)
            throw ParseError(header_line, "vertex count exceeds configured maximum " +
                                              std::to_string(VertexSet::capacity));
        seen_.assign(static_cast<std::size_t>(n), VertexSet{});
    }

    void add(long long u, long long v, int line) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ParseError(line, "vertex index out of range");
        const int a = static_cast<int>(u), b = static_cast<int>(v);
        if (a == b) throw ParseError(line, "self-loop");
        if (seen_[static_cast<std::size_t>(a)].contains(b))
            throw ParseError(line, "duplicate edge");
        seen_[static_cast<std::size_t>(a)].add(b);
        seen_[static_cast<std::size_t>(b)].add(a);
        edges_.emplace_back(a, b);
    }

    Graph finish() const { return Graph::from_edges(n_, edges_); }

private:
    int n_;
    std::vector<VertexSet> seen_;
    std::vector<std::pair<int, int>> edges_;
};

Graph parse_edgelist(const std::vector<Line>& lines) {
    std::size_t i = 0;
    auto is_comment = [](const Line& l) {
        return l.text[l.text.find_first_not_of(" \t")] == '#';
    };
    while (i < lines.size() && is_comment(lines[i])) ++i;
    if (i == lines.size()) throw ParseError(1, "missing header");

    std::istringstream header(lines[i].text);
    long long n = 0, m = 0;
    if (!read_two_ints(header, n, m) || m < 0)
        throw ParseError(lines[i].number, "malformed header, expected \"n m\"");
    EdgeAccumulator acc(static_cast<int>(n), lines[i].number);
    ++i;

    long long edges_read = 0;
    for (; i < lines.size(); ++i) {
        if (is_comment(lines[i])) continue;
        if (edges_read == m) throw ParseError(lines[i].number, "more edges than declared");
        std::istringstream in(lines[i].text);
        long long u = 0, v = 0;
        if (!read_two_ints(in, u, v))
            throw ParseError(lines[i].number, "malformed edge, expected \"u v\"");
        acc.add(u, v, lines[i].number);
        ++edges_read;
    }
    if (edges_read != m)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges_read));
    return acc.finish();
}

Graph parse_dimacs(const std::vector<Line>& lines) {
    bool got_header = false;
    long long m = 0, edges_read = 0;
    int last_line = 1;
    std::unique_ptr<EdgeAccumulator> acc;

    for (const Line& l : lines) {
        last_line = l.number;
        std::istringstream in(l.text);
        std::string kind;
        in >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (got_header) throw ParseError(l.number, "duplicate problem line");
            std::string tag;
            long long n = 0;
            in >> tag >> n >> m;
            std::string rest;
            if (!in || tag != "edge" || m < 0 || (in >> rest))
                throw ParseError(l.number, "malformed problem line, expected \"p edge n m\"");
            acc = std::make_unique<EdgeAccumulator>(static_cast<int>(n), l.number);
            got_header = true;
        } else if (kind == "e") {
            if (!got_header) throw ParseError(l.number, "edge before problem line");
            long long u = 0, v = 0;
            if (!read_two_ints(in, u, v))
                throw ParseError(l.number, "malformed edge line, expected \"e u v\"");
            if (edges_read == m) throw ParseError(l.number, "more edges than declared");
            acc->add(u - 1, v - 1, l.number);
            ++edges_read;
        } else {
            throw ParseError(l.number, "unrecognized line type \"" + kind + "\"");
        }
    }
    if (!got_header) throw ParseError(last_line, "missing problem line");
    if (edges_read != m)
        throw ParseError(last_line, "declared " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges_read));
    return acc->finish();
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    const std::vector<Line> lines = significant_lines(text);
    return format == GraphFormat::edgelist ? parse_edgelist(lines) : parse_dimacs(lines);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    const auto edges = g.edges();
    if (format == GraphFormat::edgelist) {
        out << g.vertex_count() << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

} // namespace lspan
