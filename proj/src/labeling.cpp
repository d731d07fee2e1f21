#include "lspan/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "lspan/graph_io.hpp"

namespace lspan {

PartialLabeling PartialLabeling::constant(const VertexSet& domain, int label) {
    PartialLabeling c;
    for (int v : domain) c.assign(v, label);
    return c;
}

void PartialLabeling::assign(int v, int label) {
    if (label < 0) throw std::invalid_argument("labels must be nonnegative");
    if (v < 0 || v >= VertexSet::capacity)
        throw std::invalid_argument("vertex out of representable range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair<int, int>{v, -1});
    if (it != entries_.end() && it->first == v)
        it->second = label;
    else
        entries_.insert(it, {v, label});
}

bool PartialLabeling::contains(int v) const { return label_of(v).has_value(); }

std::optional<int> PartialLabeling::label_of(int v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair<int, int>{v, -1});
    if (it != entries_.end() && it->first == v) return it->second;
    return std::nullopt;
}

VertexSet PartialLabeling::domain() const {
    VertexSet d;
    for (const auto& [v, label] : entries_) d.add(v);
    return d;
}

int span_of(const PartialLabeling& c) {
    if (c.empty()) throw std::invalid_argument("span of an empty labeling is undefined");
    int best = 0;
    for (const auto& [v, label] : c.entries()) best = std::max(best, label);
    return best;
}

PartialLabeling shift(const PartialLabeling& c, int delta) {
    PartialLabeling out;
    for (const auto& [v, label] : c.entries()) {
        if (label + delta < 0) throw std::invalid_argument("shift would produce a negative label");
        out.assign(v, label + delta);
    }
    return out;
}

PartialLabeling reverse(const PartialLabeling& c, int k) {
    PartialLabeling out;
    for (const auto& [v, label] : c.entries()) {
        if (label > k - 1) throw std::invalid_argument("label exceeds k - 1");
        out.assign(v, (k - 1) - label);
    }
    return out;
}

bool is_valid_labeling(const Instance& inst, const PartialLabeling& c, int k) {
    if (k < 1) return false;
    if (!inst.y.is_subset_of(inst.graph.vertices())) return false;
    if (c.domain() != inst.y) return false;

    const auto& entries = c.entries();
    for (const auto& [v, label] : entries) {
        if (label > k - 1) return false;
        if (label == 0 && inst.z.contains(v)) return false;
        if (label == k - 1 && inst.m.contains(v)) return false;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto [u, lu] = entries[i];
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto [v, lv] = entries[j];
            if (inst.graph.has_edge(u, v)) {
                if (std::abs(lu - lv) < 2) return false;
            } else if (inst.graph.square_neighbors(u).contains(v)) {
                if (lu == lv) return false;
            }
        }
    }
    return true;
}

std::string serialize_labeling(const PartialLabeling& c) {
    std::ostringstream out;
    for (const auto& [v, label] : c.entries()) out << v << ' ' << label << '\n';
    return out.str();
}

PartialLabeling parse_labeling(std::string_view text) {
    PartialLabeling c;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        ++number;
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            if (eol == std::string_view::npos) break;
            continue;
        }
        std::istringstream in(line);
        long long v = 0, label = 0;
        std::string rest;
        if (!(in >> v >> label) || (in >> rest))
            throw ParseError(number, "malformed labeling line, expected \"v label\"");
        if (v < 0 || v >= VertexSet::capacity)
            throw ParseError(number, "vertex index out of range");
        if (label < 0) throw ParseError(number, "negative label");
        if (c.contains(static_cast<int>(v)))
            throw ParseError(number, "vertex labeled twice");
        c.assign(static_cast<int>(v), static_cast<int>(label));
        if (eol == std::string_view::npos) break;
    }
    return c;
}

} // namespace lspan
