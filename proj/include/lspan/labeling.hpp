#ifndef LSPAN_LABELING_HPP
#define LSPAN_LABELING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

/// Assignment of nonnegative integer labels to a subset of vertices. The
/// domain is exactly the set of assigned vertices; there are no sentinels.
class PartialLabeling {
public:
    PartialLabeling() = default;

    static PartialLabeling constant(const VertexSet& domain, int label);

    /// Inserts or overwrites; labels must be >= 0.
    void assign(int v, int label);

    bool contains(int v) const;
    std::optional<int> label_of(int v) const;

    VertexSet domain() const;
    bool empty() const { return entries_.empty(); }
    int size() const { return static_cast<int>(entries_.size()); }

    /// (vertex, label) pairs sorted by vertex.
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }

    friend bool operator==(const PartialLabeling& a, const PartialLabeling& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::pair<int, int>> entries_;
};

/// Largest assigned label. Throws std::invalid_argument on an empty
/// labeling; callers must branch on the empty case first.
int span_of(const PartialLabeling& c);

/// Adds delta to every label; throws if any label would become negative.
PartialLabeling shift(const PartialLabeling& c, int delta);

/// Maps every label v to (k-1) - v; throws if a label exceeds k-1.
PartialLabeling reverse(const PartialLabeling& c, int k);

/// One labeling problem: label the vertices of y, with label 0 forbidden
/// on z and the top label forbidden on m. z and m need not be subsets of
/// y. Distance constraints are always measured in the full graph.
struct Instance {
    const Graph& graph;
    VertexSet y;
    VertexSet z;
    VertexSet m;
};

/// True iff c uses exactly the domain inst.y with labels in {0..k-1},
/// avoids label 0 on inst.z and label k-1 on inst.m, and satisfies the
/// distance constraints: labels of adjacent vertices differ by at least 2
/// and labels of vertices at distance 2 differ. Structurally invalid
/// input yields false, never an exception.
bool is_valid_labeling(const Instance& inst, const PartialLabeling& c, int k);

/// One line per vertex, "v label", sorted by vertex index.
std::string serialize_labeling(const PartialLabeling& c);

/// Inverse of serialize_labeling; '#' comment lines allowed. Raises
/// ParseError (see graph_io.hpp) on malformed or duplicate lines.
PartialLabeling parse_labeling(std::string_view text);

} // namespace lspan

#endif
