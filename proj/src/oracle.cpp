#include "lspan/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace lspan {

namespace {

void validate_instance(const Instance& inst) {
    const VertexSet all = inst.graph.vertices();
    if (!inst.y.is_subset_of(all) || !inst.z.is_subset_of(all) || !inst.m.is_subset_of(all))
        throw std::invalid_argument("instance sets must be subsets of the vertex set");
}

// Fail-first ordering: highest square degree first, index breaks ties.
// Order affects speed only, never the answer.
std::vector<int> backtrack_order(const Graph& g, const VertexSet& y) {
    std::vector<int> order = y.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.square_neighbors(a).size() > g.square_neighbors(b).size();
    });
    return order;
}

struct Backtracker {
    const Graph& g;
    const VertexSet& z;
    const VertexSet& m;
    int k;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> order;
    std::vector<int> labels;

    bool feasible(std::size_t pos, int label) const {
        const int v = order[pos];
        if (label == 0 && z.contains(v)) return false;
        if (label == k - 1 && m.contains(v)) return false;
        for (std::size_t j = 0; j < pos; ++j) {
            const int u = order[j];
            if (g.has_edge(u, v)) {
                if (std::abs(labels[j] - label) < 2) return false;
            } else if (g.square_neighbors(u).contains(v)) {
                if (labels[j] == label) return false;
            }
        }
        return true;
    }

    bool search(std::size_t pos) {
        if (pos == order.size()) return true;
        for (int label = 0; label < k; ++label) {
            if (++nodes > node_limit) {
                exhausted = true;
                return false;
            }
            if (!feasible(pos, label)) continue;
            labels[pos] = label;
            if (search(pos + 1)) return true;
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

OracleOutcome oracle_decide(const Instance& inst, int k, const OracleBudget& budget) {
    validate_instance(inst);
    if (k < 1) throw std::invalid_argument("oracle_decide needs k >= 1");
    if (inst.y.empty()) return OracleOutcome::yes;

    Backtracker bt{inst.graph,
                   inst.z,
                   inst.m,
                   k,
                   budget.node_limit.value_or(~std::uint64_t{0}),
                   0,
                   false,
                   backtrack_order(inst.graph, inst.y),
                   {}};
    bt.labels.assign(bt.order.size(), -1);
    if (bt.search(0)) return OracleOutcome::yes;
    return bt.exhausted ? OracleOutcome::unknown : OracleOutcome::no;
}

std::optional<int> oracle_lambda(const Instance& inst, const OracleBudget& budget) {
    validate_instance(inst);
    if (inst.y.empty()) return 0;

    // A clique on y needs 2(|y|-1)+1 labels; the boundary exclusions add
    // at most two more. The scan must stay linear in k, not bisect.
    const int k_bound = 2 * inst.y.size() + 2;
    for (int k = 1; k <= k_bound; ++k) {
        if (budget.max_k && k > *budget.max_k) return std::nullopt;
        switch (oracle_decide(inst, k, budget)) {
        case OracleOutcome::yes: return k;
        case OracleOutcome::unknown: return std::nullopt;
        case OracleOutcome::no: break;
        }
    }
    throw std::logic_error("no labeling within the 2|Y| + 2 bound");
}

std::optional<int> oracle_span(const Graph& g, const OracleBudget& budget) {
    const auto lambda = oracle_lambda(Instance{g, g.vertices(), {}, {}}, budget);
    if (!lambda) return std::nullopt;
    return *lambda - 1;
}

} // namespace lspan
