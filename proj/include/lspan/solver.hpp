#ifndef LSPAN_SOLVER_HPP
#define LSPAN_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lspan/labeling.hpp"

namespace lspan {

/// Counters describing one solver run. peak_aux_words tracks the maximum
/// auxiliary state (in 64-bit words) simultaneously live along the
/// recursion path; it is how the tests pin down that the search keeps
/// polynomial space and no subset-indexed tables.
struct RunStats {
    std::uint64_t nodes = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t partitions = 0;
    std::uint64_t base_case_labelings = 0;
    std::uint64_t peak_aux_words = 0;

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct SolverOptions {
    /// Abandon a partition as soon as it provably cannot beat the best
    /// value found so far, and pass the bound down the recursion. Off by
    /// default; results are identical either way (tested).
    bool prune = false;

    /// Cooperative deadline, checked between partition iterations and
    /// periodically inside the base-case sweep.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Raised when the deadline expires; carries the stats gathered so far.
class SolverTimeout : public std::runtime_error {
public:
    explicit SolverTimeout(RunStats s)
        : std::runtime_error("solver deadline exceeded"), stats(s) {}

    RunStats stats;
};

struct SpanResult {
    int value = 0;
    RunStats stats;
    std::optional<PartialLabeling> labeling;
};

/// Partition of a working set Y into (A, X, B) where X is a nonempty
/// 2-packing and |A|, |B| <= floor(|Y| / 2). X separates A from B in the
/// label order, which is what lets the two sides be solved independently.
struct CorrectPartition {
    VertexSet a;
    VertexSet x;
    VertexSet b;
};

/// Number of labels consumed by the separator X: 1 normally, 2 when an
/// empty side would otherwise force a forbidden boundary label onto X.
/// Both sides empty is unreachable past the base case and raises
/// std::logic_error.
int kx_value(bool a_empty, bool b_empty, bool x_meets_z, bool x_meets_m);

/// Smallest k in {1, 2, 3} admitting a labeling of inst.y, found by
/// exhaustive search over candidate label functions; 0 for an empty y;
/// nullopt when four or more labels are needed.
std::optional<int> base_case_span(const Instance& inst);

/// Visits every correct partition of y exactly once, in a deterministic
/// order. X is enumerated first (as a 2-packing), then the rest of y is
/// split into (A, B) under the size caps. The visitor returns false to
/// stop early.
template <class Visitor>
void for_each_correct_partition(const Graph& g, const VertexSet& y, Visitor&& visit) {
    const std::vector<int> elems = y.to_vector();
    const int cap = static_cast<int>(elems.size()) / 2;

    struct Enumerator {
        const Graph& g;
        const VertexSet& y;
        int cap;
        const std::vector<int>& elems;
        Visitor& visit;
        VertexSet x;

        bool split(const std::vector<int>& rest, std::size_t i, VertexSet a, int a_size,
                   VertexSet b, int b_size) {
            if (a_size > cap || b_size > cap) return true;
            if (i == rest.size()) return visit(CorrectPartition{a, x, b});
            VertexSet a2 = a;
            a2.add(rest[i]);
            if (!split(rest, i + 1, a2, a_size + 1, b, b_size)) return false;
            VertexSet b2 = b;
            b2.add(rest[i]);
            return split(rest, i + 1, a, a_size, b2, b_size + 1);
        }

        bool emit_current() {
            const VertexSet rest_set = y - x;
            return split(rest_set.to_vector(), 0, VertexSet{}, 0, VertexSet{}, 0);
        }

        // Grows x over elems[from..), skipping vertices within distance 2
        // of anything already chosen, so exactly the 2-packings appear.
        bool extend(std::size_t from, VertexSet blocked) {
            for (std::size_t i = from; i < elems.size(); ++i) {
                const int v = elems[i];
                if (blocked.contains(v)) continue;
                x.add(v);
                if (!emit_current()) return false;
                if (!extend(i + 1, blocked | g.square_neighbors(v))) return false;
                x.remove(v);
            }
            return true;
        }
    };

    Enumerator e{g, y, cap, elems, visit, VertexSet{}};
    e.extend(0, VertexSet{});
}

std::vector<CorrectPartition> collect_correct_partitions(const Graph& g, const VertexSet& y);

/// Exact minimum number of labels for inst, by base-case search plus
/// divide and conquer over correct partitions. No memoization: auxiliary
/// state is bounded per recursion level (see RunStats::peak_aux_words).
SpanResult find_lambda(const Instance& inst, const SolverOptions& opts = {});

/// Classical span: find_lambda on the whole vertex set with empty
/// boundary sets, minus one. The empty graph yields -1 (degenerate,
/// documented convention).
SpanResult lambda_span(const Graph& g, const SolverOptions& opts = {});

/// Same value as find_lambda plus a witness labeling, rebuilt by
/// re-running the recursion and composing the sub-labelings of the argmin
/// partition at every node.
SpanResult find_labeling(const Instance& inst, const SolverOptions& opts = {});

} // namespace lspan

#endif
