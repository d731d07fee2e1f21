#ifndef LSPAN_ORACLE_HPP
#define LSPAN_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "lspan/labeling.hpp"

namespace lspan {

/// Resource caps for the brute-force reference. Exhausting a budget is a
/// distinct "unknown" outcome, never a wrong answer.
struct OracleBudget {
    std::optional<int> max_k;                   // largest label count tried
    std::optional<std::uint64_t> node_limit;    // backtracking nodes per decision
};

enum class OracleOutcome { yes, no, unknown };

/// Does a labeling of inst.y with k labels exist? Backtracking over the
/// vertices of y in a fixed order (descending square degree, ties by
/// index), pruning on the distance and boundary-label constraints.
OracleOutcome oracle_decide(const Instance& inst, int k, const OracleBudget& budget = {});

/// Smallest k for which oracle_decide says yes, scanning k upward one
/// step at a time (0 for an empty y). nullopt when the budget runs out.
std::optional<int> oracle_lambda(const Instance& inst, const OracleBudget& budget = {});

/// Classical span via oracle_lambda on the whole vertex set; the empty
/// graph yields -1.
std::optional<int> oracle_span(const Graph& g, const OracleBudget& budget = {});

} // namespace lspan

#endif
