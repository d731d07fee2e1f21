#ifndef LSPAN_GENERATORS_HPP
#define LSPAN_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "lspan/graph.hpp"

namespace lspan {

enum class GraphFamily { path, cycle, complete, star, petersen, gnp };

/// Builds a named graph on n vertices. star is a hub plus n-1 leaves,
/// petersen requires n = 10, cycle requires n >= 3. gnp draws each edge
/// independently with probability p and is deterministic for a fixed seed.
/// Invalid parameters raise std::invalid_argument.
Graph generate(GraphFamily family, int n, double p = 0.5, std::uint64_t seed = 0);

const char* family_name(GraphFamily family);
std::optional<GraphFamily> family_from_name(std::string_view name);

} // namespace lspan

#endif
