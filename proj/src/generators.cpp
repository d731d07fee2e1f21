#include "lspan/generators.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lspan {

namespace {

// Uniform double in [0, 1) from the top 53 bits; mt19937_64 output is
// specified by the standard, so gnp is reproducible across platforms.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph build_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph build_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph build_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph build_petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, edges);
}

Graph build_gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_unit(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

Graph generate(GraphFamily family, int n, double p, std::uint64_t seed) {
    if (family == GraphFamily::petersen) {
        if (n != 10) throw std::invalid_argument("petersen is fixed at n = 10");
        return build_petersen();
    }
    if (n < 1) throw std::invalid_argument("generator needs n >= 1");
    switch (family) {
    case GraphFamily::path: return build_path(n);
    case GraphFamily::cycle: return build_cycle(n);
    case GraphFamily::complete: return build_complete(n);
    case GraphFamily::star: return build_star(n);
    case GraphFamily::gnp: return build_gnp(n, p, seed);
    default: throw std::invalid_argument("unknown graph family");
    }
}

const char* family_name(GraphFamily family) {
    switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::star: return "star";
    case GraphFamily::petersen: return "petersen";
    case GraphFamily::gnp: return "gnp";
    }
    return "?";
}

std::optional<GraphFamily> family_from_name(std::string_view name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "complete") return GraphFamily::complete;
    if (name == "star") return GraphFamily::star;
    if (name == "petersen") return GraphFamily::petersen;
    if (name == "gnp") return GraphFamily::gnp;
    return std::nullopt;
}

} // namespace lspan
