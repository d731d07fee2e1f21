#include "lspan/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>

namespace lspan {

namespace {

// Large enough to survive k_a + k_x + k_b sums without overflow.
constexpr int k_unbounded = std::numeric_limits<int>::max() / 4;

void validate_instance(const Instance& inst) {
    const VertexSet all = inst.graph.vertices();
    if (!inst.y.is_subset_of(all) || !inst.z.is_subset_of(all) || !inst.m.is_subset_of(all))
        throw std::invalid_argument("instance sets must be subsets of the vertex set");
}

struct Context {
    const Graph& g;
    const SolverOptions& opts;
    RunStats stats;
    std::uint64_t live_aux_words = 0;

    void check_deadline() {
        if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
            throw SolverTimeout(stats);
    }
};

// Auxiliary words a recursion node keeps live: its instance sets plus the
// partition parts and neighborhood (a dozen fixed-width sets), the element
// vector, the enumerator stack frames (one blocked set and one (A, B) pair
// per level, at most |Y| levels) and the base-case odometer. Linear in
// |Y| per level; the acceptance suite checks the documented n^2 envelope.
std::uint64_t node_aux_words(int y_size) {
    constexpr std::uint64_t w = VertexSet::capacity / 64;
    return 16 + 8 * w + static_cast<std::uint64_t>(y_size) * (3 * w + 7);
}

class AuxCharge {
public:
    AuxCharge(Context& ctx, std::uint64_t words) : ctx_(ctx), words_(words) {
        ctx_.live_aux_words += words_;
        ctx_.stats.peak_aux_words = std::max(ctx_.stats.peak_aux_words, ctx_.live_aux_words);
    }
    ~AuxCharge() { ctx_.live_aux_words -= words_; }

    AuxCharge(const AuxCharge&) = delete;
    AuxCharge& operator=(const AuxCharge&) = delete;

private:
    Context& ctx_;
    std::uint64_t words_;
};

bool candidate_valid(const Graph& g, const std::vector<int>& elems,
                     const std::vector<int>& labels, int k, const VertexSet& z,
                     const VertexSet& m) {
    const std::size_t y_size = elems.size();
    for (std::size_t i = 0; i < y_size; ++i) {
        const int v = elems[i];
        const int lv = labels[i];
        if (lv == 0 && z.contains(v)) return false;
        if (lv == k - 1 && m.contains(v)) return false;
        for (std::size_t j = 0; j < i; ++j) {
            const int u = elems[j];
            const int lu = labels[j];
            if (g.has_edge(u, v)) {
                if (std::abs(lu - lv) < 2) return false;
            } else if (g.square_neighbors(u).contains(v)) {
                if (lu == lv) return false;
            }
        }
    }
    return true;
}

// Exhaustive check whether <= 3 labels suffice, smallest k first. Fills
// *witness with the first labeling found when requested.
std::optional<int> base_case_search(Context& ctx, const VertexSet& y, const VertexSet& z,
                                    const VertexSet& m, PartialLabeling* witness) {
    if (y.empty()) {
        if (witness) *witness = PartialLabeling{};
        return 0;
    }
    const std::vector<int> elems = y.to_vector();
    std::vector<int> labels(elems.size(), 0);
    for (int k = 1; k <= 3; ++k) {
        std::fill(labels.begin(), labels.end(), 0);
        while (true) {
            ctx.stats.base_case_labelings += 1;
            if ((ctx.stats.base_case_labelings & 0xFFF) == 0) ctx.check_deadline();
            if (candidate_valid(ctx.g, elems, labels, k, z, m)) {
                if (witness) {
                    PartialLabeling c;
                    for (std::size_t i = 0; i < elems.size(); ++i)
                        c.assign(elems[i], labels[i]);
                    *witness = std::move(c);
                }
                return k;
            }
            std::size_t i = 0;
            while (i < labels.size() && labels[i] == k - 1) labels[i++] = 0;
            if (i == labels.size()) break;
            ++labels[i];
        }
    }
    return std::nullopt;
}

// Core recursion. Contract: returns the exact value when it is < cutoff;
// otherwise returns some value >= cutoff (and never less than the exact
// one). With pruning off, cutoff is always k_unbounded, so the value is
// exact everywhere.
int search(Context& ctx, const VertexSet& y, const VertexSet& z, const VertexSet& m,
           int depth, int cutoff) {
    ctx.stats.nodes += 1;
    ctx.stats.max_depth = std::max<std::uint64_t>(ctx.stats.max_depth,
                                                  static_cast<std::uint64_t>(depth));
    AuxCharge charge(ctx, node_aux_words(y.size()));

    if (y.empty()) return 0;
    ctx.check_deadline();
    if (auto base = base_case_search(ctx, y, z, m, nullptr)) return *base;

    int best = k_unbounded;
    for_each_correct_partition(ctx.g, y, [&](const CorrectPartition& part) {
        ctx.check_deadline();
        ctx.stats.partitions += 1;

        const bool a_empty = part.a.empty();
        const bool b_empty = part.b.empty();
        const int kx = kx_value(a_empty, b_empty, part.x.intersects(z), part.x.intersects(m));
        const int a_floor = a_empty ? 0 : 1;
        const int b_floor = b_empty ? 0 : 1;
        const int limit = ctx.opts.prune ? std::min(best, cutoff) : k_unbounded;
        if (a_floor + kx + b_floor >= limit) return true;

        const VertexSet nx = ctx.g.neighborhood(part.x);
        const int ka = search(ctx, part.a, z, nx, depth + 1, limit - kx - b_floor);
        if (ka + kx + b_floor >= limit) return true;
        const int kb = search(ctx, part.b, nx, m, depth + 1, limit - kx - ka);
        best = std::min(best, ka + kx + kb);
        return true;
    });

    // At least one correct partition exists whenever more than 3 labels
    // are needed, so an unbounded best means a broken enumeration (with
    // pruning it is only meaningful when nothing was cut off).
    if (best >= k_unbounded && (!ctx.opts.prune || cutoff >= k_unbounded))
        throw std::logic_error("no correct partition found past the base case");
    return best;
}

PartialLabeling merged(PartialLabeling into, const PartialLabeling& from) {
    for (const auto& [v, label] : from.entries()) into.assign(v, label);
    return into;
}

// Value search plus witness reconstruction: find the argmin partition by
// value, recurse into it for certificates, and compose them. The five
// composition cases mirror how a full labeling decomposes around the
// separator X.
std::pair<int, PartialLabeling> cert_search(Context& ctx, const VertexSet& y,
                                            const VertexSet& z, const VertexSet& m,
                                            int depth) {
    ctx.stats.nodes += 1;
    ctx.stats.max_depth = std::max<std::uint64_t>(ctx.stats.max_depth,
                                                  static_cast<std::uint64_t>(depth));
    AuxCharge charge(ctx, node_aux_words(y.size()) + 4 * static_cast<std::uint64_t>(y.size()));
    if (y.empty()) return {0, PartialLabeling{}};
    ctx.check_deadline();

    PartialLabeling witness;
    if (auto base = base_case_search(ctx, y, z, m, &witness)) return {*base, witness};

    int best = k_unbounded;
    int best_ka = 0, best_kb = 0, best_kx = 0;
    CorrectPartition best_part;
    VertexSet best_nx;
    for_each_correct_partition(ctx.g, y, [&](const CorrectPartition& part) {
        ctx.check_deadline();
        ctx.stats.partitions += 1;

        const bool a_empty = part.a.empty();
        const bool b_empty = part.b.empty();
        const int kx = kx_value(a_empty, b_empty, part.x.intersects(z), part.x.intersects(m));
        const int a_floor = a_empty ? 0 : 1;
        const int b_floor = b_empty ? 0 : 1;
        const int limit = ctx.opts.prune ? best : k_unbounded;
        if (a_floor + kx + b_floor >= limit) return true;

        const VertexSet nx = ctx.g.neighborhood(part.x);
        const int ka = search(ctx, part.a, z, nx, depth + 1, limit - kx - b_floor);
        if (ka + kx + b_floor >= limit) return true;
        const int kb = search(ctx, part.b, nx, m, depth + 1, limit - kx - ka);
        if (ka + kx + kb < best) {
            best = ka + kx + kb;
            best_ka = ka;
            best_kb = kb;
            best_kx = kx;
            best_part = part;
            best_nx = nx;
        }
        return true;
    });
    if (best >= k_unbounded)
        throw std::logic_error("no correct partition found past the base case");

    auto [ka, ca] = cert_search(ctx, best_part.a, z, best_nx, depth + 1);
    auto [kb, cb] = cert_search(ctx, best_part.b, best_nx, m, depth + 1);
    assert(ka == best_ka && kb == best_kb);
    (void)best_ka;
    (void)best_kb;

    const bool a_empty = best_part.a.empty();
    const bool b_empty = best_part.b.empty();
    PartialLabeling c;
    if (!a_empty && !b_empty) {
        // A keeps its labels, X takes the first free label above them and
        // B is shifted past X.
        c = merged(ca, PartialLabeling::constant(best_part.x, ka));
        c = merged(std::move(c), shift(cb, ka + 1));
    } else if (a_empty) {
        // X sits at the bottom: label 0, or 1 when 0 is forbidden on X.
        const int x_label = best_kx == 2 ? 1 : 0;
        c = merged(PartialLabeling::constant(best_part.x, x_label), shift(cb, x_label + 1));
    } else {
        // X sits at the top above A; when the top label is forbidden on X
        // one extra label is counted as used but assigned to nobody.
        c = merged(ca, PartialLabeling::constant(best_part.x, ka));
    }
    return {best, std::move(c)};
}

} // namespace

int kx_value(bool a_empty, bool b_empty, bool x_meets_z, bool x_meets_m) {
    if (a_empty && b_empty)
        throw std::logic_error("partition with both sides empty is unreachable here");
    if (!a_empty && !b_empty) return 1;
    if (a_empty) return x_meets_z ? 2 : 1;
    return x_meets_m ? 2 : 1;
}

std::optional<int> base_case_span(const Instance& inst) {
    validate_instance(inst);
    SolverOptions opts;
    Context ctx{inst.graph, opts, {}, 0};
    return base_case_search(ctx, inst.y, inst.z, inst.m, nullptr);
}

std::vector<CorrectPartition> collect_correct_partitions(const Graph& g, const VertexSet& y) {
    std::vector<CorrectPartition> out;
    for_each_correct_partition(g, y, [&](const CorrectPartition& part) {
        out.push_back(part);
        return true;
    });
    return out;
}

SpanResult find_lambda(const Instance& inst, const SolverOptions& opts) {
    validate_instance(inst);
    Context ctx{inst.graph, opts, {}, 0};
    const int value = search(ctx, inst.y, inst.z, inst.m, 1, k_unbounded);
    return {value, ctx.stats, std::nullopt};
}

SpanResult lambda_span(const Graph& g, const SolverOptions& opts) {
    SpanResult r = find_lambda(Instance{g, g.vertices(), {}, {}}, opts);
    r.value -= 1;
    return r;
}

SpanResult find_labeling(const Instance& inst, const SolverOptions& opts) {
    validate_instance(inst);
    Context ctx{inst.graph, opts, {}, 0};
    auto [value, labeling] = cert_search(ctx, inst.y, inst.z, inst.m, 1);
    assert(value == 0 ? labeling.empty() : is_valid_labeling(inst, labeling, value));
    return {value, ctx.stats, std::move(labeling)};
}

} // namespace lspan
