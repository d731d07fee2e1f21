#include "doctest.h"

#include <random>
#include <stdexcept>

#include "lspan/generators.hpp"
#include "lspan/graph_io.hpp"
#include "lspan/labeling.hpp"
#include "support/test_support.hpp"

using namespace lspan;

namespace {

PartialLabeling random_labeling(std::mt19937_64& rng, const VertexSet& domain, int max_label) {
    PartialLabeling c;
    for (int v : domain) c.assign(v, static_cast<int>(rng() % (max_label + 1)));
    return c;
}

} // namespace

TEST_CASE("a constant labeling of a 2-packing is valid with three labels") {
    const Graph g = generate(GraphFamily::path, 7);
    const VertexSet y{0, 3, 6};
    REQUIRE(g.is_2packing(y));
    const PartialLabeling c = PartialLabeling::constant(y, 1);
    CHECK(is_valid_labeling(Instance{g, y, {}, {}}, c, 3));
    CHECK(is_valid_labeling(Instance{g, y, {0, 3}, {6}}, c, 3));
    CHECK(is_valid_labeling(Instance{g, y, y, y}, c, 3));
}

TEST_CASE("adjacent vertices one label apart are invalid") {
    const Graph g = generate(GraphFamily::complete, 2);
    PartialLabeling c;
    c.assign(0, 0);
    c.assign(1, 1);
    CHECK_FALSE(is_valid_labeling(Instance{g, g.vertices(), {}, {}}, c, 2));
    PartialLabeling wide;
    wide.assign(0, 0);
    wide.assign(1, 2);
    CHECK(is_valid_labeling(Instance{g, g.vertices(), {}, {}}, wide, 3));
}

TEST_CASE("label 0 on a bottom-forbidden vertex is invalid") {
    const Graph g(1);
    PartialLabeling c;
    c.assign(0, 0);
    CHECK_FALSE(is_valid_labeling(Instance{g, {0}, {0}, {}}, c, 2));
    CHECK(is_valid_labeling(Instance{g, {0}, {}, {0}}, c, 2));
}

TEST_CASE("domain must match y exactly") {
    const Graph g = generate(GraphFamily::path, 3);
    PartialLabeling c;
    c.assign(0, 0);
    CHECK_FALSE(is_valid_labeling(Instance{g, {0, 1}, {}, {}}, c, 5));
    c.assign(1, 2);
    c.assign(2, 4);
    CHECK_FALSE(is_valid_labeling(Instance{g, {0, 1}, {}, {}}, c, 5));
}

TEST_CASE("span_of returns the maximum label and rejects empty labelings") {
    PartialLabeling c;
    c.assign(3, 0);
    c.assign(5, 2);
    CHECK(span_of(c) == 2);
    PartialLabeling single;
    single.assign(0, 5);
    CHECK(span_of(single) == 5);
    PartialLabeling level;
    level.assign(0, 1);
    level.assign(1, 1);
    CHECK(span_of(level) == 1);
    CHECK_THROWS_AS(span_of(PartialLabeling{}), std::invalid_argument);
}

TEST_CASE("shift moves every label and rejects negative results") {
    PartialLabeling c;
    c.assign(0, 0);
    c.assign(1, 2);
    const PartialLabeling up = shift(c, 1);
    CHECK(up.label_of(0) == 1);
    CHECK(up.label_of(1) == 3);
    CHECK(shift(c, 0) == c);
    CHECK_THROWS_AS(shift(c, -1), std::invalid_argument);
}

TEST_CASE("reverse flips the label range") {
    PartialLabeling c;
    c.assign(0, 0);
    c.assign(1, 2);
    const PartialLabeling r = reverse(c, 3);
    CHECK(r.label_of(0) == 2);
    CHECK(r.label_of(1) == 0);
    const PartialLabeling mid = PartialLabeling::constant(VertexSet{0, 1}, 1);
    CHECK(reverse(mid, 3) == mid);
    CHECK_THROWS_AS(reverse(c, 2), std::invalid_argument);

    std::mt19937_64 rng(20260804);
    for (int round = 0; round < 40; ++round) {
        const int k = 1 + static_cast<int>(rng() % 9);
        const PartialLabeling any =
            random_labeling(rng, test::random_subset(rng, 12), k - 1);
        CHECK(reverse(reverse(any, k), k) == any);
    }
}

TEST_CASE("whole-graph validity matches the direct distance check") {
    std::mt19937_64 rng(20260805);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        const int max_label = static_cast<int>(rng() % (2 * n + 1));
        const PartialLabeling c = random_labeling(rng, g.vertices(), max_label);
        const int k = span_of(c) + 1;
        CHECK(is_valid_labeling(Instance{g, g.vertices(), {}, {}}, c, k) ==
              test::l21_valid_whole_graph(g, c));
    }
}

TEST_CASE("validity is symmetric under reversal with z and m swapped") {
    std::mt19937_64 rng(20260806);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        const VertexSet y = test::random_subset(rng, n);
        const VertexSet z = test::random_subset(rng, n);
        const VertexSet m = test::random_subset(rng, n);
        const int k = 1 + static_cast<int>(rng() % 8);
        const PartialLabeling c = random_labeling(rng, y, k - 1);
        CHECK(is_valid_labeling(Instance{g, y, z, m}, c, k) ==
              is_valid_labeling(Instance{g, y, m, z}, reverse(c, k), k));
    }
}

TEST_CASE("raising k cannot invalidate a labeling when m is empty") {
    std::mt19937_64 rng(20260807);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        const VertexSet y = test::random_subset(rng, n);
        const VertexSet z = test::random_subset(rng, n);
        const int k = 1 + static_cast<int>(rng() % 8);
        const PartialLabeling c = random_labeling(rng, y, k - 1);
        if (is_valid_labeling(Instance{g, y, z, {}}, c, k))
            CHECK(is_valid_labeling(Instance{g, y, z, {}}, c, k + 1));
    }
}

TEST_CASE("restrictions of valid labelings stay valid") {
    std::mt19937_64 rng(20260808);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        const VertexSet y = test::random_subset(rng, n);
        const VertexSet z = test::random_subset(rng, n);
        const VertexSet m = test::random_subset(rng, n);
        const int k = 1 + static_cast<int>(rng() % 8);
        const PartialLabeling c = random_labeling(rng, y, k - 1);
        if (!is_valid_labeling(Instance{g, y, z, m}, c, k)) continue;
        const VertexSet sub = test::random_subset(rng, n) & y;
        PartialLabeling restricted;
        for (const auto& [v, label] : c.entries())
            if (sub.contains(v)) restricted.assign(v, label);
        CHECK(is_valid_labeling(Instance{g, sub, z, m}, restricted, k));
    }
}

TEST_CASE("labeling serialization round trips") {
    PartialLabeling c;
    c.assign(2, 7);
    c.assign(0, 1);
    CHECK(serialize_labeling(c) == "0 1\n2 7\n");
    CHECK(parse_labeling("0 1\n2 7\n") == c);
    CHECK(parse_labeling("# comment\n2 7\n\n0 1\n") == c);
    CHECK_THROWS_AS(parse_labeling("0 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_labeling("0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_labeling("0\n"), ParseError);
    CHECK_THROWS_AS(parse_labeling("0 1 2\n"), ParseError);
}
