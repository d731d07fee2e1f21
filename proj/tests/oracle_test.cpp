#include "doctest.h"

#include <random>

#include "lspan/generators.hpp"
#include "lspan/oracle.hpp"
#include "support/test_support.hpp"

using namespace lspan;

TEST_CASE("oracle_decide base answers") {
    const Graph g(2);
    CHECK(oracle_decide(Instance{g, {}, {}, {}}, 1) == OracleOutcome::yes);

    const Graph k2 = generate(GraphFamily::complete, 2);
    const Instance inst{k2, k2.vertices(), {}, {}};
    CHECK(oracle_decide(inst, 2) == OracleOutcome::no);
    CHECK(oracle_decide(inst, 3) == OracleOutcome::yes);
}

TEST_CASE("oracle_lambda small exact values") {
    const Graph g(1);
    CHECK(oracle_lambda(Instance{g, {}, {}, {}}).value() == 0);
    CHECK(oracle_lambda(Instance{g, {0}, {0}, {0}}).value() == 3);

    const Graph k3 = generate(GraphFamily::complete, 3);
    CHECK(oracle_lambda(Instance{k3, k3.vertices(), {}, {}}).value() == 5);
}

TEST_CASE("oracle_span on paths and the petersen graph") {
    CHECK(oracle_span(generate(GraphFamily::path, 2)).value() == 2);

    const Graph p5 = generate(GraphFamily::path, 5);
    CHECK(test::dumb_span(p5) == 4);
    CHECK(oracle_span(p5).value() == 4);

    CHECK(oracle_span(generate(GraphFamily::petersen, 10)).value() == 9);
}

TEST_CASE("an exhausted budget reports unknown, never a wrong answer") {
    const Graph k3 = generate(GraphFamily::complete, 3);
    const Instance inst{k3, k3.vertices(), {}, {}};
    OracleBudget tiny;
    tiny.node_limit = 1;
    // k = 5 is satisfiable; with one node the oracle must admit ignorance.
    CHECK(oracle_decide(inst, 5, tiny) == OracleOutcome::unknown);
    CHECK_FALSE(oracle_lambda(inst, tiny).has_value());

    OracleBudget shallow;
    shallow.max_k = 2;
    CHECK_FALSE(oracle_lambda(inst, shallow).has_value());

    OracleBudget roomy;
    roomy.node_limit = 1'000'000;
    CHECK(oracle_lambda(inst, roomy).value() == 5);
}

TEST_CASE("backtracking agrees with plain enumeration on small graphs") {
    std::mt19937_64 rng(20260820);
    for (int round = 0; round < 60; ++round) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        CHECK(oracle_span(g).value() == test::dumb_span(g));
    }
}

TEST_CASE("oracle value is symmetric in the boundary sets") {
    std::mt19937_64 rng(20260821);
    for (int round = 0; round < 50; ++round) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        const VertexSet y = test::random_subset(rng, n);
        const VertexSet z = test::random_subset(rng, n);
        const VertexSet m = test::random_subset(rng, n);
        CHECK(oracle_lambda(Instance{g, y, z, m}).value() ==
              oracle_lambda(Instance{g, y, m, z}).value());
    }
}

TEST_CASE("oracle_decide is monotone in k when m is empty") {
    std::mt19937_64 rng(20260822);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = generate(GraphFamily::gnp, n, test::unit_draw(rng), rng());
        const Instance inst{g, test::random_subset(rng, n), test::random_subset(rng, n), {}};
        bool seen_yes = false;
        for (int k = 1; k <= 2 * n + 2; ++k) {
            const bool yes = oracle_decide(inst, k) == OracleOutcome::yes;
            if (seen_yes) CHECK(yes);
            seen_yes = seen_yes || yes;
        }
        CHECK(seen_yes);
    }
}

TEST_CASE("spans respect the degree-squared bound on connected graphs") {
    std::mt19937_64 rng(20260823);
    int checked = 0;
    while (checked < 40) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const Graph g = generate(GraphFamily::gnp, n, 0.3 + 0.5 * test::unit_draw(rng), rng());
        const int delta = g.max_degree();
        if (delta < 3 || !test::is_connected(g)) continue;
        ++checked;
        CHECK(oracle_span(g).value() <= delta * delta + delta - 2);
    }
}
