// Command-line front end: compute spans, verify labelings, generate
// graphs and run the solver/oracle benchmark table.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lspan/generators.hpp"
#include "lspan/graph_io.hpp"
#include "lspan/oracle.hpp"
#include "lspan/solver.hpp"

namespace {

using nlohmann::json;
using namespace lspan;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_input_error = 2;
constexpr int exit_timeout = 3;

// Rough node throughput used to translate a wall-clock budget into the
// oracle's node budget (its budget is counted in backtracking nodes).
constexpr std::uint64_t oracle_nodes_per_second = 10'000'000;

std::string read_stream(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw std::invalid_argument("unknown format " + name);
}

SolverOptions solver_options(bool prune, std::optional<double> timeout_seconds) {
    SolverOptions opts;
    opts.prune = prune;
    if (timeout_seconds)
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*timeout_seconds));
    return opts;
}

json stats_json(const RunStats& stats) {
    return json{{"nodes", stats.nodes},
                {"max_depth", stats.max_depth},
                {"partitions", stats.partitions}};
}

int run_span(const std::string& input, const std::string& format, bool certificate,
             bool prune, bool as_json, std::optional<double> timeout_seconds) {
    const Graph g = parse_graph(read_stream(input), parse_format(format));
    const Instance whole{g, g.vertices(), {}, {}};
    const SolverOptions opts = solver_options(prune, timeout_seconds);

    try {
        SpanResult r = certificate ? find_labeling(whole, opts) : find_lambda(whole, opts);
        const int lambda = r.value - 1;
        if (certificate) {
            if (!r.labeling || !is_valid_labeling(whole, *r.labeling, r.value)) {
                std::cerr << "internal error: certificate failed validation\n";
                return exit_invalid;
            }
        }
        if (as_json) {
            json out{{"lambda", lambda},
                     {"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"stats", stats_json(r.stats)}};
            if (certificate) {
                json cert = json::array();
                for (const auto& [v, label] : r.labeling->entries())
                    cert.push_back({v, label});
                out["certificate"] = cert;
            }
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "lambda = " << lambda << '\n';
            if (certificate) std::cout << serialize_labeling(*r.labeling);
        }
        return exit_ok;
    } catch (const SolverTimeout& t) {
        if (as_json) {
            std::cout << json{{"timeout", true},
                              {"n", g.vertex_count()},
                              {"m", g.edge_count()},
                              {"stats", stats_json(t.stats)}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "timeout\n"
                      << "nodes = " << t.stats.nodes << '\n'
                      << "max_depth = " << t.stats.max_depth << '\n'
                      << "partitions = " << t.stats.partitions << '\n';
        }
        return exit_timeout;
    }
}

int run_oracle(const std::string& input, const std::string& format, bool as_json,
               std::optional<double> timeout_seconds) {
    const Graph g = parse_graph(read_stream(input), parse_format(format));
    OracleBudget budget;
    if (timeout_seconds)
        budget.node_limit =
            static_cast<std::uint64_t>(*timeout_seconds * oracle_nodes_per_second) + 1;
    const auto lambda = oracle_span(g, budget);
    if (!lambda) {
        std::cout << (as_json ? "{\"timeout\":true}\n" : "timeout\n");
        return exit_timeout;
    }
    if (as_json)
        std::cout << json{{"lambda", *lambda}, {"n", g.vertex_count()}, {"m", g.edge_count()}}
                         .dump()
                  << '\n';
    else
        std::cout << "lambda = " << *lambda << '\n';
    return exit_ok;
}

int run_verify(const std::string& input, const std::string& format,
               const std::string& labeling_path) {
    const Graph g = parse_graph(read_stream(input), parse_format(format));
    const PartialLabeling c = parse_labeling(read_stream(labeling_path));

    for (const auto& [v, label] : c.entries())
        if (v >= g.vertex_count())
            throw std::invalid_argument("labeling references vertex " + std::to_string(v) +
                                        " outside the graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!c.contains(v)) {
            std::cout << "invalid: vertex " << v << " has no label\n";
            return exit_invalid;
        }
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            const int lu = *c.label_of(u);
            const int lv = *c.label_of(v);
            if (g.has_edge(u, v) && std::abs(lu - lv) < 2) {
                std::cout << "invalid: adjacent vertices " << u << " and " << v
                          << " have labels " << lu << " and " << lv << '\n';
                return exit_invalid;
            }
            if (!g.has_edge(u, v) && g.dist_le2(u, v) && lu == lv) {
                std::cout << "invalid: vertices " << u << " and " << v
                          << " at distance 2 share label " << lu << '\n';
                return exit_invalid;
            }
        }
    }
    std::cout << "valid, span = " << (c.empty() ? 0 : span_of(c)) << '\n';
    return exit_ok;
}

int run_gen(const std::string& family_name_arg, int n, double p, std::uint64_t seed,
            const std::string& format) {
    const auto family = family_from_name(family_name_arg);
    if (!family) throw std::invalid_argument("unknown family " + family_name_arg);
    if (n == 0 && *family == GraphFamily::petersen) n = 10;
    if (n == 0) throw std::invalid_argument("gen requires --n");
    const Graph g = generate(*family, n, p, seed);
    std::cout << serialize_graph(g, parse_format(format));
    return exit_ok;
}

struct BenchInstance {
    std::string family;
    Graph graph;
};

int run_bench(std::uint64_t seed, double timeout_seconds, int max_n, bool prune) {
    std::vector<BenchInstance> corpus;
    for (int n = 2; n <= max_n; ++n) corpus.push_back({"path", generate(GraphFamily::path, n)});
    for (int n = 3; n <= max_n; ++n) corpus.push_back({"cycle", generate(GraphFamily::cycle, n)});
    for (int n = 2; n <= std::min(8, max_n); ++n)
        corpus.push_back({"star", generate(GraphFamily::star, n)});
    for (int n = 2; n <= std::min(8, max_n); ++n)
        corpus.push_back({"complete", generate(GraphFamily::complete, n)});
    if (max_n >= 10) corpus.push_back({"petersen", generate(GraphFamily::petersen, 10)});
    for (int n = 4; n <= std::min(9, max_n); ++n)
        for (double p : {0.3, 0.6})
            corpus.push_back({"gnp", generate(GraphFamily::gnp, n, p, seed + n)});

    OracleBudget budget;
    budget.node_limit =
        static_cast<std::uint64_t>(timeout_seconds * oracle_nodes_per_second) + 1;

    std::cout << "family,n,m,lambda,oracle_lambda,nodes,max_depth,partitions,"
                 "base_case_labelings,time_ms,status\n";
    bool all_ok = true;
    for (const BenchInstance& inst : corpus) {
        const Graph& g = inst.graph;
        std::string lambda_text, status = "ok";
        RunStats stats;
        std::optional<int> solver_lambda;

        const auto start = std::chrono::steady_clock::now();
        try {
            const SpanResult r = lambda_span(g, solver_options(prune, timeout_seconds));
            solver_lambda = r.value;
            stats = r.stats;
            lambda_text = std::to_string(r.value);
        } catch (const SolverTimeout& t) {
            stats = t.stats;
            status = "timeout";
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();

        const auto oracle_lambda_value = oracle_span(g, budget);
        if (!oracle_lambda_value && status == "ok") status = "timeout";
        if (solver_lambda && oracle_lambda_value && *solver_lambda != *oracle_lambda_value) {
            status = "mismatch";
            all_ok = false;
        }

        std::uint64_t allowed_depth = 1;
        for (int size = g.vertex_count(); (1 << allowed_depth) < size;) ++allowed_depth;
        if (solver_lambda && g.vertex_count() >= 1 && stats.max_depth > allowed_depth + 1) {
            status = "mismatch";
            all_ok = false;
        }

        std::cout << inst.family << ',' << g.vertex_count() << ',' << g.edge_count() << ','
                  << lambda_text << ','
                  << (oracle_lambda_value ? std::to_string(*oracle_lambda_value) : "") << ','
                  << stats.nodes << ',' << stats.max_depth << ',' << stats.partitions << ','
                  << stats.base_case_labelings << ',' << ms << ',' << status << '\n';
    }
    return all_ok ? exit_ok : exit_invalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact L(2,1)-span solver"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "edgelist";
    std::string labeling_path;
    std::string family;
    bool certificate = false, prune = false, as_json = false;
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t seed = 1;
    std::optional<double> timeout_seconds;
    double bench_timeout = 10.0;
    int bench_max_n = 10;

    CLI::App* span = app.add_subcommand("span", "compute the span of a graph");
    span->add_option("--input", input, "graph file, or - for stdin");
    span->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
    span->add_flag("--certificate", certificate, "also print a witness labeling");
    span->add_flag("--prune", prune, "enable branch-and-bound pruning");
    span->add_flag("--json", as_json);
    span->add_option("--timeout", timeout_seconds, "seconds before giving up");

    CLI::App* oracle = app.add_subcommand("oracle", "compute the span by brute force");
    oracle->add_option("--input", input);
    oracle->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
    oracle->add_flag("--json", as_json);
    oracle->add_option("--timeout", timeout_seconds);

    CLI::App* verify = app.add_subcommand("verify", "check a labeling against a graph");
    verify->add_option("--input", input);
    verify->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
    verify->add_option("--labeling", labeling_path, "labeling file, or - for stdin")
        ->required();

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_option("--family", family, "path|cycle|complete|star|petersen|gnp")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "edge probability for gnp");
    gen->add_option("--seed", seed);
    gen->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));

    CLI::App* bench = app.add_subcommand("bench", "solver vs oracle over a seeded corpus");
    bench->add_option("--seed", seed);
    bench->add_option("--timeout", bench_timeout, "per-instance seconds");
    bench->add_option("--max-n", bench_max_n);
    bench->add_flag("--prune", prune);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        if (span->parsed())
            return run_span(input, format, certificate, prune, as_json, timeout_seconds);
        if (oracle->parsed()) return run_oracle(input, format, as_json, timeout_seconds);
        if (verify->parsed()) return run_verify(input, format, labeling_path);
        if (gen->parsed()) return run_gen(family, gen_n, gen_p, seed, format);
        if (bench->parsed()) return run_bench(seed, bench_timeout, bench_max_n, prune);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
