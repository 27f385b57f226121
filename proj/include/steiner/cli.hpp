#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steiner/edge_list.hpp"
#include "steiner/error.hpp"
#include "steiner/families.hpp"
#include "steiner/modular.hpp"
#include "steiner/report.hpp"
#include "steiner/steiner_counting.hpp"
#include "steiner/tree_decomposition.hpp"

namespace steiner {

// Exit-code contract, stable for CI consumption.
inline constexpr int kExitPass = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacity = 3;

namespace cli_detail {

struct InputSource {
    std::string file;
    std::string family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
};

struct LoadedGraph {
    Graph graph;
    GraphSummary summary;
};

inline LoadedGraph load_graph(const InputSource& source) {
    if (!source.file.empty() && !source.family.empty())
        throw InputError("choose either --file or --family, not both");
    if (source.file.empty() && source.family.empty())
        throw InputError("an input graph is required: --file <path> or --family <name>");
    if (!source.file.empty()) {
        std::ifstream in(source.file);
        if (!in) throw InputError("cannot open file \"" + source.file + "\"");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        Graph g = parse_edge_list(buffer.str());
        GraphSummary summary;
        summary.n = g.vertex_count();
        summary.m = g.edge_count();
        return {std::move(g), std::move(summary)};
    }
    const Family family = parse_family(source.family);
    Graph g = generate_family(family, source.params, source.seed);
    GraphSummary summary;
    summary.n = g.vertex_count();
    summary.m = g.edge_count();
    summary.family = family_name(family);
    summary.params = source.params;
    summary.seed = source.seed;
    return {std::move(g), std::move(summary)};
}

inline Limits limits_from_environment(int threads) {
    Limits limits;
    limits.threads = threads;
    if (const char* raw = std::getenv("STEINER_MAX_SUBSETS")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0)
            throw InputError("STEINER_MAX_SUBSETS must be a positive integer");
        limits.max_subsets = value;
    }
    return limits;
}

class MetricTimer {
public:
    explicit MetricTimer(Report& report) : report_(report) {}

    template <class Fn>
    void run(const std::string& name, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report_.timings_ms.emplace_back(
            name, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }

private:
    Report& report_;
};

inline OrderedJson ratio_array(const std::vector<ExactRatio>& values) {
    OrderedJson array = OrderedJson::array();
    for (const auto& value : values) array.push_back(to_decimal(value));
    return array;
}

inline OrderedJson modularity_entry(const Graph& g, const DistanceMatrix& dm,
                                    const ModularityWitness& witness, bool force,
                                    const Limits& limits) {
    OrderedJson entry;
    entry["name"] = "modularity";
    entry["is_modular"] = witness.is_modular;
    entry["is_median"] = witness.is_median;
    if (witness.violating_triple)
        entry["violating_triple"] = *witness.violating_triple;
    if (witness.ambiguous_triple)
        entry["ambiguous_triple"] = *witness.ambiguous_triple;
    const int n = g.vertex_count();
    if (witness.is_modular && n >= 3) {
        entry["sw3_via_wiener"] = to_decimal(sw3_via_wiener(g, dm, witness));
        entry["average_b3"] = to_decimal(average_b3_modular(g, dm, witness));
    } else if (!witness.is_modular && force && n >= 3) {
        // Diagnostic mode: expose both sides of the shortcut even though
        // the theorem's hypothesis fails.
        entry["sw3_direct"] = to_decimal(steiner_wiener_k(g, 3, limits).value);
        entry["sw3_shortcut_formula"] =
            to_decimal(make_ratio((n - 2) * wiener_index(g, dm), 2));
    }
    return entry;
}

// ---- verify suites --------------------------------------------------------

struct VerifyContext {
    const Graph& g;
    const Limits& limits;
    int k_min;
    int k_max;
    bool strict; // explicit suite: capacity problems are errors, not skips
    Report& report;
    MetricTimer& timer;
};

template <class Fn>
void guarded_identity(VerifyContext& ctx, const std::string& name, std::optional<int> k, Fn&& fn) {
    try {
        fn();
    } catch (const CapacityError& e) {
        if (ctx.strict) throw;
        IdentityCheck skipped;
        skipped.name = name;
        skipped.k = k;
        skipped.applicable = false;
        skipped.note = std::string("skipped: ") + e.what();
        ctx.report.identities.push_back(std::move(skipped));
    }
}

inline void verify_tree_suite(VerifyContext& ctx) {
    const int n = ctx.g.vertex_count();
    for (int k = ctx.k_min; k <= std::min(ctx.k_max, n); ++k) {
        guarded_identity(ctx, "tree-edge-decomposition", k, [&] {
            BigCount sw;
            BigCount edge_sum;
            BigCount vertex_sum;
            ctx.timer.run("tree-decompositions[k=" + std::to_string(k) + "]", [&] {
                sw = steiner_wiener_k(ctx.g, k, ctx.limits).value;
                edge_sum = sw_k_edge_decomposition(ctx.g, k);
                vertex_sum = sw_k_vertex_decomposition(ctx.g, k);
            });
            IdentityCheck edge{"tree-edge-decomposition", k, ExactRatio(edge_sum), ExactRatio(sw)};
            IdentityCheck vertex{"tree-vertex-decomposition", k, ExactRatio(vertex_sum),
                                 ExactRatio(sw)};
            ctx.report.identities.push_back(std::move(edge));
            ctx.report.identities.push_back(std::move(vertex));
        });
    }
}

inline void verify_general_suite(VerifyContext& ctx, SteinerCountingEngine& engine) {
    const int n = ctx.g.vertex_count();
    for (int k = ctx.k_min; k <= std::min(ctx.k_max, n); ++k) {
        guarded_identity(ctx, "steiner-betweenness-decomposition", k, [&] {
            CentralityReport centrality;
            BigCount sw;
            ctx.timer.run("steiner-betweenness[k=" + std::to_string(k) + "]", [&] {
                centrality = engine.k_steiner_betweenness(k);
                sw = steiner_wiener_k(ctx.g, k, ctx.limits).value;
            });
            IdentityCheck main_identity{
                "steiner-betweenness-decomposition", k,
                centrality.sum + ExactRatio((k - 1) * binomial(n, k)), ExactRatio(sw)};
            ctx.report.identities.push_back(std::move(main_identity));

            ExactRatio closed_form = make_ratio(binomial(n, k), n) *
                                     (make_ratio(sw, binomial(n, k)) - (k - 1));
            IdentityCheck average_identity{"average-steiner-betweenness-closed-form", k,
                                           centrality.average, closed_form};
            ctx.report.identities.push_back(std::move(average_identity));
        });
    }

    // k = 2 degenerations: the pair case must reproduce the classical
    // Wiener index and betweenness centrality exactly.
    guarded_identity(ctx, "pair-degeneration", 2, [&] {
        const DistanceMatrix& dm = engine.distances();
        const BigCount w = wiener_index(ctx.g, dm);
        IdentityCheck sw2{"pair-steiner-wiener-equals-wiener", 2,
                          ExactRatio(steiner_wiener_k(ctx.g, 2, ctx.limits).value),
                          ExactRatio(w)};
        ctx.report.identities.push_back(std::move(sw2));

        std::vector<ExactRatio> classical;
        CentralityReport pair_report;
        ctx.timer.run("betweenness-degeneration", [&] {
            classical = geodesic_betweenness(ctx.g);
            pair_report = engine.k_steiner_betweenness(2);
        });
        ExactRatio classical_sum(0);
        bool vertexwise_equal = true;
        for (int v = 0; v < n; ++v) {
            classical_sum += classical[v];
            if (classical[v] != pair_report.per_vertex[v]) vertexwise_equal = false;
        }
        IdentityCheck pairwise{"pair-betweenness-degeneration", 2, pair_report.sum,
                               classical_sum};
        if (!vertexwise_equal) {
            // Force a visible failure even if the sums happen to agree.
            pairwise.note = "per-vertex values differ";
            pairwise.rhs = pairwise.lhs + 1;
        }
        ctx.report.identities.push_back(std::move(pairwise));

        IdentityCheck sum_relation{"betweenness-sum-wiener-relation", 2, classical_sum,
                                   ExactRatio(w - binomial(n, 2))};
        ctx.report.identities.push_back(std::move(sum_relation));
    });
}

inline void verify_modular_suite(VerifyContext& ctx, const DistanceMatrix& dm,
                                 const ModularityWitness& witness) {
    const int n = ctx.g.vertex_count();
    IdentityCheck bipartite{"modular-implies-bipartite", std::nullopt,
                            ExactRatio(is_bipartite(ctx.g) ? 1 : 0), ExactRatio(1)};
    if (!witness.is_modular) {
        bipartite.applicable = false;
        bipartite.note = "not modular";
    }
    ctx.report.identities.push_back(std::move(bipartite));

    if (n < 3) return;
    guarded_identity(ctx, "modular-sw3-wiener-shortcut", 3, [&] {
        BigCount sw3;
        ctx.timer.run("sw3", [&] { sw3 = steiner_wiener_k(ctx.g, 3, ctx.limits).value; });
        const ExactRatio shortcut = make_ratio((n - 2) * wiener_index(ctx.g, dm), 2);
        IdentityCheck check{"modular-sw3-wiener-shortcut", 3, ExactRatio(sw3), shortcut};
        if (!witness.is_modular) {
            check.applicable = false;
            check.note = "not modular; triple " + detail::triple_string(*witness.violating_triple) +
                         " has no common shortest-path vertex; both sides reported";
        }
        ctx.report.identities.push_back(std::move(check));

        if (witness.is_modular) {
            guarded_identity(ctx, "modular-average-b3-closed-form", 3, [&] {
                ExactRatio direct;
                ctx.timer.run("average-b3", [&] {
                    direct = average_k_steiner_betweenness(ctx.g, 3, ctx.limits);
                });
                IdentityCheck average_check{"modular-average-b3-closed-form", 3, direct,
                                            average_b3_modular(ctx.g, dm, witness)};
                ctx.report.identities.push_back(std::move(average_check));
            });
        }
    });
}

inline void verify_total_suite(VerifyContext& ctx, SteinerCountingEngine& engine) {
    const int n = ctx.g.vertex_count();
    guarded_identity(ctx, "total-steiner-betweenness-decomposition", std::nullopt, [&] {
        if (n > ctx.limits.total_betweenness_max_n)
            throw CapacityError("total suite is limited to n <= " +
                                std::to_string(ctx.limits.total_betweenness_max_n));
        CentralityReport total;
        SteinerIndexSummary sw;
        ctx.timer.run("total-steiner-betweenness", [&] {
            total = engine.total_steiner_betweenness();
            sw = total_steiner_wiener(ctx.g, ctx.limits);
        });
        const BigCount offset = pow2(static_cast<unsigned long>(n - 1)) * (n - 2) + 1;
        IdentityCheck main_identity{"total-steiner-betweenness-decomposition", std::nullopt,
                                    total.sum + ExactRatio(offset), ExactRatio(sw.value)};
        ctx.report.identities.push_back(std::move(main_identity));

        // Average form: n * avg(B_S) + offset = (2^n - n - 1) * avg(SW).
        IdentityCheck average_identity{"total-average-closed-form", std::nullopt,
                                       total.average * n + ExactRatio(offset),
                                       sw.average * (pow2(static_cast<unsigned long>(n)) - n - 1)};
        ctx.report.identities.push_back(std::move(average_identity));
    });
}

} // namespace cli_detail

// Runs the command line given as `args` (without the program name),
// writing the report to `out` and diagnostics to `err`. Returns the
// process exit code. Factored out of main() so tests can drive the full
// CLI in-process.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"Exact Steiner Wiener indices and Steiner betweenness centralities"};
    app.name("steinerw");
    app.require_subcommand(1);

    InputSource input;
    int threads = 0;
    bool timing = false;
    bool force = false;

    auto add_input_options = [&](CLI::App* cmd, bool with_force) {
        cmd->add_option("--file", input.file, "read the graph from an edge-list file");
        cmd->add_option("--family", input.family,
                        "generate a graph family (path, cycle, star, complete, "
                        "complete-bipartite, hypercube, grid, random-tree, gnp-connected)");
        cmd->add_option("--params", input.params, "family parameters");
        cmd->add_option("--seed", input.seed, "seed for random families");
        cmd->add_option("--threads", threads,
                        "worker thread cap (0 = machine parallelism); results are "
                        "bit-identical for any value");
        cmd->add_flag("--timing", timing, "include per-metric wall-clock timings in the report");
        if (with_force)
            cmd->add_flag("--force", force,
                          "report both sides of the modular shortcut on non-modular graphs");
    };

    auto* generate = app.add_subcommand("generate", "emit a graph family as an edge list");
    generate->add_option("--family", input.family, "family name")->required();
    generate->add_option("--params", input.params, "family parameters");
    generate->add_option("--seed", input.seed, "seed for random families");

    std::vector<std::string> metrics;
    std::optional<int> k_option;
    auto* compute = app.add_subcommand("compute", "compute metrics and emit a JSON report");
    add_input_options(compute, true);
    compute->add_option("--metric", metrics,
                        "metric to compute: wiener, betweenness, steiner-wiener, "
                        "steiner-betweenness, total-steiner-wiener, "
                        "total-steiner-betweenness, modularity, tree-decompositions")
        ->required();
    compute->add_option("-k,--k", k_option, "subset size for the k-indexed metrics");

    std::string suite = "all";
    std::vector<int> k_range;
    auto* verify = app.add_subcommand("verify", "check the decomposition identities");
    add_input_options(verify, false);
    verify->add_option("--suite", suite, "identity suite: tree, general, modular, total, all")
        ->check(CLI::IsMember({"tree", "general", "modular", "total", "all"}));
    verify->add_option("-k,--k", k_range, "k range as two integers (default: 2 min(n,4))")
        ->expected(2);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (generate->parsed()) {
            if (input.family.empty()) throw InputError("generate requires --family");
            const Family family = parse_family(input.family);
            out << format_edge_list(generate_family(family, input.params, input.seed));
            return kExitPass;
        }

        const Limits limits = limits_from_environment(threads);
        LoadedGraph loaded = load_graph(input);
        const Graph& g = loaded.graph;
        const int n = g.vertex_count();
        if (verify->parsed() && n < 2)
            throw InputError("identity verification needs at least 2 vertices");

        Report report;
        report.graph = loaded.summary;
        report.include_timings = timing;
        MetricTimer timer(report);

        if (compute->parsed()) {
            report.command = "compute";
            std::optional<SteinerCountingEngine> engine;
            auto ensure_engine = [&]() -> SteinerCountingEngine& {
                if (!engine) engine.emplace(g, limits);
                return *engine;
            };
            auto require_k = [&](const std::string& metric) {
                if (!k_option)
                    throw InputError("metric \"" + metric + "\" requires -k");
                return *k_option;
            };

            for (const std::string& metric : metrics) {
                OrderedJson entry;
                if (metric == "wiener") {
                    timer.run(metric, [&] {
                        entry["name"] = metric;
                        entry["value"] = to_decimal(wiener_index(g));
                    });
                } else if (metric == "betweenness") {
                    timer.run(metric, [&] {
                        auto values = geodesic_betweenness(g);
                        ExactRatio sum(0);
                        for (const auto& value : values) sum += value;
                        entry["name"] = metric;
                        entry["per_vertex"] = ratio_array(values);
                        entry["sum"] = to_decimal(sum);
                    });
                } else if (metric == "steiner-wiener") {
                    const int k = require_k(metric);
                    timer.run(metric, [&] {
                        auto summary = steiner_wiener_k(g, k, limits);
                        entry["name"] = metric;
                        entry["k"] = k;
                        entry["value"] = to_decimal(summary.value);
                        entry["average"] = to_decimal(summary.average);
                    });
                } else if (metric == "steiner-betweenness") {
                    const int k = require_k(metric);
                    timer.run(metric, [&] {
                        auto centrality = ensure_engine().k_steiner_betweenness(k);
                        entry["name"] = metric;
                        entry["k"] = k;
                        entry["per_vertex"] = ratio_array(centrality.per_vertex);
                        entry["sum"] = to_decimal(centrality.sum);
                        entry["average"] = to_decimal(centrality.average);
                        entry["identity_residual"] = to_decimal(centrality.identity_residual);
                    });
                } else if (metric == "total-steiner-wiener") {
                    timer.run(metric, [&] {
                        auto summary = total_steiner_wiener(g, limits);
                        entry["name"] = metric;
                        entry["value"] = to_decimal(summary.value);
                        entry["average"] = to_decimal(summary.average);
                    });
                } else if (metric == "total-steiner-betweenness") {
                    timer.run(metric, [&] {
                        auto centrality = ensure_engine().total_steiner_betweenness();
                        entry["name"] = metric;
                        entry["per_vertex"] = ratio_array(centrality.per_vertex);
                        entry["sum"] = to_decimal(centrality.sum);
                        entry["average"] = to_decimal(centrality.average);
                        entry["identity_residual"] = to_decimal(centrality.identity_residual);
                    });
                } else if (metric == "modularity") {
                    timer.run(metric, [&] {
                        const DistanceMatrix dm = all_pairs_distances(g);
                        entry = modularity_entry(g, dm, classify_modularity(g, dm), force,
                                                 limits);
                    });
                } else if (metric == "tree-decompositions") {
                    const int k = require_k(metric);
                    timer.run(metric, [&] {
                        entry["name"] = metric;
                        entry["k"] = k;
                        entry["edge_decomposition"] = to_decimal(sw_k_edge_decomposition(g, k));
                        entry["vertex_decomposition"] =
                            to_decimal(sw_k_vertex_decomposition(g, k));
                    });
                } else {
                    throw InputError("unknown metric \"" + metric + "\"");
                }
                report.metrics.push_back(std::move(entry));
            }
            out << report.to_string();
            return kExitPass;
        }

        // verify
        report.command = "verify";
        report.include_identities = true;
        int k_min = 2;
        int k_max = std::min(n, 4);
        if (!k_range.empty()) {
            k_min = k_range[0];
            k_max = k_range[1];
            if (k_min < 2 || k_max < k_min)
                throw InputError("the k range must satisfy 2 <= k_min <= k_max");
        }

        const bool strict = suite != "all";
        VerifyContext ctx{g, limits, k_min, k_max, strict, report, timer};
        SteinerCountingEngine engine(g, limits);

        if (suite == "tree" || suite == "all") {
            if (g.is_tree()) {
                verify_tree_suite(ctx);
            } else if (suite == "tree") {
                throw InputError("the tree suite requires a tree input");
            }
        }
        if (suite == "general" || suite == "all") verify_general_suite(ctx, engine);
        if (suite == "modular" || suite == "all") {
            const DistanceMatrix& dm = engine.distances();
            const ModularityWitness witness = classify_modularity(g, dm);
            report.metrics.push_back(modularity_entry(g, dm, witness, false, limits));
            verify_modular_suite(ctx, dm, witness);
        }
        if (suite == "total" || suite == "all") verify_total_suite(ctx, engine);

        out << report.to_string();
        return report.all_passed() ? kExitPass : kExitIdentityFailure;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
}

} // namespace steiner
