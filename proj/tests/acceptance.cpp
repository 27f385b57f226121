// Acceptance suite: one line per criterion, PASS/FAIL, exit 0 only if all
// criteria hold. Every check is exact (zero residual); there are no
// tolerances anywhere.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "steiner/cli.hpp"
#include "steiner/steiner.hpp"

using namespace steiner;
using testutil::NamedGraph;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description)
        : number_(number), description_(std::move(description)),
          start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& detail) {
        if (ok_) first_failure_ = detail;
        ok_ = false;
    }

    void finish() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::cout << "criterion " << number_ << ": " << (ok_ ? "PASS" : "FAIL") << " - "
                  << description_ << " [" << elapsed << " ms]";
        if (!ok_) std::cout << " - first failure: " << first_failure_;
        std::cout << std::endl;
        if (!ok_) ++failures;
    }

private:
    int number_;
    std::string description_;
    bool ok_ = true;
    std::string first_failure_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<int> members_of_mask(std::uint32_t mask, int n) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) members.push_back(v);
    return members;
}

void check_counts_against_enumeration(Criterion& c, const Graph& g, const std::string& name,
                                      const std::vector<int>& members) {
    const int n = g.vertex_count();
    const TerminalSet ts(members, n);
    const auto counted = count_steiner_trees(g, ts);
    const auto trees = enumerate_min_steiner_trees(g, ts);
    if (counted.total != BigCount(static_cast<long>(trees.size()))) {
        std::ostringstream msg;
        msg << name << ": sigma mismatch (" << counted.total.get_str() << " vs "
            << trees.size() << ")";
        c.fail(msg.str());
        return;
    }
    std::vector<long> through(n, 0);
    for (const auto& tree : trees) {
        std::set<int> vertices;
        for (const auto& [u, v] : tree) {
            vertices.insert(u);
            vertices.insert(v);
        }
        for (int v : vertices)
            if (!ts.contains(v)) ++through[v];
    }
    for (int v = 0; v < n; ++v)
        if (counted.through[v] != through[v]) {
            c.fail(name + ": through-count mismatch at vertex " + std::to_string(v));
            return;
        }
}

void criterion1_main_decomposition(const std::vector<NamedGraph>& corpus) {
    Criterion c(1, "k-Steiner betweenness decomposition of SW_k, 200 random graphs, exact");
    for (const auto& [name, g] : corpus) {
        const int n = g.vertex_count();
        SteinerCountingEngine engine(g);
        for (int k = 2; k <= std::min(n, 5); ++k) {
            const auto report = engine.k_steiner_betweenness(k);
            if (report.identity_residual != 0)
                c.fail(name + " k=" + std::to_string(k) + ": residual " +
                       to_decimal(report.identity_residual));
        }
    }
    c.finish();
}

void criterion2_tree_decompositions() {
    Criterion c(2, "edge and vertex decompositions equal the subset DP on 100 random trees");
    const auto trees = testutil::random_tree_corpus(100, 2, 12);
    for (const auto& [name, t] : trees) {
        const int n = t.vertex_count();
        const SteinerDistanceTable table(t);
        for (int k = 2; k <= std::min(n, 6); ++k) {
            const BigCount sw = steiner_wiener_k(table, k).value;
            if (sw_k_edge_decomposition(t, k) != sw)
                c.fail(name + " k=" + std::to_string(k) + ": edge decomposition differs");
            if (sw_k_vertex_decomposition(t, k) != sw)
                c.fail(name + " k=" + std::to_string(k) + ": vertex decomposition differs");
        }
    }
    c.finish();
}

void criterion3_pair_degeneration(const std::vector<NamedGraph>& corpus) {
    Criterion c(3, "k=2 degeneration: SW_2 = W, B_2 = betweenness, sum rule");
    for (const auto& [name, g] : corpus) {
        const int n = g.vertex_count();
        const BigCount w = wiener_index(g);
        if (steiner_wiener_k(g, 2).value != w) c.fail(name + ": SW_2 != W");

        const auto pair_report = k_steiner_betweenness(g, 2);
        const auto classical = geodesic_betweenness(g);
        ExactRatio classical_sum(0);
        for (int v = 0; v < n; ++v) {
            classical_sum += classical[v];
            if (pair_report.per_vertex[v] != classical[v])
                c.fail(name + ": B_2 differs at vertex " + std::to_string(v));
        }
        if (classical_sum != ExactRatio(w - binomial(n, 2)))
            c.fail(name + ": sum of betweenness != W - C(n,2)");
    }
    c.finish();
}

void criterion4_counting_oracle(const std::vector<NamedGraph>& corpus) {
    Criterion c(4, "matrix-tree counts equal explicit enumeration (exhaustive n<=6, sampled n=7,8)");
    // Exhaustive part: every terminal set of every corpus graph with n <= 6.
    for (const auto& [name, g] : corpus) {
        const int n = g.vertex_count();
        if (n > 6) continue;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) < 2) continue;
            check_counts_against_enumeration(c, g, name, members_of_mask(mask, n));
        }
    }
    // Sampled part: 200 random terminal sets per graph with n = 7 or 8.
    SplitMix64 rng(20240607);
    for (const auto& [name, g] : corpus) {
        const int n = g.vertex_count();
        if (n < 7 || n > 8) continue;
        for (int trial = 0; trial < 200; ++trial) {
            const int k =
                2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
            std::vector<int> members;
            while (static_cast<int>(members.size()) < k) {
                const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                if (std::find(members.begin(), members.end(), v) == members.end())
                    members.push_back(v);
            }
            check_counts_against_enumeration(c, g, name, members);
        }
    }
    c.finish();
}

void criterion5_modular_theorem() {
    Criterion c(5, "modular shortcut SW_3 = (n-2)/2 * W on trees, grids, K_{a,b}, Q_d; C_5 refused");
    std::vector<NamedGraph> modular_graphs;
    for (auto& entry : testutil::random_tree_corpus(25, 2, 12))
        modular_graphs.push_back(std::move(entry));
    for (int rows = 1; rows <= 4; ++rows)
        for (int cols = rows; cols <= 4; ++cols) {
            if (rows * cols < 2) continue;
            modular_graphs.push_back(
                {"grid" + std::to_string(rows) + "x" + std::to_string(cols),
                 generate_family(Family::grid, {rows, cols})});
        }
    for (int a = 1; a <= 4; ++a)
        for (int b = a; a + b <= 8; ++b) {
            modular_graphs.push_back({"K" + std::to_string(a) + "," + std::to_string(b),
                                      generate_family(Family::complete_bipartite, {a, b})});
        }
    for (int d = 1; d <= 3; ++d)
        modular_graphs.push_back({"Q" + std::to_string(d),
                                  generate_family(Family::hypercube, {d})});

    for (const auto& [name, g] : modular_graphs) {
        const auto witness = classify_modularity(g);
        if (!witness.is_modular) {
            c.fail(name + ": expected modular");
            continue;
        }
        // For n < 3 the index is an empty sum, so the shortcut must be 0.
        const BigCount direct =
            g.vertex_count() < 3 ? BigCount(0) : steiner_wiener_k(g, 3).value;
        if (sw3_via_wiener(g) != direct)
            c.fail(name + ": shortcut disagrees with the subset DP");
    }

    // C_5: refused with a witness, and the two sides genuinely differ.
    const Graph c5 = generate_family(Family::cycle, {5});
    const auto witness = classify_modularity(c5);
    if (witness.is_modular) c.fail("C5 misclassified as modular");
    bool refused = false;
    try {
        sw3_via_wiener(c5);
    } catch (const InputError&) {
        refused = true;
    }
    if (!refused) c.fail("C5 was not refused");
    if (steiner_wiener_k(c5, 3).value != 25) c.fail("SW_3(C5) != 25");
    if (make_ratio((5 - 2) * wiener_index(c5), 2) != make_ratio(45, 2))
        c.fail("C5 shortcut side != 45/2");
    c.finish();
}

void criterion6_hypercube_closed_form() {
    Criterion c(6, "hypercube closed form: B_3(v) = 4 on Q_3, average 0 on Q_2");
    const Graph q3 = generate_family(Family::hypercube, {3});
    const auto report = k_steiner_betweenness(q3, 3);
    const ExactRatio closed_form = hypercube_b3(3);
    if (closed_form != 4) c.fail("closed form at d=3 is not 4");
    for (int v = 0; v < 8; ++v)
        if (report.per_vertex[v] != closed_form)
            c.fail("Q3 vertex " + std::to_string(v) + " differs from the closed form");
    if (wiener_index(q3) != 48) c.fail("W(Q_3) != 48");

    const Graph q2 = generate_family(Family::hypercube, {2});
    const auto q2_report = k_steiner_betweenness(q2, 3);
    if (q2_report.average != 0) c.fail("average B_3 over Q_2 is not 0");
    if (hypercube_b3(2) != 0) c.fail("closed form at d=2 is not 0");
    c.finish();
}

void criterion7_total_theorem(const std::vector<NamedGraph>& corpus) {
    Criterion c(7, "total betweenness decomposition of SW, n <= 7 corpus plus named graphs");
    std::vector<NamedGraph> graphs;
    for (const auto& entry : corpus)
        if (entry.graph.vertex_count() <= 7) graphs.push_back(entry);
    graphs.push_back({"K2", generate_family(Family::complete, {2})});
    graphs.push_back({"K3", generate_family(Family::complete, {3})});
    graphs.push_back({"K1,3", generate_family(Family::star, {4})});
    graphs.push_back({"P5", generate_family(Family::path, {5})});
    graphs.push_back({"C6", generate_family(Family::cycle, {6})});

    for (const auto& [name, g] : graphs) {
        const auto report = total_steiner_betweenness(g);
        if (report.identity_residual != 0)
            c.fail(name + ": residual " + to_decimal(report.identity_residual));
    }
    c.finish();
}

void criterion8_diversity_axioms() {
    Criterion c(8, "diversity axioms (D1) and (D2), exhaustive over subset triples, n <= 6");
    for (const auto& [name, g] : testutil::small_zoo(6)) {
        const int n = g.vertex_count();
        const SteinerDistanceTable table(g);
        const std::uint32_t end = 1u << n;
        for (std::uint32_t mask = 0; mask < end; ++mask) {
            const int d = table.delta(mask);
            if (d < 0 || (d == 0) != (std::popcount(mask) <= 1)) {
                c.fail(name + ": D1 fails on a subset");
                break;
            }
        }
        long violations = 0;
        for (std::uint32_t a = 0; a < end; ++a)
            for (std::uint32_t b = 1; b < end; ++b) {
                const int ab = table.delta(a | b);
                for (std::uint32_t cc = 0; cc < end; ++cc)
                    if (ab + table.delta(b | cc) < table.delta(a | cc)) ++violations;
            }
        if (violations != 0)
            c.fail(name + ": D2 fails on " + std::to_string(violations) + " triples");
    }
    c.finish();
}

void criterion9_determinism() {
    Criterion c(9, "verify --suite all reports are byte-identical at 1, 2, and max threads");
    const std::vector<std::vector<std::string>> inputs = {
        {"--family", "gnp-connected", "--params", "8", "55", "--seed", "33"},
        {"--family", "hypercube", "--params", "3"},
    };
    for (const auto& one : inputs) {
        std::vector<std::string> outputs;
        for (const char* threads : {"1", "2", "0"}) {
            std::vector<std::string> args{"verify", "--suite", "all", "-k", "2", "4",
                                          "--threads", threads};
            args.insert(args.end(), one.begin(), one.end());
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            if (code != kExitPass) {
                c.fail("verify exited " + std::to_string(code) + ": " + err.str());
                break;
            }
            outputs.push_back(out.str());
        }
        if (outputs.size() == 3 && (outputs[0] != outputs[1] || outputs[0] != outputs[2]))
            c.fail("reports differ across thread counts");
    }
    c.finish();
}

} // namespace

int main() {
    const auto corpus = testutil::random_graph_corpus(200, 4, 9);
    criterion1_main_decomposition(corpus);
    criterion2_tree_decompositions();
    criterion3_pair_degeneration(corpus);
    criterion4_counting_oracle(corpus);
    criterion5_modular_theorem();
    criterion6_hypercube_closed_form();
    criterion7_total_theorem(corpus);
    criterion8_diversity_axioms();
    criterion9_determinism();

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
