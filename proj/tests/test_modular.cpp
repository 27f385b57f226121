#include <catch2/catch.hpp>

#include "corpus.hpp"
#include "steiner/steiner.hpp"

using namespace steiner;

TEST_CASE("classification: trees are median") {
    for (const auto& [name, t] : testutil::random_tree_corpus(12, 2, 10)) {
        INFO(name);
        const auto witness = classify_modularity(t);
        CHECK(witness.is_modular);
        CHECK(witness.is_median);
        CHECK_FALSE(witness.violating_triple.has_value());
    }
}

TEST_CASE("classification: odd cycles and long even cycles are not modular") {
    for (int n : {5, 6, 7, 8}) {
        const auto witness = classify_modularity(generate_family(Family::cycle, {n}));
        INFO("C" << n);
        CHECK_FALSE(witness.is_modular);
        CHECK(witness.violating_triple.has_value());
    }
    CHECK(classify_modularity(generate_family(Family::cycle, {4})).is_modular);
}

TEST_CASE("classification: K_{3,3} is modular but not median") {
    const auto witness = classify_modularity(generate_family(Family::complete_bipartite, {3, 3}));
    CHECK(witness.is_modular);
    CHECK_FALSE(witness.is_median);
    CHECK(witness.ambiguous_triple.has_value());
}

TEST_CASE("classification: hypercubes and grids are median") {
    for (int d = 1; d <= 3; ++d) {
        const auto witness = classify_modularity(generate_family(Family::hypercube, {d}));
        INFO("Q" << d);
        CHECK(witness.is_median);
    }
    for (auto [r, c] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
        const auto witness = classify_modularity(generate_family(Family::grid, {r, c}));
        INFO("grid " << r << "x" << c);
        CHECK(witness.is_median);
    }
}

TEST_CASE("modular graphs are bipartite") {
    for (const auto& [name, g] : testutil::small_zoo(9)) {
        INFO(name);
        if (classify_modularity(g).is_modular) CHECK(is_bipartite(g));
    }
}

TEST_CASE("SW_3 shortcut matches the subset sum on modular families") {
    std::vector<testutil::NamedGraph> modular_graphs = testutil::random_tree_corpus(10, 3, 12);
    auto add = [&](const std::string& name, Family f, std::vector<int> params) {
        modular_graphs.push_back({name, generate_family(f, params)});
    };
    add("grid3x3", Family::grid, {3, 3});
    add("grid4x4", Family::grid, {4, 4});
    add("grid2x4", Family::grid, {2, 4});
    add("Q2", Family::hypercube, {2});
    add("Q3", Family::hypercube, {3});
    add("K2,3", Family::complete_bipartite, {2, 3});
    add("K3,4", Family::complete_bipartite, {3, 4});
    add("K4,4", Family::complete_bipartite, {4, 4});

    for (const auto& [name, g] : modular_graphs) {
        INFO(name);
        if (g.vertex_count() < 3) continue;
        CHECK(sw3_via_wiener(g) == steiner_wiener_k(g, 3).value);
    }
}

TEST_CASE("documented shortcut values") {
    CHECK(sw3_via_wiener(generate_family(Family::path, {4})) == 10);
    CHECK(sw3_via_wiener(generate_family(Family::hypercube, {3})) == 144);
    CHECK(sw3_via_wiener(generate_family(Family::cycle, {4})) == 8);
}

TEST_CASE("non-modular inputs are refused with a witness triple") {
    const Graph c5 = generate_family(Family::cycle, {5});
    CHECK_THROWS_AS(sw3_via_wiener(c5), InputError);
    CHECK_THROWS_AS(average_b3_modular(c5), InputError);
    try {
        sw3_via_wiener(c5);
    } catch (const InputError& e) {
        CHECK_THAT(e.what(), Catch::Contains("triple"));
    }
    // C_5: both sides really differ (25 vs 45/2)
    CHECK(steiner_wiener_k(c5, 3).value == 25);
    CHECK(make_ratio((5 - 2) * wiener_index(c5), 2) == make_ratio(45, 2));
}

TEST_CASE("average B_3: documented values and cross-checks") {
    CHECK(average_b3_modular(generate_family(Family::cycle, {4})) == 0);
    CHECK(average_b3_modular(generate_family(Family::hypercube, {3})) == 4);
    CHECK(average_b3_modular(generate_family(Family::path, {4})) == make_ratio(1, 2));

    // closed form vs the counting route on modular graphs within caps
    std::vector<testutil::NamedGraph> graphs = testutil::random_tree_corpus(6, 3, 9);
    graphs.push_back({"Q3", generate_family(Family::hypercube, {3})});
    graphs.push_back({"grid2x3", generate_family(Family::grid, {2, 3})});
    graphs.push_back({"K2,3", generate_family(Family::complete_bipartite, {2, 3})});
    for (const auto& [name, g] : graphs) {
        INFO(name);
        if (g.vertex_count() < 3) continue;
        CHECK(average_b3_modular(g) == average_k_steiner_betweenness(g, 3));
    }
}

TEST_CASE("hypercube closed form") {
    CHECK(hypercube_b3(1) == 0);
    CHECK(hypercube_b3(2) == 0);
    CHECK(hypercube_b3(3) == 4);
    // exact rational evaluation at larger d
    CHECK(hypercube_b3(4) == ExactRatio(7 * (16 - 10)));
    CHECK_THROWS_AS(hypercube_b3(0), InputError);

    // matches the modular closed form on actual hypercubes
    for (int d = 1; d <= 3; ++d) {
        if (d == 1) continue; // K_2 has no triples; average_b3 needs n >= 3
        CHECK(hypercube_b3(d) == average_b3_modular(generate_family(Family::hypercube, {d})));
    }

    // vertex transitivity: every per-vertex value equals the closed form
    for (int d = 2; d <= 3; ++d) {
        const auto report = k_steiner_betweenness(generate_family(Family::hypercube, {d}), 3);
        for (const auto& value : report.per_vertex) CHECK(value == hypercube_b3(d));
    }
}
