#pragma once

#include <array>
#include <optional>
#include <string>

#include "steiner/distances.hpp"
#include "steiner/error.hpp"
#include "steiner/exact.hpp"
#include "steiner/graph.hpp"

namespace steiner {

// Recognition result. A graph is modular when every vertex triple has a
// vertex lying on shortest paths between all three pairs, and median when
// that vertex is always unique. violating_triple witnesses a failure of
// modularity; ambiguous_triple witnesses non-uniqueness for modular
// graphs that are not median.
struct ModularityWitness {
    bool is_modular = true;
    bool is_median = true;
    std::optional<std::array<int, 3>> violating_triple;
    std::optional<std::array<int, 3>> ambiguous_triple;
};

// Brute force over all unordered triples with a precomputed distance
// matrix; O(n^4). Triples with repeated vertices are satisfied by the
// repeated vertex itself and are skipped.
inline ModularityWitness classify_modularity(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.vertex_count();
    ModularityWitness witness;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                int medians = 0;
                for (int w = 0; w < n && medians < 2; ++w) {
                    if (dm(x, w) + dm(w, y) == dm(x, y) &&
                        dm(y, w) + dm(w, z) == dm(y, z) &&
                        dm(x, w) + dm(w, z) == dm(x, z))
                        ++medians;
                }
                if (medians == 0) {
                    witness.is_modular = false;
                    witness.is_median = false;
                    witness.violating_triple = {x, y, z};
                    return witness;
                }
                if (medians > 1 && witness.is_median) {
                    witness.is_median = false;
                    witness.ambiguous_triple = {x, y, z};
                }
            }
    return witness;
}

inline ModularityWitness classify_modularity(const Graph& g) {
    return classify_modularity(g, all_pairs_distances(g));
}

namespace detail {

inline std::string triple_string(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
           std::to_string(t[2]) + ")";
}

} // namespace detail

// Steiner 3-Wiener index of a modular graph, computed from the Wiener
// index alone: SW_3 = (n-2)/2 * W. Refuses non-modular inputs, naming a
// violating triple; (n-2)*W is always even on modular graphs, so the
// division is exact and inexactness is an internal error.
inline BigCount sw3_via_wiener(const Graph& g, const DistanceMatrix& dm,
                               const ModularityWitness& witness) {
    if (!witness.is_modular)
        throw InputError("sw3_via_wiener requires a modular graph; triple " +
                         detail::triple_string(*witness.violating_triple) +
                         " has no common shortest-path vertex");
    const int n = g.vertex_count();
    BigCount product = (n - 2) * wiener_index(g, dm);
    if (product % 2 != 0)
        throw Error("internal inconsistency: (n-2)*W must be even on modular graphs");
    return product / 2;
}

inline BigCount sw3_via_wiener(const Graph& g) {
    const DistanceMatrix dm = all_pairs_distances(g);
    return sw3_via_wiener(g, dm, classify_modularity(g, dm));
}

// Average 3-Steiner betweenness of a modular graph in closed form:
// (1/n) * ((n-2)/2 * W - 2*C(n,3)).
inline ExactRatio average_b3_modular(const Graph& g, const DistanceMatrix& dm,
                                     const ModularityWitness& witness) {
    if (!witness.is_modular)
        throw InputError("average_b3_modular requires a modular graph; triple " +
                         detail::triple_string(*witness.violating_triple) +
                         " has no common shortest-path vertex");
    const int n = g.vertex_count();
    ExactRatio sw3(sw3_via_wiener(g, dm, witness));
    return (sw3 - 2 * ExactRatio(binomial(n, 3))) / n;
}

inline ExactRatio average_b3_modular(const Graph& g) {
    const DistanceMatrix dm = all_pairs_distances(g);
    return average_b3_modular(g, dm, classify_modularity(g, dm));
}

// Closed form for the 3-Steiner betweenness of any vertex of the
// d-dimensional hypercube: (2^(d-1) - 1) * (d*2^(d-2) - (2^(d+1) - 2)/3).
// Hypercubes are vertex-transitive, so this is simultaneously the average
// and every per-vertex value. Evaluated in exact rationals; d = 1 and
// d = 2 collapse to 0.
inline ExactRatio hypercube_b3(int d) {
    if (d < 1) throw InputError("hypercube dimension must be at least 1");
    const ExactRatio half_cube = make_ratio(pow2(static_cast<unsigned long>(d)), 2); // 2^(d-1)
    const ExactRatio quarter_cube = make_ratio(pow2(static_cast<unsigned long>(d)), 4);
    const ExactRatio first = half_cube - 1;
    const ExactRatio second =
        d * quarter_cube - make_ratio(pow2(static_cast<unsigned long>(d + 1)) - 2, 3);
    return first * second;
}

} // namespace steiner
