#pragma once

#include <cstdint>

namespace steiner {

// Capacity guards. Exceeding any of them raises CapacityError; results
// are exact or refused, never approximated. The subset budget can be
// overridden from the CLI via the STEINER_MAX_SUBSETS environment variable.
struct Limits {
    std::uint64_t max_subsets = 10'000'000; // k-subset sweeps and superset enumerations
    int full_table_max_n = 14;              // whole-universe Steiner distance table
    int total_steiner_wiener_max_n = 14;    // 2^n subsets
    int total_betweenness_max_n = 12;
    int steiner_bruteforce_max_n = 12;
    int enumerate_trees_max_n = 9;
    int threads = 1; // worker cap; 0 = machine parallelism
};

} // namespace steiner
