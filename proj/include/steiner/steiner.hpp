#pragma once

// Umbrella header for the whole library.

#include "steiner/combinations.hpp"
#include "steiner/distances.hpp"
#include "steiner/edge_list.hpp"
#include "steiner/error.hpp"
#include "steiner/exact.hpp"
#include "steiner/families.hpp"
#include "steiner/graph.hpp"
#include "steiner/limits.hpp"
#include "steiner/modular.hpp"
#include "steiner/parallel.hpp"
#include "steiner/prng.hpp"
#include "steiner/spanning_trees.hpp"
#include "steiner/steiner_counting.hpp"
#include "steiner/steiner_distance.hpp"
#include "steiner/steiner_wiener.hpp"
#include "steiner/tree_decomposition.hpp"
