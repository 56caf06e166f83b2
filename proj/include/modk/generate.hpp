#pragma once

#include <cstdint>
#include <random>

#include "modk/multigraph.hpp"
#include "modk/treepack.hpp"

namespace modk {

/// Uniform integer in [0, bound) drawn by rejection, so the stream of
/// values depends only on the engine state and never on library
/// distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct GeneratedInstance {
    Multigraph graph;
    TreePacking packing;  // certificate: the t generating trees
};

/// Union of t independently sampled uniform random spanning trees on n
/// labeled vertices (Aldous-Broder walk on the complete graph) plus
/// `extra` random non-loop edges. The packing certificate lists the t
/// trees. Same seed, same graph.
GeneratedInstance gen_tree_union(int n, int t, int extra, std::uint64_t seed);

}  // namespace modk
