#pragma once

#include <stdexcept>

#include "modk/multigraph.hpp"

namespace modk {

/// Thrown by global_min_cut on disconnected input; kept apart from the
/// std::invalid_argument precondition failures so callers can tell a bad
/// graph from a bad call.
class DisconnectedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size of a minimum edge cut. Returns 0 for disconnected graphs; throws
/// std::invalid_argument on a single vertex.
int edge_connectivity(const Multigraph& g);

/// A minimum edge cut with both connected sides, Stoer-Wagner on the
/// parallel-edge-collapsed weighted graph. Deterministic: ties are broken
/// by ascending vertex id, and side1 contains the smallest vertex id.
EdgeCut global_min_cut(const Multigraph& g);

}  // namespace modk
