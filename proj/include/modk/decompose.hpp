#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modk/multigraph.hpp"
#include "modk/orient.hpp"
#include "modk/treepack.hpp"

namespace modk {

class NotBipartiteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Decomposition of a bipartite graph into two spanning subgraphs: G_i
/// keeps r reserved spanning trees and every vertex of A_i has degree
/// divisible by k inside G_i.
struct BipartiteDecomposition {
    std::vector<VertexId> part_a1;
    std::vector<VertexId> part_a2;
    std::vector<EdgeId> edges_g1;
    std::vector<EdgeId> edges_g2;
    TreePacking trees_g1;
    TreePacking trees_g2;
};

/// Spanning subgraph of g on the given edge ids (all vertices kept).
Multigraph edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& edges);

/// Empty string when d satisfies every decomposition invariant against g,
/// k and r, else the first violation.
std::string decomposition_violation(const Multigraph& g, int k, int r,
                                    const BipartiteDecomposition& d);

/// Decompose a bipartite graph with 2r + lambda - 2 edge-disjoint spanning
/// trees and k | |E|: reserve r trees per side, orient the residual graph
/// so that residual out-degrees cancel the reserved degrees mod k, and
/// assign each residual edge to the side of its tail.
BipartiteDecomposition bipartite_decompose(const Multigraph& g,
                                           const std::vector<VertexId>& a1,
                                           const std::vector<VertexId>& a2,
                                           int k,
                                           int r,
                                           const LambdaBound& bound,
                                           std::uint64_t budget = kDefaultNodeBudget);

}  // namespace modk
