#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modk/multigraph.hpp"

namespace modk {

/// Pairwise edge-disjoint spanning trees of a host graph, each tree a set
/// of edge ids (ascending). Validity against the host is checked with
/// packing_violation / require_valid_packing.
struct TreePacking {
    std::vector<std::vector<EdgeId>> trees;

    int tree_count() const { return static_cast<int>(trees.size()); }
};

/// Either a packing with the requested number of trees, or a vertex
/// partition P certifying none exists (fewer than t*(|P|-1) cross edges).
struct PackOutcome {
    std::optional<TreePacking> packing;
    std::vector<std::vector<VertexId>> witness;

    bool ok() const { return packing.has_value(); }
};

/// Empty string when p is a valid packing of g, else a description of the
/// first violated invariant.
std::string packing_violation(const Multigraph& g, const TreePacking& p);

/// Throws std::logic_error carrying the violation message.
void require_valid_packing(const Multigraph& g, const TreePacking& p);

/// Find t edge-disjoint spanning trees by matroid-union augmentation.
/// Exact: success is certified by the packing invariants, failure by a
/// violating partition. Throws std::invalid_argument for t <= 0.
PackOutcome pack_trees(const Multigraph& g, int t);

/// Number of cut edges each tree contains.
std::vector<int> crossings_per_tree(const TreePacking& p, const EdgeCut& cut);

/// True when the tree's edges with both endpoints in `side` connect all of
/// `side`.
bool side_restriction_connected(const Multigraph& g,
                                const std::vector<EdgeId>& tree,
                                const std::vector<VertexId>& side);

/// Restrict every tree to the edges of side_graph and validate the result
/// as a packing of side_graph.
TreePacking restrict_packing(const Multigraph& side_graph, const TreePacking& p);

/// When every tree crosses the cut exactly once, the restrictions to the
/// two sides are packings of the induced side graphs. Returns nullopt if
/// some tree crosses more than once (use the contraction route instead).
std::optional<std::pair<TreePacking, TreePacking>> split_packing(const Multigraph& g,
                                                                 const TreePacking& p,
                                                                 const EdgeCut& cut);

/// Packing of the graph obtained by contracting one side of the cut: each
/// tree keeps its surviving edges (kept-side edges plus its cut edges).
/// Requires the twice-crossing tree, if any, to have a connected
/// restriction on the contracted side; throws std::invalid_argument
/// otherwise (the caller should contract the other side).
TreePacking contract_packing(const Multigraph& g,
                             const TreePacking& p,
                             const EdgeCut& cut,
                             bool contract_side1,
                             const ContractionResult& contracted);

/// Packing of H after replace_degree_vertex: the tree holding two edges at
/// the removed vertex trades them for the fresh xy edge, every other tree
/// drops its single edge at the removed vertex. Structural precondition
/// violations throw std::invalid_argument naming the offending tree.
TreePacking surgery_packing(const Multigraph& g,
                            const TreePacking& p,
                            const VertexSurgeryRecord& rec,
                            const Multigraph& h);

}  // namespace modk
