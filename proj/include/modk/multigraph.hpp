#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modk {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id = 0;
    VertexId a = 0;
    VertexId b = 0;

    bool incident_to(VertexId v) const { return v == a || v == b; }
    VertexId other(VertexId v) const { return v == a ? b : a; }
};

/// Loopless undirected multigraph with stable edge identifiers.
///
/// Parallel edges are allowed, loops are rejected. Edge ids survive
/// subgraph extraction and contraction, so edge sets computed on one
/// graph (spanning trees, cuts) remain meaningful on derived graphs.
class Multigraph {
public:
    Multigraph() = default;

    /// Vertices 1..n, edge ids assigned 1..m in input order.
    /// Throws std::invalid_argument naming the offending entry on a loop
    /// or an endpoint out of range.
    static Multigraph build(int n, const std::vector<std::pair<VertexId, VertexId>>& endpoints);

    int vertex_count() const { return static_cast<int>(incidence_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    /// Vertex ids in ascending order.
    std::vector<VertexId> vertices() const;

    bool has_vertex(VertexId v) const { return incidence_.count(v) != 0; }
    bool has_edge(EdgeId e) const;

    /// Throws std::out_of_range if the id is not present.
    const Edge& edge(EdgeId e) const;

    int degree(VertexId v) const;

    /// Ids of edges incident to v, ascending. O(deg) enumeration.
    const std::vector<EdgeId>& incident_edges(VertexId v) const;

    VertexId smallest_vertex() const;
    VertexId max_vertex_id() const { return max_vertex_id_; }
    EdgeId max_edge_id() const { return max_edge_id_; }

    // Builder-style mutation; library operations never mutate their inputs.
    void add_vertex(VertexId v);
    VertexId add_fresh_vertex();
    EdgeId add_edge(VertexId a, VertexId b);
    void add_edge_with_id(EdgeId id, VertexId a, VertexId b);

private:
    std::vector<Edge> edges_;                            // ascending by id
    std::map<VertexId, std::vector<EdgeId>> incidence_;  // doubles as the vertex set
    VertexId max_vertex_id_ = 0;
    EdgeId max_edge_id_ = 0;
};

/// A minimum (or otherwise) edge cut together with the vertex bipartition
/// it separates. side1 holds the smallest vertex id of the graph.
struct EdgeCut {
    std::vector<EdgeId> cut_edges;  // ascending
    std::vector<VertexId> side1;    // ascending
    std::vector<VertexId> side2;    // ascending

    bool in_side1(VertexId v) const;
    int size() const { return static_cast<int>(cut_edges.size()); }
};

/// What replace_degree_vertex did: the removed vertex, every edge deleted
/// with it, and the fresh edge joining two of its former neighbours.
struct VertexSurgeryRecord {
    VertexId removed_vertex = 0;
    EdgeId new_edge = 0;
    VertexId x = 0;
    VertexId y = 0;
    std::vector<EdgeId> removed_edges;  // ascending
};

struct ContractionResult {
    Multigraph graph;
    VertexId merged_vertex = 0;
    std::map<EdgeId, EdgeId> edge_map;  // identity on surviving edges
};

/// Partition of V(g) into maximal connected vertex sets, each ascending,
/// ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Multigraph& g);

bool is_connected(const Multigraph& g);

/// Subgraph on `keep` with every edge whose endpoints both lie in `keep`,
/// edge ids unchanged.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& keep);

/// Merge all vertices of `side` into one fresh vertex, deleting edges
/// internal to the side. Crossing edges keep their ids. `side` must be a
/// nonempty proper subset of V(g).
ContractionResult contract_side(const Multigraph& g, const std::vector<VertexId>& side);

/// Remove u and all its edges, then add one fresh edge xy. x and y must be
/// distinct neighbours of u; the result stays loopless. The fresh edge id
/// defaults to max_edge_id()+1; callers juggling several derived graphs
/// (the orientation engine) pass an id from their own allocator so ids
/// never collide across subproblems.
std::pair<Multigraph, VertexSurgeryRecord> replace_degree_vertex(const Multigraph& g,
                                                                 VertexId u,
                                                                 VertexId x,
                                                                 VertexId y,
                                                                 EdgeId fresh_edge_id = 0);

}  // namespace modk
