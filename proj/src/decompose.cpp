#include "modk/decompose.hpp"

#include <algorithm>
#include <set>

namespace modk {

Multigraph edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& edges) {
    Multigraph out;
    for (VertexId v : g.vertices()) out.add_vertex(v);
    std::vector<EdgeId> sorted(edges);
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId id : sorted) {
        const Edge& e = g.edge(id);
        out.add_edge_with_id(e.id, e.a, e.b);
    }
    return out;
}

namespace {

int degree_within(const Multigraph& g, VertexId v, const std::set<EdgeId>& edges) {
    int d = 0;
    for (EdgeId id : g.incident_edges(v))
        if (edges.count(id)) ++d;
    return d;
}

}  // namespace

std::string decomposition_violation(const Multigraph& g, int k, int r,
                                    const BipartiteDecomposition& d) {
    std::set<EdgeId> e1(d.edges_g1.begin(), d.edges_g1.end());
    std::set<EdgeId> e2(d.edges_g2.begin(), d.edges_g2.end());
    if (static_cast<int>(e1.size() + e2.size()) != g.edge_count())
        return "edge sets do not cover E(G) exactly";
    for (EdgeId id : e1)
        if (e2.count(id)) return "edge " + std::to_string(id) + " appears on both sides";
    for (const Edge& e : g.edges())
        if (!e1.count(e.id) && !e2.count(e.id))
            return "edge " + std::to_string(e.id) + " assigned to neither side";

    for (VertexId v : d.part_a1)
        if (degree_within(g, v, e1) % k != 0)
            return "vertex " + std::to_string(v) + " has G1-degree not divisible by " +
                   std::to_string(k);
    for (VertexId v : d.part_a2)
        if (degree_within(g, v, e2) % k != 0)
            return "vertex " + std::to_string(v) + " has G2-degree not divisible by " +
                   std::to_string(k);

    if (d.trees_g1.tree_count() != r || d.trees_g2.tree_count() != r)
        return "each side must carry exactly " + std::to_string(r) + " trees";
    for (const auto& tree : d.trees_g1.trees)
        for (EdgeId id : tree)
            if (!e1.count(id)) return "a G1 tree uses an edge outside G1";
    for (const auto& tree : d.trees_g2.trees)
        for (EdgeId id : tree)
            if (!e2.count(id)) return "a G2 tree uses an edge outside G2";
    if (r > 0) {
        std::string why = packing_violation(edge_subgraph(g, d.edges_g1), d.trees_g1);
        if (!why.empty()) return "G1 trees: " + why;
        why = packing_violation(edge_subgraph(g, d.edges_g2), d.trees_g2);
        if (!why.empty()) return "G2 trees: " + why;
    }
    return {};
}

BipartiteDecomposition bipartite_decompose(const Multigraph& g,
                                           const std::vector<VertexId>& a1,
                                           const std::vector<VertexId>& a2,
                                           int k,
                                           int r,
                                           const LambdaBound& bound,
                                           std::uint64_t budget) {
    if (r < 0) throw std::invalid_argument("bipartite_decompose: r must be nonnegative");
    if (bound.k != k) throw std::invalid_argument("bipartite_decompose: bound modulus differs from k");

    std::set<VertexId> s1(a1.begin(), a1.end());
    std::set<VertexId> s2(a2.begin(), a2.end());
    for (VertexId v : g.vertices())
        if (s1.count(v) + s2.count(v) != 1)
            throw NotBipartiteError("bipartite_decompose: parts do not partition V at vertex " +
                                    std::to_string(v));
    if (static_cast<int>(s1.size() + s2.size()) != g.vertex_count())
        throw NotBipartiteError("bipartite_decompose: parts mention unknown vertices");
    for (const Edge& e : g.edges())
        if (s1.count(e.a) == s1.count(e.b))
            throw NotBipartiteError("bipartite_decompose: edge " + std::to_string(e.id) +
                                    " does not cross the bipartition");

    if (g.edge_count() % k != 0)
        throw DivisibilityError("bipartite_decompose: |E| = " + std::to_string(g.edge_count()) +
                                " is not divisible by k = " + std::to_string(k));

    const int total_trees = 2 * r + bound.lambda - 2;
    PackOutcome packed = pack_trees(g, total_trees);
    if (!packed.ok())
        throw PackingUnavailableError("bipartite_decompose: the graph has no " +
                                          std::to_string(total_trees) +
                                          " edge-disjoint spanning trees",
                                      std::move(packed.witness));

    TreePacking res1, res2, residual_packing;
    res1.trees.assign(packed.packing->trees.begin(), packed.packing->trees.begin() + r);
    res2.trees.assign(packed.packing->trees.begin() + r, packed.packing->trees.begin() + 2 * r);
    residual_packing.trees.assign(packed.packing->trees.begin() + 2 * r,
                                  packed.packing->trees.end());

    std::set<EdgeId> reserved1, reserved2;
    for (const auto& tree : res1.trees) reserved1.insert(tree.begin(), tree.end());
    for (const auto& tree : res2.trees) reserved2.insert(tree.begin(), tree.end());

    std::vector<EdgeId> residual_edges;
    for (const Edge& e : g.edges())
        if (!reserved1.count(e.id) && !reserved2.count(e.id)) residual_edges.push_back(e.id);
    Multigraph residual = edge_subgraph(g, residual_edges);

    // Residual boundary: out-degrees must cancel the reserved degrees mod k.
    BoundaryMap f;
    f.k = k;
    long long sum = 0;
    for (VertexId v : g.vertices()) {
        const std::set<EdgeId>& mine = s1.count(v) ? reserved1 : reserved2;
        f.values[v] = mod_k(-degree_within(g, v, mine), k);
        sum += f.values[v];
    }
    if (mod_k(sum - residual.edge_count(), k) != 0)
        throw std::logic_error("bipartite_decompose: residual boundary failed its validity identity");

    OrientationResult oriented = f_orientation(residual, f, bound, residual_packing, budget);

    BipartiteDecomposition d;
    d.part_a1.assign(s1.begin(), s1.end());
    d.part_a2.assign(s2.begin(), s2.end());
    d.trees_g1 = std::move(res1);
    d.trees_g2 = std::move(res2);
    d.edges_g1.assign(reserved1.begin(), reserved1.end());
    d.edges_g2.assign(reserved2.begin(), reserved2.end());
    for (EdgeId id : residual_edges) {
        VertexId tail = oriented.orientation.tail.at(id);
        if (s1.count(tail))
            d.edges_g1.push_back(id);
        else
            d.edges_g2.push_back(id);
    }
    std::sort(d.edges_g1.begin(), d.edges_g1.end());
    std::sort(d.edges_g2.begin(), d.edges_g2.end());

    std::string why = decomposition_violation(g, k, r, d);
    if (!why.empty()) throw std::logic_error("bipartite_decompose: " + why);
    return d;
}

}  // namespace modk
