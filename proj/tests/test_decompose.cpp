#include "doctest.h"
#include "instances.hpp"
#include "modk/decompose.hpp"
#include "oracles.hpp"

using namespace modk;

namespace {

Multigraph tripled_k44() {
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (int rep = 0; rep < 3; ++rep)
        for (VertexId u = 1; u <= 4; ++u)
            for (VertexId v = 5; v <= 8; ++v) ends.push_back({u, v});
    return Multigraph::build(8, ends);
}

}  // namespace

TEST_CASE("edge_subgraph keeps all vertices and the chosen edges") {
    Multigraph k4 = instances::k4();
    Multigraph sub = edge_subgraph(k4, {2, 5});
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.edge(2).a == k4.edge(2).a);
}

TEST_CASE("decompose a tripled K44 with one reserved tree per side") {
    Multigraph g = tripled_k44();
    REQUIRE(g.edge_count() == 48);
    std::vector<VertexId> a1{1, 2, 3, 4}, a2{5, 6, 7, 8};
    BipartiteDecomposition d = bipartite_decompose(g, a1, a2, 3, 1, LambdaBound::with_default(3));
    CHECK(decomposition_violation(g, 3, 1, d).empty());
    CHECK(d.trees_g1.tree_count() == 1);
    CHECK(d.trees_g2.tree_count() == 1);
    CHECK(static_cast<int>(d.edges_g1.size() + d.edges_g2.size()) == 48);
}

TEST_CASE("r = 0 reduces to a residual orientation") {
    std::mt19937_64 rng(55);
    instances::BipartiteInstance inst = instances::random_bipartite_tree_union(4, 4, 4, 3, 2, rng);
    BipartiteDecomposition d = bipartite_decompose(inst.graph, inst.a1, inst.a2, 3, 0,
                                                   LambdaBound::with_default(3));
    CHECK(decomposition_violation(inst.graph, 3, 0, d).empty());
    CHECK(d.trees_g1.tree_count() == 0);
    // With nothing reserved, every A1 vertex has all its G1 edges pointing
    // out of A1, degree divisible by 3.
    std::set<EdgeId> e1(d.edges_g1.begin(), d.edges_g1.end());
    for (VertexId v : inst.a1) {
        int deg = 0;
        for (EdgeId id : inst.graph.incident_edges(v))
            if (e1.count(id)) ++deg;
        CHECK(deg % 3 == 0);
    }
}

TEST_CASE("randomized decompositions with r in {1, 2} pass the checker") {
    std::mt19937_64 rng(56);
    for (int it = 0; it < 6; ++it) {
        int r = 1 + static_cast<int>(uniform_below(rng, 2));
        int t = 2 * r + 4;
        instances::BipartiteInstance inst = instances::random_bipartite_tree_union(
            3 + static_cast<int>(uniform_below(rng, 3)), 3 + static_cast<int>(uniform_below(rng, 3)),
            t, 3, static_cast<int>(uniform_below(rng, 4)), rng);
        BipartiteDecomposition d = bipartite_decompose(inst.graph, inst.a1, inst.a2, 3, r,
                                                       LambdaBound::with_default(3));
        CHECK(decomposition_violation(inst.graph, 3, r, d).empty());
    }
}

TEST_CASE("decompose error paths are distinct") {
    Multigraph g = tripled_k44();
    std::vector<VertexId> a1{1, 2, 3, 4}, a2{5, 6, 7, 8};

    // Divisibility.
    Multigraph bad = g;
    bad.add_edge(1, 5);
    CHECK_THROWS_AS(bipartite_decompose(bad, a1, a2, 3, 1, LambdaBound::with_default(3)),
                    DivisibilityError);

    // Parts not a partition.
    CHECK_THROWS_AS(bipartite_decompose(g, {1, 2, 3}, {5, 6, 7, 8}, 3, 1,
                                        LambdaBound::with_default(3)),
                    NotBipartiteError);

    // An edge inside a part.
    Multigraph inner = g;
    inner.add_edge(1, 2);
    inner.add_edge(1, 5);
    inner.add_edge(2, 5);  // keep |E| divisible by 3
    CHECK_THROWS_AS(bipartite_decompose(inner, a1, a2, 3, 1, LambdaBound::with_default(3)),
                    NotBipartiteError);

    // Not enough trees: K44 alone cannot host six disjoint spanning trees.
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (VertexId u = 1; u <= 4; ++u)
        for (VertexId v = 5; v <= 8; ++v) ends.push_back({u, v});
    ends.push_back({1, 5});
    ends.push_back({2, 6});  // 18 edges, divisible by 3
    Multigraph thin = Multigraph::build(8, ends);
    CHECK_THROWS_AS(bipartite_decompose(thin, a1, a2, 3, 1, LambdaBound::with_default(3)),
                    PackingUnavailableError);
}
