#include <sstream>

#include "doctest.h"
#include "instances.hpp"
#include "modk/flows.hpp"
#include "modk/generate.hpp"
#include "oracles.hpp"

using namespace modk;

namespace {

// Raw check that no orientation of g balances out- and in-degree mod 3.
bool mod3_orientation_exists(const Multigraph& g) {
    BoundaryMap f;
    f.k = 3;
    for (VertexId v : g.vertices()) f.values[v] = mod_k(2LL * g.degree(v), 3);
    return oracles::count_orientations(g, f) > 0;
}

}  // namespace

TEST_CASE("nz3_flow on two vertices with six parallel edges") {
    Multigraph g = Multigraph::build(2, std::vector<std::pair<VertexId, VertexId>>(6, {1, 2}));
    Flow3 flow = nz3_flow(g);
    CHECK(flow3_violation(g, flow).empty());
    // Out-degrees balance mod 3: out and in degrees differ by a multiple of 3.
    int out1 = flow.orientation.out_degree(g, 1);
    CHECK(mod_k(out1 - (6 - out1), 3) == 0);
}

TEST_CASE("K4 has no nowhere-zero 3-flow and nz3_flow reports the packing gap") {
    Multigraph k4 = instances::k4();
    CHECK(!mod3_orientation_exists(k4));
    CHECK_THROWS_AS(nz3_flow(k4), PackingUnavailableError);
}

TEST_CASE("nz3_flow on unions of four random spanning trees") {
    std::mt19937_64 rng(404);
    for (int it = 0; it < 10; ++it) {
        GeneratedInstance gen = gen_tree_union(10, 4, static_cast<int>(uniform_below(rng, 5)), rng());
        Flow3 flow = nz3_flow(gen.graph);
        CHECK(flow3_violation(gen.graph, flow).empty());
        // d+ = d- mod 3 at every vertex.
        for (VertexId v : gen.graph.vertices()) {
            int dplus = flow.orientation.out_degree(gen.graph, v);
            CHECK(mod_k(2 * dplus - gen.graph.degree(v), 3) == 0);
        }
    }
}

TEST_CASE("flow encodings: canonical form and direction flips are equivalent") {
    std::mt19937_64 rng(11);
    GeneratedInstance gen = gen_tree_union(8, 4, 2, rng());
    Flow3 flow = nz3_flow(gen.graph);

    Flow3 canon = canonical_flow(gen.graph, flow);
    CHECK(flow3_violation(gen.graph, canon).empty());
    for (const Edge& e : gen.graph.edges()) CHECK(canon.orientation.tail.at(e.id) == e.a);

    // Flipping any subset of edges (reverse direction, value 3 - v)
    // preserves conservation; flip every third edge.
    Flow3 flipped = flow;
    int i = 0;
    for (const Edge& e : gen.graph.edges()) {
        if (i++ % 3 != 0) continue;
        VertexId t = flipped.orientation.tail.at(e.id);
        flipped.orientation.tail[e.id] = e.other(t);
        flipped.value[e.id] = 3 - flipped.value[e.id];
    }
    CHECK(flow3_violation(gen.graph, flipped).empty());
}

TEST_CASE("flow violations are reported") {
    Multigraph g = Multigraph::build(2, {{1, 2}, {1, 2}, {1, 2}});
    Flow3 bad;
    bad.orientation.tail = {{1, 1}, {2, 1}, {3, 1}};
    bad.value = {{1, 1}, {2, 1}, {3, 1}};
    CHECK(flow3_violation(g, bad).empty());  // 3 units out of vertex 1: balanced
    bad.value[2] = 2;
    CHECK(!flow3_violation(g, bad).empty());
    bad.value[2] = 0;
    CHECK(!flow3_violation(g, bad).empty());
}

TEST_CASE("z3_check: K4 yields a witness confirmed by exhaustion") {
    Multigraph k4 = instances::k4();
    Z3CheckResult res = z3_check(k4);
    REQUIRE(res.status == Z3CheckResult::Status::Witness);
    REQUIRE(res.witness.has_value());
    CHECK(oracles::count_orientations(k4, *res.witness) == 0);
    // Lexicographically first failing boundary: all zeros.
    for (const auto& [v, r] : res.witness->values) CHECK(r == 0);
}

TEST_CASE("z3_check: small positives") {
    Multigraph triple = Multigraph::build(2, {{1, 2}, {1, 2}, {1, 2}});
    Z3CheckResult res = z3_check(triple);
    CHECK(res.status == Z3CheckResult::Status::Connected);
    CHECK(res.boundaries_checked == 3);  // one free vertex, three residues

    Multigraph single = Multigraph::build(1, {});
    CHECK(z3_check(single).status == Z3CheckResult::Status::Connected);
}

TEST_CASE("z3_check: budget exhaustion reports progress") {
    instances::PackedGraph blob = instances::two_blob_split();
    Z3CheckResult res = z3_check(blob.graph, 50);
    CHECK(res.status == Z3CheckResult::Status::BudgetExceeded);
    CHECK(res.nodes_spent >= 50);
}

TEST_CASE("graphs with four disjoint spanning trees pass z3_check at desk scale") {
    std::mt19937_64 rng(19);
    int done = 0;
    for (int it = 0; it < 20 && done < 3; ++it) {
        GeneratedInstance gen = gen_tree_union(5, 4, 1, rng());
        if (gen.graph.edge_count() > 20) continue;
        ++done;
        Z3CheckResult res = z3_check(gen.graph, 200'000'000);
        CHECK(res.status == Z3CheckResult::Status::Connected);
    }
    CHECK(done > 0);
}
