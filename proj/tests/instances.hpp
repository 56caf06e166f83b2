#pragma once

// Hand-built instances shared by the unit and acceptance suites. The two
// blob instances pin the recursion into a specific branch at the root; the
// lift instance forces the surgery lift deterministically.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "modk/generate.hpp"
#include "modk/multigraph.hpp"
#include "modk/treepack.hpp"

namespace instances {

using modk::EdgeId;
using modk::Multigraph;
using modk::TreePacking;
using modk::VertexId;

struct PackedGraph {
    Multigraph graph;
    TreePacking packing;
};

inline Multigraph k4() {
    return Multigraph::build(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// Two edge-disjoint spanning paths of K5 on vertices base+1..base+5.
inline std::vector<std::pair<VertexId, VertexId>> k5_path1(VertexId base) {
    return {{base + 1, base + 2}, {base + 2, base + 3}, {base + 3, base + 4}, {base + 4, base + 5}};
}
inline std::vector<std::pair<VertexId, VertexId>> k5_path2(VertexId base) {
    return {{base + 1, base + 3}, {base + 3, base + 5}, {base + 5, base + 2}, {base + 2, base + 4}};
}

inline std::vector<EdgeId> add_edges(Multigraph& g,
                                     const std::vector<std::pair<VertexId, VertexId>>& ends) {
    std::vector<EdgeId> ids;
    for (auto [a, b] : ends) ids.push_back(g.add_edge(a, b));
    return ids;
}

// Two doubled-K5 blobs joined by 4 cross edges, one per tree. The cross
// edges are the unique minimum cut (size 4 = lambda-2 for k=3), every tree
// crosses once, so the engine must take the split branch at the root.
inline PackedGraph two_blob_split() {
    Multigraph g;
    for (VertexId v = 1; v <= 10; ++v) g.add_vertex(v);

    auto t1 = add_edges(g, k5_path1(0));
    auto t2 = add_edges(g, k5_path2(0));
    auto t3 = add_edges(g, k5_path1(0));
    auto t4 = add_edges(g, k5_path2(0));
    auto u1 = add_edges(g, k5_path1(5));
    auto u2 = add_edges(g, k5_path2(5));
    auto u3 = add_edges(g, k5_path1(5));
    auto u4 = add_edges(g, k5_path2(5));
    EdgeId c1 = g.add_edge(1, 6);
    EdgeId c2 = g.add_edge(2, 7);
    EdgeId c3 = g.add_edge(3, 8);
    EdgeId c4 = g.add_edge(4, 9);
    // Fill both blobs up to doubled K5 so no internal cut can compete.
    auto fill = [&](VertexId base) {
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                int present = 0;
                for (const modk::Edge& e : g.edges()) {
                    VertexId a = base + i, b = base + j;
                    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++present;
                }
                for (int rep = present; rep < 2; ++rep) g.add_edge(base + i, base + j);
            }
    };
    fill(0);
    fill(5);

    auto join = [](std::vector<EdgeId> a, const std::vector<EdgeId>& b, EdgeId cross) {
        a.insert(a.end(), b.begin(), b.end());
        a.push_back(cross);
        std::sort(a.begin(), a.end());
        return a;
    };
    TreePacking p;
    p.trees = {join(t1, u1, c1), join(t2, u2, c2), join(t3, u3, c3), join(t4, u4, c4)};
    modk::require_valid_packing(g, p);
    return {std::move(g), std::move(p)};
}

// Two doubled-K5 blobs joined by 5 cross edges where the first tree
// crosses twice and is connected on blob one only: min cut 5 = lambda-1,
// both sides larger than one vertex, so the root takes the contract
// branch (contracting blob one).
inline PackedGraph two_blob_contract() {
    Multigraph g;
    for (VertexId v = 1; v <= 10; ++v) g.add_vertex(v);

    auto t1a = add_edges(g, k5_path1(0));
    auto t2a = add_edges(g, k5_path2(0));
    auto t3a = add_edges(g, k5_path1(0));
    auto t4a = add_edges(g, k5_path2(0));
    // Blob-two forest for tree one: components {6,7,8} and {9,10}.
    auto t1b = add_edges(g, {{6, 7}, {7, 8}, {9, 10}});
    auto t2b = add_edges(g, k5_path1(5));
    auto t3b = add_edges(g, k5_path2(5));
    auto t4b = add_edges(g, k5_path2(5));
    EdgeId c1 = g.add_edge(1, 6);
    EdgeId c2 = g.add_edge(2, 9);
    EdgeId c3 = g.add_edge(3, 8);
    EdgeId c4 = g.add_edge(4, 9);
    EdgeId c5 = g.add_edge(5, 10);

    // Top blob one up to doubled K5; blob two gets the remaining doubled-K5
    // multiplicity as well.
    auto count_between = [&](VertexId a, VertexId b) {
        int present = 0;
        for (const modk::Edge& e : g.edges())
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++present;
        return present;
    };
    for (VertexId base : {0, 5})
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                for (int rep = count_between(base + i, base + j); rep < 2; ++rep)
                    g.add_edge(base + i, base + j);

    auto join = [](std::vector<EdgeId> a, const std::vector<EdgeId>& b,
                   const std::vector<EdgeId>& cross) {
        a.insert(a.end(), b.begin(), b.end());
        a.insert(a.end(), cross.begin(), cross.end());
        std::sort(a.begin(), a.end());
        return a;
    };
    TreePacking p;
    p.trees = {join(t1a, t1b, {c1, c2}), join(t2a, t2b, {c3}), join(t3a, t3b, {c4}),
               join(t4a, t4b, {c5})};
    modk::require_valid_packing(g, p);
    return {std::move(g), std::move(p)};
}

// Mirror of two_blob_contract: the twice-crossing tree is connected on
// blob two (vertices 6..10), so the engine must contract side two.
inline PackedGraph two_blob_contract_mirrored() {
    Multigraph g;
    for (VertexId v = 1; v <= 10; ++v) g.add_vertex(v);

    // Blob-one forest for tree one: components {1,2,3} and {4,5}.
    auto t1a = add_edges(g, {{1, 2}, {2, 3}, {4, 5}});
    auto t2a = add_edges(g, k5_path2(0));
    auto t3a = add_edges(g, k5_path1(0));
    auto t4a = add_edges(g, k5_path2(0));
    auto t1b = add_edges(g, k5_path1(5));
    auto t2b = add_edges(g, k5_path2(5));
    auto t3b = add_edges(g, k5_path1(5));
    auto t4b = add_edges(g, k5_path2(5));
    EdgeId c1 = g.add_edge(1, 6);
    EdgeId c2 = g.add_edge(4, 9);
    EdgeId c3 = g.add_edge(2, 7);
    EdgeId c4 = g.add_edge(3, 8);
    EdgeId c5 = g.add_edge(5, 10);

    auto count_between = [&](VertexId a, VertexId b) {
        int present = 0;
        for (const modk::Edge& e : g.edges())
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++present;
        return present;
    };
    for (VertexId base : {0, 5})
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                for (int rep = count_between(base + i, base + j); rep < 2; ++rep)
                    g.add_edge(base + i, base + j);

    auto join = [](std::vector<EdgeId> a, const std::vector<EdgeId>& b,
                   const std::vector<EdgeId>& cross) {
        a.insert(a.end(), b.begin(), b.end());
        a.insert(a.end(), cross.begin(), cross.end());
        std::sort(a.begin(), a.end());
        return a;
    };
    TreePacking p;
    p.trees = {join(t1a, t1b, {c1, c2}), join(t2a, t2b, {c3}), join(t3a, t3b, {c4}),
               join(t4a, t4b, {c5})};
    modk::require_valid_packing(g, p);
    return {std::move(g), std::move(p)};
}

// Randomized contract-forcing instance: two heavily filled K5 blobs, five
// cross edges, the twice-crossing tree at a random index, connected on a
// random blob, with a random two-component forest on the other side.
inline PackedGraph two_blob_contract_variant(std::mt19937_64& rng) {
    Multigraph g;
    for (VertexId v = 1; v <= 10; ++v) g.add_vertex(v);
    bool mirror = modk::uniform_below(rng, 2) == 1;
    VertexId conn_base = mirror ? 5 : 0;  // blob hosting the connected restriction
    VertexId disc_base = mirror ? 0 : 5;
    int twice_index = static_cast<int>(modk::uniform_below(rng, 4));

    // Forest on the disconnected blob: shuffle its vertices, cut into two
    // runs, connect each run as a path.
    std::vector<VertexId> shuffled;
    for (int i = 1; i <= 5; ++i) shuffled.push_back(disc_base + i);
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[modk::uniform_below(rng, i)]);
    int split_at = 1 + static_cast<int>(modk::uniform_below(rng, 4));
    std::vector<std::pair<VertexId, VertexId>> forest_ends;
    for (int i = 1; i < split_at; ++i) forest_ends.push_back({shuffled[i - 1], shuffled[i]});
    for (int i = split_at + 1; i < 5; ++i) forest_ends.push_back({shuffled[i - 1], shuffled[i]});

    auto rand_vertex = [&](VertexId base) {
        return static_cast<VertexId>(base + 1 + modk::uniform_below(rng, 5));
    };

    std::vector<std::vector<EdgeId>> trees(4);
    for (int j = 0; j < 4; ++j) {
        if (j == twice_index) {
            auto conn = add_edges(g, j % 2 == 0 ? k5_path1(conn_base) : k5_path2(conn_base));
            auto forest = add_edges(g, forest_ends);
            // One cross edge into each forest component.
            EdgeId ca = g.add_edge(rand_vertex(conn_base), shuffled[modk::uniform_below(rng, split_at)]);
            EdgeId cb = g.add_edge(rand_vertex(conn_base),
                                   shuffled[split_at + modk::uniform_below(rng, 5 - split_at)]);
            trees[j] = conn;
            trees[j].insert(trees[j].end(), forest.begin(), forest.end());
            trees[j].push_back(ca);
            trees[j].push_back(cb);
        } else {
            auto a = add_edges(g, j % 2 == 0 ? k5_path1(0) : k5_path2(0));
            auto b = add_edges(g, j % 2 == 0 ? k5_path2(5) : k5_path1(5));
            EdgeId c = g.add_edge(rand_vertex(0), rand_vertex(5));
            trees[j] = a;
            trees[j].insert(trees[j].end(), b.begin(), b.end());
            trees[j].push_back(c);
        }
        std::sort(trees[j].begin(), trees[j].end());
    }

    // Fill both blobs to at least doubled K5 so the cross edges stay the
    // unique minimum cut.
    auto count_between = [&](VertexId a, VertexId b) {
        int present = 0;
        for (const modk::Edge& e : g.edges())
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++present;
        return present;
    };
    for (VertexId base : {0, 5})
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                for (int rep = count_between(base + i, base + j); rep < 2; ++rep)
                    g.add_edge(base + i, base + j);

    TreePacking p;
    p.trees = std::move(trees);
    modk::require_valid_packing(g, p);
    return {std::move(g), std::move(p)};
}

// Two quadrupled-K5 blobs joined by eight cross edges, one per tree: a
// lambda-2 cut for k = 4 (lambda = 10), forcing the split branch.
inline PackedGraph two_blob_split_k4() {
    Multigraph g;
    for (VertexId v = 1; v <= 10; ++v) g.add_vertex(v);
    std::vector<std::vector<EdgeId>> trees(8);
    std::vector<std::pair<VertexId, VertexId>> cross_ends = {
        {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}, {1, 7}, {2, 8}, {3, 9}};
    for (int j = 0; j < 8; ++j) {
        auto a = add_edges(g, j % 2 == 0 ? k5_path1(0) : k5_path2(0));
        auto b = add_edges(g, j % 2 == 0 ? k5_path1(5) : k5_path2(5));
        EdgeId c = g.add_edge(cross_ends[j].first, cross_ends[j].second);
        trees[j] = a;
        trees[j].insert(trees[j].end(), b.begin(), b.end());
        trees[j].push_back(c);
        std::sort(trees[j].begin(), trees[j].end());
    }
    auto count_between = [&](VertexId a, VertexId b) {
        int present = 0;
        for (const modk::Edge& e : g.edges())
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++present;
        return present;
    };
    for (VertexId base : {0, 5})
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                for (int rep = count_between(base + i, base + j); rep < 4; ++rep)
                    g.add_edge(base + i, base + j);

    TreePacking p;
    p.trees = std::move(trees);
    modk::require_valid_packing(g, p);
    return {std::move(g), std::move(p)};
}

// Three vertices, nine edges. The unique minimum cut isolates vertex 3
// (degree 5 = lambda-1), tree one holds two edges there, and with the
// all-zero boundary the recursive split inside H always orients the fresh
// edge from y to x, so the surgery lift fires deterministically.
inline PackedGraph surgery_lift() {
    Multigraph g;
    for (VertexId v = 1; v <= 3; ++v) g.add_vertex(v);
    EdgeId e1 = g.add_edge(1, 3);
    EdgeId e2 = g.add_edge(3, 2);
    EdgeId e3 = g.add_edge(1, 3);
    EdgeId e4 = g.add_edge(1, 2);
    EdgeId e5 = g.add_edge(2, 3);
    EdgeId e6 = g.add_edge(1, 2);
    EdgeId e7 = g.add_edge(2, 3);
    EdgeId e8 = g.add_edge(1, 2);
    g.add_edge(1, 2);  // packed in no tree

    TreePacking p;
    p.trees = {{e1, e2}, {e3, e4}, {e5, e6}, {e7, e8}};
    modk::require_valid_packing(g, p);
    return {std::move(g), std::move(p)};
}

struct BipartiteInstance {
    Multigraph graph;
    TreePacking packing;  // t spanning trees, every edge crossing
    std::vector<VertexId> a1;  // vertices 1..a
    std::vector<VertexId> a2;  // vertices a+1..a+b
};

// Union of t random spanning trees of K_{a,b} plus random cross edges
// until |E| is divisible by k (and `extra` more beyond that).
inline BipartiteInstance random_bipartite_tree_union(int a, int b, int t, int k, int extra,
                                                     std::mt19937_64& rng) {
    BipartiteInstance out;
    for (VertexId v = 1; v <= a + b; ++v) out.graph.add_vertex(v);
    for (VertexId v = 1; v <= a; ++v) out.a1.push_back(v);
    for (VertexId v = a + 1; v <= a + b; ++v) out.a2.push_back(v);

    auto random_cross_pair = [&]() {
        VertexId u = static_cast<VertexId>(1 + modk::uniform_below(rng, a));
        VertexId v = static_cast<VertexId>(a + 1 + modk::uniform_below(rng, b));
        return std::pair<VertexId, VertexId>{u, v};
    };

    for (int tree = 0; tree < t; ++tree) {
        // Attach vertices one at a time to an already attached vertex of
        // the opposite part; the result is a spanning tree with every edge
        // crossing.
        std::vector<VertexId> left_in, right_in;
        std::vector<EdgeId> ids;
        VertexId seed_left = static_cast<VertexId>(1 + modk::uniform_below(rng, a));
        VertexId seed_right = static_cast<VertexId>(a + 1 + modk::uniform_below(rng, b));
        left_in.push_back(seed_left);
        ids.push_back(out.graph.add_edge(seed_left, seed_right));
        right_in.push_back(seed_right);

        std::vector<VertexId> rest;
        for (VertexId v = 1; v <= a + b; ++v)
            if (v != seed_left && v != seed_right) rest.push_back(v);
        for (std::size_t i = rest.size(); i > 1; --i)
            std::swap(rest[i - 1], rest[modk::uniform_below(rng, i)]);

        for (VertexId v : rest) {
            bool is_left = v <= a;
            auto& opposite = is_left ? right_in : left_in;
            VertexId anchor = opposite[modk::uniform_below(rng, opposite.size())];
            ids.push_back(is_left ? out.graph.add_edge(v, anchor) : out.graph.add_edge(anchor, v));
            (is_left ? left_in : right_in).push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        out.packing.trees.push_back(std::move(ids));
    }

    for (int i = 0; i < extra; ++i) {
        auto [u, v] = random_cross_pair();
        out.graph.add_edge(u, v);
    }
    while (out.graph.edge_count() % k != 0) {
        auto [u, v] = random_cross_pair();
        out.graph.add_edge(u, v);
    }
    modk::require_valid_packing(out.graph, out.packing);
    return out;
}

}  // namespace instances
