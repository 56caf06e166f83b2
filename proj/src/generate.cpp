#include "modk/generate.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace modk {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

GeneratedInstance gen_tree_union(int n, int t, int extra, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_tree_union: n must be at least 1");
    if (t < 1) throw std::invalid_argument("gen_tree_union: t must be at least 1");
    if (extra < 0) throw std::invalid_argument("gen_tree_union: extra must be nonnegative");
    if (n == 1 && extra > 0)
        throw std::invalid_argument("gen_tree_union: a single vertex admits no extra edges");

    std::mt19937_64 rng(seed);
    GeneratedInstance out;
    for (VertexId v = 1; v <= n; ++v) out.graph.add_vertex(v);

    for (int tree = 0; tree < t; ++tree) {
        std::vector<EdgeId> ids;
        if (n > 1) {
            // Aldous-Broder on K_n: walk uniformly, keep first-entry edges.
            std::set<VertexId> visited;
            VertexId cur = static_cast<VertexId>(1 + uniform_below(rng, n));
            visited.insert(cur);
            while (static_cast<int>(visited.size()) < n) {
                VertexId next = static_cast<VertexId>(1 + uniform_below(rng, n - 1));
                if (next >= cur) ++next;  // skip the current vertex
                if (!visited.count(next)) {
                    ids.push_back(out.graph.add_edge(cur, next));
                    visited.insert(next);
                }
                cur = next;
            }
        }
        out.packing.trees.push_back(std::move(ids));
    }

    for (int i = 0; i < extra; ++i) {
        VertexId u = static_cast<VertexId>(1 + uniform_below(rng, n));
        VertexId v = static_cast<VertexId>(1 + uniform_below(rng, n - 1));
        if (v >= u) ++v;
        out.graph.add_edge(u, v);
    }

    require_valid_packing(out.graph, out.packing);
    return out;
}

}  // namespace modk
