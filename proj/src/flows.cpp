#include "modk/flows.hpp"

#include <string>

namespace modk {

std::string flow3_violation(const Multigraph& g, const Flow3& flow) {
    if (static_cast<int>(flow.orientation.tail.size()) != g.edge_count() ||
        static_cast<int>(flow.value.size()) != g.edge_count())
        return "flow does not cover the edge set exactly";
    for (const Edge& e : g.edges()) {
        auto t = flow.orientation.tail.find(e.id);
        auto v = flow.value.find(e.id);
        if (t == flow.orientation.tail.end() || v == flow.value.end())
            return "edge " + std::to_string(e.id) + " carries no flow";
        if (t->second != e.a && t->second != e.b)
            return "edge " + std::to_string(e.id) + " tail is not an endpoint";
        if (v->second != 1 && v->second != 2)
            return "edge " + std::to_string(e.id) + " value " + std::to_string(v->second) +
                   " is outside {1, 2}";
    }
    for (VertexId u : g.vertices()) {
        long long net = 0;
        for (EdgeId id : g.incident_edges(u)) {
            int val = flow.value.at(id);
            net += flow.orientation.tail.at(id) == u ? val : -val;
        }
        if (mod_k(net, 3) != 0)
            return "flow not conserved mod 3 at vertex " + std::to_string(u);
    }
    return {};
}

Flow3 canonical_flow(const Multigraph& g, const Flow3& flow) {
    Flow3 out;
    for (const Edge& e : g.edges()) {
        VertexId t = flow.orientation.tail.at(e.id);
        int val = flow.value.at(e.id);
        if (t == e.a) {
            out.orientation.tail[e.id] = e.a;
            out.value[e.id] = val;
        } else {
            out.orientation.tail[e.id] = e.a;
            out.value[e.id] = 3 - val;
        }
    }
    return out;
}

Flow3 nz3_flow(const Multigraph& g, const LambdaBound& bound, std::uint64_t budget) {
    if (bound.k != 3) throw std::invalid_argument("nz3_flow: bound must use k = 3");

    // d+(v) = 2 d(v) mod 3 is the unique boundary forcing d+ = d- mod 3.
    BoundaryMap f;
    f.k = 3;
    long long sum = 0;
    for (VertexId v : g.vertices()) {
        f.values[v] = mod_k(2LL * g.degree(v), 3);
        sum += f.values[v];
    }
    // Sum of 2 d(v) is 4|E|, so validity holds automatically.
    if (mod_k(sum - g.edge_count(), 3) != 0)
        throw std::logic_error("nz3_flow: degree boundary failed its validity identity");

    OrientationResult res = f_orientation(g, f, bound, std::nullopt, budget);

    for (VertexId v : g.vertices()) {
        int dplus = res.orientation.out_degree(g, v);
        int dminus = g.degree(v) - dplus;
        if (mod_k(dplus - dminus, 3) != 0)
            throw std::logic_error("nz3_flow: orientation is not a mod-3 orientation at vertex " +
                                   std::to_string(v));
    }

    Flow3 flow;
    flow.orientation = std::move(res.orientation);
    for (const Edge& e : g.edges()) flow.value[e.id] = 1;

    std::string why = flow3_violation(g, flow);
    if (!why.empty()) throw std::logic_error("nz3_flow: " + why);
    return flow;
}

Z3CheckResult z3_check(const Multigraph& g, std::uint64_t budget) {
    std::vector<VertexId> verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    const int m = g.edge_count();

    Z3CheckResult result;
    // Free choice on the first n-1 vertices in lexicographic order; the
    // last residue is forced by the validity congruence.
    std::vector<int> prefix(std::max(n - 1, 0), 0);
    for (;;) {
        BoundaryMap f;
        f.k = 3;
        long long sum = 0;
        for (int i = 0; i + 1 < n; ++i) {
            f.values[verts[i]] = prefix[i];
            sum += prefix[i];
        }
        if (n >= 1) f.values[verts[n - 1]] = mod_k(m - sum, 3);

        std::uint64_t remaining = budget - result.nodes_spent;
        BruteForceResult bf = brute_force_orientation(g, f, remaining);
        result.nodes_spent += bf.nodes_explored;
        if (bf.status == SearchStatus::BudgetExceeded) {
            result.status = Z3CheckResult::Status::BudgetExceeded;
            return result;
        }
        ++result.boundaries_checked;
        if (bf.status == SearchStatus::Exhausted) {
            result.status = Z3CheckResult::Status::Witness;
            result.witness = std::move(f);
            return result;
        }

        int pos = n - 2;
        while (pos >= 0 && prefix[pos] == 2) prefix[pos--] = 0;
        if (pos < 0) break;
        ++prefix[pos];
    }
    result.status = Z3CheckResult::Status::Connected;
    return result;
}

}  // namespace modk
