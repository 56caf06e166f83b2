#include "modk/mincut.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace modk {

namespace {

// Supervertex state for the contraction phases. Keyed by representative:
// the smallest original vertex id a supervertex contains, which also
// drives every tie-break.
struct SuperGraph {
    std::map<VertexId, std::set<VertexId>> members;
    std::map<VertexId, std::map<VertexId, long long>> weight;

    explicit SuperGraph(const Multigraph& g) {
        for (VertexId v : g.vertices()) {
            members[v] = {v};
            weight[v];
        }
        for (const Edge& e : g.edges()) {
            weight[e.a][e.b] += 1;
            weight[e.b][e.a] += 1;
        }
    }

    void merge(VertexId into, VertexId from) {
        members[into].merge(members[from]);
        members.erase(from);
        for (auto& [other, w] : weight[from]) {
            if (other == into) continue;
            weight[into][other] += w;
            weight[other][into] += w;
            weight[other].erase(from);
        }
        weight[into].erase(from);
        weight.erase(from);
        // Representative stays the smaller id.
        if (from < into) {
            auto node = members.extract(into);
            node.key() = from;
            members.insert(std::move(node));
            auto wnode = weight.extract(into);
            wnode.key() = from;
            weight.insert(std::move(wnode));
            for (auto& [other, adj] : weight) {
                if (other == from) continue;
                auto it = adj.find(into);
                if (it != adj.end()) {
                    adj[from] += it->second;
                    adj.erase(it);
                }
            }
        }
    }
};

}  // namespace

EdgeCut global_min_cut(const Multigraph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("global_min_cut: need at least two vertices");
    if (!is_connected(g)) throw DisconnectedGraphError("global_min_cut: graph is disconnected");

    SuperGraph sg(g);
    long long best = std::numeric_limits<long long>::max();
    std::set<VertexId> best_side;

    while (sg.members.size() > 1) {
        // Maximum adjacency search from the smallest representative.
        VertexId start = sg.members.begin()->first;
        std::map<VertexId, long long> attach;
        std::set<VertexId> in_a{start};
        for (const auto& [v, w] : sg.weight.at(start)) attach[v] = w;

        VertexId last = start, prev = start;
        while (in_a.size() < sg.members.size()) {
            VertexId pick = 0;
            long long pick_w = -1;
            for (const auto& [v, _] : sg.members) {
                if (in_a.count(v)) continue;
                long long w = 0;
                if (auto it = attach.find(v); it != attach.end()) w = it->second;
                if (w > pick_w) {  // strict: ties keep the smaller id seen first
                    pick_w = w;
                    pick = v;
                }
            }
            prev = last;
            last = pick;
            in_a.insert(pick);
            for (const auto& [v, w] : sg.weight.at(pick))
                if (!in_a.count(v)) attach[v] += w;
        }

        long long cut_of_phase = 0;
        for (const auto& [v, w] : sg.weight.at(last)) cut_of_phase += w;
        if (cut_of_phase < best) {
            best = cut_of_phase;
            best_side = sg.members.at(last);
        }
        sg.merge(prev, last);
    }

    // Expand the weighted cut back to edge ids and orient the labels so that
    // side1 holds the smallest vertex of the whole graph.
    std::vector<VertexId> all = g.vertices();
    bool flip = best_side.count(all.front()) == 0;
    EdgeCut cut;
    for (VertexId v : all) {
        bool inside = best_side.count(v) != 0;
        if (inside != flip)
            cut.side1.push_back(v);
        else
            cut.side2.push_back(v);
    }
    for (const Edge& e : g.edges()) {
        bool a1 = std::binary_search(cut.side1.begin(), cut.side1.end(), e.a);
        bool b1 = std::binary_search(cut.side1.begin(), cut.side1.end(), e.b);
        if (a1 != b1) cut.cut_edges.push_back(e.id);
    }

    if (static_cast<long long>(cut.cut_edges.size()) != best)
        throw std::logic_error("global_min_cut: weight does not match expanded cut");
    // Minimum cuts of a connected graph leave two connected sides.
    if (!is_connected(induced_subgraph(g, cut.side1)) ||
        !is_connected(induced_subgraph(g, cut.side2)))
        throw std::logic_error("global_min_cut: cut side is not connected");
    return cut;
}

int edge_connectivity(const Multigraph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("edge_connectivity: need at least two vertices");
    if (!is_connected(g)) return 0;
    return global_min_cut(g).size();
}

}  // namespace modk
