#include "modk/treepack.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace modk {

namespace {

struct Dsu {
    std::map<VertexId, VertexId> parent;

    void reset(const std::vector<VertexId>& vs) {
        parent.clear();
        for (VertexId v : vs) parent[v] = v;
    }
    VertexId find(VertexId v) {
        VertexId r = v;
        while (parent[r] != r) r = parent[r];
        while (parent[v] != r) {
            VertexId next = parent[v];
            parent[v] = r;
            v = next;
        }
        return r;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Unique path between u and v inside the forest given as an edge set;
// empty when they are in different trees of the forest.
std::vector<EdgeId> forest_path(const Multigraph& g,
                                const std::set<EdgeId>& forest,
                                VertexId u,
                                VertexId v) {
    std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
    for (EdgeId id : forest) {
        const Edge& e = g.edge(id);
        adj[e.a].push_back({id, e.b});
        adj[e.b].push_back({id, e.a});
    }
    std::map<VertexId, EdgeId> via;
    std::deque<VertexId> q{u};
    via[u] = 0;
    while (!q.empty()) {
        VertexId cur = q.front();
        q.pop_front();
        if (cur == v) break;
        for (auto [id, next] : adj[cur]) {
            if (via.count(next)) continue;
            via[next] = id;
            q.push_back(next);
        }
    }
    if (!via.count(v)) return {};
    std::vector<EdgeId> path;
    VertexId cur = v;
    while (cur != u) {
        EdgeId id = via[cur];
        path.push_back(id);
        cur = g.edge(id).other(cur);
    }
    return path;
}

// State of the incremental matroid-union search.
struct Packer {
    const Multigraph& g;
    int t;
    std::vector<std::set<EdgeId>> forests;   // 1..t
    std::map<EdgeId, int> forest_of;         // 0 = not packed
    std::vector<Dsu> dsu;                    // connectivity per forest
    std::vector<VertexId> verts;

    Packer(const Multigraph& graph, int count) : g(graph), t(count) {
        verts = g.vertices();
        forests.resize(t + 1);
        dsu.resize(t + 1);
        for (int j = 1; j <= t; ++j) dsu[j].reset(verts);
        for (const Edge& e : g.edges()) forest_of[e.id] = 0;
    }

    void rebuild(int j) {
        dsu[j].reset(verts);
        for (EdgeId id : forests[j]) {
            const Edge& e = g.edge(id);
            if (!dsu[j].unite(e.a, e.b))
                throw std::logic_error("pack_trees: forest " + std::to_string(j) + " acquired a cycle");
        }
    }

    struct Label {
        EdgeId parent;  // 0 at a search root
        int forest;     // forest the labeled edge currently belongs to
    };

    // BFS over the exchange graph. Roots are the given edges; on finding a
    // placeable edge the swap chain is applied and true returned. With
    // apply=false this computes the label closure for the witness.
    bool augment(const std::vector<EdgeId>& roots, bool apply, std::map<EdgeId, Label>* out_labels) {
        std::map<EdgeId, Label> labels;
        std::deque<EdgeId> q;
        for (EdgeId r : roots) {
            labels[r] = {0, forest_of[r]};
            q.push_back(r);
        }
        while (!q.empty()) {
            EdgeId cur = q.front();
            q.pop_front();
            const Edge& e = g.edge(cur);
            for (int j = 1; j <= t; ++j) {
                if (forest_of[cur] == j) continue;
                if (dsu[j].find(e.a) != dsu[j].find(e.b)) {
                    if (!apply)
                        throw std::logic_error("pack_trees: witness search found an augmenting chain");
                    apply_chain(cur, j, labels);
                    return true;
                }
                for (EdgeId on_cycle : forest_path(g, forests[j], e.a, e.b)) {
                    if (labels.count(on_cycle)) continue;
                    labels[on_cycle] = {cur, j};
                    q.push_back(on_cycle);
                }
            }
        }
        if (out_labels) *out_labels = std::move(labels);
        return false;
    }

    void apply_chain(EdgeId last, int dest, const std::map<EdgeId, Label>& labels) {
        std::set<int> touched{dest};
        EdgeId cur = last;
        for (;;) {
            const Label& lab = labels.at(cur);
            int old = forest_of[cur];
            if (old != 0) {
                forests[old].erase(cur);
                touched.insert(old);
            }
            forests[dest].insert(cur);
            forest_of[cur] = dest;
            if (lab.parent == 0) break;
            dest = old;  // the parent fills the forest cur vacated
            cur = lab.parent;
        }
        for (int j : touched) rebuild(j);
    }
};

std::vector<std::vector<VertexId>> partition_from_labels(const Multigraph& g,
                                                         const std::map<EdgeId, Packer::Label>& labels) {
    Dsu groups;
    groups.reset(g.vertices());
    for (const auto& [id, _] : labels) {
        const Edge& e = g.edge(id);
        groups.unite(e.a, e.b);
    }
    std::map<VertexId, std::vector<VertexId>> classes;
    for (VertexId v : g.vertices()) classes[groups.find(v)].push_back(v);
    std::vector<std::vector<VertexId>> parts;
    for (auto& [_, vs] : classes) parts.push_back(std::move(vs));
    return parts;
}

int cross_edge_count(const Multigraph& g, const std::vector<std::vector<VertexId>>& parts) {
    std::map<VertexId, int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (VertexId v : parts[i]) part_of[v] = static_cast<int>(i);
    int cross = 0;
    for (const Edge& e : g.edges())
        if (part_of.at(e.a) != part_of.at(e.b)) ++cross;
    return cross;
}

std::set<EdgeId> edge_id_set(const Multigraph& g) {
    std::set<EdgeId> ids;
    for (const Edge& e : g.edges()) ids.insert(e.id);
    return ids;
}

}  // namespace

std::string packing_violation(const Multigraph& g, const TreePacking& p) {
    const int n = g.vertex_count();
    std::set<EdgeId> seen;
    for (int j = 0; j < p.tree_count(); ++j) {
        const auto& tree = p.trees[j];
        const std::string label = "tree " + std::to_string(j + 1);
        if (static_cast<int>(tree.size()) != n - 1)
            return label + " has " + std::to_string(tree.size()) + " edges, expected " +
                   std::to_string(n - 1);
        Dsu dsu;
        dsu.reset(g.vertices());
        for (EdgeId id : tree) {
            if (!g.has_edge(id)) return label + " uses unknown edge " + std::to_string(id);
            if (!seen.insert(id).second)
                return label + " shares edge " + std::to_string(id) + " with another tree";
            const Edge& e = g.edge(id);
            if (!dsu.unite(e.a, e.b)) return label + " contains a cycle";
        }
        // n-1 acyclic edges span all n vertices.
    }
    return {};
}

void require_valid_packing(const Multigraph& g, const TreePacking& p) {
    std::string why = packing_violation(g, p);
    if (!why.empty()) throw std::logic_error("invalid tree packing: " + why);
}

PackOutcome pack_trees(const Multigraph& g, int t) {
    if (t <= 0) throw std::invalid_argument("pack_trees: tree count must be positive");

    Packer packer(g, t);
    for (const Edge& e : g.edges()) packer.augment({e.id}, true, nullptr);

    const int n = g.vertex_count();
    bool complete = true;
    for (int j = 1; j <= t; ++j)
        if (static_cast<int>(packer.forests[j].size()) != n - 1) complete = false;

    PackOutcome out;
    if (complete) {
        TreePacking p;
        for (int j = 1; j <= t; ++j)
            p.trees.emplace_back(packer.forests[j].begin(), packer.forests[j].end());
        require_valid_packing(g, p);
        out.packing = std::move(p);
        return out;
    }

    // Maximality means no free edge can be augmented; the label closure of
    // all free edges collapses into vertex classes that violate the
    // Nash-Williams/Tutte count.
    std::vector<EdgeId> free_edges;
    for (const Edge& e : g.edges())
        if (packer.forest_of[e.id] == 0) free_edges.push_back(e.id);
    std::map<EdgeId, Packer::Label> labels;
    if (!free_edges.empty()) packer.augment(free_edges, false, &labels);
    out.witness = partition_from_labels(g, labels);

    int parts = static_cast<int>(out.witness.size());
    if (cross_edge_count(g, out.witness) >= t * (parts - 1))
        throw std::logic_error("pack_trees: failure witness does not violate the partition bound");
    return out;
}

std::vector<int> crossings_per_tree(const TreePacking& p, const EdgeCut& cut) {
    std::set<EdgeId> cut_set(cut.cut_edges.begin(), cut.cut_edges.end());
    std::vector<int> counts;
    for (const auto& tree : p.trees) {
        int c = 0;
        for (EdgeId id : tree) c += cut_set.count(id) ? 1 : 0;
        counts.push_back(c);
    }
    return counts;
}

bool side_restriction_connected(const Multigraph& g,
                                const std::vector<EdgeId>& tree,
                                const std::vector<VertexId>& side) {
    Dsu dsu;
    dsu.reset(side);
    std::set<VertexId> in(side.begin(), side.end());
    int unions = 0;
    for (EdgeId id : tree) {
        const Edge& e = g.edge(id);
        if (in.count(e.a) && in.count(e.b) && dsu.unite(e.a, e.b)) ++unions;
    }
    return unions == static_cast<int>(side.size()) - 1;
}

TreePacking restrict_packing(const Multigraph& side_graph, const TreePacking& p) {
    std::set<EdgeId> present = edge_id_set(side_graph);
    TreePacking out;
    for (const auto& tree : p.trees) {
        std::vector<EdgeId> kept;
        for (EdgeId id : tree)
            if (present.count(id)) kept.push_back(id);
        std::sort(kept.begin(), kept.end());
        out.trees.push_back(std::move(kept));
    }
    require_valid_packing(side_graph, out);
    return out;
}

std::optional<std::pair<TreePacking, TreePacking>> split_packing(const Multigraph& g,
                                                                 const TreePacking& p,
                                                                 const EdgeCut& cut) {
    for (int c : crossings_per_tree(p, cut))
        if (c != 1) return std::nullopt;
    Multigraph g1 = induced_subgraph(g, cut.side1);
    Multigraph g2 = induced_subgraph(g, cut.side2);
    return std::make_pair(restrict_packing(g1, p), restrict_packing(g2, p));
}

TreePacking contract_packing(const Multigraph& g,
                             const TreePacking& p,
                             const EdgeCut& cut,
                             bool contract_side1,
                             const ContractionResult& contracted) {
    const auto& gone = contract_side1 ? cut.side1 : cut.side2;
    std::vector<int> crossings = crossings_per_tree(p, cut);
    for (int j = 0; j < p.tree_count(); ++j) {
        if (crossings[j] == 1) continue;
        if (crossings[j] == 2) {
            if (!side_restriction_connected(g, p.trees[j], gone))
                throw std::invalid_argument(
                    "contract_packing: twice-crossing tree is disconnected on the contracted "
                    "side; contract the other side");
            continue;
        }
        throw std::invalid_argument("contract_packing: tree " + std::to_string(j + 1) +
                                    " crosses the cut " + std::to_string(crossings[j]) + " times");
    }

    std::set<EdgeId> surviving = edge_id_set(contracted.graph);
    TreePacking out;
    for (const auto& tree : p.trees) {
        std::vector<EdgeId> kept;
        for (EdgeId id : tree)
            if (surviving.count(id)) kept.push_back(id);
        std::sort(kept.begin(), kept.end());
        out.trees.push_back(std::move(kept));
    }
    require_valid_packing(contracted.graph, out);
    return out;
}

TreePacking surgery_packing(const Multigraph& g,
                            const TreePacking& p,
                            const VertexSurgeryRecord& rec,
                            const Multigraph& h) {
    const VertexId u = rec.removed_vertex;
    TreePacking out;
    bool saw_double = false;
    for (int j = 0; j < p.tree_count(); ++j) {
        std::vector<EdgeId> at_u;
        std::vector<EdgeId> kept;
        for (EdgeId id : p.trees[j]) {
            if (g.edge(id).incident_to(u))
                at_u.push_back(id);
            else
                kept.push_back(id);
        }
        const std::string label = "surgery_packing: tree " + std::to_string(j + 1);
        if (at_u.size() == 2) {
            if (saw_double) throw std::invalid_argument(label + ": second tree with two edges at u");
            saw_double = true;
            std::set<VertexId> far{g.edge(at_u[0]).other(u), g.edge(at_u[1]).other(u)};
            if (far != std::set<VertexId>{rec.x, rec.y})
                throw std::invalid_argument(label + ": its edges at u do not end in {x, y}");
            kept.push_back(rec.new_edge);
            std::sort(kept.begin(), kept.end());
        } else if (at_u.size() != 1) {
            throw std::invalid_argument(label + ": has " + std::to_string(at_u.size()) +
                                        " edges at u, expected a leaf");
        }
        out.trees.push_back(std::move(kept));
    }
    if (!saw_double)
        throw std::invalid_argument("surgery_packing: no tree holds two edges at the removed vertex");
    require_valid_packing(h, out);
    return out;
}

}  // namespace modk
