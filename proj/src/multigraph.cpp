#include "modk/multigraph.hpp"

#include <algorithm>
#include <set>

namespace modk {

namespace {

const std::vector<EdgeId> kNoEdges;

}  // namespace

Multigraph Multigraph::build(int n, const std::vector<std::pair<VertexId, VertexId>>& endpoints) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Multigraph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        auto [a, b] = endpoints[i];
        const std::string where = "edge " + std::to_string(i + 1);
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument(where + ": endpoint out of range 1.." + std::to_string(n));
        if (a == b) throw std::invalid_argument(where + ": loop " + std::to_string(a) + "-" + std::to_string(b));
        g.add_edge(a, b);
    }
    return g;
}

std::vector<VertexId> Multigraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(incidence_.size());
    for (const auto& [v, _] : incidence_) out.push_back(v);
    return out;
}

bool Multigraph::has_edge(EdgeId e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& lhs, EdgeId id) { return lhs.id < id; });
    return it != edges_.end() && it->id == e;
}

const Edge& Multigraph::edge(EdgeId e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& lhs, EdgeId id) { return lhs.id < id; });
    if (it == edges_.end() || it->id != e)
        throw std::out_of_range("no edge with id " + std::to_string(e));
    return *it;
}

int Multigraph::degree(VertexId v) const {
    auto it = incidence_.find(v);
    return it == incidence_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<EdgeId>& Multigraph::incident_edges(VertexId v) const {
    auto it = incidence_.find(v);
    return it == incidence_.end() ? kNoEdges : it->second;
}

VertexId Multigraph::smallest_vertex() const {
    if (incidence_.empty()) throw std::out_of_range("empty graph has no vertices");
    return incidence_.begin()->first;
}

void Multigraph::add_vertex(VertexId v) {
    if (v <= 0) throw std::invalid_argument("vertex ids are positive");
    incidence_.try_emplace(v);
    max_vertex_id_ = std::max(max_vertex_id_, v);
}

VertexId Multigraph::add_fresh_vertex() {
    VertexId v = ++max_vertex_id_;
    incidence_.try_emplace(v);
    return v;
}

EdgeId Multigraph::add_edge(VertexId a, VertexId b) {
    EdgeId id = max_edge_id_ + 1;
    add_edge_with_id(id, a, b);
    return id;
}

void Multigraph::add_edge_with_id(EdgeId id, VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a) + "-" + std::to_string(b));
    if (!has_vertex(a) || !has_vertex(b)) throw std::invalid_argument("edge endpoint not a vertex");
    if (id <= max_edge_id_)
        throw std::invalid_argument("edge ids must be inserted in ascending order");
    edges_.push_back(Edge{id, a, b});
    incidence_[a].push_back(id);
    incidence_[b].push_back(id);
    max_edge_id_ = id;
}

bool EdgeCut::in_side1(VertexId v) const {
    return std::binary_search(side1.begin(), side1.end(), v);
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
    std::set<VertexId> unseen;
    for (VertexId v : g.vertices()) unseen.insert(v);

    std::vector<std::vector<VertexId>> comps;
    while (!unseen.empty()) {
        VertexId root = *unseen.begin();
        std::vector<VertexId> stack{root};
        std::vector<VertexId> comp;
        unseen.erase(root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.edge(e).other(v);
                if (unseen.erase(w)) stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
    return comps;
}

bool is_connected(const Multigraph& g) { return components(g).size() == 1; }

Multigraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& keep) {
    Multigraph sub;
    std::set<VertexId> in(keep.begin(), keep.end());
    for (VertexId v : keep) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex");
        sub.add_vertex(v);
    }
    for (const Edge& e : g.edges())
        if (in.count(e.a) && in.count(e.b)) sub.add_edge_with_id(e.id, e.a, e.b);
    return sub;
}

ContractionResult contract_side(const Multigraph& g, const std::vector<VertexId>& side) {
    if (side.empty()) throw std::invalid_argument("contract_side: empty side");
    std::set<VertexId> in(side.begin(), side.end());
    for (VertexId v : side)
        if (!g.has_vertex(v)) throw std::invalid_argument("contract_side: unknown vertex");
    if (static_cast<int>(in.size()) >= g.vertex_count())
        throw std::invalid_argument("contract_side: side must be a proper subset");

    ContractionResult res;
    for (VertexId v : g.vertices())
        if (!in.count(v)) res.graph.add_vertex(v);
    // The merged vertex gets an id never used before to avoid aliasing.
    VertexId fresh = g.max_vertex_id() + 1;
    res.graph.add_vertex(fresh);
    res.merged_vertex = fresh;

    for (const Edge& e : g.edges()) {
        bool ain = in.count(e.a) != 0;
        bool bin = in.count(e.b) != 0;
        if (ain && bin) continue;  // internal edge becomes a loop; dropped
        VertexId a = ain ? fresh : e.a;
        VertexId b = bin ? fresh : e.b;
        res.graph.add_edge_with_id(e.id, a, b);
        res.edge_map.emplace(e.id, e.id);
    }
    return res;
}

std::pair<Multigraph, VertexSurgeryRecord> replace_degree_vertex(const Multigraph& g,
                                                                 VertexId u,
                                                                 VertexId x,
                                                                 VertexId y,
                                                                 EdgeId fresh_edge_id) {
    if (u == x || u == y) throw std::invalid_argument("replace_degree_vertex: u, x, y must be distinct");
    if (fresh_edge_id != 0 && fresh_edge_id <= g.max_edge_id())
        throw std::invalid_argument("replace_degree_vertex: fresh edge id already in use");
    if (x == y)
        throw std::invalid_argument("replace_degree_vertex: x == y would create a loop");
    if (!g.has_vertex(u) || !g.has_vertex(x) || !g.has_vertex(y))
        throw std::invalid_argument("replace_degree_vertex: unknown vertex");
    auto adjacent_to_u = [&](VertexId v) {
        for (EdgeId e : g.incident_edges(u))
            if (g.edge(e).other(u) == v) return true;
        return false;
    };
    if (!adjacent_to_u(x) || !adjacent_to_u(y))
        throw std::invalid_argument("replace_degree_vertex: x and y must be adjacent to u");

    VertexSurgeryRecord rec;
    rec.removed_vertex = u;
    rec.x = x;
    rec.y = y;
    rec.removed_edges = g.incident_edges(u);
    std::sort(rec.removed_edges.begin(), rec.removed_edges.end());

    Multigraph h;
    for (VertexId v : g.vertices())
        if (v != u) h.add_vertex(v);
    for (const Edge& e : g.edges())
        if (!e.incident_to(u)) h.add_edge_with_id(e.id, e.a, e.b);
    rec.new_edge = fresh_edge_id != 0 ? fresh_edge_id : g.max_edge_id() + 1;
    h.add_edge_with_id(rec.new_edge, x, y);
    return {std::move(h), std::move(rec)};
}

}  // namespace modk
