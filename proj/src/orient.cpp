#include "modk/orient.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <variant>

#include "modk/mincut.hpp"

namespace modk {

int mod_k(long long x, int k) {
    long long r = x % k;
    if (r < 0) r += k;
    return static_cast<int>(r);
}

int BoundaryMap::at(VertexId v) const {
    auto it = values.find(v);
    if (it == values.end())
        throw std::invalid_argument("boundary map has no value for vertex " + std::to_string(v));
    return it->second;
}

bool BoundaryMap::covers(const Multigraph& g) const {
    for (VertexId v : g.vertices())
        if (!values.count(v)) return false;
    return true;
}

bool BoundaryMap::valid_for(const Multigraph& g) const {
    if (k < 2 || !covers(g)) return false;
    long long sum = 0;
    for (VertexId v : g.vertices()) sum += values.at(v);
    return mod_k(sum - g.edge_count(), k) == 0;
}

int Orientation::out_degree(const Multigraph& g, VertexId v) const {
    int d = 0;
    for (EdgeId e : g.incident_edges(v)) {
        auto it = tail.find(e);
        if (it != tail.end() && it->second == v) ++d;
    }
    return d;
}

LambdaBound::LambdaBound(int k_, int lambda_) : k(k_), lambda(lambda_) {
    if (k < 2) throw std::invalid_argument("LambdaBound: k must be at least 2");
    if (lambda < k + 2)
        throw std::invalid_argument("LambdaBound: lambda must be at least k+2 = " + std::to_string(k + 2));
}

LambdaBound LambdaBound::with_default(int k) {
    return LambdaBound(k, k % 2 == 1 ? 3 * k - 3 : 3 * k - 2);
}

VerifyResult verify_orientation(const Multigraph& g, const Orientation& o, const BoundaryMap& f) {
    if (!f.covers(g)) throw std::invalid_argument("verify_orientation: boundary map misses a vertex");
    if (static_cast<int>(o.tail.size()) != g.edge_count())
        throw std::invalid_argument("verify_orientation: orientation is not complete over the edge set");
    for (const Edge& e : g.edges()) {
        auto it = o.tail.find(e.id);
        if (it == o.tail.end())
            throw std::invalid_argument("verify_orientation: edge " + std::to_string(e.id) +
                                        " is unoriented");
        if (it->second != e.a && it->second != e.b)
            throw std::invalid_argument("verify_orientation: tail of edge " + std::to_string(e.id) +
                                        " is not one of its endpoints");
    }
    for (VertexId v : g.vertices()) {
        int got = mod_k(o.out_degree(g, v), f.k);
        int want = mod_k(f.at(v), f.k);
        if (got != want) return {false, v, got, want};
    }
    return {true, 0, 0, 0};
}

int residue_r(const BoundaryMap& f, const std::vector<VertexId>& side_vertices, int side_edge_count) {
    long long sum = 0;
    for (VertexId v : side_vertices) sum += f.at(v);
    return mod_k(sum - side_edge_count, f.k);
}

namespace {

struct BruteState {
    const Multigraph& g;
    const int k;
    const std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::map<VertexId, int> out;   // out-degree assigned so far
    std::map<VertexId, int> rem;   // unoriented incident edges
    std::map<VertexId, int> want;  // target residue
    std::map<EdgeId, VertexId> tail;

    bool feasible(VertexId v) const {
        return mod_k(want.at(v) - out.at(v), k) <= rem.at(v);
    }

    bool assign(std::size_t idx) {
        if (idx == g.edges().size()) return true;
        const Edge& e = g.edges()[idx];
        for (VertexId t : {e.a, e.b}) {
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            out[t] += 1;
            rem[e.a] -= 1;
            rem[e.b] -= 1;
            tail[e.id] = t;
            if (feasible(e.a) && feasible(e.b) && assign(idx + 1)) return true;
            tail.erase(e.id);
            out[t] -= 1;
            rem[e.a] += 1;
            rem[e.b] += 1;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

BruteForceResult brute_force_orientation(const Multigraph& g,
                                         const BoundaryMap& f,
                                         std::uint64_t budget) {
    if (!f.valid_for(g))
        throw InvalidBoundaryError("brute_force_orientation: boundary map is not valid for the graph");

    BruteState st{g, f.k, budget};
    for (VertexId v : g.vertices()) {
        st.out[v] = 0;
        st.rem[v] = g.degree(v);
        st.want[v] = mod_k(f.at(v), f.k);
    }
    bool start_ok = true;
    for (VertexId v : g.vertices())
        if (!st.feasible(v)) start_ok = false;

    BruteForceResult res;
    if (start_ok && st.assign(0)) {
        res.status = SearchStatus::Found;
        res.orientation = Orientation{std::move(st.tail)};
    } else {
        res.status = st.budget_hit ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    res.nodes_explored = st.nodes;
    return res;
}

namespace {

// Exhaustive search as a residue CSP. An edge is forced when one endpoint
// needs all of its remaining edges outgoing (need == rem) or none of them
// (need == 0 with rem < k); forced edges are propagated before branching,
// and branching picks the vertex with the fewest unoriented edges.
class GuidedSearch {
public:
    GuidedSearch(const Multigraph& g, const BoundaryMap& f, std::uint64_t budget)
        : g_(g), k_(f.k), budget_(budget) {
        std::vector<VertexId> verts = g.vertices();
        n_ = static_cast<int>(verts.size());
        for (int i = 0; i < n_; ++i) index_[verts[i]] = i;
        want_.resize(n_);
        out_.assign(n_, 0);
        rem_.assign(n_, 0);
        incident_.resize(n_);
        for (int i = 0; i < n_; ++i) want_[i] = mod_k(f.values.at(verts[i]), k_);
        const auto& edges = g.edges();
        m_ = static_cast<int>(edges.size());
        state_.assign(m_, kUnset);
        ends_.resize(m_);
        for (int e = 0; e < m_; ++e) {
            ends_[e] = {index_.at(edges[e].a), index_.at(edges[e].b)};
            incident_[ends_[e].first].push_back(e);
            incident_[ends_[e].second].push_back(e);
            ++rem_[ends_[e].first];
            ++rem_[ends_[e].second];
        }
    }

    BruteForceResult run() {
        BruteForceResult res;
        bool found = false;
        std::vector<int> trail;
        if (seed_feasible() && propagate_all(trail)) found = dfs();
        res.nodes_explored = nodes_;
        if (budget_hit_) {
            res.status = SearchStatus::BudgetExceeded;
        } else if (found) {
            res.status = SearchStatus::Found;
            Orientation o;
            const auto& edges = g_.edges();
            for (int e = 0; e < m_; ++e)
                o.tail[edges[e].id] = state_[e] == kTailA ? edges[e].a : edges[e].b;
            res.orientation = std::move(o);
        } else {
            res.status = SearchStatus::Exhausted;
        }
        return res;
    }

private:
    static constexpr int kUnset = 0, kTailA = 1, kTailB = 2;

    const Multigraph& g_;
    int k_, n_ = 0, m_ = 0;
    std::uint64_t budget_, nodes_ = 0;
    bool budget_hit_ = false;
    std::map<VertexId, int> index_;
    std::vector<int> want_, out_, rem_, state_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<int>> incident_;

    int need(int v) const { return mod_k(want_[v] - out_[v], k_); }

    bool seed_feasible() const {
        for (int v = 0; v < n_; ++v)
            if (need(v) > rem_[v]) return false;
        return true;
    }

    // Returns false on contradiction or budget exhaustion. Assignments are
    // recorded on the trail for the caller to unwind.
    bool assign(int e, int tail, std::vector<int>& trail) {
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return false;
        }
        state_[e] = tail;
        int t = tail == kTailA ? ends_[e].first : ends_[e].second;
        ++out_[t];
        --rem_[ends_[e].first];
        --rem_[ends_[e].second];
        trail.push_back(e);
        return need(ends_[e].first) <= rem_[ends_[e].first] &&
               need(ends_[e].second) <= rem_[ends_[e].second];
    }

    void unwind(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            int e = trail.back();
            trail.pop_back();
            int t = state_[e] == kTailA ? ends_[e].first : ends_[e].second;
            --out_[t];
            ++rem_[ends_[e].first];
            ++rem_[ends_[e].second];
            state_[e] = kUnset;
        }
    }

    bool propagate_vertex(int v, std::vector<int>& queue, std::vector<int>& trail) {
        int nd = need(v);
        if (nd > rem_[v]) return false;
        if (rem_[v] == 0) return true;
        bool all_out = nd == rem_[v];
        bool all_in = nd == 0 && rem_[v] < k_;
        if (!all_out && !all_in) return true;
        for (int e : incident_[v]) {
            if (state_[e] != kUnset) continue;
            int other = ends_[e].first == v ? ends_[e].second : ends_[e].first;
            int tail_flag;
            if (all_out)
                tail_flag = ends_[e].first == v ? kTailA : kTailB;
            else
                tail_flag = ends_[e].first == v ? kTailB : kTailA;
            if (!assign(e, tail_flag, trail)) return false;
            queue.push_back(other);
        }
        queue.push_back(v);
        return true;
    }

    bool propagate(std::vector<int> queue, std::vector<int>& trail) {
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            if (!propagate_vertex(v, queue, trail)) return false;
        }
        return true;
    }

    bool propagate_all(std::vector<int>& trail) {
        std::vector<int> queue;
        for (int v = 0; v < n_; ++v) queue.push_back(n_ - 1 - v);
        return propagate(std::move(queue), trail);
    }

    int pick_branch_vertex() const {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (rem_[v] == 0) continue;
            if (best == -1 || rem_[v] < rem_[best]) best = v;
        }
        return best;
    }

    bool dfs() {
        int v = pick_branch_vertex();
        if (v == -1) {
            for (int u = 0; u < n_; ++u)
                if (need(u) != 0) return false;
            return true;
        }
        int e = -1;
        for (int cand : incident_[v])
            if (state_[cand] == kUnset) {
                e = cand;
                break;
            }
        int away = ends_[e].first == v ? kTailA : kTailB;
        int toward = away == kTailA ? kTailB : kTailA;
        int first = need(v) > 0 ? away : toward;
        int second = first == away ? toward : away;

        for (int choice : {first, second}) {
            std::vector<int> trail;
            bool ok = assign(e, choice, trail) &&
                      propagate({ends_[e].first, ends_[e].second}, trail);
            if (ok && dfs()) return true;
            unwind(trail, 0);
            if (budget_hit_) return false;
        }
        return false;
    }
};

}  // namespace

BruteForceResult propagating_orientation_search(const Multigraph& g,
                                                const BoundaryMap& f,
                                                std::uint64_t budget) {
    if (!f.valid_for(g))
        throw InvalidBoundaryError(
            "propagating_orientation_search: boundary map is not valid for the graph");
    return GuidedSearch(g, f, budget).run();
}

int RecursionTrace::count(StepKind kind) const {
    int c = 0;
    for (const TraceStep& s : steps)
        if (s.kind == kind) ++c;
    return c;
}

int RecursionTrace::lift_count() const {
    int c = 0;
    for (const TraceStep& s : steps)
        if (s.kind == StepKind::Surgery && s.lift_applied) ++c;
    return c;
}

int RecursionTrace::max_depth() const {
    int d = 0;
    for (const TraceStep& s : steps) d = std::max(d, s.depth);
    return d;
}

namespace {

// The recursion runs on an explicit work stack. A Solve handles one
// subproblem; the two continuations fire after a child subtree finished,
// when its edges all carry tails in the child's own vertex space.
struct Solve {
    Multigraph g;
    BoundaryMap f;
    TreePacking packing;
    int parent_vertices;  // strictly decreasing measure
    int depth;
};

struct AfterContract {
    Multigraph parent;       // graph the cut lives in
    BoundaryMap f;           // parent boundary
    TreePacking packing;     // parent packing
    std::vector<EdgeId> cut_edges;
    std::vector<VertexId> contracted_side;
    VertexId merged;
    int parent_vertices;
    int depth;
};

struct AfterSurgery {
    std::size_t trace_index;  // surgery step to mark when the lift fires
    VertexId u, x, y;
    EdgeId fresh, xu, uy;
};

using WorkItem = std::variant<Solve, AfterContract, AfterSurgery>;

class Engine {
public:
    Engine(const LambdaBound& bound, std::uint64_t budget) : bound_(bound), budget_(budget) {}

    OrientationResult run(Solve root) {
        // Fresh surgery edges across all subproblems draw from one
        // allocator; per-subgraph max ids would collide.
        next_fresh_edge_ = root.g.max_edge_id() + 1;
        std::vector<WorkItem> stack;
        stack.push_back(std::move(root));
        while (!stack.empty()) {
            WorkItem item = std::move(stack.back());
            stack.pop_back();
            std::visit([&](auto&& task) { handle(std::move(task), stack); }, std::move(item));
        }
        return {Orientation{std::move(tails_)}, std::move(trace_)};
    }

private:
    LambdaBound bound_;
    std::uint64_t budget_;
    EdgeId next_fresh_edge_ = 0;
    std::map<EdgeId, VertexId> tails_;
    RecursionTrace trace_;

    void check(bool cond, const char* what) {
        ++trace_.checks_performed;
        if (!cond) throw std::logic_error(std::string("f_orientation: ") + what);
    }

    // Boundary of a subproblem: f(v) minus the cut edges already directed
    // away from v.
    BoundaryMap reduced_boundary(const BoundaryMap& f,
                                 const Multigraph& host,
                                 const std::vector<VertexId>& side,
                                 const std::vector<EdgeId>& cut_edges) {
        std::map<VertexId, int> away;
        std::set<VertexId> in(side.begin(), side.end());
        for (EdgeId id : cut_edges) {
            VertexId t = tails_.at(id);
            if (in.count(t)) away[t] += 1;
        }
        BoundaryMap out;
        out.k = f.k;
        for (VertexId v : side) out.values[v] = mod_k(f.at(v) - away[v], f.k);
        return out;
    }

    void check_boundary_bookkeeping(const Multigraph& g, const BoundaryMap& f) {
        long long sum = 0;
        for (VertexId v : g.vertices()) sum += f.at(v);
        check(mod_k(sum - g.edge_count(), f.k) == 0,
              "side boundary does not sum to the side's edge count");
    }

    void handle(Solve task, std::vector<WorkItem>& stack) {
        const Multigraph& g = task.g;
        const BoundaryMap& f = task.f;
        const int k = bound_.k;
        const int lambda = bound_.lambda;

        check(g.vertex_count() < task.parent_vertices, "recursion measure failed to decrease");
        check(f.covers(g), "subproblem boundary misses a vertex");
        check_boundary_bookkeeping(g, f);

        if (g.vertex_count() == 1) {
            check(mod_k(f.at(g.smallest_vertex()), k) == 0, "single vertex requires f(v) = 0");
            trace_.steps.push_back({StepKind::SingleVertex, task.depth, 1, g.edge_count(), -1, -1, false, 0});
            return;
        }

        EdgeCut cut = global_min_cut(g);

        if (cut.size() >= lambda) {
            BruteForceResult base = propagating_orientation_search(g, f, budget_);
            if (base.status == SearchStatus::BudgetExceeded)
                throw BudgetExceededError(
                    "f_orientation: base case exceeded the node budget after " +
                        std::to_string(base.nodes_explored) +
                        " nodes; raise the budget (or reconsider a lambda below the proven bound)",
                    base.nodes_explored);
            if (base.status == SearchStatus::Exhausted)
                throw std::runtime_error(
                    "f_orientation: exhaustive base case found no orientation of a " +
                    std::to_string(cut.size()) + "-edge-connected graph; the supplied lambda " +
                    std::to_string(lambda) + " is below the true threshold for k=" + std::to_string(k));
            for (const auto& [e, t] : base.orientation->tail) tails_[e] = t;
            trace_.steps.push_back({StepKind::BaseCase, task.depth, g.vertex_count(), g.edge_count(),
                                    cut.size(), -1, false, base.nodes_explored});
            return;
        }

        // Below the base case the packing pins the cut size into a window
        // of width two: every spanning tree meets every cut.
        check(task.packing.tree_count() == lambda - 2, "subproblem packing lost a tree");
        std::vector<int> crossings = crossings_per_tree(task.packing, cut);
        int total = 0;
        for (int c : crossings) {
            check(c >= 1, "a spanning tree avoids the minimum cut");
            total += c;
        }
        check(total <= cut.size(), "trees overlap on the cut");
        check(cut.size() >= lambda - 2, "cut smaller than the packing permits");
        check(cut.size() <= lambda - 1, "cut size contradicts the base-case test");

        std::vector<int> twice;
        for (std::size_t j = 0; j < crossings.size(); ++j)
            if (crossings[j] == 2) twice.push_back(static_cast<int>(j));
        check(twice.size() <= 1, "two trees cross the cut twice");

        if (twice.empty()) {
            handle_split(std::move(task), cut, stack);
        } else {
            const std::vector<EdgeId>& t1 = task.packing.trees[twice[0]];
            bool s1 = side_restriction_connected(g, t1, cut.side1);
            bool s2 = side_restriction_connected(g, t1, cut.side2);
            check(s1 != s2, "twice-crossing tree must be connected on exactly one side");
            const std::vector<VertexId>& connected_side = s1 ? cut.side1 : cut.side2;
            if (connected_side.size() == 1)
                handle_surgery(std::move(task), cut, twice[0], connected_side[0], stack);
            else
                handle_contract(std::move(task), cut, s1, stack);
        }
    }

    void handle_split(Solve task, const EdgeCut& cut, std::vector<WorkItem>& stack) {
        const Multigraph& g = task.g;
        const int k = bound_.k;

        Multigraph g1 = induced_subgraph(g, cut.side1);
        Multigraph g2 = induced_subgraph(g, cut.side2);
        int r = residue_r(task.f, cut.side1, g1.edge_count());
        check(k - 1 <= bound_.lambda - 3, "lambda bound violates lambda >= k+2");
        check(r <= cut.size(), "cut too small to host r forward edges");

        // r lowest-id cut edges side1 -> side2, the rest side2 -> side1.
        int forward = 0;
        for (EdgeId id : cut.cut_edges) {
            const Edge& e = g.edge(id);
            VertexId one = cut.in_side1(e.a) ? e.a : e.b;
            VertexId two = e.other(one);
            tails_[id] = (forward < r) ? one : two;
            ++forward;
        }

        auto packs = split_packing(g, task.packing, cut);
        check(packs.has_value(), "split branch entered with a twice-crossing tree");

        BoundaryMap f1 = reduced_boundary(task.f, g, cut.side1, cut.cut_edges);
        BoundaryMap f2 = reduced_boundary(task.f, g, cut.side2, cut.cut_edges);

        trace_.steps.push_back({StepKind::Split, task.depth, g.vertex_count(), g.edge_count(),
                                cut.size(), r, false, 0});
        int parent_n = g.vertex_count();
        stack.push_back(Solve{std::move(g2), std::move(f2), std::move(packs->second), parent_n,
                              task.depth + 1});
        stack.push_back(Solve{std::move(g1), std::move(f1), std::move(packs->first), parent_n,
                              task.depth + 1});
    }

    void handle_contract(Solve task, const EdgeCut& cut, bool side1_connected,
                         std::vector<WorkItem>& stack) {
        const Multigraph& g = task.g;
        const std::vector<VertexId>& side = side1_connected ? cut.side1 : cut.side2;
        const std::vector<VertexId>& kept = side1_connected ? cut.side2 : cut.side1;

        ContractionResult contracted = contract_side(g, side);
        TreePacking inner = contract_packing(g, task.packing, cut, side1_connected, contracted);

        int r = residue_r(task.f, side, induced_subgraph(g, side).edge_count());
        BoundaryMap f2;
        f2.k = bound_.k;
        for (VertexId v : kept) f2.values[v] = task.f.at(v);
        f2.values[contracted.merged_vertex] = r;

        trace_.steps.push_back({StepKind::Contract, task.depth, g.vertex_count(), g.edge_count(),
                                cut.size(), r, false, 0});

        AfterContract cont;
        cont.parent = g;
        cont.f = task.f;
        cont.packing = task.packing;
        cont.cut_edges = cut.cut_edges;
        cont.contracted_side = side;
        cont.merged = contracted.merged_vertex;
        cont.parent_vertices = g.vertex_count();
        cont.depth = task.depth;
        stack.push_back(std::move(cont));

        stack.push_back(Solve{std::move(contracted.graph), std::move(f2), std::move(inner),
                              g.vertex_count(), task.depth + 1});
    }

    void handle(AfterContract cont, std::vector<WorkItem>& stack) {
        // The contracted child finished; cut edges whose tail is the merged
        // vertex point out of the contracted side.
        std::set<VertexId> in(cont.contracted_side.begin(), cont.contracted_side.end());
        for (EdgeId id : cont.cut_edges) {
            const Edge& e = cont.parent.edge(id);
            check(tails_.count(id) != 0, "contracted child left a cut edge unoriented");
            VertexId side_end = in.count(e.a) ? e.a : e.b;
            check(in.count(side_end) && !in.count(e.other(side_end)),
                  "cut edge does not cross the contracted side");
            if (tails_[id] == cont.merged) tails_[id] = side_end;
        }

        Multigraph g1 = induced_subgraph(cont.parent, cont.contracted_side);
        TreePacking p1 = restrict_packing(g1, cont.packing);
        BoundaryMap f1 = reduced_boundary(cont.f, cont.parent, cont.contracted_side, cont.cut_edges);
        stack.push_back(Solve{std::move(g1), std::move(f1), std::move(p1), cont.parent_vertices,
                              cont.depth + 1});
    }

    void handle_surgery(Solve task, const EdgeCut& cut, int tree_index, VertexId u,
                        std::vector<WorkItem>& stack) {
        const Multigraph& g = task.g;
        const int k = bound_.k;

        check(g.degree(u) == cut.size(), "surgery vertex degree differs from the cut size");

        std::vector<EdgeId> tree_at_u;
        for (EdgeId id : task.packing.trees[tree_index])
            if (g.edge(id).incident_to(u)) tree_at_u.push_back(id);
        check(tree_at_u.size() == 2, "twice-crossing tree does not have two edges at u");
        std::sort(tree_at_u.begin(), tree_at_u.end());
        EdgeId xu = tree_at_u[0];
        EdgeId uy = tree_at_u[1];
        VertexId x = g.edge(xu).other(u);
        VertexId y = g.edge(uy).other(u);
        check(x != y, "tree edges at u must reach distinct neighbours");

        int r_u = mod_k(task.f.at(u) - 1, k) + 1;  // unique value in {1,...,k}
        check(r_u - 1 <= k - 1 && k - 1 <= bound_.lambda - 3,
              "not enough free cut edges for r_u - 1 forward edges");

        // Orient r_u - 1 of the remaining cut edges away from u (ascending
        // ids), the rest toward u. Together with u->y this gives u
        // out-degree r_u = f(u) mod k.
        std::vector<EdgeId> rest;
        for (EdgeId id : cut.cut_edges)
            if (id != xu && id != uy) rest.push_back(id);
        check(static_cast<int>(rest.size()) == cut.size() - 2, "xu or uy missing from the cut");
        int away = 0;
        for (EdgeId id : rest) {
            const Edge& e = g.edge(id);
            tails_[id] = (away < r_u - 1) ? u : e.other(u);
            ++away;
        }

        auto [h, record] = replace_degree_vertex(g, u, x, y, next_fresh_edge_++);
        TreePacking hp = surgery_packing(g, task.packing, record, h);

        BoundaryMap hf;
        hf.k = k;
        for (VertexId v : h.vertices()) {
            int away_v = 0;
            for (EdgeId id : rest)
                if (tails_.at(id) == v) ++away_v;
            hf.values[v] = mod_k(task.f.at(v) - away_v, k);
        }

        trace_.steps.push_back({StepKind::Surgery, task.depth, g.vertex_count(), g.edge_count(),
                                cut.size(), r_u, false, 0});

        AfterSurgery cont{trace_.steps.size() - 1, u, x, y, record.new_edge, xu, uy};
        stack.push_back(cont);
        stack.push_back(Solve{std::move(h), std::move(hf), std::move(hp), g.vertex_count(),
                              task.depth + 1});
    }

    void handle(AfterSurgery cont, std::vector<WorkItem>&) {
        check(tails_.count(cont.fresh) != 0, "surgery child left the fresh edge unoriented");
        VertexId t = tails_.at(cont.fresh);
        check(t == cont.x || t == cont.y, "fresh edge tail is neither x nor y");
        if (t == cont.x) {
            tails_[cont.xu] = cont.x;
            tails_[cont.uy] = cont.u;
        } else {
            // xy came back oriented y->x: reverse both replaced edges.
            tails_[cont.xu] = cont.u;
            tails_[cont.uy] = cont.y;
            trace_.steps[cont.trace_index].lift_applied = true;
        }
        tails_.erase(cont.fresh);
    }
};

}  // namespace

OrientationResult f_orientation(const Multigraph& g,
                                const BoundaryMap& f,
                                const LambdaBound& bound,
                                std::optional<TreePacking> packing,
                                std::uint64_t budget) {
    if (bound.k < 3)
        throw std::invalid_argument("f_orientation: k must be at least 3 (use "
                                    "brute_force_orientation for k = 2)");
    if (f.k != bound.k) throw std::invalid_argument("f_orientation: boundary modulus differs from bound");
    if (!f.covers(g)) throw InvalidBoundaryError("f_orientation: boundary map misses a vertex");
    if (!f.valid_for(g))
        throw InvalidBoundaryError(
            "f_orientation: boundary residues do not sum to |E| mod k; no orientation can exist");

    const int trees_needed = bound.lambda - 2;
    TreePacking use;
    if (packing.has_value()) {
        std::string why = packing_violation(g, *packing);
        if (!why.empty()) throw std::invalid_argument("f_orientation: supplied packing invalid: " + why);
        if (packing->tree_count() < trees_needed)
            throw std::invalid_argument("f_orientation: packing needs at least " +
                                        std::to_string(trees_needed) + " trees");
        use.trees.assign(packing->trees.begin(), packing->trees.begin() + trees_needed);
    } else {
        PackOutcome found = pack_trees(g, trees_needed);
        if (!found.ok())
            throw PackingUnavailableError(
                "f_orientation: the graph has no " + std::to_string(trees_needed) +
                    " edge-disjoint spanning trees; the witness partition violates the "
                    "Nash-Williams/Tutte count",
                std::move(found.witness));
        use = std::move(*found.packing);
    }

    Engine engine(bound, budget);
    OrientationResult result =
        engine.run(Solve{g, f, std::move(use), g.vertex_count() + 1, 0});

    VerifyResult vr = verify_orientation(g, result.orientation, f);
    if (!vr.accepted)
        throw std::logic_error("f_orientation: produced orientation fails verification at vertex " +
                               std::to_string(vr.vertex));
    return result;
}

}  // namespace modk
