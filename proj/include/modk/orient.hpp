#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "modk/multigraph.hpp"
#include "modk/treepack.hpp"

namespace modk {

/// Residue x mod k in {0,...,k-1}.
int mod_k(long long x, int k);

/// A boundary map f: V -> Z_k. Valid for a host graph when it assigns
/// every vertex a residue and the residues sum to |E| mod k.
struct BoundaryMap {
    int k = 3;
    std::map<VertexId, int> values;

    int at(VertexId v) const;
    bool covers(const Multigraph& g) const;
    bool valid_for(const Multigraph& g) const;
};

/// Per-edge direction assignment: tail(e) is the endpoint e points away
/// from. Complete over the host's edges when produced by the solvers.
struct Orientation {
    std::map<EdgeId, VertexId> tail;

    int out_degree(const Multigraph& g, VertexId v) const;
};

/// The edge-connectivity threshold above which every valid boundary is
/// orientable. The true lambda_k is unknown; the default is the proven
/// 3k-3 (k odd) / 3k-2 (k even) bound. Passing a smaller lambda is sound
/// (the base case is exhaustive) but a base-case failure then proves
/// nothing about lambda_k.
struct LambdaBound {
    int k;
    int lambda;

    LambdaBound(int k, int lambda);
    static LambdaBound with_default(int k);
};

struct VerifyResult {
    bool accepted = false;
    VertexId vertex = 0;  // first failing vertex when rejected
    int got = 0;
    int want = 0;
};

/// Accept iff every vertex has out-degree congruent to f(v) mod k.
/// Throws std::invalid_argument when the orientation does not cover the
/// edge set exactly or f misses a vertex.
VerifyResult verify_orientation(const Multigraph& g, const Orientation& o, const BoundaryMap& f);

/// The unique r in {0,...,k-1} with r + side_edge_count = sum of f over
/// side_vertices (mod k).
int residue_r(const BoundaryMap& f, const std::vector<VertexId>& side_vertices, int side_edge_count);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct BruteForceResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Orientation> orientation;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Exhaustive backtracking over edges in ascending id order with
/// per-vertex residual-degree pruning. Exhausted means no f-orientation
/// exists. Accepts any k >= 2.
BruteForceResult brute_force_orientation(const Multigraph& g,
                                         const BoundaryMap& f,
                                         std::uint64_t budget = kDefaultNodeBudget);

/// Same contract as brute_force_orientation (exact, deterministic,
/// budget-counted), but with unit propagation of forced edges and a
/// most-constrained-vertex branching order instead of the fixed edge
/// order. Dense lambda-edge-connected graphs that stall the plain
/// backtracking resolve in near-linear time here; the orientation engine
/// uses this for its base case.
BruteForceResult propagating_orientation_search(const Multigraph& g,
                                                const BoundaryMap& f,
                                                std::uint64_t budget = kDefaultNodeBudget);

enum class StepKind { SingleVertex, BaseCase, Split, Contract, Surgery };

struct TraceStep {
    StepKind kind;
    int depth = 0;
    int vertex_count = 0;
    int edge_count = 0;
    int cut_size = -1;
    int residue = -1;               // r of the split/contract side, r_u in surgery
    bool lift_applied = false;      // surgery only: xy came back oriented y->x
    std::uint64_t base_nodes = 0;   // base case only
};

/// Audit log of the recursion: one step per subproblem, plus the number of
/// internal bookkeeping checks that were evaluated (each would have thrown
/// std::logic_error on failure).
struct RecursionTrace {
    std::vector<TraceStep> steps;
    std::uint64_t checks_performed = 0;

    int count(StepKind kind) const;
    int lift_count() const;
    int max_depth() const;
};

struct OrientationResult {
    Orientation orientation;
    RecursionTrace trace;
};

class InvalidBoundaryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PackingUnavailableError : public std::runtime_error {
public:
    PackingUnavailableError(std::string message, std::vector<std::vector<VertexId>> witness_partition)
        : std::runtime_error(std::move(message)), witness(std::move(witness_partition)) {}

    std::vector<std::vector<VertexId>> witness;
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::string message, std::uint64_t nodes_explored)
        : std::runtime_error(std::move(message)), nodes(nodes_explored) {}

    std::uint64_t nodes;
};

/// Recursive f-orientation construction for graphs with lambda-2
/// edge-disjoint spanning trees. Follows the inductive argument: single
/// vertex, exhaustive base case once the graph is lambda-edge-connected,
/// and otherwise a minimum cut handled by side splitting, side
/// contraction, or single-vertex surgery. The returned orientation always
/// passes verify_orientation; the trace records every step taken.
///
/// When no packing is supplied, pack_trees(g, lambda-2) is attempted and a
/// failure is reported as PackingUnavailableError with its witness.
OrientationResult f_orientation(const Multigraph& g,
                                const BoundaryMap& f,
                                const LambdaBound& bound,
                                std::optional<TreePacking> packing = std::nullopt,
                                std::uint64_t budget = kDefaultNodeBudget);

}  // namespace modk
