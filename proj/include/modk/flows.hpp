#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "modk/multigraph.hpp"
#include "modk/orient.hpp"

namespace modk {

/// A nowhere-zero 3-flow: an orientation plus edge values in {1, 2} that
/// conserve flow mod 3 at every vertex. Reversing an edge and swapping its
/// value between 1 and 2 encodes the same flow.
struct Flow3 {
    Orientation orientation;
    std::map<EdgeId, int> value;
};

/// Empty string when the flow is nowhere-zero and conserved mod 3 at every
/// vertex of g, else the first violation.
std::string flow3_violation(const Multigraph& g, const Flow3& flow);

/// Re-express the flow with every edge pointing from its stored first
/// endpoint, swapping 1 <-> 2 where the direction flips.
Flow3 canonical_flow(const Multigraph& g, const Flow3& flow);

/// Nowhere-zero 3-flow for graphs with lambda-2 (default 4) edge-disjoint
/// spanning trees: orient with boundary f(v) = 2 deg(v) mod 3, which forces
/// out-degree = in-degree mod 3, and push one unit along every edge.
/// Packing failure raises PackingUnavailableError with its witness.
Flow3 nz3_flow(const Multigraph& g,
               const LambdaBound& bound = LambdaBound::with_default(3),
               std::uint64_t budget = kDefaultNodeBudget);

struct Z3CheckResult {
    enum class Status { Connected, Witness, BudgetExceeded };

    Status status = Status::Connected;
    std::optional<BoundaryMap> witness;  // lexicographically first failing boundary
    std::uint64_t boundaries_checked = 0;
    std::uint64_t nodes_spent = 0;
};

/// Desk-scale Z3-connectivity check: enumerate every boundary map with
/// residues summing to |E| mod 3 and search each exhaustively. The budget
/// caps the total backtracking nodes across all searches.
Z3CheckResult z3_check(const Multigraph& g, std::uint64_t budget = kDefaultNodeBudget);

}  // namespace modk
