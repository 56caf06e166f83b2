#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "modk/flows.hpp"
#include "modk/multigraph.hpp"
#include "modk/orient.hpp"

namespace modk {

class ParseError : public std::runtime_error {
public:
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    int line;
};

/// A parsed instance file: the graph plus whatever optional sections were
/// present (modulus, boundary residues, bipartition sides).
struct Instance {
    Multigraph graph;
    std::optional<int> k;
    std::map<VertexId, int> boundary;     // empty when absent
    std::map<VertexId, int> bipartition;  // vertex -> 1 or 2

    BoundaryMap boundary_map() const;  // requires k and a full boundary
};

/// Line-oriented instance format, '#' starts a comment:
///   p graph <n> <m>   header, first payload line
///   e <u> <v>         one per edge; repeated lines are parallel edges
///   k <modulus>
///   f <v> <residue>   at most once per vertex, needs a k line first
///   b <v> <1|2>
/// Diagnostics carry the offending line number. When every vertex has a
/// boundary value the residue sum is checked against |E| mod k at load.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

/// Canonical form: header, k, edges by id, f and b by vertex.
std::string serialize_instance(const Instance& inst);

/// Orientation listing, one `a <edge-id> <tail> <head>` line per edge.
void write_orientation(std::ostream& out, const Multigraph& g, const Orientation& o);

/// Parse `a` lines against the instance's graph; unknown ids, endpoint
/// mismatches and duplicates are ParseErrors. Stops at EOF or a VERDICT
/// line.
Orientation parse_orientation(std::istream& in, const Multigraph& g);

/// Flow listing, one `w <edge-id> <tail> <head> <value>` line per edge.
void write_flow(std::ostream& out, const Multigraph& g, const Flow3& flow);

Flow3 parse_flow(std::istream& in, const Multigraph& g);

}  // namespace modk
