#include "modk/instance_io.hpp"

#include <sstream>
#include <vector>

namespace modk {

namespace {

struct LineReader {
    std::istream& in;
    int number = 0;

    // Next payload line split into fields; comments and blanks skipped.
    bool next(std::vector<std::string>& fields, int& line_no) {
        std::string line;
        while (std::getline(in, line)) {
            ++number;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            fields.clear();
            std::string tok;
            while (ss >> tok) fields.push_back(tok);
            if (!fields.empty()) {
                line_no = number;
                return true;
            }
        }
        return false;
    }
};

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

BoundaryMap Instance::boundary_map() const {
    if (!k.has_value()) throw std::invalid_argument("instance has no modulus line");
    BoundaryMap f;
    f.k = *k;
    f.values = boundary;
    return f;
}

Instance parse_instance(std::istream& in) {
    LineReader reader{in};
    std::vector<std::string> fields;
    int line = 0;

    if (!reader.next(fields, line)) throw ParseError(reader.number + 1, "missing 'p graph <n> <m>' header");
    if (fields.size() != 4 || fields[0] != "p" || fields[1] != "graph")
        throw ParseError(line, "expected 'p graph <n> <m>' header");
    int n = parse_int(fields[2], line, "vertex count");
    int m = parse_int(fields[3], line, "edge count");
    if (n < 1) throw ParseError(line, "vertex count must be positive");
    if (m < 0) throw ParseError(line, "edge count must be nonnegative");

    Instance inst;
    for (VertexId v = 1; v <= n; ++v) inst.graph.add_vertex(v);

    int edges_seen = 0;
    while (reader.next(fields, line)) {
        const std::string& kind = fields[0];
        if (kind == "e") {
            if (fields.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
            int u = parse_int(fields[1], line, "endpoint");
            int v = parse_int(fields[2], line, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line, "loop edge " + std::to_string(u) + "-" + std::to_string(v));
            inst.graph.add_edge(u, v);
            ++edges_seen;
        } else if (kind == "k") {
            if (fields.size() != 2) throw ParseError(line, "expected 'k <modulus>'");
            if (inst.k.has_value()) throw ParseError(line, "duplicate k line");
            int k = parse_int(fields[1], line, "modulus");
            if (k < 2) throw ParseError(line, "modulus must be at least 2");
            inst.k = k;
        } else if (kind == "f") {
            if (fields.size() != 3) throw ParseError(line, "expected 'f <v> <residue>'");
            if (!inst.k.has_value()) throw ParseError(line, "f line before k line");
            int v = parse_int(fields[1], line, "vertex");
            int res = parse_int(fields[2], line, "residue");
            if (v < 1 || v > n) throw ParseError(line, "vertex out of range");
            if (res < 0 || res >= *inst.k)
                throw ParseError(line, "residue out of range 0.." + std::to_string(*inst.k - 1));
            if (!inst.boundary.emplace(v, res).second)
                throw ParseError(line, "duplicate boundary for vertex " + std::to_string(v));
        } else if (kind == "b") {
            if (fields.size() != 3) throw ParseError(line, "expected 'b <v> <1|2>'");
            int v = parse_int(fields[1], line, "vertex");
            int side = parse_int(fields[2], line, "side");
            if (v < 1 || v > n) throw ParseError(line, "vertex out of range");
            if (side != 1 && side != 2) throw ParseError(line, "side must be 1 or 2");
            if (!inst.bipartition.emplace(v, side).second)
                throw ParseError(line, "duplicate side for vertex " + std::to_string(v));
        } else {
            throw ParseError(line, "unknown line kind '" + kind + "'");
        }
    }
    if (edges_seen != m)
        throw ParseError(reader.number, "header announced " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges_seen));

    if (inst.k.has_value() && static_cast<int>(inst.boundary.size()) == n) {
        long long sum = 0;
        for (const auto& [_, res] : inst.boundary) sum += res;
        if (mod_k(sum - m, *inst.k) != 0)
            throw ParseError(reader.number, "boundary residues sum to " + std::to_string(sum % *inst.k) +
                                                " but |E| = " + std::to_string(m) + " mod " +
                                                std::to_string(*inst.k) + " requires " +
                                                std::to_string(mod_k(m, *inst.k)));
    }
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p graph " << inst.graph.vertex_count() << " " << inst.graph.edge_count() << "\n";
    if (inst.k.has_value()) out << "k " << *inst.k << "\n";
    for (const Edge& e : inst.graph.edges()) out << "e " << e.a << " " << e.b << "\n";
    for (const auto& [v, res] : inst.boundary) out << "f " << v << " " << res << "\n";
    for (const auto& [v, side] : inst.bipartition) out << "b " << v << " " << side << "\n";
    return out.str();
}

void write_orientation(std::ostream& out, const Multigraph& g, const Orientation& o) {
    for (const Edge& e : g.edges()) {
        VertexId tail = o.tail.at(e.id);
        out << "a " << e.id << " " << tail << " " << e.other(tail) << "\n";
    }
}

Orientation parse_orientation(std::istream& in, const Multigraph& g) {
    LineReader reader{in};
    std::vector<std::string> fields;
    int line = 0;
    Orientation o;
    while (reader.next(fields, line)) {
        if (fields[0] == "VERDICT") break;
        if (fields[0] != "a" || fields.size() != 4)
            throw ParseError(line, "expected 'a <edge-id> <tail> <head>'");
        int id = parse_int(fields[1], line, "edge id");
        int tail = parse_int(fields[2], line, "tail");
        int head = parse_int(fields[3], line, "head");
        if (!g.has_edge(id)) throw ParseError(line, "unknown edge id " + std::to_string(id));
        const Edge& e = g.edge(id);
        if (!(e.a == tail && e.b == head) && !(e.a == head && e.b == tail))
            throw ParseError(line, "edge " + std::to_string(id) + " does not join " +
                                       std::to_string(tail) + " and " + std::to_string(head));
        if (!o.tail.emplace(id, tail).second)
            throw ParseError(line, "duplicate orientation for edge " + std::to_string(id));
    }
    return o;
}

void write_flow(std::ostream& out, const Multigraph& g, const Flow3& flow) {
    for (const Edge& e : g.edges()) {
        VertexId tail = flow.orientation.tail.at(e.id);
        out << "w " << e.id << " " << tail << " " << e.other(tail) << " " << flow.value.at(e.id)
            << "\n";
    }
}

Flow3 parse_flow(std::istream& in, const Multigraph& g) {
    LineReader reader{in};
    std::vector<std::string> fields;
    int line = 0;
    Flow3 flow;
    while (reader.next(fields, line)) {
        if (fields[0] == "VERDICT") break;
        if (fields[0] != "w" || fields.size() != 5)
            throw ParseError(line, "expected 'w <edge-id> <tail> <head> <value>'");
        int id = parse_int(fields[1], line, "edge id");
        int tail = parse_int(fields[2], line, "tail");
        int head = parse_int(fields[3], line, "head");
        int value = parse_int(fields[4], line, "value");
        if (!g.has_edge(id)) throw ParseError(line, "unknown edge id " + std::to_string(id));
        const Edge& e = g.edge(id);
        if (!(e.a == tail && e.b == head) && !(e.a == head && e.b == tail))
            throw ParseError(line, "edge " + std::to_string(id) + " does not join " +
                                       std::to_string(tail) + " and " + std::to_string(head));
        if (value != 1 && value != 2) throw ParseError(line, "flow value must be 1 or 2");
        if (!flow.orientation.tail.emplace(id, tail).second)
            throw ParseError(line, "duplicate flow for edge " + std::to_string(id));
        flow.value[id] = value;
    }
    return flow;
}

}  // namespace modk
