#include "modk/cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "modk/decompose.hpp"
#include "modk/flows.hpp"
#include "modk/generate.hpp"
#include "modk/instance_io.hpp"
#include "modk/mincut.hpp"
#include "modk/orient.hpp"

namespace modk {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_instance(in);
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag.has_value()) return *flag;
    if (const char* env = std::getenv("MODK_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
        throw std::runtime_error("MODK_BUDGET is not a positive integer");
    }
    return kDefaultNodeBudget;
}

// The orient subcommand insists on a boundary from the file; the flow and
// decomposition subcommands derive their own.
BoundaryMap full_boundary(const Instance& inst, int k) {
    if (static_cast<int>(inst.boundary.size()) != inst.graph.vertex_count())
        throw std::runtime_error("instance must carry an f line for every vertex");
    BoundaryMap f;
    f.k = k;
    f.values = inst.boundary;
    return f;
}

void print_partition_witness(std::ostream& out, const std::vector<std::vector<VertexId>>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out << "P " << i + 1;
        for (VertexId v : parts[i]) out << " " << v;
        out << "\n";
    }
}

void print_trace(std::ostream& out, const RecursionTrace& trace) {
    for (const TraceStep& s : trace.steps) {
        out << "# step depth=" << s.depth << " n=" << s.vertex_count << " m=" << s.edge_count;
        switch (s.kind) {
            case StepKind::SingleVertex: out << " case=single-vertex"; break;
            case StepKind::BaseCase:
                out << " case=base cut=" << s.cut_size << " nodes=" << s.base_nodes;
                break;
            case StepKind::Split: out << " case=split cut=" << s.cut_size << " r=" << s.residue; break;
            case StepKind::Contract:
                out << " case=contract cut=" << s.cut_size << " r=" << s.residue;
                break;
            case StepKind::Surgery:
                out << " case=surgery cut=" << s.cut_size << " r_u=" << s.residue
                    << (s.lift_applied ? " lift=yes" : " lift=no");
                break;
        }
        out << "\n";
    }
}

int cmd_orient(const std::string& path, std::optional<int> k_flag, std::optional<int> lambda_flag,
               std::optional<std::uint64_t> budget_flag, bool trace, std::ostream& out,
               std::ostream& err) {
    Instance inst = load_instance(path);
    std::optional<int> k = k_flag.has_value() ? k_flag : inst.k;
    if (!k.has_value()) throw std::runtime_error("no modulus: pass --k or add a k line");
    LambdaBound bound = lambda_flag.has_value() ? LambdaBound(*k, *lambda_flag)
                                                : LambdaBound::with_default(*k);
    BoundaryMap f = full_boundary(inst, *k);
    try {
        OrientationResult res =
            f_orientation(inst.graph, f, bound, std::nullopt, resolve_budget(budget_flag));
        if (trace) print_trace(out, res.trace);
        write_orientation(out, inst.graph, res.orientation);
        out << "VERDICT ok\n";
        return kExitOk;
    } catch (const PackingUnavailableError& e) {
        err << e.what() << "\n";
        print_partition_witness(out, e.witness);
        out << "VERDICT no-packing\n";
        return kExitNegative;
    } catch (const BudgetExceededError& e) {
        err << e.what() << "\n";
        out << "VERDICT budget-exceeded\n";
        return kExitBudget;
    }
}

int cmd_verify(const std::string& path, const std::string& orientation_path, std::ostream& out,
               std::ostream& err) {
    Instance inst = load_instance(path);
    if (!inst.k.has_value()) throw std::runtime_error("no modulus: add a k line");
    BoundaryMap f = full_boundary(inst, *inst.k);
    std::ifstream ofile(orientation_path);
    if (!ofile) throw std::runtime_error("cannot open '" + orientation_path + "'");
    Orientation o = parse_orientation(ofile, inst.graph);
    VerifyResult vr = verify_orientation(inst.graph, o, f);
    if (vr.accepted) {
        out << "VERDICT ok\n";
        return kExitOk;
    }
    err << "out-degree of vertex " << vr.vertex << " is " << vr.got << " mod " << f.k
        << ", boundary wants " << vr.want << "\n";
    out << "VERDICT reject v=" << vr.vertex << " got=" << vr.got << " want=" << vr.want << "\n";
    return kExitNegative;
}

int cmd_nz3flow(const std::string& path, std::optional<int> lambda_flag,
                std::optional<std::uint64_t> budget_flag, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(path);
    LambdaBound bound =
        lambda_flag.has_value() ? LambdaBound(3, *lambda_flag) : LambdaBound::with_default(3);
    try {
        Flow3 flow = nz3_flow(inst.graph, bound, resolve_budget(budget_flag));
        write_flow(out, inst.graph, canonical_flow(inst.graph, flow));
        out << "VERDICT ok\n";
        return kExitOk;
    } catch (const PackingUnavailableError& e) {
        err << e.what() << "\n";
        print_partition_witness(out, e.witness);
        out << "VERDICT no-packing\n";
        return kExitNegative;
    } catch (const BudgetExceededError& e) {
        err << e.what() << "\n";
        out << "VERDICT budget-exceeded\n";
        return kExitBudget;
    }
}

int cmd_z3check(const std::string& path, std::optional<std::uint64_t> budget_flag,
                std::ostream& out, std::ostream&) {
    Instance inst = load_instance(path);
    Z3CheckResult res = z3_check(inst.graph, resolve_budget(budget_flag));
    switch (res.status) {
        case Z3CheckResult::Status::Connected:
            out << "VERDICT z3-connected\n";
            return kExitOk;
        case Z3CheckResult::Status::Witness:
            for (const auto& [v, r] : res.witness->values) out << "f " << v << " " << r << "\n";
            out << "VERDICT not-z3-connected\n";
            return kExitNegative;
        case Z3CheckResult::Status::BudgetExceeded:
        default:
            out << "# checked " << res.boundaries_checked << " boundaries before running out\n";
            out << "VERDICT budget-exceeded\n";
            return kExitBudget;
    }
}

int cmd_pack(const std::string& path, int trees, std::ostream& out, std::ostream&) {
    Instance inst = load_instance(path);
    PackOutcome res = pack_trees(inst.graph, trees);
    if (res.ok()) {
        for (int j = 0; j < res.packing->tree_count(); ++j) {
            out << "t " << j + 1;
            for (EdgeId id : res.packing->trees[j]) out << " " << id;
            out << "\n";
        }
        out << "VERDICT ok\n";
        return kExitOk;
    }
    print_partition_witness(out, res.witness);
    out << "VERDICT no-packing\n";
    return kExitNegative;
}

int cmd_mincut(const std::string& path, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(path);
    try {
        EdgeCut cut = global_min_cut(inst.graph);
        for (EdgeId id : cut.cut_edges) out << "c " << id << "\n";
        out << "s1";
        for (VertexId v : cut.side1) out << " " << v;
        out << "\ns2";
        for (VertexId v : cut.side2) out << " " << v;
        out << "\nVERDICT ok size=" << cut.size() << "\n";
        return kExitOk;
    } catch (const DisconnectedGraphError& e) {
        err << e.what() << "\n";
        out << "VERDICT disconnected\n";
        return kExitNegative;
    }
}

int cmd_gen(int n, int trees, int extra, std::uint64_t seed, const std::string& out_path,
            std::ostream& out, std::ostream&) {
    GeneratedInstance gen = gen_tree_union(n, trees, extra, seed);
    Instance inst;
    inst.graph = gen.graph;
    std::ostringstream text;
    text << "# gen n=" << n << " trees=" << trees << " extra=" << extra << " seed=" << seed << "\n";
    text << serialize_instance(inst);
    for (int j = 0; j < gen.packing.tree_count(); ++j) {
        text << "# tree " << j + 1;
        for (EdgeId id : gen.packing.trees[j]) text << " " << id;
        text << "\n";
    }
    if (out_path.empty()) {
        out << text.str();
    } else {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
        file << text.str();
        out << "VERDICT ok\n";
    }
    return kExitOk;
}

int cmd_decompose(const std::string& path, int r, std::optional<int> k_flag,
                  std::optional<int> lambda_flag, std::optional<std::uint64_t> budget_flag,
                  std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(path);
    std::optional<int> k = k_flag.has_value() ? k_flag : inst.k;
    if (!k.has_value()) throw std::runtime_error("no modulus: pass --k or add a k line");
    if (static_cast<int>(inst.bipartition.size()) != inst.graph.vertex_count())
        throw std::runtime_error("instance must carry a b line for every vertex");
    std::vector<VertexId> a1, a2;
    for (const auto& [v, side] : inst.bipartition) (side == 1 ? a1 : a2).push_back(v);
    LambdaBound bound = lambda_flag.has_value() ? LambdaBound(*k, *lambda_flag)
                                                : LambdaBound::with_default(*k);
    try {
        BipartiteDecomposition d =
            bipartite_decompose(inst.graph, a1, a2, *k, r, bound, resolve_budget(budget_flag));
        out << "g1";
        for (EdgeId id : d.edges_g1) out << " " << id;
        out << "\ng2";
        for (EdgeId id : d.edges_g2) out << " " << id;
        out << "\n";
        for (int j = 0; j < d.trees_g1.tree_count(); ++j) {
            out << "t1 " << j + 1;
            for (EdgeId id : d.trees_g1.trees[j]) out << " " << id;
            out << "\n";
        }
        for (int j = 0; j < d.trees_g2.tree_count(); ++j) {
            out << "t2 " << j + 1;
            for (EdgeId id : d.trees_g2.trees[j]) out << " " << id;
            out << "\n";
        }
        out << "VERDICT ok\n";
        return kExitOk;
    } catch (const PackingUnavailableError& e) {
        err << e.what() << "\n";
        print_partition_witness(out, e.witness);
        out << "VERDICT no-packing\n";
        return kExitNegative;
    } catch (const BudgetExceededError& e) {
        err << e.what() << "\n";
        out << "VERDICT budget-exceeded\n";
        return kExitBudget;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"modulo-k orientations, tree packings and nowhere-zero 3-flows on multigraphs"};
    app.name("modk");
    app.require_subcommand(1);

    std::string path, orientation_path, out_path;
    std::optional<int> k_flag, lambda_flag;
    std::optional<std::uint64_t> budget_flag;
    bool trace = false;
    int trees = 1, r = 1, gen_n = 1, gen_trees = 1, gen_extra = 0;
    std::uint64_t seed = 1;

    CLI::App* orient = app.add_subcommand("orient", "construct an f-orientation");
    orient->add_option("instance", path)->required();
    orient->add_option("--k", k_flag, "modulus (overrides the file's k line)");
    orient->add_option("--lambda", lambda_flag, "edge-connectivity bound (default 3k-3 / 3k-2)");
    orient->add_option("--budget", budget_flag, "base-case node budget (beats MODK_BUDGET)");
    orient->add_flag("--trace", trace, "print the recursion trace as comments");

    CLI::App* verify = app.add_subcommand("verify", "check an orientation against an instance");
    verify->add_option("instance", path)->required();
    verify->add_option("--orientation", orientation_path, "file of 'a' lines")->required();

    CLI::App* nz3 = app.add_subcommand("nz3flow", "extract a nowhere-zero 3-flow");
    nz3->add_option("instance", path)->required();
    nz3->add_option("--lambda", lambda_flag);
    nz3->add_option("--budget", budget_flag);

    CLI::App* z3 = app.add_subcommand("z3check", "brute-force Z3-connectivity check");
    z3->add_option("instance", path)->required();
    z3->add_option("--budget", budget_flag);

    CLI::App* pack = app.add_subcommand("pack", "find edge-disjoint spanning trees");
    pack->add_option("instance", path)->required();
    pack->add_option("--trees", trees, "number of trees")->required();

    CLI::App* mincut = app.add_subcommand("mincut", "global minimum edge cut");
    mincut->add_option("instance", path)->required();

    CLI::App* gen = app.add_subcommand("gen", "random union of spanning trees");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--trees", gen_trees, "tree count")->required();
    gen->add_option("--extra", gen_extra, "extra random edges");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("-o,--output", out_path, "write the instance here");

    CLI::App* dec = app.add_subcommand("decompose", "bipartite degree-divisible decomposition");
    dec->add_option("instance", path)->required();
    dec->add_option("--r", r, "trees reserved per side")->required();
    dec->add_option("--k", k_flag);
    dec->add_option("--lambda", lambda_flag);
    dec->add_option("--budget", budget_flag);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (orient->parsed()) return cmd_orient(path, k_flag, lambda_flag, budget_flag, trace, out, err);
        if (verify->parsed()) return cmd_verify(path, orientation_path, out, err);
        if (nz3->parsed()) return cmd_nz3flow(path, lambda_flag, budget_flag, out, err);
        if (z3->parsed()) return cmd_z3check(path, budget_flag, out, err);
        if (pack->parsed()) return cmd_pack(path, trees, out, err);
        if (mincut->parsed()) return cmd_mincut(path, out, err);
        if (gen->parsed()) return cmd_gen(gen_n, gen_trees, gen_extra, seed, out_path, out, err);
        if (dec->parsed()) return cmd_decompose(path, r, k_flag, lambda_flag, budget_flag, out, err);
    } catch (const ParseError& e) {
        err << path << ":" << e.what() << "\n";
        out << "VERDICT input-error\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        out << "VERDICT input-error\n";
        return kExitInput;
    } catch (const DisconnectedGraphError& e) {
        err << e.what() << "\n";
        out << "VERDICT input-error\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        out << "VERDICT input-error\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace modk
