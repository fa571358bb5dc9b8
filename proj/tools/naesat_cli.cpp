// Command line front end: validate, solve, reduce, gadget, convert, gen,
// hunt. Exit code 0 means satisfiable/valid, 1 unsatisfiable/invalid,
// 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "naesat/formula.hpp"
#include "naesat/gadgets.hpp"
#include "naesat/generator.hpp"
#include "naesat/hypergraph.hpp"
#include "naesat/reductions.hpp"
#include "naesat/solver.hpp"
#include "naesat/textio.hpp"

using namespace naesat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // unsatisfiable / profile failed
constexpr int kExitUsage = 2;     // usage or parse error

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

void print_witness(const Assignment& a, int num_vars) {
    std::cout << "v";
    for (int v = 0; v < num_vars; ++v)
        std::cout << ' ' << (*a.value(v) ? v + 1 : -(v + 1));
    std::cout << '\n';
}

void print_report(const StructureReport& r, bool quiet) {
    if (quiet) return;
    std::cout << "positive: " << (r.positive ? "yes" : "no") << '\n';
    std::cout << "linear: " << (r.linear ? "yes" : "no") << '\n';
    std::cout << "clause sizes:";
    for (const auto& [size, count] : r.clause_size_profile)
        std::cout << ' ' << size << "x" << count;
    std::cout << '\n';
    bool uniform = true;
    int k = r.appearances.empty()
                ? 0
                : r.appearances[0].unnegated + r.appearances[0].negated;
    for (const auto& c : r.appearances)
        if (c.unnegated + c.negated != k) uniform = false;
    if (uniform && !r.appearances.empty())
        std::cout << "appearances: exactly " << k << " per variable\n";
    else
        std::cout << "appearances: non-uniform\n";
    for (std::size_t b = 0; b < r.block_is_partition.size(); ++b)
        std::cout << "block " << b + 1 << ": "
                  << (r.block_is_partition[b]
                          ? "partition"
                          : r.block_is_matching[b] ? "matching" : "overlapping")
                  << '\n';
}

std::string provenance_text(const ReductionArtifact& art) {
    std::ostringstream out;
    for (std::size_t tv = 0; tv < art.provenance.size(); ++tv) {
        const VarOrigin& o = art.provenance[tv];
        out << tv + 1 << ' ';
        switch (o.kind) {
            case VarOrigin::Kind::copy:
                out << "copy " << o.source_var + 1 << ' ' << o.index;
                break;
            case VarOrigin::Kind::gadget_aux:
                out << "aux " << o.source_var + 1 << ' ' << o.index;
                break;
            case VarOrigin::Kind::padding_aux:
                out << "pad " << o.index << ' ' << o.sub;
                break;
            case VarOrigin::Kind::shadow:
                out << "shadow " << o.source_var + 1 << ' ' << o.index;
                break;
            case VarOrigin::Kind::plus_half:
                out << "plus " << o.source_var + 1;
                break;
            case VarOrigin::Kind::minus_half:
                out << "minus " << o.source_var + 1;
                break;
        }
        out << '\n';
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Not-all-equal 3-SAT instance toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --quiet may follow the subcommand
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress reports");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "structural report and profile check");
    std::string validate_file = "-";
    bool req_positive = false, req_linear = false, req_partitions = false;
    std::optional<int> req_disjoint, req_ek;
    std::vector<int> req_sizes;
    validate_cmd->add_option("file", validate_file, "instance file or - for stdin");
    validate_cmd->add_flag("--positive", req_positive, "require positive clauses");
    validate_cmd->add_flag("--linear", req_linear, "require linearity");
    validate_cmd->add_option("--disjoint", req_disjoint, "require k disjoint blocks");
    validate_cmd->add_flag("--partitions", req_partitions,
                           "require every block to be a partition");
    validate_cmd->add_option("--ek", req_ek, "require exactly k appearances per variable");
    validate_cmd->add_option("--sizes", req_sizes, "allowed clause sizes");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decide nae-satisfiability");
    std::string solve_file = "-";
    bool use_exhaustive = false, use_backtracking = false, use_count = false,
         show_witness = false;
    int cap = kDefaultExhaustiveCap;
    solve_cmd->add_option("file", solve_file, "instance file or - for stdin");
    solve_cmd->add_flag("--exhaustive", use_exhaustive, "exhaustive enumeration");
    solve_cmd->add_flag("--backtracking", use_backtracking, "backtracking search (default)");
    solve_cmd->add_flag("--count", use_count, "count nae-satisfying assignments");
    solve_cmd->add_option("--cap", cap, "variable cap for exhaustive modes");
    solve_cmd->add_flag("--witness", show_witness, "print a satisfying assignment");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "apply a reduction route");
    std::string reduce_file = "-", route, reduce_out, provenance_out;
    reduce_cmd->add_option("file", reduce_file, "instance file or - for stdin");
    reduce_cmd
        ->add_option("--route", route,
                     "split4|complete|linearize|liftk|flip:<q>|to23-3|to23-2|pipeline:<k>")
        ->required();
    reduce_cmd->add_option("-o,--output", reduce_out, "target instance file");
    reduce_cmd->add_option("--provenance", provenance_out, "provenance sidecar file");

    // gadget
    auto* gadget_cmd = app.add_subcommand("gadget", "emit a gadget fragment");
    std::string gadget_kind;
    gadget_cmd->add_option("kind", gadget_kind, "eq|eqlin|padding|noinstance")->required();

    // convert
    auto* convert_cmd = app.add_subcommand("convert", "formula/hypergraph conversions");
    std::string convert_file = "-";
    bool to_hypergraph = false, from_hypergraph = false;
    convert_cmd->add_option("file", convert_file, "input file or - for stdin");
    convert_cmd->add_flag("--to-hypergraph", to_hypergraph, "formula text to hypergraph text");
    convert_cmd->add_flag("--from-hypergraph", from_hypergraph,
                          "hypergraph text to formula text");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a random k-disjoint instance");
    GenSpec spec;
    gen_cmd->add_option("--vars", spec.num_vars, "variable count (multiple of 3)")->required();
    gen_cmd->add_option("--k", spec.k, "number of partitions")->required();
    gen_cmd->add_flag("--linear", spec.require_linear, "resample until linear");
    gen_cmd->add_flag("--disjoint", spec.require_pairwise_disjoint,
                      "resample until blocks are pairwise clause-disjoint");
    gen_cmd->add_option("--seed", spec.seed, "random seed")->required();
    gen_cmd->add_option("--max-rejections", spec.max_rejections, "rejection budget");

    // hunt
    auto* hunt_cmd = app.add_subcommand(
        "hunt", "search for an unsatisfiable k-disjoint E-k instance");
    int hunt_k = 3, hunt_vars = 9, hunt_count = 100;
    std::uint64_t hunt_seed = 0;
    bool hunt_linear = false;
    hunt_cmd->add_option("--k", hunt_k, "number of partitions (default 3)");
    hunt_cmd->add_option("--vars", hunt_vars, "variable count per instance");
    hunt_cmd->add_option("--count", hunt_count, "number of instances to try");
    hunt_cmd->add_option("--seed", hunt_seed, "first seed");
    hunt_cmd->add_flag("--linear", hunt_linear, "restrict to linear instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or requested help text
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (validate_cmd->parsed()) {
        ParsedInstance in = parse_instance(read_input(validate_file));
        std::optional<ProfileRequest> profile;
        if (req_positive || req_linear || req_disjoint || req_partitions || req_ek ||
            !req_sizes.empty())
            profile = ProfileRequest{req_positive, req_linear, req_disjoint,
                                     req_partitions, req_ek, req_sizes};
        StructureReport report = validate(in.formula, in.decomposition, profile);
        print_report(report, quiet);
        if (report.profile_checked) {
            if (!quiet)
                std::cout << (report.profile_pass ? "profile: pass"
                                                  : "profile: FAIL (" + report.first_failure + ")")
                          << '\n';
            return report.profile_pass ? kExitOk : kExitNegative;
        }
        return kExitOk;
    }

    if (solve_cmd->parsed()) {
        ParsedInstance in = parse_instance(read_input(solve_file));
        if (use_count) {
            std::cout << count_solutions(in.formula, cap) << '\n';
            return kExitOk;
        }
        SolveResult res = use_exhaustive ? solve_exhaustive(in.formula, cap)
                                         : solve_backtracking(in.formula);
        if (!quiet) {
            std::cout << (res.satisfiable ? "satisfiable" : "unsatisfiable") << '\n';
            std::cerr << "c nodes " << res.stats.nodes << ", assignments tested "
                      << res.stats.assignments_tested << '\n';
        }
        if (res.satisfiable && show_witness)
            print_witness(*res.witness, in.formula.num_vars());
        return res.satisfiable ? kExitOk : kExitNegative;
    }

    if (reduce_cmd->parsed()) {
        ParsedInstance in = parse_instance(read_input(reduce_file));
        auto need_decomposition = [&]() -> const Decomposition& {
            if (!in.decomposition)
                throw std::runtime_error("route needs an instance with block tags");
            return *in.decomposition;
        };
        ReductionArtifact art = [&]() {
            if (route == "split4") return split_and_equalize(in.formula);
            if (route == "complete")
                return complete_partitions(in.formula, need_decomposition());
            if (route == "linearize") return linearize(in.formula, need_decomposition());
            if (route == "liftk") return lift_k(in.formula, need_decomposition());
            if (route.rfind("flip:", 0) == 0)
                return flip_partitions(in.formula, need_decomposition(),
                                       std::stoi(route.substr(5)));
            if (route == "to23-3") return to23_one_3clause(in.formula);
            if (route == "to23-2")
                return to23_one_2clause(in.formula, need_decomposition());
            if (route.rfind("pipeline:", 0) == 0) {
                auto chain = pipeline_to_k(in.formula, std::stoi(route.substr(9)));
                return chain.back();
            }
            throw CLI::ValidationError("--route", "unknown route '" + route + "'");
        }();
        std::string text = serialize_instance(art.target, art.target_decomposition);
        if (!provenance_out.empty()) {
            text = "c provenance " + provenance_out + "\n" + text;
            write_output(provenance_out, provenance_text(art));
        }
        write_output(reduce_out, text);
        return kExitOk;
    }

    if (gadget_cmd->parsed()) {
        if (gadget_kind == "noinstance") {
            auto [f, d] = canonical_no_instance();
            std::cout << serialize_instance(f, d);
            return kExitOk;
        }
        FreshVars fresh;
        std::vector<std::string> names;
        GadgetInstance g = [&]() {
            if (gadget_kind == "eq" || gadget_kind == "eqlin") {
                std::array<int, 4> iface{fresh.alloc(), fresh.alloc(), fresh.alloc(),
                                         fresh.alloc()};
                names = {"x1", "x2", "x3", "x4"};
                return gadget_kind == "eq" ? eq_gadget(iface, fresh)
                                           : eq_lin_gadget(iface, fresh);
            }
            if (gadget_kind == "padding") {
                std::array<int, 3> x{}, y{}, z{};
                for (int j = 0; j < 3; ++j) x[j] = fresh.alloc();
                for (int j = 0; j < 3; ++j) y[j] = fresh.alloc();
                for (int j = 0; j < 3; ++j) z[j] = fresh.alloc();
                names = {"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"};
                return padding_set(1, x, y, z, fresh);
            }
            throw CLI::ValidationError("kind", "unknown gadget '" + gadget_kind + "'");
        }();
        names.insert(names.end(), g.aux_names.begin(), g.aux_names.end());
        Formula named(g.fragment.num_vars(), g.fragment.clauses(), names);
        std::cout << serialize_instance(named, g.columns);
        return kExitOk;
    }

    if (convert_cmd->parsed()) {
        if (to_hypergraph == from_hypergraph)
            throw CLI::ValidationError("convert",
                                       "pick exactly one of --to-hypergraph/--from-hypergraph");
        std::string text = read_input(convert_file);
        if (to_hypergraph) {
            ParsedInstance in = parse_instance(text);
            HypergraphConversion conv = formula_to_hypergraph(in.formula, in.decomposition);
            if (conv.matchings_dropped && !quiet)
                std::cerr << "warning: decomposition blocks are not partitions; "
                             "matchings dropped\n";
            std::cout << serialize_hypergraph(conv.hypergraph);
        } else {
            auto [f, d] = hypergraph_to_formula(parse_hypergraph(text));
            std::cout << serialize_instance(f, d);
        }
        return kExitOk;
    }

    if (gen_cmd->parsed()) {
        auto [f, d] = gen_k_disjoint(spec);
        std::cout << serialize_instance(f, d);
        return kExitOk;
    }

    if (hunt_cmd->parsed()) {
        for (int i = 0; i < hunt_count; ++i) {
            GenSpec s;
            s.num_vars = hunt_vars;
            s.k = hunt_k;
            s.require_linear = hunt_linear;
            s.require_pairwise_disjoint = true;
            s.seed = hunt_seed + static_cast<std::uint64_t>(i);
            std::optional<std::pair<Formula, Decomposition>> inst;
            try {
                inst = gen_k_disjoint(s);
            } catch (const std::runtime_error&) {
                continue;  // rejection budget exhausted for this seed
            }
            SolveResult res = solve_backtracking(inst->first);
            if (!res.satisfiable) {
                std::cout << "c unsatisfiable instance found, seed " << s.seed << '\n'
                          << serialize_instance(inst->first, inst->second);
                return kExitOk;
            }
        }
        if (!quiet)
            std::cout << "all " << hunt_count << " instances nae-satisfiable\n";
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
