#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "naesat/formula.hpp"
#include "naesat/gadgets.hpp"
#include "naesat/generator.hpp"
#include "naesat/hypergraph.hpp"
#include "naesat/propagation.hpp"
#include "naesat/reductions.hpp"
#include "naesat/solver.hpp"
#include "naesat/textio.hpp"

namespace py = pybind11;
using namespace naesat;

namespace {

// Clauses cross the boundary as signed 1-based integers, matching the
// wire format.
Clause clause_from_ints(const std::vector<int>& lits) {
    std::vector<Literal> out;
    for (int lit : lits) {
        if (lit == 0) throw std::invalid_argument("literal 0 is reserved");
        out.push_back(Literal{std::abs(lit) - 1, lit < 0});
    }
    return Clause(out);
}

std::vector<int> clause_to_ints(const Clause& c) {
    std::vector<int> out;
    for (const Literal& l : c.normalized())
        out.push_back(l.negated ? -(l.var + 1) : l.var + 1);
    return out;
}

Formula make_formula(int num_vars, const std::vector<std::vector<int>>& clauses,
                     const std::vector<std::string>& names) {
    std::vector<Clause> parsed;
    for (const auto& c : clauses) parsed.push_back(clause_from_ints(c));
    return Formula(num_vars, std::move(parsed), names);
}

Assignment assignment_from_values(const std::vector<bool>& values) {
    return Assignment::total(values);
}

py::dict report_to_dict(const StructureReport& r) {
    py::dict out;
    out["positive"] = r.positive;
    out["linear"] = r.linear;
    out["clause_size_profile"] = r.clause_size_profile;
    py::list apps;
    for (const auto& c : r.appearances) apps.append(py::make_tuple(c.unnegated, c.negated));
    out["appearance_counts"] = apps;
    out["block_is_matching"] = r.block_is_matching;
    out["block_is_partition"] = r.block_is_partition;
    out["blocks_pairwise_clause_disjoint"] = r.blocks_pairwise_clause_disjoint;
    if (r.profile_checked) {
        out["profile_pass"] = r.profile_pass;
        out["first_failure"] = r.first_failure;
    }
    return out;
}

py::dict solve_result_to_dict(const SolveResult& r) {
    py::dict out;
    out["satisfiable"] = r.satisfiable;
    if (r.witness) {
        py::list w;
        for (int v = 0; v < r.witness->num_slots(); ++v) w.append(*r.witness->value(v));
        out["witness"] = w;
    } else {
        out["witness"] = py::none();
    }
    out["nodes"] = r.stats.nodes;
    out["assignments_tested"] = r.stats.assignments_tested;
    return out;
}

}  // namespace

PYBIND11_MODULE(naesat_py, m) {
    m.doc() = "Not-all-equal 3-SAT instance toolkit: structural validation, "
              "complete solvers, equality gadgets, reductions between "
              "partition-structured instance classes, and the hypergraph "
              "2-coloring view.";

    py::class_<Formula>(m, "Formula")
        .def(py::init(&make_formula), py::arg("num_vars"), py::arg("clauses"),
             py::arg("var_names") = std::vector<std::string>{})
        .def_property_readonly("num_vars", &Formula::num_vars)
        .def_property_readonly("clauses",
                               [](const Formula& f) {
                                   std::vector<std::vector<int>> out;
                                   for (const Clause& c : f.clauses())
                                       out.push_back(clause_to_ints(c));
                                   return out;
                               })
        .def_property_readonly("var_names", &Formula::var_names)
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__len__", &Formula::num_clauses)
        .def("__repr__", [](const Formula& f) {
            return "<Formula " + std::to_string(f.num_vars()) + " vars, " +
                   std::to_string(f.num_clauses()) + " clauses>";
        });

    py::class_<Decomposition>(m, "Decomposition")
        .def(py::init<std::size_t, std::vector<std::vector<int>>>(),
             py::arg("num_clauses"), py::arg("blocks"))
        .def_property_readonly("blocks", &Decomposition::blocks)
        .def("__eq__",
             [](const Decomposition& a, const Decomposition& b) { return a == b; })
        .def("__len__", &Decomposition::num_blocks);

    m.def("nae_eval",
          [](const Formula& f, const std::vector<bool>& values) -> std::optional<int> {
              NaeVerdict v = nae_eval(f, assignment_from_values(values));
              if (v.satisfied) return std::nullopt;
              return v.violated_clause;
          },
          py::arg("formula"), py::arg("assignment"),
          "None when nae-satisfied, else the lowest violated clause index.");

    m.def("flip_assignment", [](const std::vector<bool>& values) {
        std::vector<bool> out;
        for (bool b : values) out.push_back(!b);
        return out;
    });

    m.def("appearance_counts", [](const Formula& f) {
        std::vector<std::pair<int, int>> out;
        for (const auto& c : appearance_counts(f)) out.emplace_back(c.unnegated, c.negated);
        return out;
    });

    m.def("validate",
          [](const Formula& f, std::optional<Decomposition> d, bool positive, bool linear,
             std::optional<int> disjoint, bool partitions, std::optional<int> exactly,
             std::vector<int> sizes) {
              std::optional<ProfileRequest> profile;
              if (positive || linear || disjoint || partitions || exactly || !sizes.empty()) {
                  profile = ProfileRequest{positive, linear, disjoint, partitions, exactly,
                                           sizes};
              }
              return report_to_dict(validate(f, d, profile));
          },
          py::arg("formula"), py::arg("decomposition") = std::nullopt,
          py::arg("positive") = false, py::arg("linear") = false,
          py::arg("disjoint") = std::nullopt, py::arg("partitions") = false,
          py::arg("exactly") = std::nullopt, py::arg("sizes") = std::vector<int>{});

    m.def("solve_exhaustive",
          [](const Formula& f, int cap) { return solve_result_to_dict(solve_exhaustive(f, cap)); },
          py::arg("formula"), py::arg("cap") = kDefaultExhaustiveCap);
    m.def("solve_backtracking",
          [](const Formula& f) { return solve_result_to_dict(solve_backtracking(f)); });
    m.def("count_solutions", &count_solutions, py::arg("formula"),
          py::arg("cap") = kDefaultExhaustiveCap);
    m.def("decide_k_disjoint",
          [](const Formula& f, const Decomposition& d, int k) {
              DecideResult r = decide_k_disjoint(f, d, k);
              py::dict out = solve_result_to_dict(r.result);
              out["guarantee"] = r.guarantee == Guarantee::always_satisfiable
                                     ? "always-satisfiable"
                                     : r.guarantee == Guarantee::poly_time_decidable_literature
                                           ? "poly-time-decidable"
                                           : "none";
              return out;
          });

    m.def("canonical_no_instance", []() { return canonical_no_instance(); });

    auto gadget_tuple = [](const GadgetInstance& g) {
        return py::make_tuple(g.fragment, g.columns, g.interface_vars, g.aux_vars);
    };
    m.def("eq_gadget", [gadget_tuple](std::array<int, 4> iface, int first_fresh) {
        FreshVars fresh{first_fresh};
        return gadget_tuple(eq_gadget(iface, fresh));
    });
    m.def("eq_lin_gadget", [gadget_tuple](std::array<int, 4> iface, int first_fresh) {
        FreshVars fresh{first_fresh};
        return gadget_tuple(eq_lin_gadget(iface, fresh));
    });
    m.def("verify_equality_gadget", [](const Formula& fragment,
                                       const std::vector<int>& interface_vars,
                                       const std::vector<int>& aux_vars) {
        GadgetInstance g{fragment, Decomposition(fragment.num_clauses(), {[&] {
                             std::vector<int> all(fragment.num_clauses());
                             for (std::size_t i = 0; i < all.size(); ++i)
                                 all[i] = static_cast<int>(i);
                             return all;
                         }()}),
                         interface_vars, aux_vars, {}};
        GadgetVerdict v = verify_equality_gadget(g);
        py::list rows;
        for (const auto& row : v.rows)
            rows.append(py::make_tuple(row.interface_values, row.extension_exists));
        return py::make_tuple(v.pass, rows);
    });

    py::class_<ReductionArtifact>(m, "ReductionArtifact")
        .def_property_readonly("route",
                               [](const ReductionArtifact& a) { return route_name(a.route); })
        .def_readonly("source", &ReductionArtifact::source)
        .def_readonly("target", &ReductionArtifact::target)
        .def_readonly("target_decomposition", &ReductionArtifact::target_decomposition)
        .def("push_forward",
             [](const ReductionArtifact& a, const std::vector<bool>& witness) {
                 Assignment out = push_forward(a, assignment_from_values(witness));
                 std::vector<bool> values;
                 for (int v = 0; v < out.num_slots(); ++v) values.push_back(*out.value(v));
                 return values;
             })
        .def("pull_back", [](const ReductionArtifact& a, const std::vector<bool>& witness) {
            Assignment out = pull_back(a, assignment_from_values(witness));
            std::vector<bool> values;
            for (int v = 0; v < out.num_slots(); ++v) values.push_back(*out.value(v));
            return values;
        });

    m.def("split_and_equalize", &split_and_equalize);
    m.def("complete_partitions", &complete_partitions);
    m.def("linearize", &linearize);
    m.def("lift_k", &lift_k);
    m.def("flip_partitions", &flip_partitions);
    m.def("to23_one_3clause", &to23_one_3clause);
    m.def("to23_one_2clause", &to23_one_2clause);
    m.def("pipeline_to_k", &pipeline_to_k);

    m.def("parse", [](const std::string& text) {
        ParsedInstance p = parse_instance(text);
        return py::make_tuple(p.formula, p.decomposition);
    });
    m.def("serialize", &serialize_instance, py::arg("formula"),
          py::arg("decomposition") = std::nullopt);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_readonly("num_vertices", &Hypergraph::num_vertices)
        .def_readonly("edges", &Hypergraph::edges)
        .def_readonly("matchings", &Hypergraph::matchings);
    m.def("formula_to_hypergraph",
          [](const Formula& f, std::optional<Decomposition> d) {
              HypergraphConversion conv = formula_to_hypergraph(f, d);
              return py::make_tuple(conv.hypergraph, conv.matchings_dropped);
          },
          py::arg("formula"), py::arg("decomposition") = std::nullopt);
    m.def("hypergraph_to_formula", &hypergraph_to_formula);
    m.def("first_monochromatic_edge",
          [](const Hypergraph& h, const std::vector<int>& colors) -> std::optional<int> {
              return first_monochromatic_edge(h, Coloring{colors});
          });

    m.def("gen_k_disjoint",
          [](int num_vars, int k, bool linear, bool disjoint, std::uint64_t seed,
             int max_rejections) {
              GenSpec spec{num_vars, k, linear, disjoint, seed, max_rejections};
              return gen_k_disjoint(spec);
          },
          py::arg("num_vars"), py::arg("k"), py::arg("linear") = false,
          py::arg("disjoint") = false, py::arg("seed") = 0,
          py::arg("max_rejections") = 10000);
    m.def("gen_positive_e4", &gen_positive_e4, py::arg("num_vars"), py::arg("seed") = 0);

    py::register_exception<ParseError>(m, "ParseError");
}
