#include "naesat/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace naesat {

HypergraphConversion formula_to_hypergraph(const Formula& f,
                                           const std::optional<Decomposition>& d) {
    HypergraphConversion out;
    out.hypergraph.num_vertices = f.num_vars();
    for (const Clause& c : f.clauses()) {
        if (c.size() != 3)
            throw std::invalid_argument("hypergraph view needs 3-clauses only");
        std::vector<int> edge;
        for (const Literal& l : c.normalized()) {
            if (l.negated)
                throw std::invalid_argument("hypergraph view needs positive clauses");
            edge.push_back(l.var);
        }
        out.hypergraph.edges.push_back(std::move(edge));
    }
    if (d) {
        StructureReport rep = validate(f, d);
        bool all_partitions = std::all_of(rep.block_is_partition.begin(),
                                          rep.block_is_partition.end(),
                                          [](bool b) { return b; });
        if (all_partitions)
            out.hypergraph.matchings = std::vector<std::vector<int>>(d->blocks().begin(),
                                                                     d->blocks().end());
        else
            out.matchings_dropped = true;
    }
    return out;
}

std::pair<Formula, std::optional<Decomposition>> hypergraph_to_formula(const Hypergraph& h) {
    std::vector<Clause> clauses;
    for (const auto& edge : h.edges) {
        std::vector<Literal> lits;
        for (int v : edge) lits.push_back(pos(v));
        clauses.push_back(Clause(lits));
    }
    std::optional<Decomposition> d;
    if (h.matchings) d = Decomposition(clauses.size(), *h.matchings);
    return {Formula(h.num_vertices, std::move(clauses)), std::move(d)};
}

MatchingVerdict check_matching(const Hypergraph& h, const std::vector<int>& edge_group) {
    std::vector<int> covered(h.num_vertices, 0);
    for (int idx : edge_group) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= h.edges.size())
            throw std::invalid_argument("edge index " + std::to_string(idx) + " out of range");
        for (int v : h.edges[idx])
            if (covered[v]++) return MatchingVerdict::not_matching;
    }
    bool perfect = std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
    return perfect ? MatchingVerdict::perfect_matching : MatchingVerdict::matching;
}

Coloring assignment_to_coloring(const Assignment& a, int num_vertices) {
    if (!a.total_on(num_vertices))
        throw std::invalid_argument("incomplete assignment");
    Coloring c;
    for (int v = 0; v < num_vertices; ++v) c.colors.push_back(*a.value(v) ? 1 : 2);
    return c;
}

Assignment coloring_to_assignment(const Coloring& c) {
    std::vector<bool> values;
    for (int color : c.colors) {
        if (color != 1 && color != 2)
            throw std::invalid_argument("color must be 1 or 2");
        values.push_back(color == 1);
    }
    return Assignment::total(values);
}

std::optional<int> first_monochromatic_edge(const Hypergraph& h, const Coloring& c) {
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& edge = h.edges[i];
        bool mono = std::all_of(edge.begin(), edge.end(), [&](int v) {
            return c.colors.at(v) == c.colors.at(edge.front());
        });
        if (mono) return static_cast<int>(i);
    }
    return std::nullopt;
}

}  // namespace naesat
