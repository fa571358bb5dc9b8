#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "naesat/formula.hpp"

// The bicolorability view: positive 3-clause formulas as 3-uniform
// hypergraphs, clause blocks as perfect matchings, assignments as
// 2-colorings.

namespace naesat {

struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;  // vertex sets, ascending
    std::optional<std::vector<std::vector<int>>> matchings;  // edge index groups

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Vertex colors are 1 and 2.
struct Coloring {
    std::vector<int> colors;
};

struct HypergraphConversion {
    Hypergraph hypergraph;
    // Set when a decomposition was given but some block is not a
    // partition: the hypergraph is emitted without matching annotations.
    bool matchings_dropped = false;
};

/// Vertices are variables, edges are clauses; decomposition blocks become
/// matchings only when every block passes the partition check. Rejects
/// negated literals and non-3-clauses.
HypergraphConversion formula_to_hypergraph(const Formula& f,
                                           const std::optional<Decomposition>& d = {});

std::pair<Formula, std::optional<Decomposition>> hypergraph_to_formula(const Hypergraph& h);

enum class MatchingVerdict { not_matching, matching, perfect_matching };

MatchingVerdict check_matching(const Hypergraph& h, const std::vector<int>& edge_group);

/// Color 1 is T, color 2 is F; both directions, each an involution with
/// the other.
Coloring assignment_to_coloring(const Assignment& a, int num_vertices);
Assignment coloring_to_assignment(const Coloring& c);

/// Lowest monochromatic edge index, if any.
std::optional<int> first_monochromatic_edge(const Hypergraph& h, const Coloring& c);

}  // namespace naesat
