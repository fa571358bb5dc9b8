#pragma once

// Shared test fixtures. Linear 4-disjoint instances are too sparse at 12
// variables for rejection sampling, so the satisfiable control below is
// pinned: four pairwise clause-disjoint partitions of 12 variables into
// triples, pairwise sharing at most one variable, with exactly six
// nae-satisfying assignments.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "naesat/formula.hpp"
#include "naesat/generator.hpp"

namespace naesat::fixtures {

inline std::pair<Formula, Decomposition> satisfiable_linear_4disjoint_12(
    std::uint64_t relabel_seed = 0) {
    static const int classes[4][4][3] = {
        {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
        {{0, 3, 6}, {1, 4, 9}, {2, 7, 10}, {5, 8, 11}},
        {{0, 4, 7}, {1, 6, 11}, {2, 5, 9}, {3, 8, 10}},
        {{0, 8, 9}, {1, 3, 7}, {2, 4, 11}, {5, 6, 10}},
    };
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    if (relabel_seed != 0) {
        SplitMix64 rng(relabel_seed);
        for (int i = 11; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> blocks(4);
    for (int b = 0; b < 4; ++b)
        for (int t = 0; t < 4; ++t) {
            blocks[b].push_back(static_cast<int>(clauses.size()));
            clauses.push_back(Clause({pos(perm[classes[b][t][0]]),
                                      pos(perm[classes[b][t][1]]),
                                      pos(perm[classes[b][t][2]])}));
        }
    Formula f(12, std::move(clauses));
    Decomposition d(16, std::move(blocks));
    return {std::move(f), std::move(d)};
}

}  // namespace naesat::fixtures
