#pragma once

#include <cstdint>
#include <optional>

#include "naesat/formula.hpp"

// Two complete decision procedures: an exhaustive oracle for small
// instances and a propagation-guided backtracking search for reduced
// instances, plus exact solution counting.

namespace naesat {

inline constexpr int kDefaultExhaustiveCap = 30;

struct SolveStats {
    std::uint64_t nodes = 0;               // search decisions
    std::uint64_t assignments_tested = 0;  // full assignments evaluated
};

struct SolveResult {
    bool satisfiable = false;
    std::optional<Assignment> witness;  // verified against nae_eval before return
    SolveStats stats;
};

/// Enumerates assignments with the first variable pinned to T (nae
/// symmetry halves the space); returns the lexicographically lowest
/// witness of that half or unsatisfiable. Throws when num_vars exceeds
/// the cap, directing the caller to solve_backtracking.
SolveResult solve_exhaustive(const Formula& f, int cap = kDefaultExhaustiveCap);

/// Exact count of nae-satisfying assignments over all 2^n, no symmetry
/// fold, so counts match truth-table definitions directly.
std::uint64_t count_solutions(const Formula& f, int cap = kDefaultExhaustiveCap);

/// Complete search: branch, propagate, analyse implication chains,
/// backtrack on conflict. Agrees with solve_exhaustive everywhere.
SolveResult solve_backtracking(const Formula& f);

enum class Guarantee {
    none,
    always_satisfiable,            // k in {1,2}: instances of this shape are yes-instances
    poly_time_decidable_literature  // k = 3: decidable in P per the literature
};

struct DecideResult {
    SolveResult result;
    Guarantee guarantee = Guarantee::none;
};

/// Decides a Positive k-Disjoint E-k instance. For k in {1,2} an
/// unsatisfiable verdict is impossible and raises a hard internal error.
DecideResult decide_k_disjoint(const Formula& f, const Decomposition& d, int k);

}  // namespace naesat
