#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "naesat/formula.hpp"
#include "naesat/gadgets.hpp"
#include "naesat/generator.hpp"
#include "naesat/reductions.hpp"
#include "naesat/solver.hpp"

using namespace naesat;

namespace {

// Random mixed-sign (2,3)-formula for the oracle-agreement suite.
Formula random_formula(SplitMix64& rng, int max_vars) {
    int n = 3 + static_cast<int>(rng.below(max_vars - 2));
    int m = 1 + static_cast<int>(rng.below(3 * n));
    std::vector<Clause> clauses;
    std::set<std::vector<Literal>> seen;
    for (int j = 0; j < m; ++j) {
        int size = 2 + static_cast<int>(rng.below(2));
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < size) {
            int v = static_cast<int>(rng.below(n));
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        std::vector<Literal> lits;
        for (int v : vars) lits.push_back(Literal{v, rng.below(2) == 0});
        Clause c(lits);
        if (seen.insert(c.normalized()).second) clauses.push_back(c);
    }
    return Formula(n, clauses);
}

}  // namespace

TEST_CASE("exhaustive: the canonical no-instance refutes within 256 folded assignments") {
    auto [f, d] = canonical_no_instance();
    SolveResult r = solve_exhaustive(f);
    CHECK_FALSE(r.satisfiable);
    CHECK(r.stats.assignments_tested == 256);
}

TEST_CASE("exhaustive: empty formula is satisfiable with an empty witness") {
    Formula f(0, {});
    SolveResult r = solve_exhaustive(f);
    CHECK(r.satisfiable);
    CHECK(r.witness->num_slots() == 0);
}

TEST_CASE("exhaustive: single 3-clause has six nae models") {
    Formula f(3, {Clause({pos(0), pos(1), pos(2)})});
    CHECK(solve_exhaustive(f).satisfiable);
    CHECK(count_solutions(f) == 6);  // 8 minus the 2 monochromatic
}

TEST_CASE("exhaustive witness is lexicographically lowest with the first variable true") {
    Formula f(3, {Clause({pos(0), pos(1), pos(2)})});
    SolveResult r = solve_exhaustive(f);
    REQUIRE(r.satisfiable);
    // var0 pinned T; lowest completion is F,F.
    CHECK(*r.witness->value(0) == true);
    CHECK(*r.witness->value(1) == false);
    CHECK(*r.witness->value(2) == false);
}

TEST_CASE("exhaustive cap errors direct the caller to backtracking") {
    GenSpec spec;
    spec.num_vars = 9;
    spec.k = 2;
    spec.seed = 5;
    auto [f, d] = gen_k_disjoint(spec);
    CHECK_THROWS_AS(solve_exhaustive(f, 8), std::invalid_argument);
}

TEST_CASE("count_solutions: no-instance has zero models") {
    auto [f, d] = canonical_no_instance();
    CHECK(count_solutions(f) == 0);
}

TEST_CASE("count_solutions: EQ_lin fragment over its 10 variables") {
    FreshVars fresh;
    std::array<int, 4> iface{fresh.alloc(), fresh.alloc(), fresh.alloc(), fresh.alloc()};
    GadgetInstance g = eq_lin_gadget(iface, fresh);
    // Independent oracle: models only exist for constant interfaces, so
    // the total is the auxiliary extension count summed over both
    // polarities. Enumerated directly here.
    std::uint64_t per_polarity[2] = {0, 0};
    for (int polarity = 0; polarity < 2; ++polarity)
        for (int bits = 0; bits < (1 << 6); ++bits) {
            Assignment a(g.fragment.num_vars());
            for (int x : g.interface_vars) a.set(x, polarity == 1);
            for (std::size_t j = 0; j < g.aux_vars.size(); ++j)
                a.set(g.aux_vars[j], (bits >> j) & 1);
            if (nae_eval(g.fragment, a).satisfied) ++per_polarity[polarity];
        }
    CHECK(per_polarity[0] == 10);  // frozen from the first oracle run
    CHECK(per_polarity[1] == 10);
    CHECK(count_solutions(g.fragment) == per_polarity[0] + per_polarity[1]);
    CHECK(count_solutions(g.fragment) == 20);
}

TEST_CASE("symmetry fold agrees with the unfolded count on verdicts") {
    SplitMix64 rng(41);
    for (int round = 0; round < 120; ++round) {
        Formula f = random_formula(rng, 12);
        CHECK(solve_exhaustive(f).satisfiable == (count_solutions(f) > 0));
    }
}

TEST_CASE("backtracking: no-instance and its k=5 lift are unsatisfiable") {
    auto [f, d] = canonical_no_instance();
    CHECK_FALSE(solve_backtracking(f).satisfiable);
}

TEST_CASE("lifted no-instance cross-checked by full 2^26 enumeration") {
    auto [f, d] = canonical_no_instance();
    ReductionArtifact lifted = lift_k(f, d);
    REQUIRE(lifted.target.num_vars() == 27);
    CHECK_FALSE(solve_exhaustive(lifted.target, 27).satisfiable);
    CHECK_FALSE(solve_backtracking(lifted.target).satisfiable);
}

TEST_CASE("backtracking returns verified witnesses") {
    GenSpec spec;
    spec.num_vars = 15;
    spec.k = 3;
    spec.seed = 11;
    auto [f, d] = gen_k_disjoint(spec);
    SolveResult r = solve_backtracking(f);
    REQUIRE(r.satisfiable);
    CHECK(nae_eval(f, *r.witness).satisfied);
}

TEST_CASE("oracle agreement: backtracking equals exhaustive on 500 random formulas") {
    SplitMix64 rng(2718);
    int unsat_seen = 0;
    for (int round = 0; round < 500; ++round) {
        Formula f = random_formula(rng, 20);
        SolveResult fast = solve_backtracking(f);
        SolveResult slow = solve_exhaustive(f);
        CHECK(fast.satisfiable == slow.satisfiable);
        if (!fast.satisfiable) ++unsat_seen;
    }
    CHECK(unsat_seen > 20);  // the suite actually exercises refutations
}

TEST_CASE("decide_k_disjoint: single partition is immediately satisfiable") {
    Formula f(6, {Clause({pos(0), pos(1), pos(2)}), Clause({pos(3), pos(4), pos(5)})});
    Decomposition d(2, {{0, 1}});
    DecideResult r = decide_k_disjoint(f, d, 1);
    CHECK(r.guarantee == Guarantee::always_satisfiable);
    CHECK(r.result.satisfiable);
}

TEST_CASE("decide_k_disjoint: the intro's first two partitions are satisfiable") {
    auto [whole, d4] = canonical_no_instance();
    std::vector<Clause> first_six(whole.clauses().begin(), whole.clauses().begin() + 6);
    Formula f(9, first_six, whole.var_names());
    Decomposition d(6, {{0, 1, 2}, {3, 4, 5}});
    DecideResult r = decide_k_disjoint(f, d, 2);
    CHECK(r.guarantee == Guarantee::always_satisfiable);
    CHECK(r.result.satisfiable);
    // cross-checked by the exhaustive oracle
    CHECK(solve_exhaustive(f).satisfiable);
}

TEST_CASE("decide_k_disjoint: the full no-instance at k=4 has no guarantee") {
    auto [f, d] = canonical_no_instance();
    DecideResult r = decide_k_disjoint(f, d, 4);
    CHECK(r.guarantee == Guarantee::none);
    CHECK_FALSE(r.result.satisfiable);
}

TEST_CASE("decide_k_disjoint: k=3 carries the literature guarantee flag") {
    GenSpec spec;
    spec.num_vars = 12;
    spec.k = 3;
    spec.seed = 23;
    auto [f, d] = gen_k_disjoint(spec);
    DecideResult r = decide_k_disjoint(f, d, 3);
    CHECK(r.guarantee == Guarantee::poly_time_decidable_literature);
}

TEST_CASE("decide_k_disjoint rejects profile violations") {
    auto [f, d] = canonical_no_instance();
    CHECK_THROWS_AS(decide_k_disjoint(f, d, 3), std::invalid_argument);
    Formula negated(3, {Clause({neg(0), pos(1), pos(2)})});
    Decomposition d1(1, {{0}});
    CHECK_THROWS_AS(decide_k_disjoint(negated, d1, 1), std::invalid_argument);
}

TEST_CASE("decide_k_disjoint never reports unsatisfiable for k in {1,2}") {
    SplitMix64 rng(5);
    for (int round = 0; round < 40; ++round) {
        GenSpec spec;
        spec.num_vars = 3 * (2 + static_cast<int>(rng.below(9)));
        spec.k = 1 + static_cast<int>(rng.below(2));
        spec.seed = rng.next();
        auto [f, d] = gen_k_disjoint(spec);
        DecideResult r = decide_k_disjoint(f, d, spec.k);
        CHECK(r.result.satisfiable);
        CHECK(r.guarantee == Guarantee::always_satisfiable);
    }
}
