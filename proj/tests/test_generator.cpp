#include <doctest.h>

#include <stdexcept>

#include "naesat/formula.hpp"
#include "naesat/generator.hpp"
#include "naesat/solver.hpp"
#include "naesat/textio.hpp"

using namespace naesat;

TEST_CASE("gen_k_disjoint validates its spec") {
    GenSpec bad;
    bad.num_vars = 8;  // not divisible by 3
    bad.k = 1;
    CHECK_THROWS_AS(gen_k_disjoint(bad), std::invalid_argument);
    bad.num_vars = 0;
    CHECK_THROWS_AS(gen_k_disjoint(bad), std::invalid_argument);
    GenSpec bad_k;
    bad_k.num_vars = 9;
    bad_k.k = 0;
    CHECK_THROWS_AS(gen_k_disjoint(bad_k), std::invalid_argument);
}

TEST_CASE("n=3, k=1 yields the only partition") {
    GenSpec spec;
    spec.num_vars = 3;
    spec.k = 1;
    spec.seed = 9;
    auto [f, d] = gen_k_disjoint(spec);
    CHECK(f.num_clauses() == 1);
    CHECK(f.clauses()[0] == Clause({pos(0), pos(1), pos(2)}));
}

TEST_CASE("n=3, k=2 exhausts the rejection budget") {
    GenSpec spec;
    spec.num_vars = 3;
    spec.k = 2;
    spec.require_pairwise_disjoint = true;
    spec.seed = 1;
    spec.max_rejections = 50;
    CHECK_THROWS_WITH_AS(gen_k_disjoint(spec),
                         "rejection budget exhausted after 50 attempts", std::runtime_error);
}

TEST_CASE("linear 4-disjoint at n=9 is found and passes the full profile") {
    GenSpec spec;
    spec.num_vars = 9;
    spec.k = 4;
    spec.require_linear = true;
    spec.require_pairwise_disjoint = true;
    spec.seed = 12345;
    auto [f, d] = gen_k_disjoint(spec);
    CHECK(validate(f, d, k_disjoint_ek_profile(4, true)).profile_pass);
}

TEST_CASE("equal seeds produce identical bytes, different seeds differ") {
    GenSpec spec;
    spec.num_vars = 12;
    spec.k = 3;
    spec.require_linear = true;
    spec.seed = 777;
    auto [f1, d1] = gen_k_disjoint(spec);
    auto [f2, d2] = gen_k_disjoint(spec);
    CHECK(serialize_instance(f1, d1) == serialize_instance(f2, d2));
    spec.seed = 778;
    auto [f3, d3] = gen_k_disjoint(spec);
    CHECK(serialize_instance(f1, d1) != serialize_instance(f3, d3));
}

TEST_CASE("gen_positive_e4 output passes Positive E4") {
    Formula f = gen_positive_e4(9, 4);
    CHECK(f.num_clauses() == 12);  // m = 4n/3
    ProfileRequest p;
    p.positive = true;
    p.clause_sizes = {3};
    p.exact_appearances = 4;
    CHECK(validate(f, {}, p).profile_pass);
}

TEST_CASE("every emitted instance passes its requested profile") {
    SplitMix64 rng(1);
    for (int round = 0; round < 30; ++round) {
        GenSpec spec;
        spec.k = 1 + static_cast<int>(rng.below(3));
        spec.require_linear = rng.below(2) == 0;
        // two partitions of six variables always share a pair, so linear
        // sampling needs at least nine
        int min_n = spec.require_linear && spec.k >= 2 ? 3 : 2;
        spec.num_vars = 3 * (min_n + static_cast<int>(rng.below(4)));
        spec.seed = rng.next();
        auto [f, d] = gen_k_disjoint(spec);
        CHECK(validate(f, d, k_disjoint_ek_profile(spec.k, spec.require_linear)).profile_pass);
    }
}

TEST_CASE("k in {1,2} instances are always satisfiable across seeds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenSpec spec;
        spec.num_vars = 9 + 3 * static_cast<int>(seed % 5);
        spec.k = 1 + static_cast<int>(seed % 2);
        spec.seed = seed;
        auto [f, d] = gen_k_disjoint(spec);
        CHECK(decide_k_disjoint(f, d, spec.k).result.satisfiable);
    }
}
