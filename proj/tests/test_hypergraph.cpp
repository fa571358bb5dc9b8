#include <doctest.h>

#include <stdexcept>

#include "naesat/formula.hpp"
#include "naesat/gadgets.hpp"
#include "naesat/hypergraph.hpp"
#include "naesat/solver.hpp"

using namespace naesat;

TEST_CASE("no-instance converts to 9 vertices, 12 edges, 4 perfect matchings") {
    auto [f, d] = canonical_no_instance();
    HypergraphConversion conv = formula_to_hypergraph(f, d);
    CHECK_FALSE(conv.matchings_dropped);
    const Hypergraph& h = conv.hypergraph;
    CHECK(h.num_vertices == 9);
    CHECK(h.edges.size() == 12);
    REQUIRE(h.matchings.has_value());
    CHECK(h.matchings->size() == 4);
    for (const auto& m : *h.matchings)
        CHECK(check_matching(h, m) == MatchingVerdict::perfect_matching);
}

TEST_CASE("single clause converts and is bicolorable") {
    Formula f(3, {Clause({pos(0), pos(1), pos(2)})});
    Hypergraph h = formula_to_hypergraph(f).hypergraph;
    CHECK(h.edges.size() == 1);
    SolveResult r = solve_exhaustive(f);
    REQUIRE(r.satisfiable);
    Coloring c = assignment_to_coloring(*r.witness, 3);
    CHECK_FALSE(first_monochromatic_edge(h, c).has_value());
}

TEST_CASE("conversion rejects negative literals and non-3-clauses") {
    Formula negated(3, {Clause({neg(0), pos(1), pos(2)})});
    CHECK_THROWS_AS(formula_to_hypergraph(negated), std::invalid_argument);
    Formula two(2, {Clause({pos(0), pos(1)})});
    CHECK_THROWS_AS(formula_to_hypergraph(two), std::invalid_argument);
}

TEST_CASE("roundtrip through the hypergraph is the identity") {
    auto [f, d] = canonical_no_instance();
    HypergraphConversion conv = formula_to_hypergraph(f, d);
    auto [f2, d2] = hypergraph_to_formula(conv.hypergraph);
    CHECK(f2 == f);
    REQUIRE(d2.has_value());
    CHECK(*d2 == d);
}

TEST_CASE("invalid decomposition drops matchings instead of failing") {
    Formula f(4, {Clause({pos(0), pos(1), pos(2)})});  // variable 3 uncovered
    Decomposition d(1, {{0}});
    HypergraphConversion conv = formula_to_hypergraph(f, d);
    CHECK(conv.matchings_dropped);
    CHECK_FALSE(conv.hypergraph.matchings.has_value());
}

TEST_CASE("matching verdicts") {
    auto [f, d] = canonical_no_instance();
    Hypergraph h = formula_to_hypergraph(f).hypergraph;
    CHECK(check_matching(h, {0, 1, 2}) == MatchingVerdict::perfect_matching);  // C1
    CHECK(check_matching(h, {0, 3}) == MatchingVerdict::not_matching);  // share vertex a
    CHECK(check_matching(h, {0}) == MatchingVerdict::matching);         // not perfect
    CHECK_THROWS_AS(check_matching(h, {99}), std::invalid_argument);
}

TEST_CASE("matching verdicts agree with the formula-side partition validator") {
    auto [f, d] = canonical_no_instance();
    StructureReport rep = validate(f, d);
    Hypergraph h = formula_to_hypergraph(f).hypergraph;
    for (std::size_t b = 0; b < d.num_blocks(); ++b) {
        MatchingVerdict v = check_matching(h, d.blocks()[b]);
        CHECK((v == MatchingVerdict::perfect_matching) == rep.block_is_partition[b]);
        CHECK((v != MatchingVerdict::not_matching) == rep.block_is_matching[b]);
    }
}

TEST_CASE("coloring bridge: all color 1 makes the edge monochromatic") {
    Formula f(3, {Clause({pos(0), pos(1), pos(2)})});
    Hypergraph h = formula_to_hypergraph(f).hypergraph;
    Coloring c{{1, 1, 1}};
    CHECK(first_monochromatic_edge(h, c) == std::optional<int>(0));
    Assignment a = coloring_to_assignment(c);
    CHECK_FALSE(nae_eval(f, a).satisfied);
}

TEST_CASE("coloring bridge is an involution") {
    Coloring c{{1, 2, 2, 1}};
    Coloring back = assignment_to_coloring(coloring_to_assignment(c), 4);
    CHECK(back.colors == c.colors);
    Assignment a = Assignment::total({true, false, true});
    Assignment again = coloring_to_assignment(assignment_to_coloring(a, 3));
    CHECK(again == a);
}

TEST_CASE("bridge correctness: nae_eval agrees with the monochromatic check exhaustively") {
    auto [noinst, d] = canonical_no_instance();
    Formula small(4, {Clause({pos(0), pos(1), pos(2)}), Clause({pos(1), pos(2), pos(3)})});
    for (const Formula& f : {noinst, small}) {
        Hypergraph h = formula_to_hypergraph(f).hypergraph;
        const std::uint64_t total = std::uint64_t{1} << f.num_vars();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            std::vector<bool> values;
            for (int v = 0; v < f.num_vars(); ++v) values.push_back((bits >> v) & 1);
            Assignment a = Assignment::total(values);
            bool nae = nae_eval(f, a).satisfied;
            bool proper = !first_monochromatic_edge(h, assignment_to_coloring(a, f.num_vars()))
                               .has_value();
            CHECK(nae == proper);
        }
    }
}
