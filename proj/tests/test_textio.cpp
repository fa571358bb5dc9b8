#include <doctest.h>

#include <fstream>
#include <sstream>

#include "naesat/gadgets.hpp"
#include "naesat/generator.hpp"
#include "naesat/textio.hpp"

using namespace naesat;

TEST_CASE("parse a one-clause instance with a single block") {
    ParsedInstance p = parse_instance("p nae 3 1 1\n1 1 2 3 0\n");
    CHECK(p.formula.num_vars() == 3);
    CHECK(p.formula.clauses()[0] == Clause({pos(0), pos(1), pos(2)}));
    REQUIRE(p.decomposition.has_value());
    CHECK(p.decomposition->blocks() == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("negative integers parse as negated variables") {
    ParsedInstance p = parse_instance("p nae 2 1 0\n0 1 -2 0\n");
    CHECK(p.formula.clauses()[0] == Clause({pos(0), neg(1)}));
}

TEST_CASE("comments and names are handled") {
    ParsedInstance p = parse_instance(
        "c a comment\np nae 3 1 0\nn 1 left\nn 2 mid\nn 3 right\n0 1 2 3 0\n");
    CHECK(p.formula.var_names() == std::vector<std::string>{"left", "mid", "right"});
}

TEST_CASE("empty formula serializes to the bare header") {
    CHECK(serialize_instance(Formula(0, {})) == "p nae 0 0 0\n");
    ParsedInstance p = parse_instance("p nae 0 0 0\n");
    CHECK(p.formula.num_vars() == 0);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_instance("p nae 2 1 0\n0 1 5 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 5);
    }
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("p nae 3 2 0\n0 1 2 3 0\n"), ParseError);  // count
    CHECK_THROWS_AS(parse_instance("p nae 3 1 0\n0 1 2 3\n"), ParseError);    // no 0
    CHECK_THROWS_AS(parse_instance("p nae 3 1 2\n3 1 2 3 0\n"), ParseError);  // bad tag
    CHECK_THROWS_AS(parse_instance("p nae 3 2 0\n0 1 2 3 0\n0 3 2 1 0\n"),
                    ParseError);  // duplicate clause
    CHECK_THROWS_AS(parse_instance("p nae 3 1 0\n0 1 2 3 0\nx\n"), ParseError);
}

TEST_CASE("strict mode rejects clause lines before the header") {
    CHECK_THROWS_AS(parse_instance("0 1 2 3 0\np nae 3 1 0\n"), ParseError);
}

TEST_CASE("carriage returns and missing final newline are tolerated") {
    ParsedInstance crlf = parse_instance("p nae 3 1 0\r\n0 1 2 3 0\r\n");
    CHECK(crlf.formula.num_clauses() == 1);
    ParsedInstance bare = parse_instance("p nae 3 1 0\n0 1 2 3 0");
    CHECK(bare.formula == crlf.formula);
}

TEST_CASE("serialize is canonical: sorted literals, clause order, block tags") {
    Formula f(3, {Clause({pos(2), neg(0)}), Clause({pos(1), pos(0), pos(2)})});
    Decomposition d(2, {{1}, {0}});
    CHECK(serialize_instance(f, d) == "p nae 3 2 2\n2 -1 3 0\n1 1 2 3 0\n");
}

TEST_CASE("parse then serialize is idempotent") {
    std::string messy = "c x\np nae 4 2 2\n2 3 1 -2 0\nc mid\n1 4 2 0\n";
    std::string once = serialize_instance(parse_instance(messy).formula,
                                          parse_instance(messy).decomposition);
    ParsedInstance again = parse_instance(once);
    CHECK(serialize_instance(again.formula, again.decomposition) == once);
}

TEST_CASE("the shipped golden fixture matches the constructed instance byte for byte") {
    auto [f, d] = canonical_no_instance();
    std::ifstream in(NAESAT_DATA_DIR "/canonical_no_instance.nae", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(serialize_instance(f, d) == buf.str());
}

TEST_CASE("roundtrip property on generated instances") {
    SplitMix64 rng(314);
    for (int round = 0; round < 100; ++round) {
        GenSpec spec;
        spec.num_vars = 3 * (1 + static_cast<int>(rng.below(6)));
        spec.k = 1 + static_cast<int>(rng.below(3));
        spec.seed = rng.next();
        std::pair<Formula, Decomposition> inst = [&] {
            try {
                return gen_k_disjoint(spec);
            } catch (const std::runtime_error&) {
                spec.num_vars = 9;  // tiny n with large k may exhaust the budget
                return gen_k_disjoint(spec);
            }
        }();
        std::string text = serialize_instance(inst.first, inst.second);
        ParsedInstance back = parse_instance(text);
        CHECK(back.formula == inst.first);
        REQUIRE(back.decomposition.has_value());
        CHECK(*back.decomposition == inst.second);
        CHECK(serialize_instance(back.formula, back.decomposition) == text);
    }
}

TEST_CASE("parser survives arbitrary bytes with a located error or a value") {
    SplitMix64 rng(999);
    const std::string alphabet = "pnaech 0123456789-\n\t x";
    for (int round = 0; round < 500; ++round) {
        std::string junk;
        int len = static_cast<int>(rng.below(60));
        for (int i = 0; i < len; ++i) {
            // mostly format-shaped tokens, sometimes raw bytes
            if (rng.below(8) == 0)
                junk.push_back(static_cast<char>(rng.below(256)));
            else
                junk.push_back(alphabet[rng.below(alphabet.size())]);
        }
        try {
            parse_instance(junk);
        } catch (const ParseError&) {
            // located failure is the contract
        }
        try {
            parse_hypergraph(junk);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("hypergraph text roundtrip") {
    auto [f, d] = canonical_no_instance();
    HypergraphConversion conv = formula_to_hypergraph(f, d);
    std::string text = serialize_hypergraph(conv.hypergraph);
    Hypergraph back = parse_hypergraph(text);
    CHECK(back == conv.hypergraph);
    CHECK(serialize_hypergraph(back) == text);
    CHECK_THROWS_AS(parse_hypergraph("h 3 1 0\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("nonsense"), ParseError);
}
