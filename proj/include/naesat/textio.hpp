#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "naesat/formula.hpp"
#include "naesat/hypergraph.hpp"

// Instance text format. One-based variable indices on the wire, zero-based
// internally; the boundary is exactly here.
//
//   c <comment>
//   p nae <num_vars> <num_clauses> <num_blocks>
//   n <index> <name>
//   <block-tag> <lit> <lit> [<lit>] 0
//
// Block tags are 1..num_blocks; tag 0 is used exactly when num_blocks is
// 0 (no decomposition). The canonical serialized form lists clauses in
// index order with literals sorted by variable, single-space separated,
// newline terminated.
//
// Hypergraphs use:
//
//   h <num_vertices> <num_edges> <num_matchings>
//   <vertex> <vertex> <vertex>
//   m <edge index>...

namespace naesat {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct ParsedInstance {
    Formula formula;
    std::optional<Decomposition> decomposition;
};

/// Strict parse: count mismatches, duplicate clauses and out-of-range
/// indices are rejected with line/column diagnostics. Any input yields
/// either a value or a ParseError.
ParsedInstance parse_instance(std::string_view text);

/// Canonical form; parse(serialize(f, d)) reproduces (f, d) and serialize
/// is idempotent across parse.
std::string serialize_instance(const Formula& f, const std::optional<Decomposition>& d = {});

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace naesat
