#pragma once

#include <optional>
#include <string>
#include <vector>

#include "naesat/formula.hpp"

// The polynomial transformations between instance classes, each a pure
// function returning the target instance together with provenance tables
// and two-way witness transport.

namespace naesat {

enum class Route {
    split_and_equalize,   // Positive E4  ->  Positive 4-Disjoint
    complete_partitions,  // 4-Disjoint, equal uncovered sets  ->  four partitions
    linearize,            // Positive 4-Disjoint E4  ->  Positive Linear 4-Disjoint E4
    lift_k,               // Positive Linear k-Disjoint E-k  ->  k+1
    flip_partitions,      // negate the first q blocks: (p,q) appearance signature
    to23_one_3clause,     // Positive E4  ->  (2,3)-E3, one 3-clause per variable
    to23_one_2clause,     // Positive Linear 4-Disjoint E4  ->  (2,3)-E3, one 2-clause
};

std::string route_name(Route r);

// Origin of one target variable.
struct VarOrigin {
    enum class Kind {
        copy,         // copy `index` (1-based) of source variable
        gadget_aux,   // auxiliary `index` (0-based letter) of the source variable's gadget
        padding_aux,  // auxiliary `sub` of padding set `index` (1-based t)
        shadow,       // shadow copy `index` of source variable (the y-side of an xor cycle)
        plus_half,    // positive half of a variable split
        minus_half,   // negative half of a variable split
    };
    Kind kind = Kind::copy;
    int source_var = -1;
    int index = 0;
    int sub = 0;

    friend bool operator==(const VarOrigin&, const VarOrigin&) = default;
};

struct ReductionArtifact {
    Route route;
    Formula source;
    std::optional<Decomposition> source_decomposition;
    Formula target;
    Decomposition target_decomposition;
    std::vector<VarOrigin> provenance;  // one entry per target variable
    std::vector<int> backmap;           // per source variable: target variable read on pull-back
    int flip_count = 0;                 // q for flip_partitions
};

/// Renames the i-th appearance of every variable to a private copy and
/// attaches one equality gadget per source variable. Output blocks: the
/// renamed clauses plus all EQ(x,1) columns form a partition; blocks 2-4
/// are matchings whose uncovered sets are exactly the q-th copies.
ReductionArtifact split_and_equalize(const Formula& src);

/// Three renamed copies of the whole instance plus one padding set per
/// uncovered variable turn the four disjoint blocks into four partitions.
/// Requires block 1 to be a partition and the uncovered sets of blocks
/// 2-4 to have equal size.
ReductionArtifact complete_partitions(const Formula& src, const Decomposition& d);

/// Four per-block renamed copies of the variable set glued by linear
/// equality gadgets; the target is linear even when the source is not.
ReductionArtifact linearize(const Formula& src, const Decomposition& d);

/// Three disjoint renamed copies plus one junction clause per variable:
/// lifts a k-partition instance to k+1 partitions (stated for k >= 4; the
/// construction itself accepts smaller k for testing).
ReductionArtifact lift_k(const Formula& src, const Decomposition& d);

/// Negates every literal in the first q blocks, giving each variable
/// exactly (k-q, q) unnegated/negated appearances.
ReductionArtifact flip_partitions(const Formula& src, const Decomposition& d, int q);

/// Splits every variable into four chained copies tied by an 8-cycle of
/// 2-clauses against shadow copies; every variable of the target sits in
/// exactly one 3-clause and two 2-clauses.
ReductionArtifact to23_one_3clause(const Formula& src);

/// Splits every variable into a positive and a negative half joined by a
/// 2-clause; negated blocks route to the negative half. Every variable of
/// the target sits in exactly one 2-clause and two 3-clauses.
ReductionArtifact to23_one_2clause(const Formula& src, const Decomposition& d);

/// Transports a source witness forward along the reduction; the result is
/// asserted to nae-satisfy the target.
Assignment push_forward(const ReductionArtifact& art, const Assignment& source_witness);

/// Reads the designated target variables back into a source witness; the
/// result is asserted to nae-satisfy the source.
Assignment pull_back(const ReductionArtifact& art, const Assignment& target_witness);

/// split_and_equalize -> complete_partitions -> linearize, then lift_k
/// until the target has k partitions. Requires k >= 4 and a Positive E4
/// source; returns every intermediate artifact in order.
std::vector<ReductionArtifact> pipeline_to_k(const Formula& positive_e4_src, int k);

}  // namespace naesat
