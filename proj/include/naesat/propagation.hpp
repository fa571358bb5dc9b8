#pragma once

#include <optional>
#include <vector>

#include "naesat/formula.hpp"

// The proof engine: 2-clauses learned from partial assignments, value
// propagation to fixpoint, binary resolution, and implication-chain
// analysis over the literal digraph.
//
// Learned 2-clauses carry plain satisfiability semantics (at least one
// true literal); nae semantics apply only to the original formula. The
// two live in separate types so they cannot be mixed up.

namespace naesat {

// A 2-clause over distinct variables, stored with the lower variable
// first. Set semantics.
class TwoClause {
public:
    TwoClause(Literal a, Literal b);

    Literal first() const { return a_; }
    Literal second() const { return b_; }

    friend bool operator==(const TwoClause&, const TwoClause&) = default;
    friend auto operator<=>(const TwoClause&, const TwoClause&) = default;

private:
    Literal a_, b_;
};

// Deduplicated, deterministically ordered collection of 2-clauses over a
// declared variable universe.
class TwoClauseSet {
public:
    explicit TwoClauseSet(int num_vars) : num_vars_(num_vars) {}

    void insert(TwoClause c);
    bool contains(const TwoClause& c) const;

    int num_vars() const { return num_vars_; }
    std::size_t size() const { return clauses_.size(); }
    bool empty() const { return clauses_.empty(); }
    auto begin() const { return clauses_.begin(); }
    auto end() const { return clauses_.end(); }

    friend bool operator==(const TwoClauseSet&, const TwoClauseSet&) = default;

private:
    int num_vars_ = 0;
    std::vector<TwoClause> clauses_;  // kept sorted
};

// Directed edges between literals, closed under the contrapositive: an
// edge l -> m is always accompanied by ~m -> ~l.
class ImplicationSet {
public:
    explicit ImplicationSet(int num_vars);

    void add_edge(Literal from, Literal to);
    /// Clause {a, b} contributes ~a -> b and ~b -> a.
    void add_clause(const TwoClause& c);
    bool has_edge(Literal from, Literal to) const;

    static ImplicationSet from_clauses(const TwoClauseSet& t);

    int num_vars() const { return num_vars_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

private:
    int num_vars_ = 0;
    std::vector<std::vector<int>> adj_;  // indexed by literal node id
};

/// For every 3-clause with exactly one assigned variable: if the assigned
/// literal is true the negations of the remaining pair must be satisfied,
/// if false the pair itself must be. Clauses with 0, 2 or 3 assigned
/// variables contribute nothing here.
TwoClauseSet learn_two_clauses(const Formula& f, const Assignment& a);

struct PropagateResult {
    bool conflict = false;
    int conflict_clause = -1;  // original clause index, when conflict
    Assignment assignment;     // fixpoint extension of the input
    TwoClauseSet learned;      // residual learned 2-clauses at the fixpoint

    PropagateResult() : learned(0) {}
};

/// Repeats to fixpoint, clause indices ascending: a clause whose assigned
/// literals are all equal with one variable open forces that variable; a
/// fully assigned monochromatic clause is a conflict (reported as a
/// result, not an error).
PropagateResult propagate(const Formula& f, const Assignment& a);

struct Resolvent {
    enum class Kind { clause, unit, tautology };
    Kind kind = Kind::clause;
    std::optional<TwoClause> clause;  // set when kind == clause
    std::optional<Literal> unit;      // set when kind == unit
};

/// Binary resolution on a complementary pivot; throws
/// std::invalid_argument("no pivot") when the inputs share no variable
/// with opposite signs. A complementary remainder yields the tautology
/// marker, a duplicated remainder collapses to a unit.
Resolvent resolve(const TwoClause& c1, const TwoClause& c2);

struct SccResult {
    std::vector<int> component;  // per literal node id; ids in Tarjan pop order
    int num_components = 0;
};

/// Strongly connected components of the implication digraph. Component
/// ids follow Tarjan pop order, so id(x) < id(y) means x's component is
/// topologically later (closer to a sink).
SccResult implication_scc(const ImplicationSet& g);

struct EqualClasses {
    bool satisfiable = true;  // false iff some class holds a literal and its negation
    std::vector<std::vector<Literal>> classes;  // ordered by smallest literal id
};

/// Groups literals forced to share a truth value in every satisfying
/// assignment of t (the strongly connected groups of its implications).
EqualClasses forced_equal_classes(const TwoClauseSet& t);

}  // namespace naesat
