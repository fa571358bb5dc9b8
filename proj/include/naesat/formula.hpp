#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Core objects for not-all-equal satisfiability: literals, clauses,
// formulas, clause-block decompositions, truth assignments, and the
// structural validator used by every other component.
//
// All types are immutable after construction and every operation is a
// pure function, so concurrent use is safe without synchronization.

namespace naesat {

struct Literal {
    int var = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return Literal{var, false}; }
inline Literal neg(int var) { return Literal{var, true}; }
inline Literal negate(Literal l) { return Literal{l.var, !l.negated}; }

/// Node id of a literal in the 2n-node literal digraph.
inline int literal_node(Literal l) { return 2 * l.var + (l.negated ? 1 : 0); }
inline Literal literal_from_node(int node) { return Literal{node / 2, (node & 1) != 0}; }

std::string to_string(Literal l, const std::vector<std::string>& names = {});

// A clause is a set of 2 or 3 literals over distinct variables. Literal
// order is preserved for display but ignored by equality.
class Clause {
public:
    explicit Clause(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool positive() const;
    bool contains_var(int var) const;

    /// Literals sorted by variable index; the canonical form used for
    /// equality and duplicate detection.
    const std::vector<Literal>& normalized() const { return normalized_; }

    friend bool operator==(const Clause& a, const Clause& b) {
        return a.normalized_ == b.normalized_;
    }

private:
    std::vector<Literal> lits_;
    std::vector<Literal> normalized_;
};

// A formula: clause collection over variables 0..num_vars-1 with optional
// display names. Duplicate clauses (as variable/sign sets) are rejected.
// Equality compares num_vars and the clause sequence; names are display
// metadata and excluded.
class Formula {
public:
    Formula(int num_vars, std::vector<Clause> clauses,
            std::vector<std::string> var_names = {});

    int num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.num_vars_ == b.num_vars_ && a.clauses_ == b.clauses_;
    }

private:
    int num_vars_ = 0;
    std::vector<Clause> clauses_;
    std::vector<std::string> var_names_;
};

// A partition of the clause indices into blocks. Block membership is
// structural; whether each block is a partition of the variable set is a
// checked property, not an invariant (see validate).
class Decomposition {
public:
    Decomposition(std::size_t num_clauses, std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    std::size_t num_clauses() const { return num_clauses_; }

    /// Block tag (0-based) of a clause index.
    int block_of(int clause_index) const { return block_of_[clause_index]; }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    std::size_t num_clauses_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// Truth assignment, possibly partial. Values live in a dense slot array;
// unset slots hold no value.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(int num_slots) : values_(num_slots, kUnset) {}
    static Assignment total(const std::vector<bool>& values);

    void set(int var, bool value);
    void unset(int var);
    bool assigned(int var) const {
        return var >= 0 && var < static_cast<int>(values_.size()) && values_[var] != kUnset;
    }
    std::optional<bool> value(int var) const;
    /// Value of a literal; literal's variable must be assigned.
    bool literal_true(Literal l) const;

    bool total_on(int num_vars) const;
    int num_slots() const { return static_cast<int>(values_.size()); }
    int num_assigned() const;

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    static constexpr std::int8_t kUnset = -1;
    std::vector<std::int8_t> values_;
};

/// Interchanges T and F on every assigned variable. An involution.
Assignment flip_assignment(const Assignment& a);

struct NaeVerdict {
    bool satisfied = false;
    int violated_clause = -1;  // lowest violated clause index, -1 if satisfied
};

/// True iff the clause's literals are not all equal under a total
/// assignment of its variables.
bool clause_nae_satisfied(const Clause& c, const Assignment& a);

/// Evaluates nae-satisfaction of every clause; throws
/// std::invalid_argument("incomplete assignment") if a is not total.
NaeVerdict nae_eval(const Formula& f, const Assignment& a);

struct AppearanceCount {
    int unnegated = 0;
    int negated = 0;
    friend bool operator==(const AppearanceCount&, const AppearanceCount&) = default;
};

/// Per-variable (p, q) appearance counts.
std::vector<AppearanceCount> appearance_counts(const Formula& f);

// Requested structural profile, mirroring the problem-name grammar:
// Positive / Linear prefixes, k-Disjoint block structure, E-k suffix,
// and the allowed clause sizes.
struct ProfileRequest {
    bool positive = false;
    bool linear = false;
    std::optional<int> disjoint_blocks;  // k blocks, each with <=1 appearance per variable
    bool partition_blocks = false;       // each block also covers every variable
    std::optional<int> exact_appearances;  // every variable in exactly k clauses
    std::vector<int> clause_sizes;       // allowed sizes; empty = unconstrained
};

/// Convenience: the Positive [Linear] k-Disjoint NAE-3-SAT-Ek profile.
ProfileRequest k_disjoint_ek_profile(int k, bool linear);

struct StructureReport {
    bool positive = false;
    bool linear = false;
    std::map<int, int> clause_size_profile;  // size -> count
    std::vector<AppearanceCount> appearances;

    // Decomposition-dependent (empty when no decomposition given).
    std::vector<bool> block_is_matching;   // clauses pairwise variable-disjoint
    std::vector<bool> block_is_partition;  // matching and covers all variables
    bool blocks_pairwise_clause_disjoint = true;

    // Profile verdict, set when a profile was requested.
    bool profile_checked = false;
    bool profile_pass = false;
    std::string first_failure;
};

/// Computes the full structure report; when a profile is requested the
/// report carries a pass/fail verdict naming the first failing property.
StructureReport validate(const Formula& f,
                         const std::optional<Decomposition>& d = {},
                         const std::optional<ProfileRequest>& profile = {});

}  // namespace naesat
