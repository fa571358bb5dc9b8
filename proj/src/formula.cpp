#include "naesat/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace naesat {

std::string to_string(Literal l, const std::vector<std::string>& names) {
    std::string base = l.var >= 0 && l.var < static_cast<int>(names.size()) && !names[l.var].empty()
                           ? names[l.var]
                           : "x" + std::to_string(l.var + 1);
    return l.negated ? "~" + base : base;
}

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
    if (lits_.size() < 2 || lits_.size() > 3)
        throw std::invalid_argument("clause must have 2 or 3 literals, got " +
                                    std::to_string(lits_.size()));
    normalized_ = lits_;
    std::sort(normalized_.begin(), normalized_.end(),
              [](Literal a, Literal b) { return a.var < b.var; });
    for (std::size_t i = 0; i + 1 < normalized_.size(); ++i)
        if (normalized_[i].var == normalized_[i + 1].var)
            throw std::invalid_argument("clause variables must be distinct");
    for (const Literal& l : lits_)
        if (l.var < 0) throw std::invalid_argument("negative variable index");
}

bool Clause::positive() const {
    return std::none_of(lits_.begin(), lits_.end(),
                        [](Literal l) { return l.negated; });
}

bool Clause::contains_var(int var) const {
    return std::any_of(lits_.begin(), lits_.end(),
                       [var](Literal l) { return l.var == var; });
}

Formula::Formula(int num_vars, std::vector<Clause> clauses,
                 std::vector<std::string> var_names)
    : num_vars_(num_vars), clauses_(std::move(clauses)), var_names_(std::move(var_names)) {
    if (num_vars_ < 0) throw std::invalid_argument("negative variable count");
    if (!var_names_.empty() && var_names_.size() != static_cast<std::size_t>(num_vars_))
        throw std::invalid_argument("name table size must match variable count");
    for (const std::string& name : var_names_)
        if (name.find_first_of(" \t\r\n") != std::string::npos)
            throw std::invalid_argument("variable names must not contain whitespace");
    std::set<std::vector<Literal>> seen;
    for (const Clause& c : clauses_) {
        for (const Literal& l : c.literals())
            if (l.var >= num_vars_)
                throw std::invalid_argument("clause variable " + std::to_string(l.var + 1) +
                                            " out of range");
        if (!seen.insert(c.normalized()).second)
            throw std::invalid_argument("duplicate clause");
    }
}

Decomposition::Decomposition(std::size_t num_clauses, std::vector<std::vector<int>> blocks)
    : num_clauses_(num_clauses), blocks_(std::move(blocks)), block_of_(num_clauses, -1) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::sort(blocks_[b].begin(), blocks_[b].end());
        for (int idx : blocks_[b]) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= num_clauses_)
                throw std::invalid_argument("decomposition clause index " +
                                            std::to_string(idx) + " out of range");
            if (block_of_[idx] != -1)
                throw std::invalid_argument("clause index " + std::to_string(idx) +
                                            " appears in two blocks");
            block_of_[idx] = static_cast<int>(b);
        }
    }
    for (std::size_t i = 0; i < num_clauses_; ++i)
        if (block_of_[i] == -1)
            throw std::invalid_argument("clause index " + std::to_string(i) +
                                        " not covered by any block");
}

Assignment Assignment::total(const std::vector<bool>& values) {
    Assignment a(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        a.values_[i] = values[i] ? 1 : 0;
    return a;
}

void Assignment::set(int var, bool value) {
    if (var < 0) throw std::invalid_argument("negative variable index");
    if (var >= static_cast<int>(values_.size()))
        values_.resize(var + 1, kUnset);
    values_[var] = value ? 1 : 0;
}

void Assignment::unset(int var) {
    if (var >= 0 && var < static_cast<int>(values_.size()))
        values_[var] = kUnset;
}

std::optional<bool> Assignment::value(int var) const {
    if (!assigned(var)) return std::nullopt;
    return values_[var] == 1;
}

bool Assignment::literal_true(Literal l) const {
    auto v = value(l.var);
    if (!v) throw std::invalid_argument("literal variable unassigned");
    return *v != l.negated;
}

bool Assignment::total_on(int num_vars) const {
    for (int v = 0; v < num_vars; ++v)
        if (!assigned(v)) return false;
    return true;
}

int Assignment::num_assigned() const {
    int n = 0;
    for (auto v : values_)
        if (v != kUnset) ++n;
    return n;
}

Assignment flip_assignment(const Assignment& a) {
    Assignment out(a.num_slots());
    for (int v = 0; v < a.num_slots(); ++v)
        if (auto val = a.value(v)) out.set(v, !*val);
    return out;
}

bool clause_nae_satisfied(const Clause& c, const Assignment& a) {
    bool any_true = false, any_false = false;
    for (const Literal& l : c.literals())
        (a.literal_true(l) ? any_true : any_false) = true;
    return any_true && any_false;
}

NaeVerdict nae_eval(const Formula& f, const Assignment& a) {
    if (!a.total_on(f.num_vars()))
        throw std::invalid_argument("incomplete assignment");
    for (std::size_t i = 0; i < f.clauses().size(); ++i)
        if (!clause_nae_satisfied(f.clauses()[i], a))
            return NaeVerdict{false, static_cast<int>(i)};
    return NaeVerdict{true, -1};
}

std::vector<AppearanceCount> appearance_counts(const Formula& f) {
    std::vector<AppearanceCount> counts(f.num_vars());
    for (const Clause& c : f.clauses())
        for (const Literal& l : c.literals())
            (l.negated ? counts[l.var].negated : counts[l.var].unnegated)++;
    return counts;
}

ProfileRequest k_disjoint_ek_profile(int k, bool linear) {
    ProfileRequest p;
    p.positive = true;
    p.linear = linear;
    p.disjoint_blocks = k;
    p.partition_blocks = true;  // implied by disjoint blocks + E-k; stated explicitly
    p.exact_appearances = k;
    p.clause_sizes = {3};
    return p;
}

namespace {

// Linear iff no variable pair occurs in two distinct clauses. The pair
// set makes this linear in the formula size.
bool is_linear(const Formula& f) {
    std::unordered_set<std::uint64_t> pairs;
    pairs.reserve(3 * f.num_clauses());
    for (const Clause& c : f.clauses()) {
        const auto& lits = c.normalized();
        for (std::size_t i = 0; i < lits.size(); ++i)
            for (std::size_t j = i + 1; j < lits.size(); ++j) {
                std::uint64_t key = (static_cast<std::uint64_t>(lits[i].var) << 32) |
                                    static_cast<std::uint32_t>(lits[j].var);
                if (!pairs.insert(key).second) return false;
            }
    }
    return true;
}

}  // namespace

StructureReport validate(const Formula& f, const std::optional<Decomposition>& d,
                         const std::optional<ProfileRequest>& profile) {
    StructureReport r;
    r.positive = std::all_of(f.clauses().begin(), f.clauses().end(),
                             [](const Clause& c) { return c.positive(); });
    for (const Clause& c : f.clauses())
        r.clause_size_profile[static_cast<int>(c.size())]++;
    r.appearances = appearance_counts(f);

    r.linear = is_linear(f);

    if (d) {
        if (d->num_clauses() != f.num_clauses())
            throw std::invalid_argument("decomposition clause count mismatch");
        for (const auto& block : d->blocks()) {
            std::vector<int> var_seen(f.num_vars(), 0);
            bool matching = true;
            int covered = 0;
            for (int idx : block)
                for (const Literal& l : f.clauses()[idx].literals()) {
                    if (var_seen[l.var]++) matching = false;
                    else ++covered;
                }
            r.block_is_matching.push_back(matching);
            r.block_is_partition.push_back(matching && covered == f.num_vars());
        }
        // Distinct indices are distinct clauses (the formula holds no
        // duplicates), so this is true by construction; reported anyway.
        r.blocks_pairwise_clause_disjoint = true;
    }

    if (profile) {
        r.profile_checked = true;
        r.profile_pass = true;
        auto fail = [&](const std::string& what) {
            if (r.profile_pass) {
                r.profile_pass = false;
                r.first_failure = what;
            }
        };
        if (profile->positive && !r.positive) fail("not positive");
        if (!profile->clause_sizes.empty()) {
            for (const auto& [size, count] : r.clause_size_profile)
                if (std::find(profile->clause_sizes.begin(), profile->clause_sizes.end(),
                              size) == profile->clause_sizes.end())
                    fail("clause size " + std::to_string(size) + " not allowed");
        }
        if (profile->linear && !r.linear) fail("not linear");
        if (profile->disjoint_blocks) {
            if (!d) {
                fail("no decomposition given");
            } else if (static_cast<int>(d->num_blocks()) != *profile->disjoint_blocks) {
                fail("expected " + std::to_string(*profile->disjoint_blocks) +
                     " blocks, got " + std::to_string(d->num_blocks()));
            } else {
                for (std::size_t b = 0; b < r.block_is_matching.size(); ++b)
                    if (!r.block_is_matching[b])
                        fail("block " + std::to_string(b + 1) +
                             " has a repeated variable");
            }
        }
        if (profile->partition_blocks) {
            if (!d) fail("no decomposition given");
            else
                for (std::size_t b = 0; b < r.block_is_partition.size(); ++b)
                    if (!r.block_is_partition[b])
                        fail("block " + std::to_string(b + 1) + " is not a partition");
        }
        if (profile->exact_appearances) {
            int k = *profile->exact_appearances;
            for (std::size_t v = 0; v < r.appearances.size(); ++v)
                if (r.appearances[v].unnegated + r.appearances[v].negated != k)
                    fail("variable " + std::to_string(v + 1) + " appears " +
                         std::to_string(r.appearances[v].unnegated + r.appearances[v].negated) +
                         " times, expected " + std::to_string(k));
        }
    }
    return r;
}

}  // namespace naesat
