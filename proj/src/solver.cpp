#include "naesat/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "naesat/propagation.hpp"

namespace naesat {

namespace {

// Clause as variable mask plus sign bits for branch-free nae checks
// against a packed assignment word.
struct ClauseMask {
    std::uint64_t vars = 0;
    std::uint64_t signs = 0;
};

std::vector<ClauseMask> build_masks(const Formula& f) {
    std::vector<ClauseMask> masks(f.num_clauses());
    for (std::size_t i = 0; i < f.num_clauses(); ++i)
        for (const Literal& l : f.clauses()[i].literals()) {
            masks[i].vars |= std::uint64_t{1} << l.var;
            if (l.negated) masks[i].signs |= std::uint64_t{1} << l.var;
        }
    return masks;
}

bool word_nae_satisfies(const std::vector<ClauseMask>& masks, std::uint64_t word) {
    for (const ClauseMask& m : masks) {
        std::uint64_t true_lits = (word ^ m.signs) & m.vars;
        if (true_lits == 0 || true_lits == m.vars) return false;
    }
    return true;
}

void check_cap(const Formula& f, int cap, const char* who) {
    if (cap > 62) throw std::invalid_argument("cap above 62 is not supported");
    if (f.num_vars() > cap)
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(f.num_vars()) +
                                    " variables exceed cap " + std::to_string(cap) +
                                    "; use solve_backtracking");
}

Assignment word_to_assignment(std::uint64_t word, int num_vars) {
    std::vector<bool> values(num_vars);
    for (int v = 0; v < num_vars; ++v) values[v] = (word >> v) & 1;
    return Assignment::total(values);
}

}  // namespace

SolveResult solve_exhaustive(const Formula& f, int cap) {
    check_cap(f, cap, "solve_exhaustive");
    SolveResult res;
    const int n = f.num_vars();
    if (n == 0) {
        res.satisfiable = f.num_clauses() == 0;
        if (res.satisfiable) res.witness = Assignment{};
        return res;
    }
    auto masks = build_masks(f);
    // Variable 0 pinned true; the counter's high bit is variable 1 so the
    // scan meets the lexicographically lowest witness (F before T) first.
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t counter = 0; counter < total; ++counter) {
        std::uint64_t word = 1;
        for (int v = 1; v < n; ++v)
            word |= ((counter >> (n - 1 - v)) & 1) << v;
        ++res.stats.assignments_tested;
        if (word_nae_satisfies(masks, word)) {
            res.satisfiable = true;
            res.witness = word_to_assignment(word, n);
            if (!nae_eval(f, *res.witness).satisfied)
                throw std::logic_error("exhaustive witness failed verification");
            return res;
        }
    }
    return res;
}

std::uint64_t count_solutions(const Formula& f, int cap) {
    check_cap(f, cap, "count_solutions");
    const int n = f.num_vars();
    if (n == 0) return f.num_clauses() == 0 ? 1 : 0;
    auto masks = build_masks(f);
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t word = 0; word < total; ++word)
        if (word_nae_satisfies(masks, word)) ++count;
    return count;
}

namespace {

// Backtracking search. Each node runs propagate to fixpoint, folds the
// residual learned 2-clauses together with the XOR constraints of still
// untouched original 2-clauses into one implication graph, and prunes on
// cyclic chains that force a clause monochromatic. Once every 3-clause
// has an assigned variable the residue is exactly a 2-SAT problem and is
// decided from the component order directly.
class Searcher {
public:
    explicit Searcher(const Formula& f) : f_(f) {}

    SolveResult run() {
        SolveResult res;
        Assignment empty(f_.num_vars());
        res.satisfiable = search(empty);
        if (res.satisfiable) {
            if (!nae_eval(f_, witness_).satisfied)
                throw std::logic_error("backtracking witness failed verification");
            res.witness = witness_;
        }
        res.stats = stats_;
        return res;
    }

private:
    bool search(const Assignment& start) {
        Assignment a = start;
        PropagateResult p;
        TwoClauseSet constraints(f_.num_vars());
        bool all_touched = true;
        ImplicationSet graph(f_.num_vars());
        SccResult scc;

        // Alternate value propagation with implication-chain analysis:
        // a chain from a literal to its own negation is a unit, and a
        // cyclic chain through complementary literals is a conflict.
        while (true) {
            p = propagate(f_, a);
            if (p.conflict) return false;

            // Combined 2-SAT view: learned clauses plus XOR encodings of
            // fully unassigned original 2-clauses.
            constraints = p.learned;
            all_touched = true;
            for (const Clause& c : f_.clauses()) {
                int assigned = 0;
                for (const Literal& l : c.literals())
                    if (p.assignment.assigned(l.var)) ++assigned;
                if (assigned == 0) {
                    if (c.size() == 2) {
                        constraints.insert(TwoClause(c.literals()[0], c.literals()[1]));
                        constraints.insert(
                            TwoClause(negate(c.literals()[0]), negate(c.literals()[1])));
                    } else {
                        all_touched = false;
                    }
                }
            }

            graph = ImplicationSet::from_clauses(constraints);
            scc = implication_scc(graph);
            for (int v = 0; v < f_.num_vars(); ++v)
                if (scc.component[literal_node(pos(v))] ==
                    scc.component[literal_node(neg(v))])
                    return false;  // cyclic chain forcing v to both values

            std::vector<std::pair<int, bool>> units = chain_units(graph, scc, p.assignment);
            if (units.empty()) break;
            a = p.assignment;
            for (auto [var, value] : units) a.set(var, value);
        }

        // A chain forcing all literals of an untouched 3-clause equal
        // makes it monochromatic.
        for (const Clause& c : f_.clauses()) {
            if (c.size() != 3) continue;
            bool untouched = std::none_of(
                c.literals().begin(), c.literals().end(),
                [&](const Literal& l) { return p.assignment.assigned(l.var); });
            if (!untouched) continue;
            int c0 = scc.component[literal_node(c.literals()[0])];
            int c1 = scc.component[literal_node(c.literals()[1])];
            int c2 = scc.component[literal_node(c.literals()[2])];
            if (c0 == c1 && c1 == c2) return false;
        }

        if (all_touched) {
            // Residue is plain 2-SAT: set each open variable true iff its
            // positive literal's component is topologically later.
            witness_ = p.assignment;
            for (int v = 0; v < f_.num_vars(); ++v)
                if (!witness_.assigned(v))
                    witness_.set(v, scc.component[literal_node(pos(v))] <
                                        scc.component[literal_node(neg(v))]);
            ++stats_.assignments_tested;
            if (!nae_eval(f_, witness_).satisfied)
                throw std::logic_error("2-sat completion failed verification");
            return true;
        }

        int branch = pick_branch_variable(p.assignment, constraints);
        for (bool value : {true, false}) {
            Assignment next = p.assignment;
            next.set(branch, value);
            ++stats_.nodes;
            if (search(next)) return true;
        }
        return false;
    }

    // Variables forced by non-cyclic implication chains: a path from a
    // literal to its negation means the literal is false in every
    // satisfying assignment. Found by component-level reachability over
    // the condensation (component ids are already reverse-topological).
    std::vector<std::pair<int, bool>> chain_units(const ImplicationSet& graph,
                                                  const SccResult& scc,
                                                  const Assignment& a) const {
        const int comps = scc.num_components;
        const int words = (comps + 63) / 64;
        std::vector<std::uint64_t> reach(static_cast<std::size_t>(comps) * words, 0);
        auto row = [&](int c) { return reach.data() + static_cast<std::size_t>(c) * words; };
        for (int c = 0; c < comps; ++c) row(c)[c / 64] |= std::uint64_t{1} << (c % 64);
        // An edge always points into an equal or earlier-popped component,
        // so ascending order sees successors first.
        const auto& adj = graph.adjacency();
        std::vector<std::vector<int>> members(comps);
        for (std::size_t node = 0; node < adj.size(); ++node)
            members[scc.component[node]].push_back(static_cast<int>(node));
        for (int c = 0; c < comps; ++c)
            for (int node : members[c])
                for (int next : adj[node]) {
                    int nc = scc.component[next];
                    if (nc == c) continue;
                    const std::uint64_t* src = row(nc);
                    std::uint64_t* dst = row(c);
                    for (int w = 0; w < words; ++w) dst[w] |= src[w];
                }
        std::vector<std::pair<int, bool>> units;
        for (int v = 0; v < f_.num_vars(); ++v) {
            if (a.assigned(v)) continue;
            int cp = scc.component[literal_node(pos(v))];
            int cn = scc.component[literal_node(neg(v))];
            if (cp == cn) continue;  // handled as a conflict by the caller
            if (row(cp)[cn / 64] & (std::uint64_t{1} << (cn % 64)))
                units.emplace_back(v, false);  // v implies its own negation
            else if (row(cn)[cp / 64] & (std::uint64_t{1} << (cp % 64)))
                units.emplace_back(v, true);
        }
        return units;
    }

    // Most appearances in clauses with exactly one unassigned variable
    // remaining; ties to the lowest index.
    int pick_branch_variable(const Assignment& a, const TwoClauseSet&) const {
        std::vector<int> score(f_.num_vars(), 0);
        for (const Clause& c : f_.clauses()) {
            int open = 0;
            for (const Literal& l : c.literals())
                if (!a.assigned(l.var)) ++open;
            if (open != 1) continue;
            for (const Literal& l : c.literals()) ++score[l.var];
        }
        int best = -1;
        for (int v = 0; v < f_.num_vars(); ++v) {
            if (a.assigned(v)) continue;
            if (best == -1 || score[v] > score[best]) best = v;
        }
        if (best == -1) throw std::logic_error("no branch variable available");
        return best;
    }

    const Formula& f_;
    Assignment witness_;
    SolveStats stats_;
};

}  // namespace

SolveResult solve_backtracking(const Formula& f) {
    if (f.num_clauses() == 0) {
        SolveResult res;
        res.satisfiable = true;
        res.witness = Assignment::total(std::vector<bool>(f.num_vars(), false));
        return res;
    }
    return Searcher(f).run();
}

DecideResult decide_k_disjoint(const Formula& f, const Decomposition& d, int k) {
    if (static_cast<int>(d.num_blocks()) != k)
        throw std::invalid_argument("decomposition has " + std::to_string(d.num_blocks()) +
                                    " blocks, expected " + std::to_string(k));
    StructureReport report = validate(f, d, k_disjoint_ek_profile(k, false));
    if (!report.profile_pass)
        throw std::invalid_argument("not a Positive " + std::to_string(k) +
                                    "-Disjoint E" + std::to_string(k) +
                                    " instance: " + report.first_failure);
    DecideResult out;
    out.result = solve_backtracking(f);
    if (k <= 2) {
        out.guarantee = Guarantee::always_satisfiable;
        if (!out.result.satisfiable)
            throw std::logic_error(
                "instance with fewer clauses than variables reported unsatisfiable");
    } else if (k == 3) {
        out.guarantee = Guarantee::poly_time_decidable_literature;
    }
    return out;
}

}  // namespace naesat
