#include "naesat/propagation.hpp"

#include <algorithm>
#include <stdexcept>

namespace naesat {

TwoClause::TwoClause(Literal a, Literal b) : a_(a), b_(b) {
    if (a_.var == b_.var)
        throw std::invalid_argument("2-clause variables must be distinct");
    if (b_.var < a_.var) std::swap(a_, b_);
}

void TwoClauseSet::insert(TwoClause c) {
    auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
    if (it == clauses_.end() || *it != c) clauses_.insert(it, c);
}

bool TwoClauseSet::contains(const TwoClause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

ImplicationSet::ImplicationSet(int num_vars)
    : num_vars_(num_vars), adj_(2 * static_cast<std::size_t>(num_vars)) {}

void ImplicationSet::add_edge(Literal from, Literal to) {
    auto put = [this](Literal u, Literal v) {
        auto& row = adj_[literal_node(u)];
        int node = literal_node(v);
        if (std::find(row.begin(), row.end(), node) == row.end()) row.push_back(node);
    };
    put(from, to);
    put(negate(to), negate(from));  // contrapositive closure
}

void ImplicationSet::add_clause(const TwoClause& c) {
    add_edge(negate(c.first()), c.second());
    add_edge(negate(c.second()), c.first());
}

bool ImplicationSet::has_edge(Literal from, Literal to) const {
    const auto& row = adj_[literal_node(from)];
    return std::find(row.begin(), row.end(), literal_node(to)) != row.end();
}

ImplicationSet ImplicationSet::from_clauses(const TwoClauseSet& t) {
    ImplicationSet g(t.num_vars());
    for (const TwoClause& c : t) g.add_clause(c);
    return g;
}

TwoClauseSet learn_two_clauses(const Formula& f, const Assignment& a) {
    TwoClauseSet out(f.num_vars());
    for (const Clause& c : f.clauses()) {
        if (c.size() != 3) continue;
        int assigned = 0;
        Literal assigned_lit{}, open[2];
        int open_count = 0;
        for (const Literal& l : c.literals()) {
            if (a.assigned(l.var)) {
                ++assigned;
                assigned_lit = l;
            } else if (open_count < 2) {
                open[open_count++] = l;
            }
        }
        if (assigned != 1) continue;
        if (a.literal_true(assigned_lit))
            out.insert(TwoClause(negate(open[0]), negate(open[1])));
        else
            out.insert(TwoClause(open[0], open[1]));
    }
    return out;
}

PropagateResult propagate(const Formula& f, const Assignment& a) {
    PropagateResult res;
    res.assignment = a;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t idx = 0; idx < f.clauses().size(); ++idx) {
            const Clause& c = f.clauses()[idx];
            int true_count = 0, false_count = 0;
            Literal open{};
            int open_count = 0;
            for (const Literal& l : c.literals()) {
                if (res.assignment.assigned(l.var))
                    (res.assignment.literal_true(l) ? true_count : false_count)++;
                else {
                    open = l;
                    ++open_count;
                }
            }
            if (open_count == 0) {
                if (true_count == 0 || false_count == 0) {
                    res.conflict = true;
                    res.conflict_clause = static_cast<int>(idx);
                    res.learned = TwoClauseSet(f.num_vars());
                    return res;
                }
            } else if (open_count == 1 && (true_count == 0 || false_count == 0)) {
                // All assigned literals equal: the open literal must take
                // the other value.
                bool literal_value = true_count == 0;
                res.assignment.set(open.var, literal_value != open.negated);
                changed = true;
            }
        }
    }
    res.learned = learn_two_clauses(f, res.assignment);
    return res;
}

Resolvent resolve(const TwoClause& c1, const TwoClause& c2) {
    // Lowest-index complementary shared variable is the pivot.
    std::optional<int> pivot;
    for (Literal l1 : {c1.first(), c1.second()})
        for (Literal l2 : {c2.first(), c2.second()})
            if (l1.var == l2.var && l1.negated != l2.negated)
                if (!pivot || l1.var < *pivot) pivot = l1.var;
    if (!pivot) throw std::invalid_argument("no pivot");

    std::vector<Literal> rest;
    for (Literal l : {c1.first(), c1.second(), c2.first(), c2.second()})
        if (l.var != *pivot) rest.push_back(l);

    Resolvent r;
    if (rest[0].var == rest[1].var) {
        if (rest[0].negated != rest[1].negated) {
            r.kind = Resolvent::Kind::tautology;
        } else {
            r.kind = Resolvent::Kind::unit;
            r.unit = rest[0];
        }
    } else {
        r.kind = Resolvent::Kind::clause;
        r.clause = TwoClause(rest[0], rest[1]);
    }
    return r;
}

SccResult implication_scc(const ImplicationSet& g) {
    const auto& adj = g.adjacency();
    const int n = static_cast<int>(adj.size());
    SccResult res;
    res.component.assign(n, -1);

    // Iterative Tarjan.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int node;
        std::size_t edge;
    };
    std::vector<Frame> dfs;

    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        dfs.push_back({start, 0});
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!dfs.empty()) {
            Frame& fr = dfs.back();
            if (fr.edge < adj[fr.node].size()) {
                int next = adj[fr.node][fr.edge++];
                if (index[next] == -1) {
                    index[next] = low[next] = next_index++;
                    stack.push_back(next);
                    on_stack[next] = true;
                    dfs.push_back({next, 0});
                } else if (on_stack[next]) {
                    low[fr.node] = std::min(low[fr.node], index[next]);
                }
            } else {
                if (low[fr.node] == index[fr.node]) {
                    int member;
                    do {
                        member = stack.back();
                        stack.pop_back();
                        on_stack[member] = false;
                        res.component[member] = res.num_components;
                    } while (member != fr.node);
                    ++res.num_components;
                }
                int done = fr.node;
                dfs.pop_back();
                if (!dfs.empty())
                    low[dfs.back().node] = std::min(low[dfs.back().node], low[done]);
            }
        }
    }
    return res;
}

EqualClasses forced_equal_classes(const TwoClauseSet& t) {
    ImplicationSet g = ImplicationSet::from_clauses(t);
    SccResult scc = implication_scc(g);

    EqualClasses out;
    std::vector<std::vector<Literal>> by_comp(scc.num_components);
    for (int node = 0; node < 2 * t.num_vars(); ++node)
        by_comp[scc.component[node]].push_back(literal_from_node(node));

    // Order classes by their smallest literal id; members are already in
    // id order because nodes were visited ascending.
    std::vector<int> order(by_comp.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return literal_node(by_comp[x].front()) < literal_node(by_comp[y].front());
    });
    for (int comp : order) {
        const auto& members = by_comp[comp];
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            if (members[i].var == members[i + 1].var) out.satisfiable = false;
        out.classes.push_back(members);
    }
    return out;
}

}  // namespace naesat
