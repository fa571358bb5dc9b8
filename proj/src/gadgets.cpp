#include "naesat/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace naesat {

namespace {

Clause positive_clause(std::initializer_list<int> vars) {
    std::vector<Literal> lits;
    for (int v : vars) lits.push_back(pos(v));
    return Clause(lits);
}

void require_distinct(const std::vector<int>& vars, const char* what) {
    std::set<int> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw std::invalid_argument(std::string(what) + " variables must be distinct");
}

// Interface variables must already be allocated, so the fresh counter
// can never hand out a colliding auxiliary.
void require_allocated(const std::vector<int>& vars, const FreshVars& fresh) {
    for (int v : vars)
        if (v < 0 || v >= fresh.next)
            throw std::invalid_argument("interface variable " + std::to_string(v + 1) +
                                        " not allocated before the gadget");
}

}  // namespace

GadgetInstance eq_gadget(const std::array<int, 4>& x, FreshVars& fresh) {
    require_distinct({x.begin(), x.end()}, "interface");
    require_allocated({x.begin(), x.end()}, fresh);
    // Auxiliaries a..i in letter order.
    std::array<int, 9> v{};
    for (int& a : v) a = fresh.alloc();
    const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5],
              g = v[6], h = v[7], i = v[8];

    std::vector<Clause> clauses = {
        positive_clause({a, h, x[1]}),  //  1
        positive_clause({b, d, x[3]}),  //  2
        positive_clause({c, e, i}),     //  3
        positive_clause({f, g, x[0]}),  //  4
        positive_clause({a, g, x[3]}),  //  5
        positive_clause({b, e, x[2]}),  //  6
        positive_clause({d, i, x[0]}),  //  7
        positive_clause({c, f, h}),     //  8
        positive_clause({a, f, x[2]}),  //  9
        positive_clause({b, i, x[1]}),  // 10
        positive_clause({e, h, x[0]}),  // 11
        positive_clause({c, d, g}),     // 12
        positive_clause({a, b, c}),     // 13
        positive_clause({d, e, f}),     // 14
        positive_clause({g, h, i}),     // 15
    };
    // Column q misses x_q entirely (q >= 2); column 1 has no interface
    // variable at all.
    Decomposition columns(clauses.size(), {
                                              {12, 13, 14},   // EQ(x,1)
                                              {4, 5, 6, 7},   // EQ(x,2)
                                              {0, 1, 2, 3},   // EQ(x,3)
                                              {8, 9, 10, 11}  // EQ(x,4)
                                          });
    return GadgetInstance{Formula(fresh.next, std::move(clauses)), std::move(columns),
                          {x.begin(), x.end()},
                          {v.begin(), v.end()},
                          {"a", "b", "c", "d", "e", "f", "g", "h", "i"}};
}

GadgetInstance eq_lin_gadget(const std::array<int, 4>& x, FreshVars& fresh) {
    require_distinct({x.begin(), x.end()}, "interface");
    require_allocated({x.begin(), x.end()}, fresh);
    std::array<int, 6> v{};
    for (int& a : v) a = fresh.alloc();
    const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];

    std::vector<Clause> clauses = {
        positive_clause({a, d, x[2]}),  //  1
        positive_clause({b, e, x[1]}),  //  2
        positive_clause({c, f, x[3]}),  //  3
        positive_clause({a, c, x[0]}),  //  4
        positive_clause({b, d, x[3]}),  //  5
        positive_clause({e, f, x[2]}),  //  6
        positive_clause({a, e, x[3]}),  //  7
        positive_clause({b, f, x[0]}),  //  8
        positive_clause({c, d, x[1]}),  //  9
        positive_clause({a, f, x[1]}),  // 10
        positive_clause({b, c, x[2]}),  // 11
        positive_clause({d, e, x[0]}),  // 12
    };
    Decomposition columns(clauses.size(), {
                                              {0, 1, 2},   // EQ_lin(x,1)
                                              {3, 4, 5},   // EQ_lin(x,2)
                                              {6, 7, 8},   // EQ_lin(x,3)
                                              {9, 10, 11}  // EQ_lin(x,4)
                                          });
    return GadgetInstance{Formula(fresh.next, std::move(clauses)), std::move(columns),
                          {x.begin(), x.end()},
                          {v.begin(), v.end()},
                          {"a", "b", "c", "d", "e", "f"}};
}

GadgetInstance padding_set(int t, const std::array<int, 3>& x, const std::array<int, 3>& y,
                           const std::array<int, 3>& z, FreshVars& fresh) {
    // The three copies within a group must be distinct; the groups may
    // share variables (a source variable can be uncovered in more than
    // one block, and its copies then sit in several padding columns).
    require_distinct({x.begin(), x.end()}, "x copy");
    require_distinct({y.begin(), y.end()}, "y copy");
    require_distinct({z.begin(), z.end()}, "z copy");
    std::vector<int> interface;
    interface.insert(interface.end(), x.begin(), x.end());
    interface.insert(interface.end(), y.begin(), y.end());
    interface.insert(interface.end(), z.begin(), z.end());
    require_allocated(interface, fresh);

    std::array<int, 6> v{};
    for (int& a : v) a = fresh.alloc();
    const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];

    std::vector<Clause> clauses = {
        positive_clause({a, b, d}),     // S(t,1)
        positive_clause({c, e, f}),
        positive_clause({x[0], a, d}),  // S(t,2)
        positive_clause({x[1], b, e}),
        positive_clause({x[2], c, f}),
        positive_clause({y[0], a, e}),  // S(t,3)
        positive_clause({y[1], b, f}),
        positive_clause({y[2], c, d}),
        positive_clause({z[0], a, f}),  // S(t,4)
        positive_clause({z[1], b, d}),
        positive_clause({z[2], c, e}),
    };
    Decomposition columns(clauses.size(),
                          {{0, 1}, {2, 3, 4}, {5, 6, 7}, {8, 9, 10}});
    std::string suffix = "_" + std::to_string(t);
    std::vector<std::string> aux_names;
    for (const char* letter : {"a", "b", "c", "d", "e", "f"})
        aux_names.push_back(letter + suffix);
    return GadgetInstance{Formula(fresh.next, std::move(clauses)), std::move(columns),
                          std::move(interface),
                          {v.begin(), v.end()},
                          std::move(aux_names)};
}

std::pair<Formula, Decomposition> canonical_no_instance() {
    const int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7, i = 8;
    std::vector<Clause> clauses = {
        positive_clause({a, b, c}),  //  1
        positive_clause({d, e, f}),  //  2
        positive_clause({g, h, i}),  //  3
        positive_clause({a, d, g}),  //  4
        positive_clause({b, e, i}),  //  5
        positive_clause({c, f, h}),  //  6
        positive_clause({a, e, h}),  //  7
        positive_clause({b, f, g}),  //  8
        positive_clause({c, d, i}),  //  9
        positive_clause({a, f, i}),  // 10
        positive_clause({b, d, h}),  // 11
        positive_clause({c, e, g}),  // 12
    };
    Formula formula(9, std::move(clauses),
                    {"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    Decomposition blocks(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
    return {std::move(formula), std::move(blocks)};
}

GadgetVerdict verify_equality_gadget(const GadgetInstance& g) {
    if (g.interface_vars.size() != 4)
        throw std::invalid_argument("equality verification needs 4 interface variables");
    const auto& aux = g.aux_vars;
    GadgetVerdict verdict;
    verdict.pass = true;
    for (int row = 0; row < 16; ++row) {
        GadgetRow r;
        Assignment base(g.fragment.num_vars());
        for (int j = 0; j < 4; ++j) {
            r.interface_values[j] = (row >> j) & 1;
            base.set(g.interface_vars[j], r.interface_values[j]);
        }
        const std::uint64_t total = std::uint64_t{1} << aux.size();
        for (std::uint64_t bits = 0; bits < total && !r.extension_exists; ++bits) {
            Assignment ext = base;
            for (std::size_t j = 0; j < aux.size(); ++j)
                ext.set(aux[j], (bits >> j) & 1);
            bool ok = true;
            for (const Clause& c : g.fragment.clauses())
                if (!clause_nae_satisfied(c, ext)) {
                    ok = false;
                    break;
                }
            r.extension_exists = ok;
        }
        bool all_equal = row == 0 || row == 15;
        if (r.extension_exists != all_equal) verdict.pass = false;
        verdict.rows.push_back(r);
    }
    return verdict;
}

}  // namespace naesat
