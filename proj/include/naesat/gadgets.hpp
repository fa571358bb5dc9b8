#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "naesat/formula.hpp"

// Finite building blocks: the two equality gadgets, the padding sets that
// complete disjoint blocks into partitions, and the canonical 12-clause
// unsatisfiable instance. Each construction is paired with an exhaustive
// verifier so the gadget lemmas are machine-checked rather than assumed.

namespace naesat {

/// Monotone fresh-variable counter supplied by the caller.
struct FreshVars {
    int next = 0;
    int alloc() { return next++; }
};

struct GadgetInstance {
    Formula fragment;          // clauses over interface and auxiliary variables
    Decomposition columns;     // the column blocks the reductions distribute
    std::vector<int> interface_vars;
    std::vector<int> aux_vars;
    std::vector<std::string> aux_names;  // diagnostic letters for the auxiliaries
};

/// The 15-clause equality gadget over four interface variables and nine
/// fresh auxiliaries; an extension nae-satisfying the fragment exists iff
/// the interface variables share one truth value. Columns are the four
/// blocks EQ(x,1..4): sizes 3,4,4,4, one appearance of every auxiliary each.
GadgetInstance eq_gadget(const std::array<int, 4>& interface_vars, FreshVars& fresh);

/// The 12-clause linear equality gadget over four interface variables and
/// six fresh auxiliaries; same equality property, and the fragment is
/// linear. Columns EQ_lin(x,1..4) have three clauses each.
GadgetInstance eq_lin_gadget(const std::array<int, 4>& interface_vars, FreshVars& fresh);

/// The 11-clause padding set S(t,1..4) over nine interface copies and six
/// fresh auxiliaries. Setting the first three auxiliaries true and the
/// last three false nae-satisfies every clause regardless of the
/// interface, so the set can be added without affecting satisfiability.
GadgetInstance padding_set(int t, const std::array<int, 3>& x_copies,
                           const std::array<int, 3>& y_copies,
                           const std::array<int, 3>& z_copies, FreshVars& fresh);

/// The canonical 12-clause instance over variables a..i together with its
/// decomposition into four partitions. Positive, linear, 4-disjoint, E4 —
/// and not nae-satisfiable.
std::pair<Formula, Decomposition> canonical_no_instance();

struct GadgetRow {
    std::array<bool, 4> interface_values{};
    bool extension_exists = false;
};

struct GadgetVerdict {
    bool pass = false;  // extension exists exactly for the two all-equal rows
    std::vector<GadgetRow> rows;  // 16 rows, interface bits ascending (x1 = bit 0)
};

/// Exhausts all auxiliary extensions for each of the 16 interface
/// assignments and reports per-row existence; PASS iff existence is
/// equivalent to the interface being constant.
GadgetVerdict verify_equality_gadget(const GadgetInstance& g);

}  // namespace naesat
