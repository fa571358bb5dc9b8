#include "naesat/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace naesat {

namespace {

// One uniformly random partition into triples: Fisher-Yates, then chunk.
std::vector<std::vector<int>> random_partition(int num_vars, SplitMix64& rng) {
    std::vector<int> perm(num_vars);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = num_vars - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<std::vector<int>> triples;
    for (int base = 0; base < num_vars; base += 3) {
        std::vector<int> triple{perm[base], perm[base + 1], perm[base + 2]};
        std::sort(triple.begin(), triple.end());
        triples.push_back(std::move(triple));
    }
    return triples;
}

bool shares_two(const std::vector<int>& a, const std::vector<int>& b) {
    int common = 0;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++common;
    return common >= 2;
}

}  // namespace

std::pair<Formula, Decomposition> gen_k_disjoint(const GenSpec& spec) {
    if (spec.num_vars < 3 || spec.num_vars % 3 != 0)
        throw std::invalid_argument("num_vars must be >= 3 and divisible by 3");
    if (spec.k < 1) throw std::invalid_argument("k must be >= 1");

    SplitMix64 rng(spec.seed);
    std::vector<std::vector<int>> accepted;  // triples in block order
    std::set<std::vector<int>> seen;
    int attempts = 0;
    // Blocks are drawn one at a time against the accepted prefix; a
    // prefix can be a dead end (no further compatible partition exists),
    // so a block that keeps failing restarts the whole instance.
    const int restart_after = std::max(100, spec.max_rejections / 20);
    int block = 0;
    int block_attempts = 0;
    while (block < spec.k) {
        if (attempts >= spec.max_rejections)
            throw std::runtime_error("rejection budget exhausted after " +
                                     std::to_string(attempts) + " attempts");
        ++attempts;
        ++block_attempts;
        if (block_attempts > restart_after) {
            accepted.clear();
            seen.clear();
            block = 0;
            block_attempts = 0;
        }
        auto triples = random_partition(spec.num_vars, rng);
        bool ok = true;
        for (const auto& t : triples) {
            if (seen.count(t)) ok = false;  // duplicate clause, never allowed
            if (ok && spec.require_linear)
                for (const auto& prev : accepted)
                    if (shares_two(t, prev)) {
                        ok = false;
                        break;
                    }
            if (!ok) break;
        }
        if (ok) {
            for (const auto& t : triples) {
                seen.insert(t);
                accepted.push_back(t);
            }
            ++block;
            block_attempts = 0;
        }
    }

    std::vector<Clause> clauses;
    for (const auto& t : accepted)
        clauses.push_back(Clause({pos(t[0]), pos(t[1]), pos(t[2])}));
    const int per_block = spec.num_vars / 3;
    std::vector<std::vector<int>> blocks(spec.k);
    for (int j = 0; j < spec.k * per_block; ++j) blocks[j / per_block].push_back(j);

    Formula f(spec.num_vars, std::move(clauses));
    Decomposition d(f.num_clauses(), std::move(blocks));

    ProfileRequest profile = k_disjoint_ek_profile(spec.k, spec.require_linear);
    StructureReport rep = validate(f, d, profile);
    if (!rep.profile_pass)
        throw std::logic_error("generated instance violates the requested profile: " +
                               rep.first_failure);
    return {std::move(f), std::move(d)};
}

Formula gen_positive_e4(int num_vars, std::uint64_t seed) {
    GenSpec spec;
    spec.num_vars = num_vars;
    spec.k = 4;
    spec.seed = seed;
    return gen_k_disjoint(spec).first;
}

}  // namespace naesat
