#pragma once

#include <cstdint>
#include <utility>

#include "naesat/formula.hpp"

// Seeded instance generation: unions of k random partitions of the
// variable set into triples, with rejection sampling for the requested
// structural properties. The pseudo-random stream is a fixed, documented
// algorithm (splitmix64 + Fisher-Yates) so instances are reproducible
// byte-for-byte across platforms.

namespace naesat {

struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform-enough draw in [0, bound); bias is negligible for the
    /// bounds used here and the modulo rule keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct GenSpec {
    int num_vars = 0;  // >= 3 and divisible by 3
    int k = 1;         // partition count
    bool require_linear = false;
    bool require_pairwise_disjoint = false;
    std::uint64_t seed = 0;
    int max_rejections = 10000;
};

/// k random partitions of the variables into triples. Blocks are redrawn
/// while they collide with the accepted prefix: duplicate clauses are
/// always rejected (the formula type forbids them), shared pairs when
/// linearity is requested. Exhausting the budget raises an error naming
/// the attempt count.
std::pair<Formula, Decomposition> gen_k_disjoint(const GenSpec& spec);

/// A Positive E4 3-clause formula: gen_k_disjoint with k = 4, the
/// decomposition discarded.
Formula gen_positive_e4(int num_vars, std::uint64_t seed);

}  // namespace naesat
