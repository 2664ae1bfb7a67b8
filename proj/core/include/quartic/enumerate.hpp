#ifndef QUARTIC_ENUMERATE_HPP
#define QUARTIC_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quartic/multigraph.hpp"
#include "quartic/operations.hpp"

namespace quartic {

struct EnumerationReport {
    int bound = 0;
    // classes[n] lists one representative per isomorphism class of connected
    // 4-regular multigraphs on n vertices with the triangle property, in
    // ascending canonical-code order; empty below n = 2
    std::vector<std::vector<Multigraph>> classes;

    int count(int n) const { return static_cast<int>(classes[n].size()); }
};

// Exhaustive scan over pair-multiplicity vectors with degree pruning,
// filtered by connectivity and the triangle property, deduplicated by
// canonical code.  3 <= max_n <= 9; thread count does not affect the output.
EnumerationReport enumerate_quartic_tp(int max_n, int threads = 1);

// All isomorphism classes of connected cubic multigraphs on up to max_n
// vertices (max_n <= 8), sorted by (vertex count, canonical code).
std::vector<Multigraph> enumerate_cubic_multigraphs(int max_n);

// SplitMix64: the output sequence is part of the contract (documented
// constants 0x9e3779b97f4a7c15, 0xbf58476d1ce4e5b9, 0x94d049bb133111eb).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound);
};

struct WalkResult {
    std::string base_name;  // e.g. "squared-cycle 5" or "line-of-cubic #3"
    Multigraph base;
    std::vector<OpStep> steps;  // forward steps actually taken
    Multigraph graph;
    bool exhausted = false;  // true when the walk stopped early for lack of sites
};

// depth uniformly random applicable forward steps from a random base (a
// squared cycle with 3 <= n <= 8 or the line multigraph of a cubic
// multigraph on <= 6 vertices); deterministic given the seed.
WalkResult random_op_walk(std::uint64_t seed, int depth);

}  // namespace quartic

#endif
