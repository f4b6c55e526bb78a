#pragma once

#include "imb/graph.hpp"
#include "imb/layout.hpp"

#include <cstdint>

namespace imb {

struct OracleAllResult {
    long long imbalance = 0;
    Layout witness; // lexicographically smallest optimal layout
    std::uint64_t layouts_evaluated = 0;
};

/// Exact minimum over all n! orderings. Throws TooLarge for n > max_n.
OracleAllResult brute_force_all(const Graph& g, int max_n = 9);

struct OracleCleanResult {
    long long imbalance = 0;
    CleanPlacement witness;
    std::uint64_t sequences_evaluated = 0;
};

/// Exact minimum over all (k+r)! block orderings (cover vertices as
/// singleton blocks, cliques as atomic blocks). Reversed sequences are
/// pruned; imbalance is reversal-invariant. Throws TooLarge for
/// k + r > max_blocks.
OracleCleanResult brute_force_clean(const Decomposition& d, int max_blocks = 10);

} // namespace imb
