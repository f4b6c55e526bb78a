#pragma once

#include "imb/graph.hpp"
#include "imb/layout.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace imb {

/// All complete specification pairs realizable by some clean layout,
/// computed forward clique by clique over the sparse reachable state set.
/// Throws StateBudgetExceeded when the set outgrows `state_budget`.
std::vector<SpecPair> enumerate_reachable_specs(const Decomposition& d,
                                                std::uint64_t state_budget = 10000000ULL);

struct XpOptions {
    std::uint64_t state_budget = 10000000ULL;
    int threads = 1;
    // Decision mode: stop at the first cover order whose best spec meets the
    // target (single-threaded scans only).
    std::optional<long long> target;
};

struct XpResult {
    long long imbalance = 0;
    CleanPlacement witness;
    std::uint64_t states_explored = 0;
};

/// Minimum over all k! cover orders and all reachable complete specs;
/// witness reconstructed by marking the optimal final states and walking
/// the layers forward, smallest location first.
XpResult solve_xp(const Decomposition& d, const XpOptions& opt = {});

} // namespace imb
