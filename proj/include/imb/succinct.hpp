#pragma once

#include "imb/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace imb {

struct SuccinctClique {
    BigInt size;                  // >= 1, unbounded
    std::vector<int> attachments; // sorted subset of [k]
};

/// Cover graph plus (size, attachment-set) pairs; encodes huge cliques in
/// O(log size) bits each. The clique list order is fixed and defines
/// C_1..C_r everywhere downstream.
struct SuccinctGraph {
    int k = 0;
    std::vector<std::pair<int, int>> cover_edges; // u < v over [k]
    std::vector<SuccinctClique> cliques;

    int r() const { return static_cast<int>(cliques.size()); }
};

/// Clean-layout certificate: cover order (permutation of [k]) and one
/// location in [k+1] per clique.
struct Certificate {
    std::vector<int> cover_order;
    std::vector<int> locations;
};

/// Sum of intrinsic imbalances of all cliques.
BigInt iota(const SuccinctGraph& sg);

/// iota(sg), strengthened for k = 1 by the parity of every attached clique.
BigInt lower_bound(const SuccinctGraph& sg);

/// The Partition reduction: one cover vertex, one attached clique per input
/// number, and the matching decision target.
std::pair<SuccinctGraph, BigInt> reduce_partition(const std::vector<BigInt>& numbers);

struct K1Result {
    BigInt imbalance;
    std::vector<int> left;  // 1-based clique indices at location 1
    std::vector<int> right; // clique indices at location 2
    Certificate certificate() const;
    int clique_count = 0;
};

/// Exact minimum for k = 1 via subset-sum reachability over the attached
/// clique sizes. Unattached cliques contribute gamma(size) and go to
/// location 1. Throws BudgetExceeded when the reachability table would not
/// fit the pseudo-polynomial budget.
K1Result solve_k1(const SuccinctGraph& sg, std::uint64_t budget = 100000000ULL);

/// Imbalance of the clean layout encoded by `cert`, computed without
/// expanding any clique: per-location attached-size sums for cover vertices,
/// explicit <= k-term sums for small cliques, gamma plus the floor/ceil
/// closed form for large ones. Throws MalformedCertificate on shape errors.
BigInt verify_certificate(const SuccinctGraph& sg, const Certificate& cert);

} // namespace imb
