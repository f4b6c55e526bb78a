#include "imb/oracle.hpp"

#include "imb/errors.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <string>

namespace imb {

namespace {

// A layout and its reverse have equal imbalance; skipping the
// lexicographically larger of the two halves the search without losing the
// lexicographically smallest optimum.
bool reverse_is_smaller(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size());
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        if (seq[i] != seq[j])
            return seq[j] < seq[i];
    }
    return false;
}

} // namespace

OracleAllResult brute_force_all(const Graph& g, int max_n) {
    if (g.n > max_n)
        throw TooLarge("brute_force_all: n = " + std::to_string(g.n) +
                       " exceeds limit " + std::to_string(max_n));

    OracleAllResult res;
    res.imbalance = LLONG_MAX;
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 1);
    std::vector<int> pos(g.n + 1);
    std::vector<int> diff(g.n + 1);

    do {
        if (reverse_is_smaller(order))
            continue;
        ++res.layouts_evaluated;
        for (int i = 0; i < g.n; ++i)
            pos[order[i]] = i;
        std::fill(diff.begin(), diff.end(), 0);
        for (auto [u, v] : g.edges) {
            if (pos[u] < pos[v]) {
                ++diff[u]; // u sees v on the right
                --diff[v];
            } else {
                --diff[u];
                ++diff[v];
            }
        }
        long long total = 0;
        for (int v = 1; v <= g.n; ++v)
            total += std::abs(diff[v]);
        if (total < res.imbalance) {
            res.imbalance = total;
            res.witness.order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    return res;
}

OracleCleanResult brute_force_clean(const Decomposition& d, int max_blocks) {
    const int k = d.k();
    const int r = d.r();
    if (k + r > max_blocks)
        throw TooLarge("brute_force_clean: k + r = " + std::to_string(k + r) +
                       " exceeds limit " + std::to_string(max_blocks));
    if (k > 31)
        throw TooLarge("brute_force_clean: cover masks support k <= 31");

    // Cover-cover adjacency as masks over cover positions.
    std::vector<std::uint32_t> cover_adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && d.graph.has_edge(d.cover.members[i], d.cover.members[j]))
                cover_adj[i] |= 1u << j;

    // Blocks 0..k-1 are cover vertices, k..k+r-1 are cliques.
    std::vector<int> seq(k + r);
    std::iota(seq.begin(), seq.end(), 0);

    OracleCleanResult res;
    res.imbalance = LLONG_MAX;

    std::vector<long long> left_mass(k), right_mass(k);
    std::vector<int> cover_before(k), cover_after(k);

    do {
        if (reverse_is_smaller(seq))
            continue;
        ++res.sequences_evaluated;

        std::fill(left_mass.begin(), left_mass.end(), 0);
        std::fill(right_mass.begin(), right_mass.end(), 0);
        std::uint32_t seen = 0;
        long long total = 0;

        for (int b : seq) {
            if (b < k) {
                cover_before[b] = std::popcount(cover_adj[b] & seen);
                cover_after[b] = std::popcount(cover_adj[b]) - cover_before[b];
                seen |= 1u << b;
            } else {
                int ci = b - k;
                std::uint32_t mask = d.type_mask[ci];
                long long ell = d.cliques[ci].size();
                int a = std::popcount(mask & seen);
                int bb = std::popcount(mask) - a;
                long long delta = bb - a;
                for (long long j = 1; j <= ell; ++j)
                    total += std::llabs(delta + ell + 1 - 2 * j);
                for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                    int c = std::countr_zero(rest);
                    ((seen >> c) & 1u ? right_mass[c] : left_mass[c]) += ell;
                }
            }
        }
        for (int c = 0; c < k; ++c)
            total += std::llabs((cover_after[c] + right_mass[c]) -
                                (cover_before[c] + left_mass[c]));

        if (total < res.imbalance) {
            res.imbalance = total;
            res.witness.cover_order.clear();
            res.witness.locations.assign(r, 0);
            int covers_passed = 0;
            for (int b : seq) {
                if (b < k) {
                    res.witness.cover_order.push_back(d.cover.members[b]);
                    ++covers_passed;
                } else {
                    res.witness.locations[b - k] = covers_passed + 1;
                }
            }
        }
    } while (std::next_permutation(seq.begin(), seq.end()));

    return res;
}

} // namespace imb
