#include "imb/dp.hpp"

#include "imb/errors.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_map>

namespace imb {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key& key) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint32_t x : key) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Reachable count/size vectors layer by layer. A state after q cliques holds
// per (class, location) the clique count, plus per (large class, location)
// the total size; small-class sizes are count * size_value and are not
// stored.
struct ReachableTable {
    int locs = 0;
    int nclasses = 0;
    int count_slots = 0;
    std::vector<int> large_slot; // class id -> slot index or -1
    std::vector<std::vector<Key>> layers;
    std::vector<std::unordered_map<Key, std::uint32_t, KeyHash>> index;
    std::uint64_t states = 0;

    Key successor(const Key& key, const Decomposition& d, int clique, int loc) const {
        Key next = key;
        int cid = d.class_id[clique];
        next[cid * locs + loc] += 1;
        if (large_slot[cid] >= 0)
            next[count_slots + large_slot[cid] * locs + loc] +=
                static_cast<std::uint32_t>(d.cliques[clique].size());
        return next;
    }
};

ReachableTable build_table(const Decomposition& d, std::uint64_t state_budget) {
    ReachableTable t;
    t.locs = d.locations();
    t.nclasses = static_cast<int>(d.distinct_classes.size());
    t.count_slots = t.nclasses * t.locs;
    t.large_slot.assign(t.nclasses, -1);
    int nlarge = 0;
    for (int c = 0; c < t.nclasses; ++c)
        if (d.distinct_classes[c].kind != CliqueKind::Small)
            t.large_slot[c] = nlarge++;

    const int key_len = t.count_slots + nlarge * t.locs;
    t.layers.resize(d.r() + 1);
    t.index.resize(d.r() + 1);
    t.layers[0].push_back(Key(key_len, 0));
    t.index[0].emplace(t.layers[0][0], 0);
    t.states = 1;

    for (int q = 1; q <= d.r(); ++q) {
        for (const Key& key : t.layers[q - 1]) {
            for (int loc = 0; loc < t.locs; ++loc) {
                Key next = t.successor(key, d, q - 1, loc);
                auto [it, inserted] =
                    t.index[q].emplace(std::move(next),
                                       static_cast<std::uint32_t>(t.layers[q].size()));
                if (inserted) {
                    t.layers[q].push_back(it->first);
                    if (++t.states > state_budget)
                        throw StateBudgetExceeded(
                            "reachable specification states exceed budget " +
                            std::to_string(state_budget));
                }
            }
        }
    }
    return t;
}

SpecPair spec_from_key(const ReachableTable& t, const Decomposition& d, const Key& key) {
    SpecPair spec;
    spec.alpha.assign(t.nclasses, std::vector<long long>(t.locs, 0));
    spec.beta.assign(t.nclasses, std::vector<long long>(t.locs, 0));
    for (int c = 0; c < t.nclasses; ++c) {
        for (int q = 0; q < t.locs; ++q) {
            long long count = key[c * t.locs + q];
            spec.alpha[c][q] = count;
            if (t.large_slot[c] >= 0)
                spec.beta[c][q] = key[t.count_slots + t.large_slot[c] * t.locs + q];
            else
                spec.beta[c][q] = count * d.distinct_classes[c].size_value;
        }
    }
    return spec;
}

} // namespace

std::vector<SpecPair> enumerate_reachable_specs(const Decomposition& d,
                                                std::uint64_t state_budget) {
    ReachableTable t = build_table(d, state_budget);
    std::vector<Key> finals = t.layers[d.r()];
    std::sort(finals.begin(), finals.end());
    std::vector<SpecPair> specs;
    specs.reserve(finals.size());
    for (const Key& key : finals)
        specs.push_back(spec_from_key(t, d, key));
    return specs;
}

XpResult solve_xp(const Decomposition& d, const XpOptions& opt) {
    ReachableTable t = build_table(d, opt.state_budget);
    const auto& finals = t.layers[d.r()];
    std::vector<SpecPair> final_specs;
    final_specs.reserve(finals.size());
    for (const Key& key : finals)
        final_specs.push_back(spec_from_key(t, d, key));

    std::vector<std::vector<int>> orders;
    {
        std::vector<int> pi = d.cover.members;
        do {
            orders.push_back(pi);
        } while (std::next_permutation(pi.begin(), pi.end()));
    }

    // Best value per cover order; orders are scanned in lexicographic order
    // so the first winner is the tie-break choice.
    std::vector<long long> order_best(orders.size(), LLONG_MAX);
    auto scan_order = [&](std::size_t oi) {
        long long best = LLONG_MAX;
        for (const SpecPair& spec : final_specs)
            best = std::min(best, imbalance_from_spec(d, orders[oi], spec));
        order_best[oi] = best;
    };

    bool early_stop = opt.target.has_value() && opt.threads <= 1;
    std::size_t scanned = orders.size();
    if (opt.threads > 1 && orders.size() > 1) {
        int nthreads = std::min<std::size_t>(opt.threads, orders.size());
        std::vector<std::thread> pool;
        std::size_t chunk = (orders.size() + nthreads - 1) / nthreads;
        for (int w = 0; w < nthreads; ++w) {
            std::size_t lo = w * chunk, hi = std::min(orders.size(), lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::size_t oi = lo; oi < hi; ++oi)
                    scan_order(oi);
            });
        }
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t oi = 0; oi < orders.size(); ++oi) {
            scan_order(oi);
            if (early_stop && order_best[oi] <= *opt.target) {
                scanned = oi + 1;
                break;
            }
        }
    }

    long long best = LLONG_MAX;
    std::size_t best_oi = 0;
    for (std::size_t oi = 0; oi < scanned; ++oi) {
        if (order_best[oi] < best) {
            best = order_best[oi];
            best_oi = oi;
        }
    }

    // Mark the final states attaining the optimum under the winning order,
    // propagate the marks backward, then walk forward taking the smallest
    // viable location for each clique in turn.
    std::vector<std::vector<char>> good(d.r() + 1);
    for (int q = 0; q <= d.r(); ++q)
        good[q].assign(t.layers[q].size(), 0);
    for (std::size_t f = 0; f < finals.size(); ++f)
        if (imbalance_from_spec(d, orders[best_oi], final_specs[f]) == best)
            good[d.r()][f] = 1;
    for (int q = d.r() - 1; q >= 0; --q) {
        for (std::size_t s = 0; s < t.layers[q].size(); ++s) {
            for (int loc = 0; loc < t.locs && !good[q][s]; ++loc) {
                Key next = t.successor(t.layers[q][s], d, q, loc);
                auto it = t.index[q + 1].find(next);
                if (it != t.index[q + 1].end() && good[q + 1][it->second])
                    good[q][s] = 1;
            }
        }
    }

    XpResult res;
    res.imbalance = best;
    res.states_explored = t.states;
    res.witness.cover_order = orders[best_oi];
    Key cur = t.layers[0][0];
    for (int q = 1; q <= d.r(); ++q) {
        for (int loc = 0; loc < t.locs; ++loc) {
            Key next = t.successor(cur, d, q - 1, loc);
            auto it = t.index[q].find(next);
            if (it != t.index[q].end() && good[q][it->second]) {
                res.witness.locations.push_back(loc + 1);
                cur = std::move(next);
                break;
            }
        }
    }
    return res;
}

} // namespace imb
