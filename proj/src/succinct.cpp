#include "imb/succinct.hpp"

#include "imb/errors.hpp"
#include "imb/layout.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace imb {

BigInt iota(const SuccinctGraph& sg) {
    BigInt total = 0;
    for (const auto& c : sg.cliques)
        total += gamma(c.size);
    return total;
}

BigInt lower_bound(const SuccinctGraph& sg) {
    BigInt b = iota(sg);
    if (sg.k == 1) {
        // With a single cover vertex, every attached clique pays its parity
        // on top of gamma in any clean layout; unattached cliques do not.
        for (const auto& c : sg.cliques)
            if (!c.attachments.empty())
                b += c.size % 2;
    }
    return b;
}

std::pair<SuccinctGraph, BigInt> reduce_partition(const std::vector<BigInt>& numbers) {
    if (numbers.empty())
        throw std::invalid_argument("reduce_partition: empty number list");
    SuccinctGraph sg;
    sg.k = 1;
    BigInt t = 0;
    for (const auto& a : numbers) {
        if (a < 1)
            throw std::invalid_argument("reduce_partition: numbers must be positive");
        sg.cliques.push_back(SuccinctClique{a, {1}});
        t += gamma(a) + a % 2;
    }
    return {std::move(sg), std::move(t)};
}

Certificate K1Result::certificate() const {
    Certificate cert;
    cert.cover_order = {1};
    cert.locations.assign(clique_count, 2);
    for (int i : left)
        cert.locations[i - 1] = 1;
    return cert;
}

K1Result solve_k1(const SuccinctGraph& sg, std::uint64_t budget) {
    if (sg.k != 1)
        throw std::invalid_argument("solve_k1: requires a twin cover of size one");

    BigInt base = iota(sg);
    std::vector<int> attached; // 0-based clique indices
    BigInt total_big = 0;
    for (int i = 0; i < sg.r(); ++i) {
        if (sg.cliques[i].attachments.empty())
            continue;
        attached.push_back(i);
        base += sg.cliques[i].size % 2;
        total_big += sg.cliques[i].size;
    }
    if (total_big > budget)
        throw BudgetExceeded("attached sizes sum to " + total_big.str() +
                             ", budget is " + std::to_string(budget));

    const std::uint64_t total = total_big.convert_to<std::uint64_t>();
    const int m = static_cast<int>(attached.size());
    K1Result res;
    res.clique_count = sg.r();

    std::vector<char> on_left(sg.r(), 0);
    for (int i = 0; i < sg.r(); ++i)
        if (sg.cliques[i].attachments.empty())
            on_left[i] = 1; // unattached cliques sit at location 1

    if (m > 0) {
        // reach[i] = sums achievable from attached[i..m-1]; row i feeds the
        // lexicographic witness reconstruction below.
        if (static_cast<std::uint64_t>(m + 1) * (total + 1) > 8 * budget)
            throw BudgetExceeded("subset-sum table of " + std::to_string(m + 1) +
                                 "x" + std::to_string(total + 1) +
                                 " bits exceeds the budget");
        std::vector<std::uint64_t> w(m);
        for (int j = 0; j < m; ++j)
            w[j] = sg.cliques[attached[j]].size.convert_to<std::uint64_t>();

        std::vector<boost::dynamic_bitset<std::uint64_t>> reach(m + 1);
        reach[m].resize(total + 1);
        reach[m].set(0);
        for (int i = m - 1; i >= 0; --i) {
            reach[i] = reach[i + 1];
            reach[i] |= reach[i + 1] << w[i];
        }

        // Reachable sums are symmetric around total/2, so the first hit
        // scanning down from the midpoint gives the optimal split.
        std::uint64_t best_left = 0;
        for (std::uint64_t s = total / 2;; --s) {
            if (reach[0].test(s)) {
                best_left = s;
                break;
            }
            if (s == 0)
                break;
        }
        const std::uint64_t diff = total - 2 * best_left;
        std::uint64_t targets[2] = {best_left, total - best_left};
        int n_targets = (targets[0] == targets[1]) ? 1 : 2;

        // Lexicographically smallest optimal index set: stop as soon as the
        // running sum hits a target, otherwise take the earliest clique that
        // still leaves a target reachable.
        std::uint64_t cur = 0;
        int next = 0;
        auto at_target = [&] {
            for (int t = 0; t < n_targets; ++t)
                if (cur == targets[t])
                    return true;
            return false;
        };
        while (!at_target()) {
            bool advanced = false;
            for (int j = next; j < m && !advanced; ++j) {
                for (int t = 0; t < n_targets; ++t) {
                    if (targets[t] < cur + w[j])
                        continue;
                    if (reach[j + 1].test(targets[t] - cur - w[j])) {
                        on_left[attached[j]] = 1;
                        cur += w[j];
                        next = j + 1;
                        advanced = true;
                        break;
                    }
                }
            }
            if (!advanced)
                throw std::logic_error("solve_k1: witness reconstruction failed");
        }

        res.imbalance = base + diff;
    } else {
        res.imbalance = base;
    }

    for (int i = 0; i < sg.r(); ++i)
        (on_left[i] ? res.left : res.right).push_back(i + 1);
    return res;
}

BigInt verify_certificate(const SuccinctGraph& sg, const Certificate& cert) {
    const int k = sg.k;
    const int r = sg.r();
    for (const auto& c : sg.cliques) {
        if (c.size < 1)
            throw std::invalid_argument("succinct clique size must be positive");
        if (!std::is_sorted(c.attachments.begin(), c.attachments.end()) ||
            (!c.attachments.empty() &&
             (c.attachments.front() < 1 || c.attachments.back() > k)))
            throw std::invalid_argument("attachments must be sorted ids in 1..k");
    }
    {
        std::vector<int> sorted = cert.cover_order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> want(k);
        std::iota(want.begin(), want.end(), 1);
        if (sorted != want)
            throw MalformedCertificate("pi is not a permutation of 1.." +
                                       std::to_string(k));
    }
    if (static_cast<int>(cert.locations.size()) != r)
        throw MalformedCertificate("expected " + std::to_string(r) + " locations");
    for (int loc : cert.locations)
        if (loc < 1 || loc > k + 1)
            throw MalformedCertificate("location out of range 1.." +
                                       std::to_string(k + 1));

    std::vector<int> pos(k + 1, 0); // cover vertex -> 1-based position in pi
    for (int i = 0; i < k; ++i)
        pos[cert.cover_order[i]] = i + 1;

    BigInt total = 0;

    // Cover vertices: cover-edge split plus attached clique mass per side.
    for (int i = 1; i <= k; ++i) {
        int v = cert.cover_order[i - 1];
        long long cover_before = 0, cover_after = 0;
        for (auto [a, b] : sg.cover_edges) {
            int other = (a == v) ? b : (b == v) ? a : 0;
            if (other == 0)
                continue;
            (pos[other] < i ? cover_before : cover_after) += 1;
        }
        BigInt mass_left = 0, mass_right = 0;
        for (int j = 0; j < r; ++j) {
            const auto& c = sg.cliques[j];
            if (!std::binary_search(c.attachments.begin(), c.attachments.end(), v))
                continue;
            (cert.locations[j] <= i ? mass_left : mass_right) += c.size;
        }
        BigInt diff = (cover_after - cover_before) + (mass_right - mass_left);
        total += abs(diff);
    }

    // Cliques: explicit sum for small ones, gamma + closed form for large.
    for (int j = 0; j < r; ++j) {
        const auto& c = sg.cliques[j];
        int a = 0;
        for (int v : c.attachments)
            if (pos[v] < cert.locations[j])
                ++a;
        long long delta = (static_cast<long long>(c.attachments.size()) - a) - a;
        if (c.size <= k) {
            long long ell = c.size.convert_to<long long>();
            long long sum = 0;
            for (long long t = 1; t <= ell; ++t)
                sum += std::llabs(delta + ell + 1 - 2 * t);
            total += sum;
        } else {
            total += gamma(c.size) +
                     excess_closed_form(c.size % 2 == 0, delta);
        }
    }

    return total;
}

} // namespace imb
