#include "imb/ilp.hpp"

#include "imb/errors.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <ostream>
#include <string>
#include <thread>

namespace imb {

IlpModel build_ilp(const Decomposition& d, const std::vector<int>& cover_order,
                   const std::vector<int>& signs) {
    const int k = d.k();
    {
        if (k > 31)
            throw TooLarge("build_ilp: type masks support k <= 31");
        std::vector<int> sorted = cover_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != d.cover.members)
            throw std::invalid_argument("build_ilp: cover order is not a permutation");
        if (static_cast<int>(signs.size()) != k)
            throw std::invalid_argument("build_ilp: need one sign per cover vertex");
        for (int s : signs)
            if (s != 1 && s != -1)
                throw std::invalid_argument("build_ilp: signs must be +1 or -1");
    }

    IlpModel m;
    m.k = k;
    m.cover_order = cover_order;
    m.signs = signs;

    // Census over (type, size); only populated groups carry variables.
    std::map<std::pair<std::vector<int>, int>, std::vector<int>> census;
    for (int i = 0; i < d.r(); ++i)
        census[{d.cliques[i].clique_type, d.cliques[i].size()}].push_back(i);

    for (auto& [key, members] : census) {
        IlpGroup g;
        g.type = key.first;
        g.p = key.second;
        g.census = static_cast<long long>(members.size());
        g.members = members;
        for (int j = 0; j < k; ++j)
            if (std::binary_search(g.type.begin(), g.type.end(), cover_order[j]))
                g.type_mask |= 1u << j;
        g.cost.resize(k + 1);
        for (int q = 0; q <= k; ++q) {
            int before = 0;
            for (int j = 0; j < q; ++j)
                before += (g.type_mask >> j) & 1u;
            long long delta =
                (static_cast<long long>(g.type.size()) - before) - before;
            long long c = 0;
            for (int i = 1; i <= g.p; ++i)
                c += std::llabs(delta + g.p + 1 - 2 * i);
            g.cost[q] = c;
        }
        m.groups.push_back(std::move(g));
    }

    m.r_const.resize(k);
    m.l_const.resize(k);
    for (int i = 0; i < k; ++i) {
        int v = cover_order[i];
        long long before = 0, after = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i || !d.graph.has_edge(v, cover_order[j]))
                continue;
            (j < i ? before : after) += 1;
        }
        m.l_const[i] = before;
        m.r_const[i] = after;
    }
    return m;
}

namespace {

struct Composition {
    std::vector<long long> x;   // per location
    std::vector<long long> cum; // cum[j] = sum of x[0..j], j < k
    long long cost = 0;
};

void enumerate_comps(int loc, int locs, long long remaining,
                     std::vector<long long>& x, const std::vector<long long>& cost,
                     std::vector<Composition>& out) {
    if (loc == locs - 1) {
        x[loc] = remaining;
        Composition comp;
        comp.x = x;
        comp.cost = 0;
        for (int q = 0; q < locs; ++q)
            comp.cost += cost[q] * x[q];
        comp.cum.resize(locs - 1);
        long long run = 0;
        for (int j = 0; j + 1 < locs; ++j) {
            run += x[j];
            comp.cum[j] = run;
        }
        out.push_back(std::move(comp));
        return;
    }
    for (long long v = 0; v <= remaining; ++v) {
        x[loc] = v;
        enumerate_comps(loc + 1, locs, remaining - v, x, cost, out);
    }
}

} // namespace

IlpSolution solve_ilp_model(const IlpModel& m) {
    const int k = m.k;
    const int locs = m.locations();
    const int ng = static_cast<int>(m.groups.size());

    // Branching order: most cost spread first; compositions of each census
    // tried in nondecreasing cost.
    std::vector<int> order(ng);
    for (int i = 0; i < ng; ++i)
        order[i] = i;
    auto spread = [&](int g) {
        auto [lo, hi] = std::minmax_element(m.groups[g].cost.begin(),
                                            m.groups[g].cost.end());
        return m.groups[g].census * (*hi - *lo);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return spread(a) > spread(b); });

    // C(census + k, k) compositions per group; refuse models whose tables
    // would not fit in memory instead of thrashing.
    const long long comp_cap = 20000000;
    long long comp_total = 0;
    for (int g = 0; g < ng; ++g) {
        long long count = 1;
        for (int i = 1; i <= k; ++i) {
            count = count * (m.groups[g].census + i) / i;
            if (count > comp_cap)
                break;
        }
        comp_total += count;
        if (comp_total > comp_cap)
            throw TooLarge("ILP composition table too large; use the dp solver");
    }

    std::vector<std::vector<Composition>> comps(ng);
    for (int g = 0; g < ng; ++g) {
        std::vector<long long> x(locs, 0);
        enumerate_comps(0, locs, m.groups[g].census, x, m.groups[g].cost, comps[g]);
        std::sort(comps[g].begin(), comps[g].end(),
                  [](const Composition& a, const Composition& b) {
                      if (a.cost != b.cost)
                          return a.cost < b.cost;
                      return a.x < b.x;
                  });
    }

    // suffix_min[i] bounds the cost of groups order[i..]; the sign terms are
    // constrained nonnegative and are bounded below by zero.
    std::vector<long long> suffix_min(ng + 1, 0);
    for (int i = ng - 1; i >= 0; --i) {
        int g = order[i];
        long long mn = *std::min_element(m.groups[g].cost.begin(),
                                         m.groups[g].cost.end());
        suffix_min[i] = suffix_min[i + 1] + m.groups[g].census * mn;
    }

    IlpSolution best;
    best.objective = LLONG_MAX;
    std::vector<int> chosen(ng, -1); // per order position, composition index
    std::vector<long long> mass_left(k, 0), mass_right(k, 0);
    std::uint64_t nodes = 0;

    auto leaf_value = [&]() -> long long {
        long long sign_sum = 0;
        for (int j = 0; j < k; ++j) {
            long long diff = (m.r_const[j] + mass_right[j]) -
                             (m.l_const[j] + mass_left[j]);
            if (m.signs[j] * diff < 0)
                return -1; // sign constraint violated
            sign_sum += m.signs[j] * diff;
        }
        return sign_sum;
    };

    auto dfs = [&](auto&& self, int depth, long long acc_cost) -> void {
        if (acc_cost + suffix_min[depth] >= best.objective)
            return;
        if (depth == ng) {
            long long sign_sum = leaf_value();
            if (sign_sum < 0)
                return;
            long long obj = acc_cost + sign_sum;
            if (obj < best.objective) {
                best.objective = obj;
                best.feasible = true;
                best.x.assign(ng, {});
                for (int i = 0; i < ng; ++i)
                    best.x[order[i]] = comps[order[i]][chosen[i]].x;
            }
            return;
        }
        int g = order[depth];
        const auto& group = m.groups[g];
        for (std::size_t ci = 0; ci < comps[g].size(); ++ci) {
            const Composition& comp = comps[g][ci];
            if (acc_cost + comp.cost + suffix_min[depth + 1] >= best.objective)
                break; // compositions are cost-sorted
            ++nodes;
            chosen[depth] = static_cast<int>(ci);
            for (int j = 0; j < k; ++j) {
                if (!((group.type_mask >> j) & 1u))
                    continue;
                long long left = group.p * comp.cum[j];
                mass_left[j] += left;
                mass_right[j] += group.p * group.census - left;
            }
            self(self, depth + 1, acc_cost + comp.cost);
            for (int j = 0; j < k; ++j) {
                if (!((group.type_mask >> j) & 1u))
                    continue;
                long long left = group.p * comp.cum[j];
                mass_left[j] -= left;
                mass_right[j] -= group.p * group.census - left;
            }
        }
        chosen[depth] = -1;
    };
    dfs(dfs, 0, 0);

    best.nodes_expanded = nodes;
    if (!best.feasible) {
        best.objective = 0;
        best.x.clear();
    }
    return best;
}

void dump_model(const IlpModel& m, std::ostream& os) {
    auto type_str = [](const std::vector<int>& t) {
        std::string s = "{";
        for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "," : "") + std::to_string(t[i]);
        return s + "}";
    };
    os << "# cover order:";
    for (int v : m.cover_order)
        os << ' ' << v;
    os << "\n# signs:";
    for (int s : m.signs)
        os << ' ' << (s > 0 ? "+1" : "-1");
    os << "\n";
    for (const auto& g : m.groups)
        for (int q = 0; q <= m.k; ++q)
            os << "var x[tau=" << type_str(g.type) << ",p=" << g.p << "][q="
               << q + 1 << "] in [0," << g.census << "] cost " << g.cost[q]
               << "\n";
    for (const auto& g : m.groups)
        os << "constraint census tau=" << type_str(g.type) << " p=" << g.p
           << ": sum_q x = " << g.census << "\n";
    for (int j = 0; j < m.k; ++j)
        os << "constraint sign j=" << j + 1 << ": " << (m.signs[j] > 0 ? "+" : "-")
           << "1 * (R(" << j + 1 << ") - L(" << j + 1 << ")) >= 0, R const "
           << m.r_const[j] << ", L const " << m.l_const[j] << "\n";
    os << "constraint nonnegativity: all variables >= 0\n";
}

namespace {

// Cliques of each group are handed out to locations in ascending clique
// index, smallest location first.
std::vector<int> locations_from_assignment(const IlpModel& m,
                                           const std::vector<std::vector<long long>>& x,
                                           int r) {
    std::vector<int> locs(r, 0);
    for (std::size_t g = 0; g < m.groups.size(); ++g) {
        std::size_t next = 0;
        for (int q = 0; q <= m.k; ++q) {
            for (long long c = 0; c < x[g][q]; ++c)
                locs[m.groups[g].members[next++]] = q + 1;
        }
    }
    return locs;
}

} // namespace

FptResult solve_fpt(const Decomposition& d, const FptOptions& opt) {
    const int k = d.k();
    if (k > 31)
        throw TooLarge("solve_fpt: sign signatures support k <= 31");
    std::vector<std::vector<int>> orders;
    {
        std::vector<int> pi = d.cover.members;
        do {
            orders.push_back(pi);
        } while (std::next_permutation(pi.begin(), pi.end()));
    }

    struct Task {
        std::size_t order_idx;
        std::vector<int> signs;
    };
    std::vector<Task> tasks;
    for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
            std::vector<int> signs(k);
            for (int j = 0; j < k; ++j)
                signs[j] = (bits >> j) & 1u ? -1 : 1;
            tasks.push_back({oi, std::move(signs)});
        }
    }

    struct Candidate {
        bool feasible = false;
        long long value = LLONG_MAX;
        std::vector<int> locations;
        IlpModel model;
        std::uint64_t nodes = 0;
    };
    std::vector<Candidate> results(tasks.size());

    auto run_task = [&](std::size_t ti) {
        IlpModel model = build_ilp(d, orders[tasks[ti].order_idx], tasks[ti].signs);
        IlpSolution sol = solve_ilp_model(model);
        results[ti].nodes = sol.nodes_expanded;
        if (!sol.feasible)
            return;
        results[ti].feasible = true;
        results[ti].value = sol.objective;
        results[ti].locations = locations_from_assignment(model, sol.x, d.r());
        results[ti].model = std::move(model);
    };

    if (opt.threads > 1 && tasks.size() > 1) {
        int nthreads = std::min<std::size_t>(opt.threads, tasks.size());
        std::vector<std::thread> pool;
        std::size_t chunk = (tasks.size() + nthreads - 1) / nthreads;
        for (int w = 0; w < nthreads; ++w) {
            std::size_t lo = w * chunk, hi = std::min(tasks.size(), lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::size_t ti = lo; ti < hi; ++ti)
                    run_task(ti);
            });
        }
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti)
            run_task(ti);
    }

    FptResult res;
    res.imbalance = LLONG_MAX;
    std::size_t best_ti = tasks.size();
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        res.nodes_expanded += results[ti].nodes;
        if (!results[ti].feasible)
            continue;
        const Candidate& c = results[ti];
        bool better = c.value < res.imbalance;
        if (!better && c.value == res.imbalance && best_ti < tasks.size()) {
            const Candidate& b = results[best_ti];
            auto key = std::make_pair(orders[tasks[ti].order_idx], c.locations);
            auto bkey = std::make_pair(orders[tasks[best_ti].order_idx], b.locations);
            better = key < bkey;
        }
        if (better) {
            res.imbalance = c.value;
            best_ti = ti;
        }
    }
    if (best_ti == tasks.size())
        throw std::logic_error("solve_fpt: no feasible (order, signs) pair");

    res.witness.cover_order = orders[tasks[best_ti].order_idx];
    res.witness.locations = results[best_ti].locations;
    res.best_model = results[best_ti].model;
    return res;
}

} // namespace imb
