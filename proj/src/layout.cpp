#include "imb/layout.hpp"

#include "imb/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace imb {

namespace {

std::vector<int> positions_of(const Graph& g, const Layout& lay) {
    if (static_cast<int>(lay.order.size()) != g.n)
        throw InvalidLayout("layout has " + std::to_string(lay.order.size()) +
                            " entries, graph has " + std::to_string(g.n));
    std::vector<int> pos(g.n + 1, -1);
    for (int i = 0; i < g.n; ++i) {
        int v = lay.order[i];
        if (v < 1 || v > g.n || pos[v] != -1)
            throw InvalidLayout("layout is not a permutation of 1.." +
                                std::to_string(g.n));
        pos[v] = i;
    }
    return pos;
}

} // namespace

std::vector<long long> per_vertex_imbalance(const Graph& g, const Layout& lay) {
    std::vector<int> pos = positions_of(g, lay);
    std::vector<long long> left(g.n + 1, 0), right(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        if (pos[u] < pos[v]) {
            ++right[u];
            ++left[v];
        } else {
            ++right[v];
            ++left[u];
        }
    }
    std::vector<long long> imb(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v)
        imb[v] = std::llabs(left[v] - right[v]);
    return imb;
}

long long imbalance_of_layout(const Graph& g, const Layout& lay) {
    auto per = per_vertex_imbalance(g, lay);
    long long total = 0;
    for (int v = 1; v <= g.n; ++v)
        total += per[v];
    return total;
}

bool is_clean(const Layout& lay, const Decomposition& d) {
    std::vector<int> pos = positions_of(d.graph, lay);
    for (const auto& c : d.cliques) {
        int lo = d.graph.n, hi = -1;
        for (int v : c.vertices) {
            lo = std::min(lo, pos[v]);
            hi = std::max(hi, pos[v]);
        }
        if (hi - lo + 1 != c.size())
            return false;
    }
    return true;
}

BigInt gamma(const BigInt& ell) {
    BigInt sq = ell * ell;
    if (ell % 2 == 0)
        return BigInt(sq / 2);
    return BigInt((sq - 1) / 2);
}

long long gamma_i64(long long ell) {
    long long sq = ell * ell;
    return (ell % 2 == 0) ? sq / 2 : (sq - 1) / 2;
}

namespace {

// Cover ids among the first `location`-1 entries of the order, as a count of
// how many lie inside `type`.
int type_split_before(const std::vector<int>& type,
                      const std::vector<int>& cover_order, int location) {
    int a = 0;
    for (int i = 0; i + 1 < location && i < static_cast<int>(cover_order.size()); ++i)
        if (std::binary_search(type.begin(), type.end(), cover_order[i]))
            ++a;
    return a;
}

} // namespace

std::pair<long long, long long>
clique_total_and_excess(const CliqueInfo& c, const std::vector<int>& cover_order,
                        int location) {
    int a = type_split_before(c.clique_type, cover_order, location);
    int b = static_cast<int>(c.clique_type.size()) - a;
    long long ell = c.size();
    long long delta = b - a;
    long long total = 0;
    for (long long j = 1; j <= ell; ++j)
        total += std::llabs(delta + ell + 1 - 2 * j);
    return {total, total - gamma_i64(ell)};
}

long long excess_closed_form(bool even_clique, long long delta) {
    long long sq = delta * delta;
    return even_clique ? sq / 2 : (sq + 1) / 2;
}

namespace {

void check_placement(const Decomposition& d, const CleanPlacement& cp) {
    std::vector<int> sorted = cp.cover_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.cover.members)
        throw std::invalid_argument("placement: cover order is not a permutation of the cover");
    if (static_cast<int>(cp.locations.size()) != d.r())
        throw std::invalid_argument("placement: expected one location per clique");
    for (int loc : cp.locations)
        if (loc < 1 || loc > d.locations())
            throw std::invalid_argument("placement: location out of range");
}

} // namespace

Layout build_layout_from_placement(const Decomposition& d, const CleanPlacement& cp) {
    check_placement(d, cp);
    Layout lay;
    lay.order.reserve(d.graph.n);
    for (int q = 1; q <= d.locations(); ++q) {
        for (int i = 0; i < d.r(); ++i) {
            if (cp.locations[i] != q)
                continue;
            for (int v : d.cliques[i].vertices)
                lay.order.push_back(v);
        }
        if (q <= d.k())
            lay.order.push_back(cp.cover_order[q - 1]);
    }
    return lay;
}

SpecPair spec_of_placement(const Decomposition& d, const CleanPlacement& cp) {
    check_placement(d, cp);
    int nc = static_cast<int>(d.distinct_classes.size());
    SpecPair spec;
    spec.alpha.assign(nc, std::vector<long long>(d.locations(), 0));
    spec.beta.assign(nc, std::vector<long long>(d.locations(), 0));
    for (int i = 0; i < d.r(); ++i) {
        int cid = d.class_id[i];
        int q = cp.locations[i] - 1;
        spec.alpha[cid][q] += 1;
        spec.beta[cid][q] += d.cliques[i].size();
    }
    return spec;
}

long long imbalance_from_spec(const Decomposition& d,
                              const std::vector<int>& cover_order,
                              const SpecPair& spec) {
    int k = d.k();
    int locs = d.locations();
    int nc = static_cast<int>(d.distinct_classes.size());

    {
        std::vector<int> sorted = cover_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != d.cover.members)
            throw std::invalid_argument("cover order is not a permutation of the cover");
    }
    if (static_cast<int>(spec.alpha.size()) != nc ||
        static_cast<int>(spec.beta.size()) != nc)
        throw IncompleteSpec("spec has wrong class count");

    // Census: per class, counts and sizes must match the instance exactly.
    std::vector<long long> want_count(nc, 0), want_size(nc, 0);
    for (int i = 0; i < d.r(); ++i) {
        want_count[d.class_id[i]] += 1;
        want_size[d.class_id[i]] += d.cliques[i].size();
    }
    for (int c = 0; c < nc; ++c) {
        if (static_cast<int>(spec.alpha[c].size()) != locs ||
            static_cast<int>(spec.beta[c].size()) != locs)
            throw IncompleteSpec("spec has wrong location count");
        long long tc = 0, ts = 0;
        for (int q = 0; q < locs; ++q) {
            if (spec.alpha[c][q] < 0 || spec.beta[c][q] < 0)
                throw IncompleteSpec("negative spec entry");
            tc += spec.alpha[c][q];
            ts += spec.beta[c][q];
            if (d.distinct_classes[c].kind == CliqueKind::Small &&
                spec.beta[c][q] != spec.alpha[c][q] * d.distinct_classes[c].size_value)
                throw IncompleteSpec("small-class size demand inconsistent with count");
        }
        if (tc != want_count[c] || ts != want_size[c])
            throw IncompleteSpec("spec census does not match the instance");
    }

    // delta[q] per class: cover split of the class type at location q+1.
    long long total = 0;
    for (int c = 0; c < nc; ++c) {
        const auto& cls = d.distinct_classes[c];
        for (int q = 0; q < locs; ++q) {
            if (spec.alpha[c][q] == 0)
                continue;
            int a = type_split_before(cls.clique_type, cover_order, q + 1);
            int b = static_cast<int>(cls.clique_type.size()) - a;
            long long delta = b - a;
            long long theta = 0;
            switch (cls.kind) {
            case CliqueKind::Small: {
                int p = cls.size_value;
                for (int j = 1; j <= p; ++j)
                    theta += std::llabs(delta + p + 1 - 2 * j);
                break;
            }
            case CliqueKind::LargeEven:
                theta = excess_closed_form(true, delta);
                break;
            case CliqueKind::LargeOdd:
                theta = excess_closed_form(false, delta);
                break;
            }
            total += spec.alpha[c][q] * theta;
        }
    }

    // Intrinsic imbalance of every large clique, independent of the spec.
    for (int i = 0; i < d.r(); ++i)
        if (d.classes[i].kind != CliqueKind::Small)
            total += gamma_i64(d.cliques[i].size());

    // Cover vertices: cover-edge split plus the attached size mass per side.
    for (int i = 1; i <= k; ++i) {
        int si = cover_order[i - 1];
        long long before = 0, after = 0;
        for (int w : d.graph.adj[si]) {
            if (!d.cover.contains(w))
                continue;
            auto it = std::find(cover_order.begin(), cover_order.end(), w);
            int posw = static_cast<int>(it - cover_order.begin()) + 1;
            (posw < i ? before : after) += 1;
        }
        long long attached = 0;
        for (int c = 0; c < nc; ++c) {
            const auto& t = d.distinct_classes[c].clique_type;
            if (!std::binary_search(t.begin(), t.end(), si))
                continue;
            for (int q = 0; q < locs; ++q)
                attached += (q + 1 <= i ? -spec.beta[c][q] : spec.beta[c][q]);
        }
        total += std::llabs(after - before + attached);
    }

    return total;
}

} // namespace imb
