#include "imb/graph.hpp"

#include "imb/errors.hpp"
#include "imb/succinct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace imb {

Graph::Graph(int n_, std::vector<std::pair<int, int>> es) : n(n_) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : es) {
        if (u == v)
            throw std::invalid_argument("graph: self-loop at " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (u < 1 || v > n)
            throw std::invalid_argument("graph: edge endpoint out of range");
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        throw std::invalid_argument("graph: duplicate edge");
    edges = std::move(es);
    adj.assign(n + 1, {});
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj)
        std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n || v > n || u == v)
        return false;
    const auto& nb = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int w = (&nb == &adj[u]) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
}

TwinCover::TwinCover(std::vector<int> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("twin cover: duplicate member");
}

bool TwinCover::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool CliqueClass::operator<(const CliqueClass& o) const {
    if (clique_type != o.clique_type)
        return clique_type < o.clique_type;
    if (kind != o.kind)
        return static_cast<int>(kind) < static_cast<int>(o.kind);
    return size_value < o.size_value;
}

CliqueClass classify_clique(const CliqueInfo& c, int k) {
    CliqueClass cls;
    cls.clique_type = c.clique_type;
    int sz = c.size();
    if (sz <= k) {
        cls.kind = CliqueKind::Small;
        cls.size_value = sz;
    } else {
        cls.kind = (sz % 2 == 0) ? CliqueKind::LargeEven : CliqueKind::LargeOdd;
        cls.size_value = 0;
    }
    return cls;
}

namespace {

void finalize_decomposition(Decomposition& d) {
    int k = d.cover.k();
    d.classes.clear();
    d.max_clique_size = 0;
    for (const auto& c : d.cliques) {
        d.classes.push_back(classify_clique(c, k));
        d.max_clique_size = std::max(d.max_clique_size, c.size());
    }

    std::set<CliqueClass> uniq(d.classes.begin(), d.classes.end());
    d.distinct_classes.assign(uniq.begin(), uniq.end());
    d.class_id.clear();
    for (const auto& cls : d.classes) {
        auto it = std::lower_bound(d.distinct_classes.begin(),
                                   d.distinct_classes.end(), cls);
        d.class_id.push_back(static_cast<int>(it - d.distinct_classes.begin()));
    }

    // Bitmask form of the types; only usable by the mask-based solvers,
    // which all require k <= 31 anyway.
    d.type_mask.clear();
    if (k <= 31) {
        for (const auto& c : d.cliques) {
            std::uint32_t mask = 0;
            for (int v : c.clique_type) {
                auto it = std::lower_bound(d.cover.members.begin(),
                                           d.cover.members.end(), v);
                mask |= 1u << (it - d.cover.members.begin());
            }
            d.type_mask.push_back(mask);
        }
    }
}

} // namespace

Decomposition validate_twin_cover(const Graph& g, const TwinCover& s) {
    for (int v : s.members)
        if (v < 1 || v > g.n)
            throw std::invalid_argument("twin cover: member out of range");

    std::vector<char> in_cover(g.n + 1, 0);
    for (int v : s.members)
        in_cover[v] = 1;

    Decomposition d;
    d.graph = g;
    d.cover = s;

    // Components of G\S by BFS from increasing seed ids; this fixes the
    // clique order C_1..C_r by smallest contained vertex.
    std::vector<char> seen(g.n + 1, 0);
    for (int seed = 1; seed <= g.n; ++seed) {
        if (in_cover[seed] || seen[seed])
            continue;
        std::vector<int> comp{seed};
        seen[seed] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (int w : g.adj[comp[head]]) {
                if (in_cover[w] || seen[w])
                    continue;
                seen[w] = 1;
                comp.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());

        // Clique check: every vertex must see all other component members.
        for (int v : comp) {
            for (int u : comp) {
                if (u != v && !g.has_edge(u, v))
                    throw NotATwinCover(std::min(u, v), std::max(u, v),
                                        "component {" + std::to_string(comp[0]) +
                                            ",...} is not a clique: " +
                                            std::to_string(std::min(u, v)) + " and " +
                                            std::to_string(std::max(u, v)) +
                                            " are not adjacent");
            }
        }

        auto cover_nbrs = [&](int v) {
            std::vector<int> t;
            for (int w : g.adj[v])
                if (in_cover[w])
                    t.push_back(w);
            return t; // adj is sorted, so t is sorted
        };
        std::vector<int> type = cover_nbrs(comp[0]);
        for (std::size_t i = 1; i < comp.size(); ++i) {
            if (cover_nbrs(comp[i]) != type)
                throw NotATwinCover(comp[0], comp[i],
                                    "vertices " + std::to_string(comp[0]) + " and " +
                                        std::to_string(comp[i]) +
                                        " differ in cover neighborhood");
        }

        d.cliques.push_back(CliqueInfo{std::move(comp), std::move(type)});
    }

    finalize_decomposition(d);
    return d;
}

TwinCover find_min_twin_cover(const Graph& g, int max_n) {
    if (g.n > max_n)
        throw TooLarge("find_min_twin_cover: n = " + std::to_string(g.n) +
                       " exceeds limit " + std::to_string(max_n));

    for (int size = 0; size <= g.n; ++size) {
        // Combinations of {1..n} of the given size in lexicographic order.
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            TwinCover cand(pick);
            try {
                validate_twin_cover(g, cand);
                return cand;
            } catch (const NotATwinCover&) {
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == g.n - (size - 1 - i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    // Unreachable: S = V is always a twin cover (G\S is empty).
    return TwinCover(std::vector<int>(g.n));
}

std::pair<Graph, TwinCover> expand_succinct(const SuccinctGraph& sg,
                                            long long max_vertices) {
    BigInt total = sg.k;
    for (const auto& c : sg.cliques) {
        if (c.size < 1)
            throw std::invalid_argument("succinct clique size must be positive");
        if (!std::is_sorted(c.attachments.begin(), c.attachments.end()) ||
            (!c.attachments.empty() &&
             (c.attachments.front() < 1 || c.attachments.back() > sg.k)))
            throw std::invalid_argument("attachments must be sorted ids in 1..k");
        total += c.size;
    }
    if (total > max_vertices)
        throw TooLargeToExpand("expansion would need " + total.str() +
                               " vertices (limit " + std::to_string(max_vertices) + ")");

    int n = static_cast<int>(total);
    std::vector<std::pair<int, int>> edges(sg.cover_edges);
    int next = sg.k + 1;
    for (const auto& c : sg.cliques) {
        int sz = static_cast<int>(c.size);
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j)
                edges.emplace_back(next + i, next + j);
        for (int a : c.attachments)
            for (int i = 0; i < sz; ++i)
                edges.emplace_back(a, next + i);
        next += sz;
    }

    std::vector<int> cover_ids(sg.k);
    std::iota(cover_ids.begin(), cover_ids.end(), 1);
    return {Graph(n, std::move(edges)), TwinCover(std::move(cover_ids))};
}

} // namespace imb
