#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace imb {

struct SuccinctGraph; // succinct.hpp

/// Simple undirected graph over vertex ids 1..n. Edges are normalized to
/// u < v, sorted, and unique; the constructor rejects self-loops,
/// duplicates, and out-of-range endpoints.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj; // 1-based, neighbor lists sorted

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> es);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Cover vertex ids, kept sorted ascending. May be empty (k = 0), in which
/// case the graph must be a disjoint union of cliques.
struct TwinCover {
    std::vector<int> members;

    TwinCover() = default;
    explicit TwinCover(std::vector<int> ids);
    int k() const { return static_cast<int>(members.size()); }
    bool contains(int v) const;
};

/// One clique of G\S: its vertices (sorted) and its type N(C) ∩ S (sorted).
struct CliqueInfo {
    std::vector<int> vertices;
    std::vector<int> clique_type;

    int size() const { return static_cast<int>(vertices.size()); }
};

enum class CliqueKind { Small, LargeEven, LargeOdd };

/// Grouping key for interchangeable cliques: type plus either the exact
/// size (small, size <= k) or the parity (large, size > k).
struct CliqueClass {
    std::vector<int> clique_type;
    CliqueKind kind = CliqueKind::Small;
    int size_value = 0; // meaningful for Small only

    bool operator==(const CliqueClass& o) const {
        return kind == o.kind && size_value == o.size_value &&
               clique_type == o.clique_type;
    }
    bool operator<(const CliqueClass& o) const;
};

/// A validated twin cover of a graph together with the cliques of G\S in
/// their fixed order (by smallest contained vertex id), their classes, and
/// solver-facing derived data.
struct Decomposition {
    Graph graph;
    TwinCover cover;
    std::vector<CliqueInfo> cliques;
    std::vector<CliqueClass> classes; // parallel to cliques
    int max_clique_size = 0;

    // Derived: canonical distinct-class list and per-clique index into it.
    std::vector<CliqueClass> distinct_classes;
    std::vector<int> class_id;
    // Per-clique type as a bitmask over cover positions (bit i = members[i]).
    std::vector<std::uint32_t> type_mask;

    int k() const { return cover.k(); }
    int r() const { return static_cast<int>(cliques.size()); }
    int locations() const { return cover.k() + 1; }
};

/// Checks that every component of G\S is a clique of true twins and returns
/// the decomposition. Throws NotATwinCover with a witness pair otherwise.
Decomposition validate_twin_cover(const Graph& g, const TwinCover& s);

CliqueClass classify_clique(const CliqueInfo& c, int k);

/// Smallest twin cover by subset enumeration in increasing size, ties broken
/// lexicographically. Test/CLI convenience only; throws TooLarge for
/// n > max_n.
TwinCover find_min_twin_cover(const Graph& g, int max_n = 16);

/// Materializes the explicit graph of a succinct representation: cover
/// vertices 1..k carry the cover edges, clique vertices follow consecutively
/// in list order. Throws TooLargeToExpand past `max_vertices`.
std::pair<Graph, TwinCover> expand_succinct(const SuccinctGraph& sg,
                                            long long max_vertices = 1000000);

} // namespace imb
