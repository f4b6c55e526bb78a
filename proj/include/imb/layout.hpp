#pragma once

#include "imb/bigint.hpp"
#include "imb/graph.hpp"

#include <cstdint>
#include <vector>

namespace imb {

/// A permutation of the vertex ids 1..n, leftmost first.
struct Layout {
    std::vector<int> order;
};

/// A clean layout in compressed form: the cover order plus, per clique, its
/// location in 1..k+1 (location q sits between the (q-1)-th and q-th cover
/// vertex; 1 and k+1 are the outer flanks).
struct CleanPlacement {
    std::vector<int> cover_order; // permutation of the cover members
    std::vector<int> locations;   // one entry per clique, each in 1..k+1
};

/// Count (alpha) and total-size (beta) demands per (class, location). Rows
/// follow the decomposition's distinct_classes order; columns are locations
/// 1..k+1 stored 0-based. For small classes beta = size_value * alpha holds
/// entrywise.
struct SpecPair {
    std::vector<std::vector<long long>> alpha;
    std::vector<std::vector<long long>> beta;
};

/// Total |left nbrs - right nbrs| over all vertices. Throws InvalidLayout
/// if `lay` is not a bijection on 1..n.
long long imbalance_of_layout(const Graph& g, const Layout& lay);

/// Per-vertex imbalances indexed by vertex id (index 0 unused).
std::vector<long long> per_vertex_imbalance(const Graph& g, const Layout& lay);

/// True iff every clique of G\S occupies consecutive positions in `lay`.
bool is_clean(const Layout& lay, const Decomposition& d);

/// Intrinsic imbalance of a clique on `ell` vertices: ell^2/2 for even ell,
/// (ell^2-1)/2 for odd.
BigInt gamma(const BigInt& ell);
long long gamma_i64(long long ell);

/// Total and excess imbalance of a clique placed at `location` under
/// `cover_order`, by per-vertex summation. Cliques at the same location do
/// not interact, so the context is fully determined by the cover split.
std::pair<long long, long long>
clique_total_and_excess(const CliqueInfo& c, const std::vector<int>& cover_order,
                        int location);

/// Closed-form excess for large cliques: floor(delta^2/2) if even,
/// ceil(delta^2/2) if odd.
long long excess_closed_form(bool even_clique, long long delta);

/// Imbalance shared by every clean layout that orders the cover as
/// `cover_order` and respects `spec`. Throws IncompleteSpec when the spec's
/// per-class censuses do not match the instance.
long long imbalance_from_spec(const Decomposition& d,
                              const std::vector<int>& cover_order,
                              const SpecPair& spec);

/// Canonical clean layout of a placement: cliques at a shared location in
/// clique-index order, vertices within a clique by id.
Layout build_layout_from_placement(const Decomposition& d,
                                   const CleanPlacement& cp);

/// The unique (alpha, beta) pair that build_layout_from_placement respects.
SpecPair spec_of_placement(const Decomposition& d, const CleanPlacement& cp);

} // namespace imb
