#pragma once

#include "imb/graph.hpp"
#include "imb/layout.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace imb {

/// One variable group: all cliques sharing (type, size). x[q] counts the
/// group's cliques placed at location q; box bounds are 0..census.
struct IlpGroup {
    std::vector<int> type;       // sorted cover ids
    std::uint32_t type_mask = 0; // bit j = cover_order position j+1
    int p = 0;                   // clique size
    long long census = 0;        // W(type, p)
    std::vector<long long> cost; // c[q] per location, q 0-based
    std::vector<int> members;    // clique indices, ascending
};

struct IlpModel {
    int k = 0;
    std::vector<int> cover_order;    // pi as cover ids
    std::vector<int> signs;          // +1/-1 per cover position
    std::vector<IlpGroup> groups;    // only census > 0 groups materialize
    std::vector<long long> r_const;  // |N(s_i) ∩ (S \ S_i)| per position
    std::vector<long long> l_const;  // |N(s_i) ∩ S_{i-1}| per position
    int locations() const { return k + 1; }
};

/// The census/sign formulation for a fixed cover order and sign signature.
IlpModel build_ilp(const Decomposition& d, const std::vector<int>& cover_order,
                   const std::vector<int>& signs);

struct IlpSolution {
    bool feasible = false;
    long long objective = 0;
    // x[group][location]; empty when infeasible.
    std::vector<std::vector<long long>> x;
    std::uint64_t nodes_expanded = 0;
};

/// Exact optimum by depth-first branch-and-bound over the groups:
/// compositions of each census over the locations in nondecreasing-cost
/// order, lower bound = accumulated cost + census-weighted minimum cost of
/// every remaining group. Sign constraints are checked at the leaves; an
/// all-infeasible search reports feasible = false.
IlpSolution solve_ilp_model(const IlpModel& m);

/// One line per variable with bounds and cost, one line per constraint.
void dump_model(const IlpModel& m, std::ostream& os);

struct FptOptions {
    int threads = 1;
};

struct FptResult {
    long long imbalance = 0;
    CleanPlacement witness;
    std::uint64_t nodes_expanded = 0;
    IlpModel best_model; // the (pi, signs) model attaining the minimum
};

/// Minimum over all k! cover orders and 2^k sign signatures; infeasible
/// pairs are skipped (at least one is always feasible).
FptResult solve_fpt(const Decomposition& d, const FptOptions& opt = {});

} // namespace imb
