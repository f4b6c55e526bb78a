#include "imb/oracle.hpp"

#include "imb/errors.hpp"
#include "imb/succinct.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace imb;
using namespace imb::test;

TEST_CASE("brute_force_all on named instances") {
    auto k2 = brute_force_all(complete(2));
    CHECK(k2.imbalance == 2);
    CHECK(k2.witness.order == std::vector<int>{1, 2});

    CHECK(brute_force_all(star(3)).imbalance == 4);
    CHECK(brute_force_all(triangle_pendant()).imbalance == 4);
    CHECK_THROWS_AS(brute_force_all(star(9)), TooLarge);
}

TEST_CASE("brute_force_all witness is the lexicographically smallest optimum") {
    Graph g = star(3);
    auto res = brute_force_all(g);
    CHECK(imbalance_of_layout(g, res.witness) == res.imbalance);
    // Exhaustively confirm no lexicographically smaller optimal layout.
    std::vector<int> order{1, 2, 3, 4};
    do {
        Layout lay{order};
        if (imbalance_of_layout(g, lay) == res.imbalance) {
            CHECK(res.witness.order <= order);
            break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("brute_force_clean on named instances") {
    Decomposition st = validate_twin_cover(star(4), TwinCover({1}));
    CHECK(brute_force_clean(st).imbalance == 4);

    Decomposition k3 = validate_twin_cover(complete(3), TwinCover{});
    CHECK(brute_force_clean(k3).imbalance == 4);

    auto [sg, t] = reduce_partition({BigInt(1), BigInt(2), BigInt(3)});
    auto [g, cover] = expand_succinct(sg);
    Decomposition d = validate_twin_cover(g, cover);
    CHECK(brute_force_clean(d).imbalance == 8);

    Decomposition big = validate_twin_cover(star(10), TwinCover({1}));
    CHECK_THROWS_AS(brute_force_clean(big), TooLarge);
}

TEST_CASE("clean oracle equals full oracle on covered instances") {
    for (int trial = 0; trial < 40; ++trial) {
        Decomposition d = planted(500 + trial, 4 + trial % 4, trial % 3, 3);
        auto all = brute_force_all(d.graph);
        auto clean = brute_force_clean(d);
        CHECK(all.imbalance == clean.imbalance);
        CHECK(imbalance_of_layout(d.graph, all.witness) == all.imbalance);
        CHECK(imbalance_of_layout(
                  d.graph, build_layout_from_placement(d, clean.witness)) ==
              clean.imbalance);

        SuccinctGraph sg = compress_to_succinct(d.graph, d.cover);
        CHECK(BigInt(all.imbalance) >= iota(sg));
    }
}
