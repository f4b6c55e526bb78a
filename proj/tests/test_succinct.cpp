#include "imb/succinct.hpp"

#include "imb/errors.hpp"
#include "imb/graph.hpp"
#include "imb/layout.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace imb;
using namespace imb::test;

namespace {

SuccinctGraph k1_instance(const std::vector<long long>& sizes, bool attached = true) {
    SuccinctGraph sg;
    sg.k = 1;
    for (long long s : sizes) {
        SuccinctClique c;
        c.size = s;
        if (attached)
            c.attachments = {1};
        sg.cliques.push_back(std::move(c));
    }
    return sg;
}

// Exhaustive reference for k = 1: try every side assignment of the attached
// cliques.
BigInt k1_by_enumeration(const SuccinctGraph& sg) {
    BigInt base = 0;
    std::vector<BigInt> attached;
    for (const auto& c : sg.cliques) {
        base += imb::gamma(c.size);
        if (!c.attachments.empty()) {
            base += c.size % 2;
            attached.push_back(c.size);
        }
    }
    BigInt best = -1;
    for (std::uint32_t mask = 0; mask < (1u << attached.size()); ++mask) {
        BigInt left = 0, right = 0;
        for (std::size_t i = 0; i < attached.size(); ++i)
            ((mask >> i) & 1u ? left : right) += attached[i];
        BigInt diff = abs(left - right);
        if (best < 0 || diff < best)
            best = diff;
    }
    if (best < 0)
        best = 0;
    return base + best;
}

} // namespace

TEST_CASE("iota sums intrinsic imbalances") {
    CHECK(iota(k1_instance({1, 2, 3})) == 6);
    CHECK(iota(k1_instance({2, 2})) == 4);
    CHECK(iota(SuccinctGraph{}) == 0);
}

TEST_CASE("lower_bound strengthens iota only for k = 1") {
    CHECK(lower_bound(k1_instance({1, 2, 3})) == 8);

    SuccinctGraph k2;
    k2.k = 2;
    k2.cliques = {{3, {1}}, {4, {1, 2}}};
    CHECK(lower_bound(k2) == iota(k2));

    CHECK(lower_bound(k1_instance({4}, false)) == 8); // gamma(4), no parity term
}

TEST_CASE("reduce_partition builds the single-vertex instance") {
    auto [sg, t] = reduce_partition({BigInt(1), BigInt(2), BigInt(3)});
    CHECK(sg.k == 1);
    CHECK(sg.cover_edges.empty());
    REQUIRE(sg.r() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(sg.cliques[i].size == i + 1);
        CHECK(sg.cliques[i].attachments == std::vector<int>{1});
    }
    CHECK(t == 8);

    CHECK(reduce_partition({BigInt(2), BigInt(2)}).second == 4);
    CHECK(reduce_partition({BigInt(1)}).second == 1);
}

TEST_CASE("solve_k1 on named instances") {
    K1Result r = solve_k1(k1_instance({1, 2, 3}));
    CHECK(r.imbalance == 8);
    CHECK(r.left == std::vector<int>{1, 2});
    CHECK(r.right == std::vector<int>{3});

    CHECK(solve_k1(k1_instance({1, 1, 1})).imbalance == 4);
    CHECK(solve_k1(k1_instance({2, 2})).imbalance == 4);
    CHECK(solve_k1(k1_instance({2, 2})).imbalance ==
          lower_bound(k1_instance({2, 2})));
}

TEST_CASE("solve_k1 matches side enumeration on random lists") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        SuccinctGraph sg;
        sg.k = 1;
        int r = 1 + static_cast<int>(rng() % 7);
        for (int i = 0; i < r; ++i) {
            SuccinctClique c;
            c.size = 1 + static_cast<int>(rng() % 40);
            if (rng() % 4 != 0)
                c.attachments = {1};
            sg.cliques.push_back(std::move(c));
        }
        K1Result res = solve_k1(sg);
        CHECK(res.imbalance == k1_by_enumeration(sg));
        CHECK(res.imbalance >= lower_bound(sg));

        // The witness sides must reproduce the reported value.
        BigInt left = 0, right = 0;
        for (int i : res.left)
            if (!sg.cliques[i - 1].attachments.empty())
                left += sg.cliques[i - 1].size;
        for (int i : res.right)
            if (!sg.cliques[i - 1].attachments.empty())
                right += sg.cliques[i - 1].size;
        CHECK(res.imbalance == lower_bound(sg) + abs(left - right));
        CHECK(verify_certificate(sg, res.certificate()) == res.imbalance);
    }
}

TEST_CASE("solve_k1 pins unattached cliques to location 1") {
    SuccinctGraph sg = k1_instance({3, 3});
    SuccinctClique freec;
    freec.size = 5;
    sg.cliques.push_back(freec);
    K1Result res = solve_k1(sg);
    CHECK(std::find(res.left.begin(), res.left.end(), 3) != res.left.end());
    // gamma(5) on top of the two attached triangles split 3|3.
    CHECK(res.imbalance == solve_k1(k1_instance({3, 3})).imbalance + imb::gamma(BigInt(5)));
}

TEST_CASE("solve_k1 budget guard") {
    CHECK_THROWS_AS(solve_k1(k1_instance({50, 60}), 100), BudgetExceeded);
    CHECK_NOTHROW(solve_k1(k1_instance({50, 60}), 1000));
}

TEST_CASE("verify_certificate on the partition instance") {
    auto [sg, t] = reduce_partition({BigInt(1), BigInt(2), BigInt(3)});
    CHECK(verify_certificate(sg, Certificate{{1}, {2, 2, 1}}) == 8);
    CHECK(verify_certificate(sg, Certificate{{1}, {1, 1, 1}}) == 14);
    CHECK(t == 8);
}

TEST_CASE("verify_certificate on huge cliques uses closed forms") {
    // gamma(10^6) + even-parity excess 0 + cover-vertex imbalance 10^6.
    SuccinctGraph sg = k1_instance({1000000});
    CHECK(verify_certificate(sg, Certificate{{1}, {1}}) ==
          imb::gamma(BigInt(1000000)) + BigInt(1000000));
    CHECK(verify_certificate(sg, Certificate{{1}, {1}}) ==
          BigInt("500001000000"));

    SuccinctGraph huge = k1_instance({1});
    huge.cliques[0].size = BigInt("1000000000000");
    BigInt expect = imb::gamma(BigInt("1000000000000")) + BigInt("1000000000000");
    CHECK(verify_certificate(huge, Certificate{{1}, {1}}) == expect);
}

TEST_CASE("verify_certificate counts cover edges") {
    // Two adjacent cover vertices, one clique on each: the cover pair's own
    // edge contributes to both vertex imbalances.
    SuccinctGraph sg;
    sg.k = 2;
    sg.cover_edges = {{1, 2}};
    sg.cliques = {{2, {1}}, {2, {2}}};
    Certificate cert{{1, 2}, {1, 3}};
    BigInt got = verify_certificate(sg, cert);

    auto [g, cover] = expand_succinct(sg);
    Decomposition d = validate_twin_cover(g, cover);
    Layout lay = build_layout_from_placement(
        d, CleanPlacement{cert.cover_order, cert.locations});
    CHECK(got == imbalance_of_layout(g, lay));
}

TEST_CASE("verify_certificate equals explicit evaluation on expansions") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        SuccinctGraph sg;
        sg.k = static_cast<int>(rng() % 4);
        for (int i = 1; i <= sg.k; ++i)
            for (int j = i + 1; j <= sg.k; ++j)
                if (rng() % 2)
                    sg.cover_edges.emplace_back(i, j);
        int r = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < r; ++i) {
            SuccinctClique c;
            c.size = 1 + static_cast<int>(rng() % 30);
            for (int v = 1; v <= sg.k; ++v)
                if (rng() % 2)
                    c.attachments.push_back(v);
            sg.cliques.push_back(std::move(c));
        }

        Certificate cert;
        cert.cover_order.resize(sg.k);
        for (int i = 0; i < sg.k; ++i)
            cert.cover_order[i] = i + 1;
        std::shuffle(cert.cover_order.begin(), cert.cover_order.end(), rng);
        cert.locations.resize(sg.r());
        for (int& l : cert.locations)
            l = 1 + static_cast<int>(rng() % (sg.k + 1));

        auto [g, cover] = expand_succinct(sg, 2000);
        Decomposition d = validate_twin_cover(g, cover);
        Layout lay = build_layout_from_placement(
            d, CleanPlacement{cert.cover_order, cert.locations});
        CHECK(verify_certificate(sg, cert) == imbalance_of_layout(g, lay));
    }
}

TEST_CASE("verify_certificate matches expansion for every certificate") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        SuccinctGraph sg;
        sg.k = 1 + static_cast<int>(rng() % 3);
        for (int i = 1; i <= sg.k; ++i)
            for (int j = i + 1; j <= sg.k; ++j)
                if (rng() % 2)
                    sg.cover_edges.emplace_back(i, j);
        int r = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < r; ++i) {
            SuccinctClique c;
            c.size = 1 + static_cast<int>(rng() % 8);
            for (int v = 1; v <= sg.k; ++v)
                if (rng() % 2)
                    c.attachments.push_back(v);
            sg.cliques.push_back(std::move(c));
        }
        auto [g, cover] = expand_succinct(sg);
        Decomposition d = validate_twin_cover(g, cover);

        std::vector<int> pi(sg.k);
        for (int i = 0; i < sg.k; ++i)
            pi[i] = i + 1;
        do {
            std::vector<int> locs(r, 1);
            while (true) {
                Certificate cert{pi, locs};
                long long direct = imbalance_of_layout(
                    g, build_layout_from_placement(d, CleanPlacement{pi, locs}));
                CHECK(verify_certificate(sg, cert) == BigInt(direct));
                int i = r - 1;
                while (i >= 0 && locs[i] == sg.k + 1) {
                    locs[i] = 1;
                    --i;
                }
                if (i < 0)
                    break;
                ++locs[i];
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
}

TEST_CASE("instance-level invariants are enforced") {
    SuccinctGraph bad;
    bad.k = 1;
    bad.cliques = {{3, {2}}}; // attachment outside [k]
    CHECK_THROWS_AS(verify_certificate(bad, Certificate{{1}, {1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(expand_succinct(bad), std::invalid_argument);

    SuccinctGraph unsorted;
    unsorted.k = 2;
    unsorted.cliques = {{3, {2, 1}}};
    CHECK_THROWS_AS(verify_certificate(unsorted, Certificate{{1, 2}, {1}}),
                    std::invalid_argument);
}

TEST_CASE("verify_certificate rejects malformed certificates") {
    SuccinctGraph sg = k1_instance({1, 2});
    CHECK_THROWS_AS(verify_certificate(sg, Certificate{{2}, {1, 1}}),
                    MalformedCertificate);
    CHECK_THROWS_AS(verify_certificate(sg, Certificate{{1}, {1}}),
                    MalformedCertificate);
    CHECK_THROWS_AS(verify_certificate(sg, Certificate{{1}, {1, 3}}),
                    MalformedCertificate);
}

TEST_CASE("adding an unattached clique shifts the optimum by gamma") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        SuccinctGraph sg;
        sg.k = 1;
        int r = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < r; ++i) {
            SuccinctClique c;
            c.size = 1 + static_cast<int>(rng() % 20);
            if (rng() % 3 != 0)
                c.attachments = {1};
            sg.cliques.push_back(std::move(c));
        }
        BigInt before = solve_k1(sg).imbalance;
        long long extra = 1 + static_cast<long long>(rng() % 50);
        SuccinctClique freec;
        freec.size = extra;
        sg.cliques.push_back(freec);
        CHECK(solve_k1(sg).imbalance == before + imb::gamma(BigInt(extra)));
    }
}
