#include <catch2/catch_amalgamated.hpp>

#include <cograph/enumeration.hpp>

using namespace cograph;

TEST_CASE("pair action cycle splitting") {
    // identity on 4 points: 6 fixed pairs
    auto cyc = pair_action_cycles({1, 1, 1, 1});
    CHECK(cyc[1] == 6);
    // 4-cycle: pairs split into one 4-cycle and one 2-cycle
    cyc = pair_action_cycles({4});
    CHECK(cyc[4] == 1);
    CHECK(cyc[2] == 1);
    // 3-cycle plus fixed point: 3 pairs in the triangle cycle, 3 across
    cyc = pair_action_cycles({3, 1});
    CHECK(cyc[3] == 2);
    // total pair count is preserved for a few shapes
    for (auto parts : std::vector<std::vector<int>>{{5}, {4, 2}, {3, 3}, {2, 2, 1}}) {
        int n = 0;
        for (int p : parts) n += p;
        auto c = pair_action_cycles(parts);
        int tot = 0;
        for (auto [len, m] : c) tot += len * m;
        CHECK(tot == pair_count(n));
    }
}

TEST_CASE("cycle type weights sum to n!") {
    for (int n = 2; n <= 9; ++n) {
        Int sum = 0;
        for (auto& ct : cycle_types(n)) sum += ct.weight;
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("exact counts for small n") {
    CHECK(count_cographs(2) == 1);
    CHECK(count_cographs(3) == 3);
    CHECK(count_cographs(4) == 25);
    CHECK(count_cographs(5) == 1299);
    CHECK_THROWS_AS(count_cographs(1), std::domain_error);
}

TEST_CASE("enumeration agrees with counting for n=2..5") {
    for (int n = 2; n <= 5; ++n) {
        auto keys = enumerate_cographs(n);
        CHECK(Int(keys.size()) == count_cographs(n));
        CHECK(std::is_sorted(keys.begin(), keys.end()));
    }
    CHECK_THROWS_AS(enumerate_cographs(6), std::domain_error);
}

TEST_CASE("counts grow monotonically") {
    Int prev = 0;
    for (int n = 2; n <= 8; ++n) {
        Int c = count_cographs(n);
        CHECK(c > prev);
        prev = c;
    }
}
