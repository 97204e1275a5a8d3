#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cograph/snf.hpp>

using namespace cograph;

TEST_CASE("classic 3x3 example") {
    IntMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(a);
    REQUIRE(s.verify(a));
    CHECK(s.rank == 3);
    CHECK(s.invariants() == std::vector<Int>{2, 6, 12});
}

TEST_CASE("random matrices: U*A*V == D with unimodular U,V and divisor chain") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int rep = 0; rep < 200; ++rep) {
        int m = dim(rng), n = dim(rng);
        IntMatrix a(m, std::vector<Int>(n));
        for (auto& row : a)
            for (auto& x : row) x = val(rng);
        auto s = smith_normal_form(a);
        REQUIRE(s.verify(a));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) REQUIRE(s.D[i][j] == 0);
    }
}

TEST_CASE("row space membership") {
    IntMatrix a = {{2, 0}, {0, 3}};
    auto s = smith_normal_form(a);
    auto r = row_space_membership(s, {1, 0});
    CHECK(r.in_rational_span);
    CHECK(r.denominator == 2);
    CHECK(in_integer_row_lattice(s, {4, 3}));
    CHECK(!in_integer_row_lattice(s, {1, 1}));

    // any integer combination of rows is a member
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(1, 5), val(-6, 6), comb(-4, 4);
    for (int rep = 0; rep < 100; ++rep) {
        int m = dim(rng), n = dim(rng);
        IntMatrix mat(m, std::vector<Int>(n));
        for (auto& row : mat)
            for (auto& x : row) x = val(rng);
        auto snf = smith_normal_form(mat);
        std::vector<Int> target(n, 0);
        for (int i = 0; i < m; ++i) {
            Int c = comb(rng);
            for (int j = 0; j < n; ++j) target[j] += c * mat[i][j];
        }
        CHECK(in_integer_row_lattice(snf, target));
    }
}

TEST_CASE("kernel basis") {
    IntMatrix a = {{1, 1, 1}};
    auto s = smith_normal_form(a);
    auto basis = kernel_basis(s);
    REQUIRE(basis.size() == 2);
    for (auto& v : basis) {
        Int dot = v[0] + v[1] + v[2];
        CHECK(dot == 0);
    }
}

TEST_CASE("empty system has empty row space") {
    auto s = smith_normal_form({}, 4);
    CHECK(s.rank == 0);
    CHECK(!row_space_membership(s, {1, 0, 0, 0}).in_rational_span);
    CHECK(in_integer_row_lattice(s, {0, 0, 0, 0}));
}
