#include <catch2/catch_amalgamated.hpp>

#include <cograph/cograph.hpp>
#include <cograph/enumeration.hpp>

#include "test_util.hpp"

using namespace cograph;

static Cograph mono(int n) {
    std::vector<int> cls(pair_count(n), 0);
    return Cograph(n, cls);
}

static Cograph all_distinct(int n) {
    std::vector<int> cls(pair_count(n));
    for (int i = 0; i < (int)cls.size(); ++i) cls[i] = i;
    return Cograph(n, cls);
}

TEST_CASE("single class triangle canonicalizes identically from any ordering") {
    Cograph a = mono(3);
    Cograph b = Cograph::from_classes(3, {{{1, 2}, {0, 2}, {0, 1}}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(serialize(canonical_cograph(a)) == "n=3;{01,02,12}");
}

TEST_CASE("the three 3-point cographs give exactly 3 keys") {
    // all partitions of the 3 pairs
    std::set<std::string> keys;
    for_each_set_partition(3, [&](const std::vector<int>& rgs) {
        keys.insert(canonical_form(Cograph(3, rgs)).bytes);
    });
    CHECK(keys.size() == 3);
}

TEST_CASE("all 203 partitions of the 6 pairs of K4 collapse to 25 keys") {
    int raw = 0;
    std::set<std::string> keys;
    for_each_set_partition(6, [&](const std::vector<int>& rgs) {
        ++raw;
        keys.insert(canonical_form(Cograph(4, rgs)).bytes);
    });
    CHECK(raw == 203);
    CHECK(keys.size() == 25);
}

TEST_CASE("is_isomorphic") {
    std::mt19937_64 rng(20240817);
    Cograph a = Cograph::from_classes(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}});
    CHECK(is_isomorphic(a, a));

    for (int rep = 0; rep < 20; ++rep) {
        Cograph b = permute(a, testutil::random_perm(4, rng));
        b = testutil::shuffle_classes(b, rng);
        CHECK(is_isomorphic(a, b));
    }

    Cograph k4 = mono(4);
    Cograph doubled = Cograph::from_classes(
        4, {{{0, 1}, {2, 3}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}});
    CHECK(type_signature(k4) != type_signature(doubled));
    CHECK(!is_isomorphic(k4, doubled));

    CHECK_THROWS_AS(is_isomorphic(mono(3), mono(4)), std::invalid_argument);
}

TEST_CASE("type signatures") {
    CHECK(type_signature(mono(3)) == TypeSignature{3});
    CHECK(type_signature(all_distinct(3)) == TypeSignature{1, 1, 1});
    CHECK(type_signature(mono(4)) == TypeSignature{6});
}

TEST_CASE("color blocks") {
    Graph tri = color_block(mono(3), 0);
    CHECK(tri.vertices == std::vector<int>{0, 1, 2});
    CHECK(tri.edges.size() == 3);

    Cograph doubled = Cograph::from_classes(
        4, {{{0, 1}, {2, 3}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}});
    Graph g = color_block(doubled, 0);
    CHECK(g.edges.size() == 2);
    CHECK(g.vertices.size() <= 4);
    CHECK_THROWS_AS(color_block(doubled, 99), std::out_of_range);
}

TEST_CASE("serialization round trips and canonical text") {
    CHECK(serialize(mono(3)) == "n=3;{01,02,12}");
    Cograph middle = Cograph::from_classes(3, {{{0, 2}, {1, 2}}, {{0, 1}}});
    CHECK(serialize(canonical_cograph(middle)) == "n=3;{01,02},{12}");

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Cograph c = testutil::random_cograph(5, rng);
        CHECK(parse(serialize(c)) == c);
    }
}

TEST_CASE("parse errors carry position and a reason") {
    try {
        parse("n=3;{01}");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("pair 02 missing") != std::string::npos);
        CHECK(e.line == 1);
        CHECK(e.column > 0);
    }
    CHECK_THROWS_AS(parse("n=3;{01,01,02,12}"), ParseError);
    CHECK_THROWS_AS(parse("n=3;{10,02,12}"), ParseError);
    CHECK_THROWS_AS(parse("x"), ParseError);
    CHECK_THROWS_AS(parse("n=3;{01,02,12}z"), ParseError);
}

TEST_CASE("canonical form is permutation invariant and idempotent") {
    std::mt19937_64 rng(123456);
    for (int n = 3; n <= 6; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            Cograph c = testutil::random_cograph(n, rng);
            CanonicalKey key = canonical_form(c);
            for (int t = 0; t < 100; ++t) {
                Cograph p = permute(c, testutil::random_perm(n, rng));
                REQUIRE(canonical_form(p) == key);
            }
            // fixpoint: parse the key back and re-canonicalize
            Cograph round = parse(key.bytes);
            CHECK(canonical_form(round).bytes == key.bytes);
            CHECK(serialize(canonical_cograph(round)) == key.bytes);
        }
    }
}

TEST_CASE("distinct type signature implies non-isomorphic") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        Cograph a = testutil::random_cograph(5, rng);
        Cograph b = testutil::random_cograph(5, rng);
        if (type_signature(a) != type_signature(b)) CHECK(!is_isomorphic(a, b));
    }
}
