#include <catch2/catch_amalgamated.hpp>

#include <cograph/regen.hpp>

using namespace cograph;

TEST_CASE("regen produces seven catalogue files plus a manifest") {
    auto r = regen::regen_all();
    CHECK(r.files.size() == 7);
    int manifest_lines = 0;
    std::istringstream mf(r.manifest);
    std::string line;
    while (std::getline(mf, line)) {
        ++manifest_lines;
        CHECK(line.find(" bytes=") != std::string::npos);
        CHECK(line.find(" fnv64=") != std::string::npos);
    }
    CHECK(manifest_lines == 7);
}

TEST_CASE("regenerated files are byte-identical across runs and worker counts") {
    auto a = regen::regen_all(1);
    auto b = regen::regen_all(2);
    REQUIRE(a.files.size() == b.files.size());
    for (size_t i = 0; i < a.files.size(); ++i) {
        CHECK(a.files[i].first == b.files[i].first);
        CHECK(a.files[i].second == b.files[i].second);
    }
    CHECK(a.manifest == b.manifest);
}

TEST_CASE("wheels file carries the worked seven-spoke row") {
    std::string wheels = regen::wheels_file();
    CHECK(wheels.find("n=7 d=1 t=29") != std::string::npos);
    CHECK(wheels.find("group=Z_29") != std::string::npos);
}

TEST_CASE("catalogue lines start with parseable canonical keys") {
    for (auto& text : {regen::sum_file(), regen::diff_file(), regen::isect_file()}) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto space = line.find(' ');
            REQUIRE(space != std::string::npos);
            Cograph c = parse(line.substr(0, space));
            CHECK(canonical_form(c).bytes == line.substr(0, space));
        }
    }
}

TEST_CASE("chain group grid file flags the excluded cases") {
    std::string grid = regen::chain_groups_file();
    CHECK(grid.find("p=2 q=2 n=2 p'=2 q'=2 excluded") != std::string::npos);
    CHECK(grid.find("p=4 q=6 n=6 p'=4 q'=6 index=18 order=72") != std::string::npos);
    CHECK(grid.find("FORMULA-MISMATCH") == std::string::npos);
}

TEST_CASE("linear space serialization round trips through the pl file") {
    std::istringstream in(regen::pl_file());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        auto sp = line.find(' ');
        REQUIRE(sp != std::string::npos);
        std::string key = line.substr(0, sp);
        auto end = line.find(' ', sp + 1);
        std::string space_text = line.substr(sp + 1, end == std::string::npos
                                                         ? std::string::npos
                                                         : end - sp - 1);
        pl::LinearSpace s = pl::parse_space(space_text);
        CHECK(canonical_form(pl::from_linear_space(s)).bytes == key);
    }
    CHECK(rows == 1 + 2 + 3 + 5 + 10 + 24);
}
