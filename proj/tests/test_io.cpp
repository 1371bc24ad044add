#include "fc/category_io.hpp"
#include "fc/fixtures.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace fc;

namespace {

CategoryFile rank3_file() {
    CategoryFile f;
    f.assoc = fixtures::rank3_solution();
    return f;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("serialize/parse round trip is exact") {
    CategoryFile f = rank3_file();
    std::string text = serialize(f);
    CategoryFile g = parse(text);
    CHECK(g.ring() == f.ring());
    for (const auto& [k, m] : f.assoc.stored())
        CHECK(g.assoc.matrix(k[0], k[1], k[2], k[3]) == m);
    // canonical output is a fixed point
    CHECK(serialize(g) == text);
    // and is deterministic across calls
    CHECK(serialize(f) == text);
}

TEST_CASE("optional sections round trip") {
    CategoryFile f = rank3_file();
    f.birth = std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(2)};
    f.death = std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic::rational(1, 2)};
    f.pivotal_t = std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)};
    std::map<std::array<size_t, 3>, Mat<Cyclotomic>> rs;
    Mat<Cyclotomic> blk(1, 1);
    blk.at(0, 0) = Cyclotomic::i();
    rs[{1, 1, 0}] = blk;
    f.r_symbols = rs;
    CategoryFile g = parse(serialize(f));
    REQUIRE(g.birth.has_value());
    CHECK((*g.birth)[2] == Cyclotomic(2));
    REQUIRE(g.r_symbols.has_value());
    CHECK(g.r_symbols->at({1, 1, 0}).at(0, 0) == Cyclotomic::i());
    CHECK(serialize(g) == serialize(f));
}

TEST_CASE("non-reduced rationals are rejected with a position") {
    CategoryFile f = rank3_file();
    std::string text = serialize(f);
    size_t pos = text.find("\"-1/2\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "\"-2/4\"");
    try {
        parse(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line > 1);
        CHECK(e.col > 0);
        CHECK(std::string(e.what()).find("lowest terms") != std::string::npos);
    }
}

TEST_CASE("shape mismatches are rejected") {
    // a 3x3 matrix supplied for the 2-dimensional a^x_{x,y,x}
    std::string cell = "[\"0/1\", \"0/1\", \"0/1\", \"0/1\"]";
    std::string row = "[" + cell + ", " + cell + ", " + cell + "]";
    std::string text = R"({
  "cyclotomic_order": 12,
  "format_version": 1,
  "ring": {
    "rank": 3,
    "labels": ["1", "y", "x"],
    "unit": 0,
    "dual": [0, 1, 2],
    "fusion": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[0, 0, 1], [0, 0, 1], [1, 1, 2]]]
  },
  "associators": {
    "x,y,x->x": )" + ("[" + row + ", " + row + ", " + row + "]") + R"(
  }
})";
    try {
        parse(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("must be 2x2") != std::string::npos);
    }
}

TEST_CASE("unsupported versions are refused") {
    std::string text = serialize(rank3_file());
    size_t pos = text.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("\"format_version\": 1").size(), "\"format_version\": 9");
    CHECK_THROWS_AS(parse(text), UnsupportedVersion);
}

TEST_CASE("comments are accepted") {
    std::string text = "// header comment\n" + serialize(rank3_file());
    CategoryFile f = parse(text);
    CHECK(f.ring() == rank3_ring());
}

TEST_CASE("checked-in fixtures parse to the transcribed data") {
    CategoryFile app = load_file(std::string(FC_DATA_DIR) + "/rank3_solution.fc");
    AssociatorSet expect = fixtures::rank3_solution();
    CHECK(app.ring() == expect.ring());
    for (const auto& [k, m] : expect.stored())
        CHECK(app.assoc.matrix(k[0], k[1], k[2], k[3]) == m);

    for (int k : {5, 7, 11}) {
        CategoryFile conj =
            load_file(std::string(FC_DATA_DIR) + "/rank3_solution_sigma" + std::to_string(k) + ".fc");
        AssociatorSet img = expect.galois(k);
        for (const auto& [key, m] : img.stored())
            CHECK(conj.assoc.matrix(key[0], key[1], key[2], key[3]) == m);
        // round trip through the canonical form
        CHECK(serialize(parse(serialize(conj))) == serialize(conj));
    }
}
