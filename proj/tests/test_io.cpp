#include "lrc/io.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lrc/bench.hpp"
#include "lrc/oracle.hpp"

using namespace lrc;

namespace {
const std::string kDataDir = LRC_DATA_DIR;
}

TEST_CASE("fixture parses to the worked [9,4] code") {
    LinearCode C = load_code(kDataDir + "/ex1.code");
    CHECK(C.n() == 9);
    CHECK(C.k() == 4);
    CHECK(C.field()->q() == 4);
    CHECK(C.min_distance_exhaustive() == 5);
}

TEST_CASE("parse then print is the identity on canonical files") {
    LinearCode C = load_code(kDataDir + "/ex1.code");
    std::ostringstream first;
    print_code(first, C);
    std::istringstream round(first.str());
    LinearCode C2 = parse_code(round);
    std::ostringstream second;
    print_code(second, C2);
    CHECK(first.str() == second.str());
}

TEST_CASE("H-kind files") {
    LinearCode C = load_code(kDataDir + "/ex1.code");
    std::ostringstream hform;
    print_code(hform, C, 'H');
    std::istringstream in(hform.str());
    LinearCode C2 = parse_code(in);
    CHECK(C2.n() == C.n());
    CHECK(C2.k() == C.k());
    // same row space: every row of one G is a codeword of the other
    for (std::size_t r = 0; r < C.G().rows(); ++r) CHECK(C2.is_codeword(C.G().row(r)));
    for (std::size_t r = 0; r < C2.G().rows(); ++r) CHECK(C.is_codeword(C2.G().row(r)));
}

TEST_CASE("parse errors carry line numbers") {
    auto parse_text = [](const std::string& text) {
        std::istringstream in(text);
        return parse_code(in);
    };
    // zero column
    CHECK_THROWS_AS(parse_text("field q=2 p=2 m=1 primpoly=1,1\n"
                               "code n=3 k=2\nG\n1 0 0\n1 0 1\n"),
                    DegenerateCode);
    // bad field header
    try {
        parse_text("field q=6 p=2 m=2 primpoly=1,1,1\ncode n=3 k=2\nG\n1 0 1\n0 1 1\n");
        FAIL("expected FieldError");
    } catch (const FieldError& e) {
        CHECK(e.line() == 1);
    }
    // an H-kind file describing a degenerate code: the dual of
    // span{e2, (1,1,1)} is generated by (1,0,1), so coordinate 2 is dead
    CHECK_THROWS_AS(parse_text("field q=2 p=2 m=1 primpoly=1,1\n"
                               "code n=3 k=1\nH\n0 1 0\n1 1 1\n"),
                    DegenerateCode);
    // rank disagreement (duplicate rows, basis still nondegenerate)
    CHECK_THROWS_AS(parse_text("field q=2 p=2 m=1 primpoly=1,1\n"
                               "code n=3 k=2\nG\n1 1 1\n1 1 1\n"),
                    RankError);
    // short row, with its line number
    try {
        parse_text("field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=2\nG\n1 0 1\n0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
    CHECK_THROWS_AS(parse_text(""), ParseError);
}

TEST_CASE("masked word parsing") {
    auto f = Field::make_default(4);
    MaskedVec x = parse_masked_word("0,0,0,1,?,1,?,0,?", f, 9);
    CHECK(x.erased_positions() == std::vector<int>{5, 7, 9});
    CHECK(x.entries[3] == 1);
    CHECK_THROWS_AS(parse_masked_word("0,1", f, 9), LengthMismatch);
    CHECK_THROWS_AS(parse_masked_word("0,9,0,1,?,1,?,0,?", f, 9), Error);
    CHECK_THROWS_AS(parse_masked_word("0,x,0,1,?,1,?,0,?", f, 9), Error);
}

TEST_CASE("structure report format") {
    LinearCode C = load_code(kDataDir + "/toy.code");
    RecoveryStructure S = sharp_structure(C);
    std::ostringstream os;
    print_structure(os, S, true);
    CHECK(os.str() ==
          "i=1 loc=2 R=2,3 w=1 1 1\n"
          "i=2 loc=2 R=1,3 w=1 1 1\n"
          "i=3 loc=2 R=1,2 w=1 1 1\n"
          "summary loc=2 dual_distance=3 optimal=yes\n");
}

TEST_CASE("bench: row count, determinism, bound") {
    BenchResult a = bench(2, 10, 4, 5, 99);
    BenchResult b = bench(2, 10, 4, 5, 99);
    REQUIRE(a.records.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto &ra = a.records[i], &rb = b.records[i];
        CHECK(ra.q == 2);
        CHECK(ra.n == 10);
        CHECK(ra.k == 4);
        CHECK(ra.trial == static_cast<int>(i));
        // identical in everything but the wall clock
        CHECK(ra.candidates == rb.candidates);
        CHECK(ra.loc == rb.loc);
        CHECK(ra.dual_distance == rb.dual_distance);
        CHECK(ra.candidates <= oracle::d_bound(10, 4, 2));
        CHECK(ra.elapsed_ms >= 0.0);
    }
    std::ostringstream csv;
    write_csv(csv, a);
    std::istringstream lines(csv.str());
    std::string line;
    int rows = 0, comments = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("#", 0) == 0)
            ++comments;
        else
            ++rows;
    }
    CHECK(rows == 6);  // header + 5 records
    CHECK(comments == 1);
}
